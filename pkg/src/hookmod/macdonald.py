"""Hook Macdonald-Kostka polynomials, Haglund filling statistics, and the
signed-word involutions behind the characterization axioms.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cache
from itertools import permutations, product
from typing import Callable, Iterable, Iterator, Sequence

from hookmod.combinatorics import (
    Partition,
    Permutation,
    StandardTableau,
    comaj_window,
    dominance_leq,
    gen_partitions,
    gen_syt,
    hook_shape,
    maj_window,
    num_syt,
)
from hookmod.errors import ScaleExceeded
from hookmod.qtpoly import QTPolynomial

__all__ = [
    "QTPolynomial",
    "kostka_hook",
    "htilde_hook",
    "hilbert_stembridge",
    "Filling",
    "FillingStats",
    "filling_stats",
    "hilbert_fillings",
    "quasisym_Q",
    "schur_poly",
    "htilde_schur_expansion",
    "htilde_hhl_expansion",
    "SignedWord",
    "ORDERS",
    "word_stats",
    "involution_I",
    "involution_J",
    "axiom_check",
]

MAX_FILLINGS_N = 7
MAX_AXIOM_N = 5

# A symmetric (or quasi-symmetric) polynomial in z_1..z_m with q,t coefficients.
ZPoly = dict[tuple[int, ...], QTPolynomial]


def _zadd(acc: ZPoly, key: tuple[int, ...], value: QTPolynomial) -> None:
    total = acc.get(key, QTPolynomial()) + value
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


# ---------------------------------------------------------------- Stembridge


def kostka_hook(lam: Sequence[int], n: int, k: int) -> QTPolynomial:
    """``sum over SYT T of shape lam`` of ``q^maj_{1,n-k+1}(T) t^comaj_{n-k+1,n}(T)``."""
    lam = Partition(lam)
    if lam.size != n:
        raise ValueError(f"|lambda| = {lam.size} != n = {n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    w = n - k + 1
    return QTPolynomial.from_pairs((maj_window(T, 1, w), comaj_window(T, w, n)) for T in gen_syt(lam))


@cache
def htilde_hook(n: int, k: int) -> dict[Partition, QTPolynomial]:
    """Schur expansion coefficients of the modified Macdonald polynomial of the hook."""
    return {lam: kostka_hook(lam, n, k) for lam in gen_partitions(n)}


def hilbert_stembridge(n: int, k: int) -> QTPolynomial:
    """``sum_lambda f^lambda K(lambda)``: the Hilbert series predicted by the Kostka sums."""
    total = QTPolynomial()
    for lam, poly in htilde_hook(n, k).items():
        total = total + poly * num_syt(tuple(lam))
    return total


# ---------------------------------------------------------------- fillings


@dataclass(frozen=True)
class Filling:
    """Bijective filling of a Ferrers diagram (French: ``rows[0]`` is the bottom row)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        lengths = [len(r) for r in self.rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])) or 0 in lengths:
            raise ValueError("row lengths must be positive and weakly decreasing upwards")
        entries = sorted(v for r in self.rows for v in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("filling must use 1..n exactly once")

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def __call__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def reading_order(self) -> list[tuple[int, int]]:
        """Cells row by row from the top, left to right within a row."""
        return [(i, j) for i in range(len(self.rows), 0, -1) for j in range(1, len(self.rows[i - 1]) + 1)]

    def reading_word(self) -> Permutation:
        return Permutation(self(c) for c in self.reading_order())

    @classmethod
    def from_reading_word(cls, shape: Sequence[int], word: Sequence[int]) -> "Filling":
        shape = Partition(shape)
        word = list(word)
        rows: list[tuple[int, ...]] = [()] * len(shape)
        pos = 0
        for i in range(len(shape) - 1, -1, -1):
            rows[i] = tuple(word[pos : pos + shape[i]])
            pos += shape[i]
        return cls(tuple(rows))

    def arm(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return len(self.rows[i - 1]) - j

    def leg(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return sum(1 for r in self.rows[i:] if len(r) >= j)


@dataclass(frozen=True)
class FillingStats:
    des: frozenset[tuple[int, int]]
    inversions: frozenset[tuple[tuple[int, int], tuple[int, int]]]
    inv: int
    maj: int
    D: frozenset[int]


def _attack(u: tuple[int, int], v: tuple[int, int]) -> bool:
    (i1, j1), (i2, j2) = u, v
    if i1 == i2:
        return True
    if i1 == i2 + 1:
        return j1 > j2
    if i2 == i1 + 1:
        return j2 > j1
    return False


def filling_stats(xi: Filling) -> FillingStats:
    """Descent cells, inversion pairs, ``inv``, ``maj`` and ``D(xi) = Des(xi^-1)``."""
    des = frozenset(
        (i, j)
        for i in range(2, len(xi.rows) + 1)
        for j in range(1, len(xi.rows[i - 1]) + 1)
        if xi((i, j)) >= xi((i - 1, j))
    )
    order = xi.reading_order()
    inversions = frozenset(
        (u, v)
        for a, u in enumerate(order)
        for v in order[a + 1 :]
        if _attack(u, v) and xi(u) > xi(v)
    )
    inv = len(inversions) - sum(xi.arm(u) for u in des)
    maj = sum(xi.leg(u) + 1 for u in des)
    D = xi.reading_word().inverse().descents()
    return FillingStats(des, inversions, inv, maj, D)


def all_fillings(shape: Sequence[int]) -> Iterator[Filling]:
    shape = Partition(shape)
    for word in permutations(range(1, shape.size + 1)):
        yield Filling.from_reading_word(shape, word)


def hilbert_fillings(n: int, k: int) -> QTPolynomial:
    """``sum over fillings xi of the hook`` of ``q^inv(xi) t^maj(xi)``."""
    if n > MAX_FILLINGS_N:
        raise ScaleExceeded(f"filling enumeration limited to n <= {MAX_FILLINGS_N}")
    pairs = []
    for xi in all_fillings(hook_shape(n, k)):
        st = filling_stats(xi)
        pairs.append((st.inv, st.maj))
    return QTPolynomial.from_pairs(pairs)


# ---------------------------------------------------------------- quasi-symmetric and Schur


def quasisym_Q(n: int, D: Iterable[int], numvars: int) -> dict[tuple[int, ...], int]:
    """Gessel's ``Q_{n,D}`` in ``z_1..z_numvars`` as a map exponent vector -> coefficient."""
    D = frozenset(D)
    out: dict[tuple[int, ...], int] = defaultdict(int)

    # the step from letter pos - 1 to letter pos must be strict when pos - 1 is in D
    def rec(pos: int, prev: int, exps: list[int]) -> None:
        if pos > n:
            out[tuple(exps)] += 1
            return
        start = 0 if pos == 1 else (prev + 1 if pos - 1 in D else prev)
        for a in range(start, numvars):
            exps[a] += 1
            rec(pos + 1, a, exps)
            exps[a] -= 1

    rec(1, 0, [0] * numvars)
    return dict(out)


def ssyt(shape: Sequence[int], numvars: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux (French) with entries in ``1..numvars``."""
    shape = Partition(shape)
    cells = shape.cells()  # (row, col), row by row from the bottom
    grid: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == len(cells):
            yield tuple(tuple(grid[(r, c)] for c in range(1, shape[r - 1] + 1)) for r in range(1, len(shape) + 1))
            return
        r, c = cells[idx]
        low = 1
        if c > 1:
            low = max(low, grid[(r, c - 1)])
        if r > 1:
            low = max(low, grid[(r - 1, c)] + 1)
        for v in range(low, numvars + 1):
            grid[(r, c)] = v
            yield from rec(idx + 1)
        grid.pop((r, c), None)

    yield from rec(0)


def schur_poly(shape: Sequence[int], numvars: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for T in ssyt(shape, numvars):
        exps = [0] * numvars
        for row in T:
            for v in row:
                exps[v - 1] += 1
        out[tuple(exps)] += 1
    return dict(out)


def htilde_schur_expansion(n: int, k: int, numvars: int) -> ZPoly:
    """``sum_lambda K(lambda) s_lambda(z_1..z_numvars)``."""
    acc: ZPoly = {}
    for lam, coeff in htilde_hook(n, k).items():
        for exps, c in schur_poly(lam, numvars).items():
            _zadd(acc, exps, coeff * c)
    return acc


def htilde_hhl_expansion(n: int, k: int, numvars: int) -> ZPoly:
    """``sum_xi q^inv t^maj Q_{n,D(xi)}(z_1..z_numvars)`` over fillings of the hook."""
    if n > MAX_FILLINGS_N:
        raise ScaleExceeded(f"filling enumeration limited to n <= {MAX_FILLINGS_N}")
    by_descents: dict[frozenset[int], list[tuple[int, int]]] = defaultdict(list)
    for xi in all_fillings(hook_shape(n, k)):
        st = filling_stats(xi)
        by_descents[st.D].append((st.inv, st.maj))
    acc: ZPoly = {}
    for D, pairs in by_descents.items():
        weight = QTPolynomial.from_pairs(pairs)
        for exps, c in quasisym_Q(n, D, numvars).items():
            _zadd(acc, exps, weight * c)
    return acc


# ---------------------------------------------------------------- signed words


class SignedWord(tuple):
    """Word of nonzero integers; ``-a`` stands for the barred letter ``a``."""

    def __new__(cls, letters: Iterable[int]):
        letters = tuple(int(a) for a in letters)
        if any(a == 0 for a in letters):
            raise ValueError("letters must be nonzero")
        return super().__new__(cls, letters)

    @property
    def pos(self) -> int:
        return sum(1 for a in self if a > 0)

    @property
    def neg(self) -> int:
        return sum(1 for a in self if a < 0)

    def content(self) -> tuple[int, ...]:
        """Sorted absolute values (the z-monomial as a multiset)."""
        return tuple(sorted(abs(a) for a in self))

    def __str__(self) -> str:
        return " ".join(f"{abs(a)}" + ("'" if a < 0 else "") for a in self)


OrderKey = Callable[[int], tuple]

ORDERS: dict[str, OrderKey] = {
    # 1 < 1bar < 2 < 2bar < ...
    "standard": lambda a: (abs(a), 0 if a > 0 else 1),
    # 1 < 2 < ... < m < mbar < ... < 1bar
    "prec": lambda a: (0, a) if a > 0 else (1, a),
    # 1bar < 2bar < ... < mbar < m < ... < 1
    "precstar": lambda a: (0, -a) if a < 0 else (1, -a),
}


@dataclass(frozen=True)
class WordStats:
    des: frozenset[int]
    maj: int
    comaj: int
    pos: int
    neg: int


def word_descents(a: Sequence[int], order: str | OrderKey) -> frozenset[int]:
    """Equal negative letters form a descent; otherwise a strict decrease is needed."""
    key = ORDERS[order] if isinstance(order, str) else order
    out = set()
    for i in range(1, len(a)):
        x, y = a[i - 1], a[i]
        if x < 0 and y < 0:
            if key(x) >= key(y):
                out.add(i)
        elif key(x) > key(y):
            out.add(i)
    return frozenset(out)


def word_stats(a: Sequence[int], order: str | OrderKey, k: int) -> WordStats:
    """``maj_{1,n-k+1}`` and ``comaj_{n-k+1,n}`` of a signed word under ``order``."""
    a = SignedWord(a)
    n = len(a)
    w = n - k + 1
    des = word_descents(a, order)
    maj = sum(i for i in des if 1 <= i < w)
    comaj = sum(n - i for i in des if w <= i < n)
    return WordStats(des, maj, comaj, a.pos, a.neg)


def _flip(a: Sequence[int], s: int) -> SignedWord:
    out = list(a)
    out[s] = -out[s]
    return SignedWord(out)


def involution_I(a: Sequence[int], k: int) -> SignedWord:
    """Flip one sign left of the rightmost copy of the smallest repeated letter
    in the first ``n-k+1`` positions; fixed when those letters are distinct.
    """
    a = SignedWord(a)
    n = len(a)
    window = [abs(v) for v in a[: n - k + 1]]
    repeated = sorted({v for v in window if window.count(v) > 1})
    if not repeated:
        return a
    j = repeated[0]
    t = max(idx for idx, v in enumerate(window) if v == j)
    i = min(window[:t])
    s = min(idx for idx in range(t) if window[idx] == i)
    return _flip(a, s)


def involution_J(a: Sequence[int], k: int) -> SignedWord:
    """Mirror of :func:`involution_I` on the last ``k`` positions."""
    a = SignedWord(a)
    n = len(a)
    start = n - k
    window = [abs(v) for v in a[start:]]
    repeated = sorted({v for v in window if window.count(v) > 1})
    if not repeated:
        return a
    j = repeated[0]
    t = min(idx for idx, v in enumerate(window) if v == j)
    i = min(window[t + 1 :])
    s = max(idx for idx in range(t + 1, len(window)) if window[idx] == i)
    return _flip(a, start + s)


def signed_words(n: int, numvars: int) -> Iterator[SignedWord]:
    letters = [v for a in range(1, numvars + 1) for v in (a, -a)]
    for word in product(letters, repeat=n):
        yield SignedWord(word)


def positive_words(n: int, numvars: int) -> Iterator[SignedWord]:
    for word in product(range(1, numvars + 1), repeat=n):
        yield SignedWord(word)


def _exps(a: SignedWord, numvars: int) -> tuple[int, ...]:
    exps = [0] * numvars
    for v in a:
        exps[abs(v) - 1] += 1
    return tuple(exps)


def weight_U(a: Sequence[int], k: int, order: str | OrderKey = "prec") -> QTPolynomial:
    """``q^pos (-1)^neg q^maj t^comaj`` (the z-monomial is kept separately)."""
    st = word_stats(a, order, k)
    return QTPolynomial.monomial(st.pos + st.maj, st.comaj, (-1) ** st.neg)


def weight_V(a: Sequence[int], k: int, order: str | OrderKey = "precstar") -> QTPolynomial:
    """``t^pos (-1)^neg q^maj t^comaj``."""
    st = word_stats(a, order, k)
    return QTPolynomial.monomial(st.maj, st.pos + st.comaj, (-1) ** st.neg)


def word_sum(
    words: Iterable[SignedWord],
    weight: Callable[[SignedWord], QTPolynomial],
    numvars: int,
) -> ZPoly:
    acc: ZPoly = {}
    for a in words:
        _zadd(acc, _exps(a, numvars), weight(a))
    return acc


def monomial_type(exps: Sequence[int]) -> Partition:
    return Partition(sorted((e for e in exps if e), reverse=True))


@dataclass
class AxiomResult:
    name: str
    ok: bool
    detail: str = ""
    offending_type: Partition | None = None

    def as_json(self) -> dict:
        out = {"axiom": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        if self.offending_type is not None:
            out["offending_type"] = list(self.offending_type)
        return out


@dataclass
class AxiomReport:
    n: int
    k: int
    numvars: int
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "numvars": self.numvars,
            "ok": self.ok,
            "axioms": [r.as_json() for r in self.results],
        }


def _support_check(name: str, total: ZPoly, bound: Partition) -> AxiomResult:
    for exps in sorted(total):
        ty = monomial_type(exps)
        if not dominance_leq(ty, bound):
            return AxiomResult(name, False, f"type {tuple(ty)} not below {tuple(bound)}", ty)
    return AxiomResult(name, True)


def axiom_check(n: int, k: int, numvars: int | None = None) -> AxiomReport:
    """Check the three characterizing properties for the hook on truncated alphabets.

    A3: the positive-word sum has ``z_1^n`` coefficient 1 and equals the
    Schur expansion of the Kostka sums. A1 / A2: the signed sums weighted by
    ``U`` (order ``prec``) and ``V`` (order ``precstar``) are supported on
    monomial types below ``(k, 1^(n-k))`` and ``(n-k+1, 1^(k-1))``, and agree
    term by term with the sums over fixed points of ``I_k`` and ``J_k``.
    """
    if numvars is None:
        numvars = n
    if n > MAX_AXIOM_N:
        raise ScaleExceeded(f"axiom check limited to n <= {MAX_AXIOM_N}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    report = AxiomReport(n, k, numvars)

    # A3
    def plain(a: SignedWord) -> QTPolynomial:
        st = word_stats(a, "standard", k)
        return QTPolynomial.monomial(st.maj, st.comaj)

    positive = word_sum(positive_words(n, numvars), plain, numvars)
    top = positive.get((n,) + (0,) * (numvars - 1), QTPolynomial())
    if top != QTPolynomial.monomial():
        report.results.append(AxiomResult("A3", False, f"z_1^n coefficient is {top}"))
    elif positive != htilde_schur_expansion(n, k, numvars):
        report.results.append(AxiomResult("A3", False, "positive-word sum differs from the Schur expansion"))
    else:
        report.results.append(AxiomResult("A3", True))

    words = list(signed_words(n, numvars))
    for name, weight, inv, bound in (
        ("A1", lambda a: weight_U(a, k), involution_I, Partition((k,) + (1,) * (n - k))),
        ("A2", lambda a: weight_V(a, k), involution_J, hook_shape(n, k)),
    ):
        full = word_sum(words, weight, numvars)
        fixed = word_sum((a for a in words if inv(a, k) == a), weight, numvars)
        if full != fixed:
            report.results.append(AxiomResult(name, False, "fixed-point sum differs from the full sum"))
            continue
        report.results.append(_support_check(name, full, bound))
    return report
