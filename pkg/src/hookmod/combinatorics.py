"""Partitions, permutations, standard tableaux and (n,k)-bipartitions.

Tableaux use the French convention throughout: ``rows[0]`` is the bottom row
and row indices grow upwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Sequence

from hookmod.errors import ParseError


class Partition(tuple):
    """Weakly decreasing tuple of positive parts (trailing zeros trimmed)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def n_value(self) -> int:
        """``n(lambda) = sum_i (i-1) lambda_i`` for decreasing parts."""
        return sum(i * p for i, p in enumerate(self))

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> list[tuple[int, int]]:
        """Cells as 1-based ``(row, col)`` pairs, bottom row first."""
        return [(i + 1, j + 1) for i, p in enumerate(self) for j in range(p)]

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"`` or ``"(3,1,1)"``; parts given in any order are sorted."""
    body = text.strip().strip("()[]")
    if not body:
        return Partition()
    try:
        parts = [int(tok) for tok in body.replace(" ", ",").split(",") if tok]
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}") from exc
    if any(p < 0 for p in parts):
        raise ParseError(f"bad partition {text!r}")
    return Partition(sorted(parts, reverse=True))


def hook_shape(n: int, k: int) -> Partition:
    """The hook ``(1^(k-1), n-k+1)`` as a decreasing partition."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return Partition((n - k + 1,) + (1,) * (k - 1))


def gen_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in rec(n, n)]


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """``a`` is weakly below ``b`` in dominance order (partial sums, zero padded).

    Sequences are compared as given; callers pass weakly decreasing ones.
    """
    length = max(len(a), len(b))
    sa = sb = 0
    for i in range(length):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return sa == sb


def bipartition_dominance_leq(a: tuple[Sequence[int], Sequence[int]],
                              b: tuple[Sequence[int], Sequence[int]]) -> bool:
    return dominance_leq(a[0], b[0]) and dominance_leq(a[1], b[1])


# ---------------------------------------------------------------- permutations


class Permutation(tuple):
    """One-line notation ``(pi(1), ..., pi(n))`` of a bijection on ``{1..n}``."""

    def __new__(cls, word: Iterable[int]):
        word = tuple(int(v) for v in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        return super().__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for pos, val in enumerate(self, start=1):
            inv[val - 1] = pos
        return Permutation(inv)

    def descents(self) -> frozenset[int]:
        return frozenset(i for i in range(1, len(self)) if self[i - 1] > self[i])

    def inversions(self) -> int:
        w = self
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self o other)(i) = self(other(i))``."""
        return Permutation(self[other[i] - 1] for i in range(len(other)))

    def cycle_type(self) -> Partition:
        seen = [False] * len(self)
        lengths = []
        for start in range(len(self)):
            if seen[start]:
                continue
            length, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = self[i] - 1
                length += 1
            lengths.append(length)
        return Partition(sorted(lengths, reverse=True))

    def sign(self) -> int:
        return -1 if (len(self) - len(self.cycle_type())) % 2 else 1

    def __str__(self) -> str:
        sep = "" if len(self) < 10 else ","
        return sep.join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def parse_permutation(text: str) -> Permutation:
    """Accept ``"2416573"`` (single digits) or a comma-separated word."""
    body = text.strip().strip("()[]")
    try:
        if "," in body or " " in body.strip():
            word = [int(tok) for tok in body.replace(" ", ",").split(",") if tok]
        else:
            word = [int(ch) for ch in body]
        return Permutation(word)
    except ValueError as exc:
        raise ParseError(f"bad permutation {text!r}") from exc


def all_permutations(n: int) -> list[Permutation]:
    """``S_n`` in lexicographic order of one-line words."""
    from itertools import permutations

    return [Permutation(p) for p in permutations(range(1, n + 1))]


def adjacent_transposition(j: int, n: int) -> Permutation:
    word = list(range(1, n + 1))
    word[j - 1], word[j] = word[j], word[j - 1]
    return Permutation(word)


def cycle_type_representative(rho: Sequence[int]) -> list[int]:
    """Generator indices ``j`` whose product ``s_j1 s_j2 ...`` has cycle type ``rho``.

    Each part ``r`` occupies a block ``a..a+r-1`` and contributes
    ``s_a s_(a+1) ... s_(a+r-2)``, an ``r``-cycle.
    """
    word = []
    start = 1
    for part in rho:
        word.extend(range(start, start + part - 1))
        start += part
    return word


def comp_of_set(n: int, descent_set: Iterable[int]) -> tuple[int, ...]:
    """Composition ``(a_1, a_2-a_1, ..., n-a_r)`` of a subset of ``{1..n-1}``."""
    elems = sorted(descent_set)
    if any(not 1 <= a < n for a in elems):
        raise ValueError(f"subset must lie in 1..{n - 1}: {elems}")
    cuts = [0] + elems + [n]
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


# ---------------------------------------------------------------- tableaux


@dataclass(frozen=True)
class StandardTableau:
    """Standard Young tableau, French convention (``rows[0]`` is the bottom row)."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def position(self) -> dict[int, tuple[int, int]]:
        """Entry -> 1-based ``(row, col)``."""
        return {v: (i + 1, j + 1) for i, row in enumerate(self.rows) for j, v in enumerate(row)}

    def transpose(self) -> "StandardTableau":
        width = len(self.rows[0]) if self.rows else 0
        cols = tuple(
            tuple(row[j] for row in self.rows if len(row) > j) for j in range(width)
        )
        return StandardTableau(cols)

    def is_standard(self) -> bool:
        entries = sorted(v for row in self.rows for v in row)
        if entries != list(range(1, self.n + 1)):
            return False
        if list(self.shape) != [len(r) for r in self.rows]:
            return False
        for i, row in enumerate(self.rows):
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                return False
            if i and any(row[j] <= self.rows[i - 1][j] for j in range(len(row))):
                return False
        return True


def gen_syt(shape: Sequence[int]) -> list[StandardTableau]:
    """All standard tableaux of ``shape``, sorted by their row tuples."""
    shape = Partition(shape)
    if not shape:
        raise ValueError("shape must be nonempty")
    n = shape.size
    out: list[StandardTableau] = []

    def rec(rows: list[list[int]], value: int) -> None:
        if value > n:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for i, target in enumerate(shape):
            length = len(rows[i])
            if length == target:
                continue
            if i and len(rows[i - 1]) <= length:
                continue
            rows[i].append(value)
            rec(rows, value + 1)
            rows[i].pop()

    rec([[] for _ in shape], 1)
    out.sort(key=lambda t: t.rows)
    return out


@cache
def num_syt(shape: tuple[int, ...]) -> int:
    """Hook-length formula; independent of :func:`gen_syt`."""
    shape = Partition(shape)
    conj = shape.conjugate()
    hooks = 1
    for i, p in enumerate(shape):
        for j in range(p):
            hooks *= (p - j - 1) + (conj[j] - i - 1) + 1
    return factorial(shape.size) // hooks


def des_tableau(tab: StandardTableau) -> frozenset[int]:
    """``i`` with ``i+1`` strictly above and weakly left of ``i``."""
    pos = tab.position()
    return frozenset(
        i for i in range(1, tab.n)
        if pos[i + 1][0] > pos[i][0] and pos[i + 1][1] <= pos[i][1]
    )


def maj_window(tab: StandardTableau, i: int, j: int) -> int:
    """Sum of descents ``r`` of ``tab`` with ``i <= r < j``."""
    return sum(r for r in des_tableau(tab) if i <= r < j)


def comaj_window(tab: StandardTableau, i: int, j: int) -> int:
    """Sum of ``n - r`` over descents ``r`` of ``tab`` with ``i <= r < j``."""
    n = tab.n
    return sum(n - r for r in des_tableau(tab) if i <= r < j)


# ---------------------------------------------------------------- bipartitions


@dataclass(frozen=True, order=True)
class NKBipartition:
    """An (n,k)-bipartition.

    ``mu`` has length ``k`` and ``nu`` length ``n-k+1``; both are stored with
    their trailing zero so consecutive differences are easy to read off.
    """

    n: int
    k: int
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mu) != self.k or len(self.nu) != self.n - self.k + 1:
            raise ValueError(f"bad lengths for (n,k)=({self.n},{self.k}): {self.mu}, {self.nu}")
        if self.mu[-1] != 0 or self.nu[-1] != 0:
            raise ValueError("last entries of mu and nu must be 0")
        for seq in (self.mu, self.nu):
            if any(seq[i] - seq[i + 1] not in (0, 1) for i in range(len(seq) - 1)):
                raise ValueError(f"consecutive differences must be 0 or 1: {seq}")

    @classmethod
    def from_exponents(cls, n: int, k: int, xpart: Sequence[int], ypart: Sequence[int]) -> "NKBipartition":
        """Build from an exponent bipartition ``((p_1..p_(k-1)), (p_n..p_(k+1)))``."""
        return cls(n, k, tuple(xpart) + (0,), tuple(ypart) + (0,))

    def weights(self) -> tuple[int, int]:
        """``(t1, t2)``: the y-side weight ``|nu|`` and the x-side weight ``|mu|``."""
        return sum(self.nu), sum(self.mu)

    def as_json(self) -> dict:
        return {"mu": list(self.mu), "nu": list(self.nu)}


def nk_bipartitions(n: int, k: int) -> list[NKBipartition]:
    """All (n,k)-bipartitions, ordered by ``(mu, nu)`` difference vectors."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    out = []
    for dmu in product((0, 1), repeat=k - 1):
        mu = tuple(sum(dmu[i:]) for i in range(k - 1)) + (0,)
        for dnu in product((0, 1), repeat=n - k):
            nu = tuple(sum(dnu[i:]) for i in range(n - k)) + (0,)
            out.append(NKBipartition(n, k, mu, nu))
    out.sort(key=lambda b: (b.mu, b.nu))
    return out


def a_lambda(lam: NKBipartition) -> frozenset[int]:
    """Descent set ``{1 <= i < n : mu_i - mu_(i+1) = 1 or nu_(n-i) - nu_(n-i+1) = 1}``."""

    def at(seq: tuple[int, ...], idx: int) -> int:
        return seq[idx - 1] if 1 <= idx <= len(seq) else 0

    n = lam.n
    return frozenset(
        i for i in range(1, n)
        if at(lam.mu, i) - at(lam.mu, i + 1) == 1
        or at(lam.nu, n - i) - at(lam.nu, n - i + 1) == 1
    )
