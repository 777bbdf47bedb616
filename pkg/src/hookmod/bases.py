"""Descent, Artin, Haglund, Schubert and kicking-composed bases of the hook module."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from hookmod.combinatorics import Permutation, all_permutations
from hookmod.errors import ScaleExceeded
from hookmod.polyring import Monomial, Polynomial

MAX_SCHUBERT_M = 5

# A coinvariant factory maps m to a basis of the coinvariant algebra of S_m,
# written in x_1..x_m (as polynomials with ``n == m`` and no y-variables).
Factory = Callable[[int], list[Polynomial]]


# ---------------------------------------------------------------- statistics


def _check_k(pi: Permutation, k: int) -> None:
    if not 1 <= k <= pi.n:
        raise ValueError(f"need 1 <= k <= n, got n={pi.n}, k={k}")


def d_vec(pi: Permutation, k: int) -> tuple[int, ...]:
    """``(d_1^(k), ..., d_n^(k))``: descents of ``pi`` counted towards position ``k``."""
    pi = Permutation(pi)
    _check_k(pi, k)
    des = pi.descents()
    out = []
    for i in range(1, pi.n + 1):
        if i < k:
            out.append(sum(1 for r in des if i <= r <= k - 1))
        elif i == k:
            out.append(0)
        else:
            out.append(sum(1 for r in des if k <= r <= i - 1))
    return tuple(out)


def inv_vec(pi: Permutation, k: int) -> tuple[int, ...]:
    """``(inv_1^(k), ..., inv_n^(k))``: inversions with the window on the side of ``k``."""
    pi = Permutation(pi)
    _check_k(pi, k)
    n = pi.n
    out = []
    for i in range(1, n + 1):
        if i < k:
            out.append(sum(1 for j in range(i + 1, k + 1) if pi(i) > pi(j)))
        elif i == k:
            out.append(0)
        else:
            out.append(sum(1 for j in range(k, i) if pi(j) > pi(i)))
    return tuple(out)


def _monomial_from(pi: Permutation, k: int, xvec: Sequence[int], yvec: Sequence[int]) -> Monomial:
    n = pi.n
    exps = [0] * (2 * n)
    for i in range(1, k):
        exps[pi(i) - 1] = xvec[i - 1]
    for i in range(k + 1, n + 1):
        exps[n + pi(i) - 1] = yvec[i - 1]
    return Monomial(exps)


def descent_monomial(pi: Permutation, k: int) -> Monomial:
    """``a_pi^(k) = prod_{i<k} x_pi(i)^d_i * prod_{i>k} y_pi(i)^d_i``."""
    pi = Permutation(pi)
    d = d_vec(pi, k)
    return _monomial_from(pi, k, d, d)


def artin_monomial(pi: Permutation, k: int) -> Monomial:
    """``b_pi^(k)``: the inversion statistics on both sides."""
    pi = Permutation(pi)
    inv = inv_vec(pi, k)
    return _monomial_from(pi, k, inv, inv)


def haglund_monomial(pi: Permutation, k: int) -> Monomial:
    """``c_pi^(k)``: descents on the x-side, inversions on the y-side."""
    pi = Permutation(pi)
    return _monomial_from(pi, k, d_vec(pi, k), inv_vec(pi, k))


def positional_form(m: Monomial, pi: Permutation) -> Monomial:
    """Relabel variables so that ``x_pi(i)`` becomes ``x_i`` (same for y).

    This is the presentation in which the exponent of the ``i``-th variable is
    the statistic at position ``i`` of ``pi``.
    """
    pi = Permutation(pi)
    n = pi.n
    exps = [0] * (2 * n)
    for i in range(1, n + 1):
        exps[i - 1] = m[pi(i) - 1]
        exps[n + i - 1] = m[n + pi(i) - 1]
    return Monomial(exps)


MONOMIAL_BASES = {
    "descent": descent_monomial,
    "artin": artin_monomial,
    "haglund": haglund_monomial,
}


def monomial_basis(name: str, n: int, k: int) -> list[Polynomial]:
    """All ``n!`` monomials of the named family, indexed by permutations in lex order."""
    fn = MONOMIAL_BASES[name]
    return [Polynomial.from_monomial(fn(pi, k)) for pi in all_permutations(n)]


# ---------------------------------------------------------------- kicking


@dataclass(frozen=True)
class KickingTriple:
    A: frozenset[int]
    c: int
    Abar: frozenset[int]
    rank: int

    @property
    def permutation(self) -> Permutation:
        return Permutation(sorted(self.A, reverse=True) + [self.c] + sorted(self.Abar))

    def monomial(self, n: int) -> Monomial:
        """``m_(A,c,Abar) = prod_{i in A, i>c} x_i * prod_{j in Abar, j<c} y_j``."""
        exps = [0] * (2 * n)
        for i in self.A:
            if i > self.c:
                exps[i - 1] = 1
        for j in self.Abar:
            if j < self.c:
                exps[n + j - 1] = 1
        return Monomial(exps)


def kicking_sequence(n: int, k: int) -> list[tuple[KickingTriple, Monomial]]:
    """All ``n * C(n-1, k-1)`` triples, ordered by decreasing associated word."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    raw = []
    universe = range(1, n + 1)
    for c in universe:
        rest = [i for i in universe if i != c]
        for A in combinations(rest, k - 1):
            Abar = frozenset(rest) - frozenset(A)
            word = tuple(sorted(A, reverse=True)) + (c,) + tuple(sorted(Abar))
            raw.append((word, frozenset(A), c, Abar))
    raw.sort(reverse=True)
    out = []
    for rank, (_, A, c, Abar) in enumerate(raw, start=1):
        triple = KickingTriple(A, c, Abar, rank)
        out.append((triple, triple.monomial(n)))
    return out


# ---------------------------------------------------------------- coinvariant factories


def _x_poly(m: int, exps: Sequence[int]) -> Polynomial:
    return Polynomial.from_monomial(list(exps) + [0] * m)


def descent_factory(m: int) -> list[Polynomial]:
    """Garsia-Stanton descent monomials of ``S_m``."""
    if m == 0:
        return [Polynomial.constant(0)]
    out = []
    for pi in all_permutations(m):
        d = d_vec(pi, m)
        exps = [0] * m
        for i in range(1, m):
            exps[pi(i) - 1] = d[i - 1]
        out.append(_x_poly(m, exps))
    return out


def artin_factory(m: int) -> list[Polynomial]:
    """Artin monomials ``x^e`` with ``0 <= e_i <= m - i``."""
    if m == 0:
        return [Polynomial.constant(0)]
    vectors: list[tuple[int, ...]] = [()]
    for i in range(1, m + 1):
        vectors = [v + (e,) for v in vectors for e in range(m - i + 1)]
    return [_x_poly(m, v) for v in vectors]


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_(i+1))`` on the x-variables (``i`` is 1-based)."""
    a_idx, b_idx = i - 1, i
    acc: dict = {}
    for mono, coeff in f.terms.items():
        a, b = mono[a_idx], mono[b_idx]
        if a == b:
            continue
        sign, hi, lo = (1, a, b) if a > b else (-1, b, a)
        for j in range(hi - lo):
            exps = list(mono)
            # x_i^a x_(i+1)^b with a > b contributes x_i^(a-1-j) x_(i+1)^(b+j)
            if sign == 1:
                exps[a_idx], exps[b_idx] = a - 1 - j, b + j
            else:
                exps[a_idx], exps[b_idx] = a + j, b - 1 - j
            key = Monomial(exps)
            acc[key] = acc.get(key, 0) + sign * coeff
    return Polynomial(f.n, acc)


def schubert_polynomials(m: int) -> dict[Permutation, Polynomial]:
    """Schubert polynomials of ``S_m`` by divided differences from the staircase."""
    if m > MAX_SCHUBERT_M:
        raise ScaleExceeded(f"Schubert basis limited to m <= {MAX_SCHUBERT_M}")
    if m == 0:
        return {Permutation(()): Polynomial.constant(0)}
    w0 = Permutation(range(m, 0, -1))
    found = {w0: _x_poly(m, [m - i for i in range(1, m + 1)])}
    queue = deque([w0])
    while queue:
        w = queue.popleft()
        for i in w.descents():
            v = list(w)
            v[i - 1], v[i] = v[i], v[i - 1]
            v = Permutation(v)
            if v not in found:
                found[v] = divided_difference(found[w], i)
                queue.append(v)
    return dict(sorted(found.items()))


def schubert_factory(m: int) -> list[Polynomial]:
    return list(schubert_polynomials(m).values())


FACTORIES: dict[str, Factory] = {
    "descent": descent_factory,
    "artin": artin_factory,
    "schubert": schubert_factory,
}


def _embed(f: Polynomial, variables: Sequence[int], n: int, side: str) -> Polynomial:
    """Send ``x_i`` of a dense factory polynomial to ``x_variables[i]`` or ``y_variables[i]``."""
    offset = 0 if side == "x" else n
    terms = {}
    for mono, coeff in f.terms.items():
        exps = [0] * (2 * n)
        for i, var in enumerate(variables):
            exps[offset + var - 1] = mono[i]
        terms[Monomial(exps)] = coeff
    return Polynomial(n, terms)


def composed_basis(n: int, k: int, xfactory: Factory | str, yfactory: Factory | str) -> list[Polynomial]:
    """``union over (A, c) of m_(A,c,Abar) * B_A * C_Abar`` in kicking order."""
    if isinstance(xfactory, str):
        xfactory = FACTORIES[xfactory]
    if isinstance(yfactory, str):
        yfactory = FACTORIES[yfactory]
    from math import factorial

    xbasis = xfactory(k - 1)
    ybasis = yfactory(n - k)
    if len(xbasis) != factorial(k - 1) or len(ybasis) != factorial(n - k):
        raise ValueError("factory returned a set of the wrong cardinality")
    out = []
    for triple, mono in kicking_sequence(n, k):
        A, Abar = sorted(triple.A), sorted(triple.Abar)
        bs = [_embed(b, A, n, "x") for b in xbasis]
        cs = [_embed(c, Abar, n, "y") for c in ybasis]
        base = Polynomial.from_monomial(mono)
        for b in bs:
            for c in cs:
                out.append(base * b * c)
    return out


def named_basis(name: str, n: int, k: int) -> list[Polynomial]:
    """Resolve a CLI basis name: ``descent``, ``artin``, ``haglund``, ``schubert``
    or ``kicking:<x>,<y>`` with factory names for each side.
    """
    if name in MONOMIAL_BASES:
        return monomial_basis(name, n, k)
    if name == "schubert":
        return composed_basis(n, k, "schubert", "schubert")
    if name.startswith("kicking:"):
        parts = name[len("kicking:"):].split(",")
        if len(parts) != 2 or any(p not in FACTORIES for p in parts):
            raise ValueError(f"bad kicking basis spec {name!r}")
        return composed_basis(n, k, parts[0], parts[1])
    raise ValueError(f"unknown basis {name!r}")
