"""The harmonic space ``H_mu`` of derivatives of ``Delta_mu`` and basis certification.

All linear algebra is done one bidegree at a time: both the derivative span
and the differential pairing respect the ``(x-degree, y-degree)`` grading.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from hookmod.combinatorics import Partition, Permutation, hook_shape
from hookmod.errors import ScaleExceeded
from hookmod.linalg import EchelonSpace, rank
from hookmod.polyring import (
    Monomial,
    Polynomial,
    apply_differential,
    diff_pair,
    elementary,
    in_Mnk,
    monomial_key,
    power_sum,
)
from hookmod.qtpoly import QTPolynomial

MAX_DELTA_N = 7
MAX_SPAN_N = 6

# Which variable set the Macdonald parameter q tracks. In the Stembridge/HHL
# convention q follows the bottom-row (column coordinate, y) degree and t the
# first-column (x) degree; frozen after matching n = 3, 4 (see tests).
Q_VARIABLE = "y"


def to_macdonald_orientation(raw: QTPolynomial) -> QTPolynomial:
    """Convert a raw ``q^xdeg t^ydeg`` series to the Macdonald ``(q, t)`` convention."""
    return raw.swap() if Q_VARIABLE == "y" else raw


# ---------------------------------------------------------------- Delta_mu


def delta_matrix(mu: Sequence[int]) -> list[list[Monomial]]:
    """Entries ``x_i^(row(w_j)-1) y_i^(col(w_j)-1)`` without expanding the determinant.

    Cells ``w_j`` are listed row by row from the bottom. Parts may be given in
    either order.
    """
    mu = Partition(sorted(mu, reverse=True))
    n = mu.size
    cells = [(r - 1, c - 1) for r, c in mu.cells()]
    rows = []
    for i in range(n):
        row = []
        for a, b in cells:
            exps = [0] * (2 * n)
            exps[i], exps[n + i] = a, b
            row.append(Monomial(exps))
        rows.append(row)
    return rows


def delta_mu(mu: Sequence[int], n: int | None = None) -> Polynomial:
    """Expanded ``det(x_i^(row(w_j)-1) y_i^(col(w_j)-1))``.

    Cells are listed row by row from the bottom (the Leibniz expansion has one
    distinct monomial per permutation, so the result has ``n!`` terms).
    """
    mu = Partition(sorted(mu, reverse=True))
    if n is None:
        n = mu.size
    if mu.size != n:
        raise ValueError(f"|mu| = {mu.size} != n = {n}")
    if n > MAX_DELTA_N:
        raise ScaleExceeded(f"Delta_mu expansion limited to n <= {MAX_DELTA_N}")
    cells = [(r - 1, c - 1) for r, c in mu.cells()]
    terms = {}
    for sigma in permutations(range(n)):
        exps = [0] * (2 * n)
        for i, j in enumerate(sigma):
            exps[i], exps[n + i] = cells[j]
        terms[Monomial(exps)] = Permutation(s + 1 for s in sigma).sign()
    return Polynomial(n, terms)


# ---------------------------------------------------------------- bigraded spaces


@dataclass
class BigradedBasis:
    """Reduced row-echelon bases per bidegree ``(xdeg, ydeg)``."""

    n: int
    spaces: dict[tuple[int, int], EchelonSpace] = field(default_factory=dict)

    @property
    def buckets(self) -> dict[tuple[int, int], list[Polynomial]]:
        return {
            deg: [Polynomial(self.n, row) for row in space.basis()]
            for deg, space in sorted(self.spaces.items())
            if len(space)
        }

    def dim(self, bidegree: tuple[int, int] | None = None) -> int:
        if bidegree is None:
            return sum(len(s) for s in self.spaces.values())
        space = self.spaces.get(bidegree)
        return len(space) if space else 0

    def bidegrees(self) -> list[tuple[int, int]]:
        return sorted(d for d, s in self.spaces.items() if len(s))

    def contains(self, f: Polynomial) -> bool:
        """Membership test for a polynomial (split into bihomogeneous pieces)."""
        pieces: dict[tuple[int, int], dict] = {}
        for m, c in f.terms.items():
            pieces.setdefault(m.bidegree, {})[m] = c
        for deg, piece in pieces.items():
            space = self.spaces.get(deg)
            if space is None or not space.contains(piece):
                return False
        return True


def _space(n: int) -> EchelonSpace:
    return EchelonSpace(monomial_key)


def derivative_span(delta: Polynomial) -> BigradedBasis:
    """Closure of ``{delta}`` under all partial derivatives, echelonized per bidegree."""
    n = delta.n
    if n > MAX_SPAN_N:
        raise ScaleExceeded(f"derivative span limited to n <= {MAX_SPAN_N}")
    basis = BigradedBasis(n)
    pieces: dict[tuple[int, int], dict] = {}
    for m, c in delta.terms.items():
        pieces.setdefault(m.bidegree, {})[m] = c
    for deg, piece in pieces.items():
        basis.spaces.setdefault(deg, _space(n)).insert(piece)
    if not pieces:
        return basis
    top = max(a + b for a, b in pieces)
    for total in range(top, 0, -1):
        for deg in sorted(d for d in list(basis.spaces) if sum(d) == total):
            a, b = deg
            for row in basis.spaces[deg].basis():
                poly = Polynomial._raw(n, row)
                for var in range(2 * n):
                    target = (a - 1, b) if var < n else (a, b - 1)
                    if target[0] < 0 or target[1] < 0:
                        continue
                    d = poly.partial(var)
                    if d:
                        basis.spaces.setdefault(target, _space(n)).insert(d.terms)
    return basis


@cache
def hook_harmonics(n: int, k: int) -> BigradedBasis:
    """``H_mu`` for the hook ``mu = (1^(k-1), n-k+1)`` (cached; treat as read-only)."""
    return derivative_span(delta_mu(hook_shape(n, k), n))


def bigraded_hilbert(basis: BigradedBasis) -> QTPolynomial:
    """Raw series ``sum dim(H^(h,h')) q^h t^h'`` with ``h`` the x-degree.

    Use :func:`to_macdonald_orientation` before comparing with Kostka sums.
    """
    return QTPolynomial({deg: basis.dim(deg) for deg in basis.bidegrees()})


# ---------------------------------------------------------------- ideal generators


@dataclass(frozen=True)
class HookIdealGens:
    n: int
    k: int
    generators: tuple[Polynomial, ...]
    labels: tuple[str, ...]


def hook_ideal_generators(n: int, k: int) -> HookIdealGens:
    """Generators of ``J_mu`` for the hook: power sums in x and y, squarefree
    x-monomials of support ``k``, squarefree y-monomials of support ``n-k+1``,
    and the ``x_i y_i``.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    gens, labels = [], []
    for side in ("x", "y"):
        for d in range(1, n + 1):
            gens.append(power_sum(n, d, side))
            labels.append(f"p{d}({side})")
    for side, size in (("x", k), ("y", n - k + 1)):
        offset = 0 if side == "x" else n
        for subset in combinations(range(n), size):
            exps = [0] * (2 * n)
            for i in subset:
                exps[offset + i] = 1
            gens.append(Polynomial.from_monomial(exps))
            labels.append("*".join(f"{side}{i + 1}" for i in subset))
    for i in range(n):
        exps = [0] * (2 * n)
        exps[i] = exps[n + i] = 1
        gens.append(Polynomial.from_monomial(exps))
        labels.append(f"x{i + 1}*y{i + 1}")
    return HookIdealGens(n, k, tuple(gens), tuple(labels))


def annihilates(g: Polynomial, basis: BigradedBasis) -> bool:
    """True when ``g(d)`` kills every bucket element of ``basis``."""
    for polys in basis.buckets.values():
        for h in polys:
            if apply_differential(g, h):
                return False
    return True


def monomials_Mnk(n: int, k: int, a: int, b: int) -> Iterator[Monomial]:
    """Monomials of ``M_n^(k)`` with bidegree ``(a, b)``."""

    def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(1, total - parts + 2):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for sx in range(0, min(k - 1, a) + 1):
        if (sx == 0) != (a == 0):
            continue
        for xs in combinations(range(n), sx):
            free = [i for i in range(n) if i not in xs]
            for sy in range(0, min(n - k, b) + 1):
                if (sy == 0) != (b == 0):
                    continue
                for ys in combinations(free, sy):
                    for xe in compositions(a, sx):
                        for ye in compositions(b, sy):
                            exps = [0] * (2 * n)
                            for i, e in zip(xs, xe):
                                exps[i] = e
                            for j, e in zip(ys, ye):
                                exps[n + j] = e
                            yield Monomial(exps)


def ideal_quotient_dims(n: int, k: int, a_max: int, b_max: int) -> dict[tuple[int, int], int]:
    """``dim (R / J')_(a,b)`` for the ideal ``J'`` of :func:`hook_ideal_generators`.

    ``J'`` contains the monomial ideal ``I_k``, so the computation is done in
    the monomial basis ``M_n^(k)`` of ``R / I_k``: the degree-``(a,b)`` part of
    ``J' / I_k`` is spanned by the normal forms of ``m * p_r`` for monomials
    ``m`` in ``M_n^(k)``.
    """
    out = {}
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            coords = list(monomials_Mnk(n, k, a, b))
            space = EchelonSpace(monomial_key)
            for r in range(1, n + 1):
                for side, (da, db) in (("x", (a - r, b)), ("y", (a, b - r))):
                    if da < 0 or db < 0:
                        continue
                    offset = 0 if side == "x" else n
                    for m in monomials_Mnk(n, k, da, db):
                        if len(space) == len(coords):
                            break
                        vec: dict = {}
                        for i in range(n):
                            new = list(m)
                            new[offset + i] += r
                            if in_Mnk(new, n, k):
                                key = Monomial(new)
                                vec[key] = vec.get(key, 0) + 1
                        if vec:
                            space.insert(vec)
            out[(a, b)] = len(coords) - len(space)
    return out


def hook_top_degrees(n: int, k: int) -> tuple[int, int]:
    """Bidegree of ``Delta`` for the hook: ``(k(k-1)/2, (n-k)(n-k+1)/2)``."""
    return k * (k - 1) // 2, (n - k) * (n - k + 1) // 2


# ---------------------------------------------------------------- certification


@dataclass(frozen=True)
class BlockReport:
    xdeg: int
    ydeg: int
    dim: int
    candidates: int
    rank: int

    @property
    def ok(self) -> bool:
        return self.dim == self.candidates == self.rank

    def as_json(self) -> dict:
        return {"xdeg": self.xdeg, "ydeg": self.ydeg, "dim": self.dim, "rank": self.rank}


@dataclass(frozen=True)
class CertificationReport:
    ok: bool
    blocks: tuple[BlockReport, ...]

    def as_json(self, n: int, k: int, basis_name: str) -> dict:
        return {
            "n": n,
            "k": k,
            "basis_name": basis_name,
            "ok": self.ok,
            "blocks": [b.as_json() for b in self.blocks],
        }

    def first_failure(self) -> BlockReport | None:
        return next((b for b in self.blocks if not b.ok), None)


def certify_basis(candidates: Sequence[Polynomial], basis: BigradedBasis) -> CertificationReport:
    """Decide whether ``candidates`` project to a basis of ``R / H^perp``.

    The candidates must be bihomogeneous. For each bidegree the matrix
    ``<candidate_i, h_j>`` against the bucket basis of ``H`` must be square
    and invertible.
    """
    total = basis.dim()
    if len(candidates) != total:
        raise ValueError(f"{len(candidates)} candidates for a space of dimension {total}")
    grouped: dict[tuple[int, int], list[Polynomial]] = {}
    for f in candidates:
        if not f:
            grouped.setdefault((-1, -1), []).append(f)
            continue
        grouped.setdefault(f.bidegree(), []).append(f)
    blocks = []
    harmonic = basis.buckets
    for deg in sorted(set(grouped) | set(harmonic)):
        cands = grouped.get(deg, [])
        hs = harmonic.get(deg, [])
        if cands and hs:
            r = rank([[diff_pair(c, h) for h in hs] for c in cands])
        else:
            r = 0
        blocks.append(BlockReport(deg[0], deg[1], len(hs), len(cands), r))
    return CertificationReport(all(b.ok for b in blocks), tuple(blocks))


# ---------------------------------------------------------------- group action


def diagonal_action(sigma: Sequence[int], f: Polynomial) -> Polynomial:
    """``f(x_sigma(1), ..., x_sigma(n); y_sigma(1), ..., y_sigma(n))``."""
    n = f.n
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError("sigma must be a permutation of 1..n")
    # substituting x_i -> x_sigma(i) sends the exponent at i to sigma(i)
    return f.permute_variables(sigma)


def bucket_trace(basis: BigradedBasis, bidegree: tuple[int, int], sigma: Sequence[int]) -> int:
    """Trace of ``sigma`` acting diagonally on one bucket."""
    space = basis.spaces[bidegree]
    total = 0
    for pivot, row in space.rows.items():
        image = Polynomial._raw(basis.n, row).permute_variables(sigma)
        total += image.terms.get(pivot, 0)
    return total
