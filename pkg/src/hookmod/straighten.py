"""The bijection between ``M_n^(k)`` and ``M_n^(n)``, the order ``<_k`` and straightening.

Monomials are :class:`~hookmod.polyring.Monomial` tuples of length ``2n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Literal

from hookmod.bases import d_vec, descent_monomial
from hookmod.combinatorics import Partition, Permutation, dominance_leq
from hookmod.errors import VerificationError
from hookmod.polyring import Monomial, Polynomial, elementary_ek_product, in_Mnk, mul_in_Pk

Comparison = Literal["less", "greater", "incomparable", "equal"]


def _require_Mnk(m: Monomial, n: int, k: int) -> None:
    if len(m) != 2 * n:
        raise ValueError(f"monomial has {len(m) // 2} variable pairs, expected {n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if not in_Mnk(m, n, k):
        raise ValueError(f"{Monomial(m)} is not in normal form for k={k}")


# ---------------------------------------------------------------- index data


def index_permutation(m: Monomial, k: int) -> Permutation:
    """x-support by decreasing exponent, then untouched indices, then y-support by
    increasing exponent; ties are broken by increasing index.
    """
    m = Monomial(m)
    n = m.n
    _require_Mnk(m, n, k)
    xs = sorted((i for i in range(n) if m[i]), key=lambda i: (-m[i], i))
    ys = sorted((i for i in range(n) if m[n + i]), key=lambda i: (m[n + i], i))
    rest = [i for i in range(n) if not m[i] and not m[n + i]]
    return Permutation(i + 1 for i in xs + rest + ys)


def _position_exponents(m: Monomial, pi: Permutation) -> list[int]:
    """``p_i``: exponent of ``x_pi(i)`` for ``i < k`` or ``y_pi(i)`` otherwise (both never nonzero)."""
    n = m.n
    return [m[pi(i) - 1] + m[n + pi(i) - 1] for i in range(1, n + 1)]


def exponent_bipartition(m: Monomial, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``((p_1, ..., p_(k-1)), (p_n, ..., p_(k+1)))``."""
    m = Monomial(m)
    n = m.n
    p = _position_exponents(m, index_permutation(m, k))
    return tuple(p[: k - 1]), tuple(reversed(p[k:]))


def complementary_bipartition(m: Monomial, k: int) -> tuple[Partition, Partition]:
    """Conjugates of the exponent differences between ``m`` and ``a_pi(m)^(k)``."""
    m = Monomial(m)
    n = m.n
    pi = index_permutation(m, k)
    p = _position_exponents(m, pi)
    d = d_vec(pi, k)
    xdiff = [p[i] - d[i] for i in range(k - 1)]
    ydiff = [p[i] - d[i] for i in range(n - 1, k - 1, -1)]
    if any(v < 0 for v in xdiff + ydiff):
        raise VerificationError(f"negative exponent difference for {m}")
    return Partition(sorted(xdiff, reverse=True)).conjugate(), Partition(sorted(ydiff, reverse=True)).conjugate()


# ---------------------------------------------------------------- the bijection


def psi_k(m: Monomial, n: int, k: int) -> Monomial:
    """``M_n^(k) -> M_n^(n)``: move y-exponents to negative x-exponents, then shift by ``(x_1...x_n)^u``."""
    m = Monomial(m)
    _require_Mnk(m, n, k)
    u = max(m[n:], default=0)
    exps = [m[i] - m[n + i] + u for i in range(n)] + [0] * n
    return Monomial(exps)


def phi_k(m: Monomial, n: int, k: int) -> Monomial:
    """Inverse of :func:`psi_k`: columns of height ``>= k`` of the exponent partition become y-products."""
    m = Monomial(m)
    _require_Mnk(m, n, n)
    pi = index_permutation(m, n)
    lam = Partition(m[pi(i) - 1] for i in range(1, n + 1))
    exps = [0] * (2 * n)
    for height in lam.conjugate():
        if height <= k - 1:
            for i in range(1, height + 1):
                exps[pi(i) - 1] += 1
        else:
            for i in range(height + 1, n + 1):
                exps[n + pi(i) - 1] += 1
    return Monomial(exps)


def nu_of(m: Monomial, n: int, k: int) -> Partition:
    """Canonical complementary partition ``nu(m) = mu(psi^(k)(m))``."""
    return complementary_bipartition(psi_k(m, n, k), n)[0]


# ---------------------------------------------------------------- the order


def prec_k(m1: Monomial, m2: Monomial, k: int) -> Comparison:
    """Compare under ``<_k``: dominance of exponent bipartitions, then larger
    inversion number of the index permutation is smaller.
    """
    m1, m2 = Monomial(m1), Monomial(m2)
    if m1.bidegree != m2.bidegree:
        raise ValueError("prec_k needs monomials of equal bidegree")
    if m1 == m2:
        return "equal"
    l1, l2 = exponent_bipartition(m1, k), exponent_bipartition(m2, k)
    if l1 == l2:
        i1 = index_permutation(m1, k).inversions()
        i2 = index_permutation(m2, k).inversions()
        if i1 > i2:
            return "less"
        if i1 < i2:
            return "greater"
        return "incomparable"
    le = dominance_leq(l1[0], l2[0]) and dominance_leq(l1[1], l2[1])
    ge = dominance_leq(l2[0], l1[0]) and dominance_leq(l2[1], l1[1])
    if le:
        return "less"
    if ge:
        return "greater"
    return "incomparable"


def _linear_key(m: Monomial, k: int) -> tuple:
    """A key whose decreasing order is a linear extension of ``<_k``."""
    lx, ly = exponent_bipartition(m, k)
    weight = 0
    for part in (lx, ly):
        run = 0
        for v in part:
            run += v
            weight += run
    return (weight, -index_permutation(m, k).inversions(), tuple(m))


# ---------------------------------------------------------------- straightening


@dataclass(frozen=True)
class StraighteningTerm:
    coef: int
    pi: Permutation
    nu: Partition

    def as_json(self) -> dict:
        return {"coef": self.coef, "pi": str(self.pi), "nu": list(self.nu)}


@lru_cache(maxsize=None)
def _e_nu(n: int, k: int, nu: Partition) -> Polynomial:
    return elementary_ek_product(n, k, nu)


def leading_product(m: Monomial, n: int, k: int) -> Polynomial:
    """``a_pi(m)^(k) * e_nu(m)^(k)`` expanded in ``P_n^(k)``."""
    pi = index_permutation(m, k)
    a = Polynomial.from_monomial(descent_monomial(pi, k))
    return mul_in_Pk(a, _e_nu(n, k, nu_of(m, n, k)), n, k)


def straighten(
    m: Monomial,
    n: int,
    k: int,
    on_step: Callable[[Monomial, Monomial], None] | None = None,
) -> list[StraighteningTerm]:
    """Write ``m = sum coef * a_pi^(k) e_nu^(k)`` in ``P_n^(k)``.

    Each step subtracts the leading product of the current monomial and
    recurses on the leftover monomials, which must all be strictly smaller
    under ``<_k``; ``on_step(parent, child)`` is called for every recursion
    edge. The returned list starts with the term of ``m`` itself.
    """
    m = Monomial(m)
    _require_Mnk(m, n, k)
    memo: dict[Monomial, dict[Monomial, int]] = {}

    def expand(mono: Monomial) -> dict[Monomial, int]:
        """Coefficients indexed by the monomial whose ``(pi, nu)`` labels the term."""
        if mono in memo:
            return memo[mono]
        product = leading_product(mono, n, k)
        if product.coefficient(mono) != 1:
            raise VerificationError(f"{mono} is not the leading term of its product")
        out = {mono: 1}
        for other, c in product.terms.items():
            if other == mono:
                continue
            if prec_k(other, mono, k) != "less":
                raise VerificationError(f"{other} is not below {mono} in the straightening order")
            if on_step is not None:
                on_step(mono, other)
            for key, v in expand(other).items():
                out[key] = out.get(key, 0) - c * v
        memo[mono] = {key: v for key, v in out.items() if v}
        return memo[mono]

    coeffs = expand(m)
    order = sorted(coeffs, key=lambda x: _linear_key(x, k), reverse=True)
    return [
        StraighteningTerm(int(coeffs[x]), index_permutation(x, k), nu_of(x, n, k))
        for x in order
    ]


def reexpand(terms: list[StraighteningTerm], n: int, k: int) -> Polynomial:
    """``sum coef * a_pi^(k) e_nu^(k)`` in ``P_n^(k)`` (the round-trip oracle)."""
    total = Polynomial.zero(n)
    for term in terms:
        a = Polynomial.from_monomial(descent_monomial(term.pi, k))
        total = total + mul_in_Pk(a, _e_nu(n, k, term.nu), n, k).scale(term.coef)
    return total
