"""Descent representations of the hook module: explicit generator matrices,
characters, and multiplicities of irreducibles.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from hookmod.bases import d_vec, descent_monomial
from hookmod.combinatorics import (
    NKBipartition,
    Partition,
    Permutation,
    a_lambda,
    adjacent_transposition,
    all_permutations,
    cycle_type_representative,
    des_tableau,
    gen_partitions,
    gen_syt,
    identity,
    maj_window,
    comaj_window,
    nk_bipartitions,
)
from hookmod.errors import ScaleExceeded, VerificationError
from hookmod.harmonics import Q_VARIABLE, bucket_trace, hook_harmonics
from hookmod.linalg import identity_matrix, matmul, trace
from hookmod.polyring import Monomial, Polynomial
from hookmod.straighten import straighten

MAX_CHARACTER_N = 8
MAX_MULTIPLICITY_N = 5


# ---------------------------------------------------------------- descent bases


def r_lambda_basis(lam: NKBipartition) -> list[Permutation]:
    """``{pi : Des(pi) = A_lambda}`` in lex order."""
    target = a_lambda(lam)
    return [pi for pi in all_permutations(lam.n) if pi.descents() == target]


def swap_values(pi: Permutation, j: int) -> Permutation:
    """``s_j pi``: exchange the values ``j`` and ``j+1`` in the word of ``pi``."""
    return Permutation(j + 1 if v == j else j if v == j + 1 else v for v in pi)


def a_j_set(pi: Permutation, j: int) -> list[Permutation]:
    """Rearrangements of the maximal increasing window of ``s_j pi`` around ``j+1, j``."""
    pi = Permutation(pi)
    n = pi.n
    inv = pi.inverse()
    if not 1 <= j < n or inv(j + 1) != inv(j) - 1:
        raise ValueError(f"j+1 must immediately precede j in {pi}")
    t = inv(j + 1)
    des = pi.descents()
    m1 = max([i for i in des if i <= t - 1] + [0])
    m2 = min([i for i in des if i >= t + 1] + [n])
    values = sorted(pi[m1:m2])
    excluded = {pi, swap_values(pi, j)}
    out = []
    for left in combinations(values, t - m1):
        right = [v for v in values if v not in left]
        sigma = Permutation(list(pi[:m1]) + list(left) + right + list(pi[m2:]))
        if sigma not in excluded:
            out.append(sigma)
    return sorted(out)


@dataclass(frozen=True)
class ActionMatrix:
    """Matrix of ``s_j`` on ``R_lambda``; column ``c`` is the image of ``basis[c]``."""

    j: int
    basis: tuple[Permutation, ...]
    matrix: tuple[tuple[int, ...], ...]

    def as_json(self) -> dict:
        return {"j": self.j, "basis": [str(p) for p in self.basis], "matrix": [list(r) for r in self.matrix]}


def transported_monomial(sigma: Permutation, pi: Permutation, k: int) -> Monomial:
    """``prod_{i<k} x_sigma(i)^d_i(pi) * prod_{i>k} y_sigma(i)^d_i(pi)``.

    Equals ``a_sigma^(k)`` when ``sigma`` and ``pi`` share a descent set.
    """
    n = pi.n
    d = d_vec(pi, k)
    exps = [0] * (2 * n)
    for i in range(1, k):
        exps[sigma(i) - 1] = d[i - 1]
    for i in range(k + 1, n + 1):
        exps[n + sigma(i) - 1] = d[i - 1]
    return Monomial(exps)


def _class_part(mono: Monomial, n: int, k: int, target: frozenset[int]) -> dict[Permutation, int]:
    """Image of a monomial in ``R_lambda``: straighten, drop ``e_nu`` multiples
    (they lie in the ideal) and descent-basis terms of other classes (they lie
    in the smaller filtration piece).
    """
    out: dict[Permutation, int] = {}
    for term in straighten(mono, n, k):
        if term.nu or term.pi.descents() != target:
            continue
        out[term.pi] = out.get(term.pi, 0) + term.coef
    return out


def _image(pi: Permutation, j: int, k: int, target: frozenset[int]) -> dict[Permutation, int]:
    """``s_j a_pi`` in the descent basis of the class ``target``.

    In the third case a ``sigma`` in ``A_j(pi)`` may leave the descent class;
    its term is then the monomial carrying the exponents of ``a_pi`` on the
    variables ordered by ``sigma``, reduced into the class.
    """
    n = pi.n
    inv = pi.inverse()
    if abs(inv(j + 1) - inv(j)) > 1:
        return {swap_values(pi, j): 1}
    if inv(j + 1) == inv(j) + 1:
        return {pi: 1}
    out = {pi: -1}
    for sigma in a_j_set(pi, j):
        if sigma.descents() == target:
            contrib = {sigma: 1}
        else:
            contrib = _class_part(transported_monomial(sigma, pi, k), n, k, target)
        for key, c in contrib.items():
            out[key] = out.get(key, 0) - c
    return {key: c for key, c in out.items() if c}


def action_matrix(lam: NKBipartition, j: int) -> ActionMatrix:
    basis = r_lambda_basis(lam)
    if not 1 <= j < lam.n:
        raise ValueError(f"generator index must lie in 1..{lam.n - 1}")
    index = {p: i for i, p in enumerate(basis)}
    target = a_lambda(lam)
    rows = [[0] * len(basis) for _ in basis]
    for c, pi in enumerate(basis):
        for sigma, coeff in _image(pi, j, lam.k, target).items():
            if sigma not in index:
                raise VerificationError(f"s_{j} maps {pi} outside the descent class")
            rows[index[sigma]][c] += coeff
    return ActionMatrix(j, tuple(basis), tuple(tuple(r) for r in rows))


def action_matrices(lam: NKBipartition) -> list[ActionMatrix]:
    return [action_matrix(lam, j) for j in range(1, lam.n)]


def straightened_action_matrix(lam: NKBipartition, j: int) -> list[list[int]]:
    """Independent oracle: act on the monomial ``a_pi^(k)``, straighten, drop
    terms with a nonempty ``e_nu`` factor (they lie in the ideal) and terms
    outside the descent class (strictly lower filtration piece).
    """
    n, k = lam.n, lam.k
    basis = r_lambda_basis(lam)
    index = {p: i for i, p in enumerate(basis)}
    target = a_lambda(lam)
    swap = adjacent_transposition(j, n)
    rows = [[0] * len(basis) for _ in basis]
    for c, pi in enumerate(basis):
        image = Polynomial.from_monomial(descent_monomial(pi, k)).permute_variables(swap)
        (mono,) = image.terms
        for sigma, coeff in _class_part(mono, n, k, target).items():
            rows[index[sigma]][c] += coeff
    return rows


def coxeter_relations_hold(mats: Sequence[ActionMatrix]) -> bool:
    """``s_j^2 = 1``, ``(s_j s_(j+1))^3 = 1`` and ``(s_i s_j)^2 = 1`` for ``|i-j| >= 2``."""
    if not mats:
        return True
    size = len(mats[0].matrix)
    one = identity_matrix(size)
    m = [[list(r) for r in a.matrix] for a in mats]

    def power(a: list[list[int]], e: int) -> list[list[int]]:
        out = one
        for _ in range(e):
            out = matmul(out, a)
        return out

    for a in range(len(m)):
        if power(m[a], 2) != one:
            return False
        for b in range(a + 1, len(m)):
            order = 3 if b == a + 1 else 2
            if power(matmul(m[a], m[b]), order) != one:
                return False
    return True


# ---------------------------------------------------------------- characters


def cycle_type_element(rho: Sequence[int]) -> Permutation:
    """An explicit permutation of cycle type ``rho`` built from adjacent transpositions."""
    rho = Partition(rho)
    n = rho.size
    sigma = identity(n)
    for j in cycle_type_representative(rho):
        sigma = sigma.compose(adjacent_transposition(j, n))
    return sigma


def character_of(mats: Sequence[ActionMatrix], lam: NKBipartition) -> dict[Partition, int]:
    """Class function of ``R_lambda``: traces of products of generator matrices."""
    n = lam.n
    size = len(r_lambda_basis(lam))
    gens = {a.j: [list(r) for r in a.matrix] for a in mats}
    if n > 1 and set(gens) != set(range(1, n)):
        raise ValueError("need all n-1 generator matrices")
    out = {}
    for rho in gen_partitions(n):
        mat = identity_matrix(size)
        for j in cycle_type_representative(rho):
            mat = matmul(mat, gens[j])
        out[rho] = trace(mat)
    return out


def class_size(rho: Sequence[int]) -> int:
    rho = Partition(rho)
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * factorial(mult)
    return factorial(rho.size) // z


@cache
def _mn(beta: frozenset[int], rho: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama on beta-sets: remove a rim hook of length ``rho[0]``."""
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in beta:
            sign = (-1) ** sum(1 for c in beta if b - r < c < b)
            total += sign * _mn(beta - {b} | {b - r}, rest)
    return total


def irreducible_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    lam = Partition(lam)
    ell = len(lam)
    beta = frozenset(lam[i] + ell - 1 - i for i in range(ell))
    return _mn(beta, tuple(Partition(rho)))


@cache
def irreducible_characters(n: int) -> dict[Partition, dict[Partition, int]]:
    """Character table ``{lambda: {rho: chi^lambda(rho)}}``."""
    if n > MAX_CHARACTER_N:
        raise ScaleExceeded(f"character table limited to n <= {MAX_CHARACTER_N}")
    classes = gen_partitions(n)
    return {lam: {rho: irreducible_character(lam, rho) for rho in classes} for lam in classes}


def decompose(chi: dict[Partition, int]) -> dict[Partition, int]:
    """Multiplicities of irreducibles; raises when they are not nonnegative integers."""
    n = next(iter(chi)).size
    table = irreducible_characters(n)
    out = {}
    for lam, row in table.items():
        total = Fraction(sum(class_size(rho) * chi[rho] * row[rho] for rho in chi), factorial(n))
        if total.denominator != 1 or total < 0:
            raise VerificationError(f"multiplicity of {tuple(lam)} is {total}")
        if total:
            out[lam] = int(total)
    return out


def syt_descent_counts(n: int, descent_set: frozenset[int]) -> dict[Partition, int]:
    """``{shape: #SYT with Des(T) = descent_set}``."""
    out = {}
    for lam in gen_partitions(n):
        c = sum(1 for T in gen_syt(lam) if des_tableau(T) == descent_set)
        if c:
            out[lam] = c
    return out


# ---------------------------------------------------------------- the hook module


def bigraded_decomposition(n: int, k: int) -> dict[tuple[int, int], list[NKBipartition]]:
    """Bipartitions grouped by their weights ``(t1, t2) = (|nu|, |mu|)``."""
    out: dict[tuple[int, int], list[NKBipartition]] = {}
    for lam in nk_bipartitions(n, k):
        out.setdefault(lam.weights(), []).append(lam)
    return dict(sorted(out.items()))


def descent_hilbert(n: int, k: int):
    """``sum_lambda dim R_lambda q^t1 t^t2`` (Macdonald orientation)."""
    from hookmod.qtpoly import QTPolynomial

    return QTPolynomial(
        {w: sum(len(r_lambda_basis(lam)) for lam in lams) for w, lams in bigraded_decomposition(n, k).items()}
    )


@dataclass(frozen=True)
class MultiplicityMismatch:
    shape: Partition
    h: int
    h_prime: int
    from_module: int
    from_tableaux: int


@dataclass(frozen=True)
class MultiplicityReport:
    n: int
    k: int
    ok: bool
    checked: int
    mismatch: MultiplicityMismatch | None

    def as_json(self) -> dict:
        out = {"n": self.n, "k": self.k, "ok": self.ok, "checked": self.checked}
        if self.mismatch:
            m = self.mismatch
            out["mismatch"] = {
                "lambda": list(m.shape),
                "h": m.h,
                "h_prime": m.h_prime,
                "module": m.from_module,
                "tableaux": m.from_tableaux,
            }
        return out


def stembridge_multiplicity_check(n: int, k: int) -> MultiplicityReport:
    """Compare multiplicities of irreducibles in each bihomogeneous piece of the
    harmonic module with counts of SYT by ``(maj_{1,n-k+1}, comaj_{n-k+1,n})``.
    """
    if n > MAX_MULTIPLICITY_N:
        raise ScaleExceeded(f"multiplicity check limited to n <= {MAX_MULTIPLICITY_N}")
    basis = hook_harmonics(n, k)
    w = n - k + 1
    expected: Counter = Counter()
    for lam in gen_partitions(n):
        for T in gen_syt(lam):
            expected[(lam, maj_window(T, 1, w), comaj_window(T, w, n))] += 1
    reps = {rho: cycle_type_element(rho) for rho in gen_partitions(n)}
    observed: Counter = Counter()
    for xdeg, ydeg in basis.bidegrees():
        chi = {rho: bucket_trace(basis, (xdeg, ydeg), sigma) for rho, sigma in reps.items()}
        h, h_prime = (ydeg, xdeg) if Q_VARIABLE == "y" else (xdeg, ydeg)
        for lam, mult in decompose(chi).items():
            observed[(lam, h, h_prime)] += mult
    checked = 0
    for key in sorted(set(expected) | set(observed)):
        checked += 1
        if expected[key] != observed[key]:
            lam, h, hp = key
            return MultiplicityReport(n, k, False, checked, MultiplicityMismatch(lam, h, hp, observed[key], expected[key]))
    return MultiplicityReport(n, k, True, checked, None)
