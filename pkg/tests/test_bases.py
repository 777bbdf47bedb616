from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from hookmod.bases import (
    KickingTriple,
    artin_factory,
    artin_monomial,
    composed_basis,
    d_vec,
    descent_factory,
    descent_monomial,
    divided_difference,
    haglund_monomial,
    inv_vec,
    kicking_sequence,
    monomial_basis,
    named_basis,
    positional_form,
    schubert_factory,
    schubert_polynomials,
)
from hookmod.combinatorics import Permutation, all_permutations
from hookmod.errors import ScaleExceeded
from hookmod.harmonics import certify_basis, hook_harmonics
from hookmod.polyring import Polynomial, format_monomial, from_text, in_Mnk

PI = Permutation((8, 6, 1, 4, 7, 3, 5, 2))

perm_k_st = st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.permutations(range(1, n + 1)).map(Permutation), st.integers(1, n))
)


def test_d_vec_worked_example():
    assert d_vec(PI, 4) == (2, 1, 0, 0, 0, 1, 1, 2)
    assert d_vec(Permutation(range(1, 6)), 3) == (0,) * 5


def test_descent_monomial_worked_example():
    assert format_monomial(positional_form(descent_monomial(PI, 4), PI)) == "x1^2*x2*y6*y7*y8^2"
    # the same monomial in the variables themselves
    assert format_monomial(descent_monomial(PI, 4)) == "x6*x8^2*y2^2*y3*y5"


def test_inversion_statistics_follow_the_definition():
    assert inv_vec(PI, 4) == (3, 2, 0, 0, 0, 2, 1, 4)
    assert format_monomial(positional_form(artin_monomial(PI, 4), PI)) == "x1^3*x2^2*y6^2*y7*y8^4"
    assert format_monomial(positional_form(haglund_monomial(PI, 4), PI)) == "x1^2*x2*y6^2*y7*y8^4"


def test_identity_gives_unit_monomials():
    ident = Permutation(range(1, 6))
    for k in range(1, 6):
        for fn in (descent_monomial, artin_monomial, haglund_monomial):
            assert not any(fn(ident, k))


@given(perm_k_st)
def test_monomials_lie_in_normal_form(pk):
    pi, k = pk
    for fn in (descent_monomial, artin_monomial, haglund_monomial):
        assert in_Mnk(fn(pi, k), pi.n, k)
    d = d_vec(pi, k)
    assert d[k - 1] == 0
    xs = d[: k - 1]
    ys = d[k:][::-1]
    assert list(xs) == sorted(xs, reverse=True)
    assert list(ys) == sorted(ys, reverse=True)


def test_k_equals_n_gives_garsia_stanton():
    for pi in all_permutations(5):
        des = pi.descents()
        expected = [0] * 10
        for i in range(1, 5):
            expected[pi(i) - 1] = sum(1 for r in des if r >= i)
        assert list(descent_monomial(pi, 5)) == expected


def test_descent_monomials_injective():
    for n in range(1, 7):
        for k in range(1, n + 1):
            monos = {descent_monomial(pi, k) for pi in all_permutations(n)}
            assert len(monos) == factorial(n)


def test_kicking_sequence_worked_list():
    seq = kicking_sequence(4, 3)
    assert len(seq) == 12 == 4 * comb(3, 2)
    words = ["".join(map(str, t.permutation)) for t, _ in seq]
    assert words == ["4321", "4312", "4231", "4213", "4132", "4123", "3241", "3214", "3142", "3124", "2143", "2134"]
    monos = [format_monomial(m) for _, m in seq]
    assert monos[:3] == ["x3*x4*y1", "x3*x4", "x4*y1"]
    assert monos[10:] == ["y3", "1"]


def test_kicking_permutation_example():
    triple = KickingTriple(frozenset({1, 6, 7}), 5, frozenset({2, 3, 4, 8, 9}), 0)
    assert "".join(map(str, triple.permutation)) == "761523489"


def test_kicking_filtration_is_strict():
    for n in range(2, 6):
        for k in range(1, n + 1):
            ms = [m for _, m in kicking_sequence(n, k)]
            assert len(ms) == n * comb(n - 1, k - 1)
            assert not any(ms[-1])
            for t in range(len(ms)):
                for earlier in range(t):
                    assert not ms[earlier].divides(ms[t])


def test_schubert_small():
    assert [str(p) for p in schubert_factory(1)] == ["1/1*1"]
    assert {str(p) for p in schubert_factory(2)} == {"1/1*1", "1/1*x1"}
    polys = schubert_polynomials(3)
    assert len(polys) == 6
    assert polys[Permutation((1, 3, 2))] == from_text("1/1*x1 + 1/1*x2", 3)
    with pytest.raises(ScaleExceeded):
        schubert_polynomials(6)


def test_coinvariant_factories_certify():
    for m in range(1, 5):
        basis = hook_harmonics(m, m)
        for factory in (descent_factory, artin_factory, schubert_factory):
            assert certify_basis(factory(m), basis).ok


def test_divided_difference():
    f = from_text("1/1*x1^2", 2)
    assert divided_difference(f, 1) == from_text("1/1*x1 + 1/1*x2", 2)
    assert divided_difference(from_text("1/1*x1*x2", 2), 1) == Polynomial.zero(2)


def test_composed_bases_have_n_factorial_elements():
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert len(composed_basis(n, k, "descent", "artin")) == factorial(n)


def test_composed_descent_with_k_equal_n_is_coinvariant_basis():
    basis = composed_basis(4, 4, "descent", "descent")
    assert certify_basis(basis, hook_harmonics(4, 4)).ok


def test_bases_certify_n4():
    for k in range(1, 5):
        for name in ("descent", "artin", "haglund", "schubert", "kicking:descent,schubert"):
            assert certify_basis(named_basis(name, 4, k), hook_harmonics(4, k)).ok, (name, k)


def test_named_basis_errors():
    with pytest.raises(ValueError):
        named_basis("nope", 3, 2)
    with pytest.raises(ValueError):
        named_basis("kicking:descent", 3, 2)
    assert len(monomial_basis("haglund", 3, 1)) == 6
