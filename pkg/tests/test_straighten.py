import random

import pytest
from hypothesis import given, settings, strategies as st

from hookmod.bases import descent_monomial
from hookmod.combinatorics import Partition, Permutation, all_permutations, gen_partitions
from hookmod.harmonics import monomials_Mnk
from hookmod.polyring import (
    Monomial,
    Polynomial,
    elementary_ek,
    elementary_ek_product,
    format_monomial,
    in_Mnk,
    parse_monomial,
)
from hookmod.straighten import (
    complementary_bipartition,
    exponent_bipartition,
    index_permutation,
    leading_product,
    nu_of,
    phi_k,
    prec_k,
    psi_k,
    reexpand,
    straighten,
)

WORKED_M = parse_monomial("x1^2 y2^4 x3^2 y5 x6^3", 7)


def random_Mnk(rng: random.Random, n: int, k: int, max_exp: int = 3) -> Monomial:
    xs = rng.sample(range(n), rng.randint(0, k - 1))
    rest = [i for i in range(n) if i not in xs]
    ys = rng.sample(rest, rng.randint(0, min(n - k, len(rest))))
    exps = [0] * (2 * n)
    for i in xs:
        exps[i] = rng.randint(1, max_exp)
    for i in ys:
        exps[n + i] = rng.randint(1, max_exp)
    return Monomial(exps)


@st.composite
def mnk(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, n))
    seed = draw(st.integers(0, 2**32))
    return random_Mnk(random.Random(seed), n, k), n, k


def test_index_permutation_examples():
    assert str(index_permutation(WORKED_M, 5)) == "6134752"
    assert index_permutation(Monomial.one(4), 2) == Permutation((1, 2, 3, 4))
    assert index_permutation(parse_monomial("x2^3 x1^3", 3), 3)[:2] == (1, 2)
    with pytest.raises(ValueError):
        index_permutation(parse_monomial("x1 y1", 2), 2)


def test_bipartitions_of_worked_example():
    assert exponent_bipartition(WORKED_M, 5) == ((3, 2, 2, 0), (4, 1))
    mu_x, mu_y = complementary_bipartition(WORKED_M, 5)
    assert (tuple(mu_x), tuple(mu_y)) == ((3, 3), (1, 1))
    assert exponent_bipartition(Monomial.one(4), 2) == ((0,), (0, 0))


def test_complementary_bipartition_of_descent_monomial_is_empty():
    for pi in all_permutations(4):
        for k in range(1, 5):
            assert complementary_bipartition(descent_monomial(pi, k), k) == (Partition(), Partition())


def test_psi_worked_examples():
    m = parse_monomial("x3^6 x4^6 x7^5 y6^2 y2^3", 8)
    assert psi_k(m, 8, 5) == parse_monomial("x3^9 x4^9 x7^8 x1^3 x5^3 x8^3 x6", 8)
    assert psi_k(WORKED_M, 7, 5) == parse_monomial("x6^7 x1^6 x3^6 x4^4 x7^4 x5^3", 7)
    assert tuple(nu_of(WORKED_M, 7, 5)) == (6, 6, 3, 3)
    pure_x = parse_monomial("x1^4 x3", 5)
    assert psi_k(pure_x, 5, 3) == pure_x


@given(mnk())
def test_phi_psi_inverse(data):
    m, n, k = data
    image = psi_k(m, n, k)
    assert in_Mnk(image, n, n)
    assert phi_k(image, n, k) == m
    assert index_permutation(image, n) == index_permutation(m, k)


def test_psi_phi_inverse_on_Mnn():
    for n in range(1, 5):
        for k in range(1, n + 1):
            for d in range(7):
                for m in monomials_Mnk(n, n, d, 0):
                    assert psi_k(phi_k(m, n, k), n, k) == m


@given(mnk(max_n=4), st.data())
def test_psi_commutes_with_permutations(data, draw):
    m, n, k = data
    sigma = draw.draw(st.permutations(range(1, n + 1)))
    act = lambda mono: next(iter(Polynomial.from_monomial(mono).permute_variables(sigma).terms))
    assert psi_k(act(m), n, k) == act(psi_k(m, n, k))


def test_psi_of_descent_monomials():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for pi in all_permutations(n):
                assert psi_k(descent_monomial(pi, k), n, k) == descent_monomial(pi, n)


def _psi_linear(f: Polynomial, n: int, k: int) -> Polynomial:
    acc = Polynomial.zero(n)
    for m, c in f.terms.items():
        acc = acc + Polynomial.from_monomial(psi_k(m, n, k)).scale(c)
    return acc


def test_psi_of_single_elementary():
    for n in range(2, 6):
        for k in range(1, n + 1):
            for m in range(1, n):
                assert _psi_linear(elementary_ek(n, k, m), n, k) == elementary_ek(n, n, m)


def test_psi_of_elementary_products_is_symmetric():
    for n in range(2, 5):
        for k in range(1, n + 1):
            for d in range(1, 6):
                for mu in gen_partitions(d):
                    if mu[0] >= n:
                        continue
                    image = _psi_linear(elementary_ek_product(n, k, mu), n, k)
                    for i in range(1, n):
                        swap = list(range(1, n + 1))
                        swap[i - 1], swap[i] = swap[i], swap[i - 1]
                        assert image.permute_variables(swap) == image


def test_prec_examples():
    x1, x2 = parse_monomial("x1", 2), parse_monomial("x2", 2)
    assert prec_k(x2, x1, 2) == "less"
    assert prec_k(x1, x2, 2) == "greater"
    assert prec_k(x1, x1, 2) == "equal"
    with pytest.raises(ValueError):
        prec_k(x1, parse_monomial("x1^2", 2), 2)


def test_prec_has_incomparable_pairs():
    rng = random.Random(7)
    found = False
    for _ in range(2000):
        a, b = random_Mnk(rng, 6, 4), random_Mnk(rng, 6, 4)
        if a.bidegree == b.bidegree and prec_k(a, b, 4) == "incomparable":
            la, lb = exponent_bipartition(a, 4), exponent_bipartition(b, 4)
            assert la != lb
            found = True
            break
    assert found


def test_straighten_worked_example():
    terms = straighten(WORKED_M, 7, 5)
    assert (terms[0].coef, str(terms[0].pi), tuple(terms[0].nu)) == (1, "6134752", (6, 6, 3, 3))
    assert reexpand(terms, 7, 5) == Polynomial.from_monomial(WORKED_M)


def test_straighten_descent_monomial_is_single_term():
    pi = Permutation((3, 1, 4, 2))
    terms = straighten(descent_monomial(pi, 2), 4, 2)
    assert [(t.coef, t.pi, t.nu) for t in terms] == [(1, pi, Partition())]


def test_straighten_x1x2():
    m = parse_monomial("x1 x2", 3)
    assert reexpand(straighten(m, 3, 3), 3, 3) == Polynomial.from_monomial(m)


@given(mnk())
@settings(max_examples=80, deadline=None)
def test_straighten_round_trip(data):
    m, n, k = data
    edges = []
    terms = straighten(m, n, k, on_step=lambda p, c: edges.append((p, c)))
    assert reexpand(terms, n, k) == Polynomial.from_monomial(m)
    lead = terms[0]
    assert (lead.coef, lead.pi, lead.nu) == (1, index_permutation(m, k), nu_of(m, n, k))
    assert all(prec_k(c, p, k) == "less" for p, c in edges)
    assert all(t.coef and all(0 < part < n for part in t.nu) for t in terms)


@given(mnk())
@settings(max_examples=60, deadline=None)
def test_lead_term_property(data):
    m, n, k = data
    product = leading_product(m, n, k)
    assert product.coefficient(m) == 1
    assert all(prec_k(o, m, k) == "less" for o in product.terms if o != m)


def test_straighten_rejects_non_normal_form():
    with pytest.raises(ValueError):
        straighten(parse_monomial("x1 x2", 3), 3, 2)


def test_format_of_worked_monomial():
    assert format_monomial(WORKED_M) == "x1^2*x3^2*x6^3*y2^4*y5"
