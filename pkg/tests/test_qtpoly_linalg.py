from fractions import Fraction

from hypothesis import given, strategies as st

from hookmod.linalg import EchelonSpace, identity_matrix, matmul, rank, span_rank, trace
from hookmod.qtpoly import QTPolynomial

qt_st = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-3, 3), max_size=4).map(QTPolynomial)


def test_qtpolynomial_text():
    assert str(QTPolynomial({(0, 0): 1, (1, 0): 1})) == "1 + q"
    assert str(QTPolynomial({(0, 1): 2, (2, 3): -1})) == "2*t - q^2*t^3"
    assert str(QTPolynomial()) == "0"


@given(qt_st, qt_st)
def test_qtpolynomial_algebra(a, b):
    assert a + b == b + a
    assert (a * b).swap() == a.swap() * b.swap()
    assert (a * b).at_one() == a.at_one() * b.at_one()
    assert a - a == QTPolynomial()


def test_rank_small():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, Fraction(1, 2)]]) == 2
    assert rank([]) == 0


def test_echelon_space():
    space = EchelonSpace(key=lambda c: c)
    assert space.insert({1: 1, 2: 1})
    assert space.insert({2: 1})
    assert not space.insert({1: 3, 2: 5})
    assert space.contains({1: Fraction(1, 2)})
    assert len(space) == 2
    assert span_rank([{1: 1}, {1: 2}, {3: 1}], key=lambda c: c) == 2


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_echelon_rank_matches_dense_rank(rows):
    vecs = [{i: v for i, v in enumerate(r) if v} for r in rows]
    assert span_rank(vecs, key=lambda c: c) == rank(rows)


def test_matrix_helpers():
    a = [[0, 1], [1, 0]]
    assert matmul(a, a) == identity_matrix(2)
    assert trace(a) == 0
