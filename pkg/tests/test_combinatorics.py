from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hookmod.combinatorics import (
    NKBipartition,
    Partition,
    Permutation,
    StandardTableau,
    a_lambda,
    all_permutations,
    comaj_window,
    comp_of_set,
    des_tableau,
    dominance_leq,
    gen_partitions,
    gen_syt,
    hook_shape,
    maj_window,
    nk_bipartitions,
    num_syt,
    parse_partition,
    parse_permutation,
)
from hookmod.errors import ParseError

permutations_st = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def test_gen_partitions_counts():
    assert gen_partitions(1) == [Partition((1,))]
    assert len(gen_partitions(4)) == 5
    assert len(gen_partitions(8)) == 22


def test_gen_partitions_reverse_lex_and_distinct():
    parts = gen_partitions(6)
    assert parts == sorted(parts, reverse=True)
    assert len(set(parts)) == len(parts)
    assert all(p.size == 6 for p in parts)


def test_partition_trims_zeros_and_conjugates():
    lam = Partition((3, 2, 1, 0, 0))
    assert tuple(lam) == (3, 2, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert tuple(lam.conjugate()) == (3, 2, 1)
    assert tuple(Partition((4, 1)).conjugate()) == (2, 1, 1, 1)


@given(st.integers(1, 9).flatmap(lambda n: st.sampled_from(gen_partitions(n))))
def test_conjugate_is_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_parse_partition():
    assert parse_partition("(1,3,1)") == Partition((3, 1, 1))
    assert parse_partition("") == Partition()
    with pytest.raises(ParseError):
        parse_partition("3,a")


def test_parse_permutation():
    assert parse_permutation("2416573") == Permutation((2, 4, 1, 6, 5, 7, 3))
    assert parse_permutation("10,1,2,3,4,5,6,7,8,9")(1) == 10
    with pytest.raises(ValueError):
        parse_permutation("112")


@given(permutations_st)
def test_permutation_inverse_and_descents(pi):
    assert pi.inverse().inverse() == pi
    assert pi.compose(pi.inverse()) == Permutation(range(1, pi.n + 1))
    assert pi.descents() == frozenset(i for i in range(1, pi.n) if pi(i) > pi(i + 1))
    assert sum(pi.cycle_type()) == pi.n


def test_syt_examples():
    assert len(gen_syt((5,))) == 1
    assert len(gen_syt((1, 1, 1, 1))) == 1
    assert len(gen_syt((2, 2))) == 2
    for T in gen_syt((3, 2, 1)):
        assert T.is_standard()


def test_sum_of_squares_of_syt_counts():
    for n in range(1, 9):
        assert sum(len(gen_syt(lam)) ** 2 for lam in gen_partitions(n)) == factorial(n)
        assert all(len(gen_syt(lam)) == num_syt(tuple(lam)) for lam in gen_partitions(n))


def test_des_tableau_examples():
    assert des_tableau(gen_syt((4,))[0]) == frozenset()
    assert des_tableau(gen_syt((1, 1, 1, 1))[0]) == {1, 2, 3}
    assert des_tableau(StandardTableau(((1, 2), (3, 4)))) == {2}


def test_des_of_transpose_is_complement():
    for n in range(1, 7):
        for lam in gen_partitions(n):
            for T in gen_syt(lam):
                assert des_tableau(T.transpose()) == frozenset(range(1, n)) - des_tableau(T)


def test_window_statistics():
    target = frozenset({2, 3, 5, 7})
    T = next(T for lam in gen_partitions(8) for T in gen_syt(lam) if des_tableau(T) == target)
    assert maj_window(T, 1, 4) == 5
    assert comaj_window(T, 5, 8) == 4
    assert maj_window(T, 3, 3) == 0
    assert maj_window(T, 1, 8) == sum(target)
    col = gen_syt((1, 1, 1))[0]
    assert maj_window(col, 1, 3) == 3


def test_nk_bipartitions_worked_listing():
    lams = nk_bipartitions(4, 3)
    assert len(lams) == 8
    assert {lam.mu for lam in lams} == {(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0)}
    assert {lam.nu for lam in lams} == {(0, 0), (1, 0)}
    assert nk_bipartitions(1, 1) == [NKBipartition(1, 1, (0,), (0,))]


def _brute_bipartitions(n, k):
    out = set()
    for mu in product(range(k), repeat=k):
        for nu in product(range(n - k + 1), repeat=n - k + 1):
            try:
                out.add(NKBipartition(n, k, mu, nu))
            except ValueError:
                pass
    return out


def test_nk_bipartitions_match_brute_force():
    for n in range(1, 6):
        for k in range(1, n + 1):
            lams = nk_bipartitions(n, k)
            assert len(lams) == 2 ** (n - 1)
            assert set(lams) == _brute_bipartitions(n, k)


def test_nk_bipartition_validation():
    with pytest.raises(ValueError):
        NKBipartition(4, 3, (2, 0, 0), (0, 0))
    with pytest.raises(ValueError):
        NKBipartition(4, 3, (1, 0), (0, 0))


def test_a_lambda_examples():
    assert a_lambda(NKBipartition(4, 3, (0, 0, 0), (0, 0))) == frozenset()
    assert a_lambda(NKBipartition(4, 3, (2, 1, 0), (0, 0))) == {1, 2}
    assert a_lambda(NKBipartition(4, 3, (0, 0, 0), (1, 0))) == {3}


def test_a_lambda_is_bijective_onto_subsets():
    for n in range(1, 9):
        for k in range(1, n + 1):
            sets = [a_lambda(lam) for lam in nk_bipartitions(n, k)]
            assert len(set(sets)) == 2 ** (n - 1)


def test_comp_of_set():
    assert comp_of_set(8, {2, 4, 7}) == (2, 2, 3, 1)
    assert comp_of_set(5, set()) == (5,)
    with pytest.raises(ValueError):
        comp_of_set(3, {3})


def test_dominance():
    assert dominance_leq((2, 1, 1), (3, 1))
    assert not dominance_leq((3, 1), (2, 1, 1))
    assert not dominance_leq((3, 3), (4, 1, 1)) and not dominance_leq((4, 1, 1), (3, 3))


def test_hook_shape():
    assert hook_shape(5, 1) == Partition((5,))
    assert hook_shape(5, 5) == Partition((1, 1, 1, 1, 1))
    assert hook_shape(5, 3) == Partition((3, 1, 1))
    assert len(all_permutations(4)) == 24
