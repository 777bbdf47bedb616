from math import factorial

import pytest

from hookmod.combinatorics import Partition, gen_partitions, hook_shape, num_syt
from hookmod.errors import ScaleExceeded
from hookmod.macdonald import (
    Filling,
    QTPolynomial,
    SignedWord,
    axiom_check,
    filling_stats,
    hilbert_fillings,
    hilbert_stembridge,
    htilde_hhl_expansion,
    htilde_hook,
    htilde_schur_expansion,
    involution_I,
    involution_J,
    kostka_hook,
    positive_words,
    quasisym_Q,
    signed_words,
    weight_U,
    weight_V,
    word_stats,
    word_sum,
)

ONE = QTPolynomial.monomial()


def test_kostka_examples():
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert kostka_hook((n,), n, k) == ONE
    assert kostka_hook((1, 1), 2, 1) == QTPolynomial.monomial(1, 0)
    assert kostka_hook((1, 1), 2, 2) == QTPolynomial.monomial(0, 1)
    with pytest.raises(ValueError):
        kostka_hook((2, 1), 4, 2)


def test_htilde_examples():
    assert htilde_hook(2, 1) == {Partition((2,)): ONE, Partition((1, 1)): QTPolynomial.monomial(1, 0)}
    assert htilde_hook(2, 2) == {Partition((2,)): ONE, Partition((1, 1)): QTPolynomial.monomial(0, 1)}
    for n in range(1, 7):
        for k in range(1, n + 1):
            total = sum(num_syt(tuple(lam)) * poly.evaluate(1, 1) for lam, poly in htilde_hook(n, k).items())
            assert total == factorial(n)


def test_kostka_specializes_to_syt_count():
    for n in range(1, 9):
        for lam in gen_partitions(n):
            for k in (1, (n + 1) // 2, n):
                assert kostka_hook(lam, n, k).evaluate(1, 1) == num_syt(tuple(lam))


def test_kostka_duality():
    # the complementary hook is the same module with the two gradings exchanged
    for n in range(1, 7):
        for k in range(1, n + 1):
            for lam in gen_partitions(n):
                assert kostka_hook(lam, n, n - k + 1) == kostka_hook(lam, n, k).swap()


def test_worked_filling():
    xi = Filling.from_reading_word((4, 3, 2), (2, 7, 9, 6, 1, 3, 4, 8, 5))
    st = filling_stats(xi)
    assert (len(st.inversions), st.maj, st.inv) == (5, 5, 2)
    assert st.D == frozenset({1, 5, 6, 8})


def test_filling_small_shapes():
    row = Filling(((3, 1, 2),))
    st = filling_stats(row)
    assert st.des == frozenset() and st.maj == 0
    column = Filling(((1,), (2,), (3,)))
    st = filling_stats(column)
    assert st.des == frozenset({(2, 1), (3, 1)})
    assert st.maj == 1 + 2
    with pytest.raises(ValueError):
        Filling(((1, 1),))


def test_hilbert_fillings_examples():
    assert hilbert_fillings(1, 1) == ONE
    assert hilbert_fillings(2, 2) == ONE + QTPolynomial.monomial(0, 1)
    with pytest.raises(ScaleExceeded):
        hilbert_fillings(8, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_hilbert_fillings_match_stembridge(n):
    for k in range(1, n + 1):
        assert hilbert_fillings(n, k) == hilbert_stembridge(n, k)


def test_quasisym_examples():
    assert quasisym_Q(4, set(), 1) == {(4,): 1}
    for D in ({1}, {1, 3}, {2}, set()):
        assert quasisym_Q(4, D, 4)[(1, 1, 1, 1)] == 1
    assert quasisym_Q(2, {1}, 2) == {(1, 1): 1}
    assert quasisym_Q(2, set(), 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_hhl_expansion_matches_schur():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for m in (1, 2, 3):
                assert htilde_hhl_expansion(n, k, m) == htilde_schur_expansion(n, k, m)


def test_word_stats_examples():
    for order, increasing in (("standard", (1, 2, 3)), ("prec", (1, 2, 3)), ("precstar", (3, 2, 1))):
        assert word_stats(increasing, order, 2).des == frozenset()
        assert word_stats((1, 1), order, 1).des == frozenset()
    assert word_stats((-1, -1), "prec", 1).des == frozenset({1})
    st = word_stats((3, 1, 2, 1), "standard", 2)
    assert (st.des, st.maj, st.comaj, st.pos, st.neg) == (frozenset({1, 3}), 1, 1, 4, 0)


def test_involution_examples():
    a = SignedWord((1, 1, 2))
    assert involution_I(a, 2) == SignedWord((-1, 1, 2))
    assert involution_I(involution_I(a, 2), 2) == a
    assert involution_I((1, 2, 3), 1) == SignedWord((1, 2, 3))
    assert involution_J((3, 1, 2), 3) == SignedWord((3, 1, 2))


@pytest.mark.parametrize("n", range(1, 6))
def test_involution_properties(n):
    m = 3 if n < 5 else 2
    for k in range(1, n + 1):
        w = n - k + 1
        for a in signed_words(n, m):
            for inv, weight, window, stat in (
                (involution_I, weight_U, slice(0, w), "comaj"),
                (involution_J, weight_V, slice(n - k, n), "maj"),
            ):
                b = inv(a, k)
                assert inv(b, k) == a
                assert b.content() == a.content()
                if b == a:
                    letters = [abs(v) for v in a[window]]
                    assert len(set(letters)) == len(letters)
                    continue
                assert sum(x != y for x, y in zip(a, b)) == 1
                assert [abs(v) for v in a] == [abs(v) for v in b]
                assert weight(a, k) + weight(b, k) == QTPolynomial()
                order = "prec" if inv is involution_I else "precstar"
                assert getattr(word_stats(a, order, k), stat) == getattr(word_stats(b, order, k), stat)


def test_axiom_check_small():
    for n in range(1, 5):
        for k in range(1, n + 1):
            report = axiom_check(n, k)
            assert report.ok, report.as_json()
            assert [r.name for r in report.results] == ["A3", "A1", "A2"]
    with pytest.raises(ScaleExceeded):
        axiom_check(6, 1)


def test_word_sums_are_order_independent():
    flipped = lambda a: (-a,)
    for n in range(1, 5):
        for k in range(1, n + 1):
            words = list(signed_words(n, 3))
            assert word_sum(words, lambda a: weight_U(a, k, "prec"), 3) == word_sum(
                words, lambda a: weight_U(a, k, "standard"), 3
            )
            assert word_sum(words, lambda a: weight_V(a, k, "precstar"), 3) == word_sum(
                words, lambda a: weight_V(a, k, "standard"), 3
            )

            def plain(order):
                def weight(a):
                    st = word_stats(a, order, k)
                    return QTPolynomial.monomial(st.maj, st.comaj)

                return word_sum(positive_words(n, 3), weight, 3)

            assert plain("standard") == plain(flipped)


def test_hook_shape_matches_orientation():
    assert hook_shape(4, 1) == Partition((4,))
    assert hook_shape(4, 4) == Partition((1, 1, 1, 1))
