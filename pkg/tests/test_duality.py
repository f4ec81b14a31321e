import pytest
from hypothesis import given

from glnn.duality import basic_transpose, dual_plot, dual_spaced_forest, dual_via_forest, dual_weight, transpose
from glnn.errors import DomainError
from glnn.forests import SpacedForest, chain, omega, to_spaced_forest
from glnn.plots import Plot
from glnn.weights import Weight, atypicality, basic_weights, phi, to_plot
from strategies import bracket_weights, full_weights

W = Weight.bracket


@pytest.mark.parametrize("a", [2, 3, 4, 5])
def test_rank_three_examples(a):
    for b in range(1, a):
        assert dual_weight(W([a, b, 0])) == W([a, a - b, 0]).twist(2 - a)
    assert dual_weight(W([a, a, 0])) == W([a + 1, 0, 0]).twist(1 - a)


def test_trivial_is_self_dual():
    for n in range(1, 5):
        assert dual_weight(Weight.trivial(n)) == Weight.trivial(n)


def test_zero_head_example():
    # [0, l2, .., ln] with a strictly decreasing negative tail
    for tail in ([-1, -3], [-2, -3], [-1, -2, -5]):
        n = len(tail) + 1
        expected = [n - tail[-1 - j] - 1 for j in range(n - 1)] + [n - 1]
        assert dual_weight(W([0] + tail)) == W(expected)


def test_dual_forest_golden():
    w = W([11, 9, 9, 5, 3, 3, 3])
    assert dual_via_forest(w) == W([1, 1, 0, 0, -4, -4, -5])
    assert dual_weight(w) == W([1, 1, 0, 0, -4, -4, -5])


def test_dual_forest_of_a_chain():
    f = SpacedForest(0, (chain(3),), ())
    assert dual_spaced_forest(f) == f


def test_dual_plot_of_trivial():
    for n in range(1, 5):
        p = Plot(range(1 - n, 1))
        assert dual_plot(p) == p


def test_transpose():
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose(()) == ()


def test_basic_transpose_examples():
    assert basic_transpose(W([2, 1, 0])) == W([2, 1, 0])
    for n in range(2, 6):
        assert basic_transpose(W([n - 1] + [0] * (n - 1))) == W([1] * (n - 1) + [0])
        with pytest.raises(DomainError):
            basic_transpose(W([n] + [0] * (n - 1)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_basic_dual_is_transpose(n):
    for w in basic_weights(n):
        assert dual_weight(w) == basic_transpose(w)
        self_dual = dual_weight(w) == w
        assert self_dual == (transpose(w.left) == tuple(p for p in w.left if p))


@given(full_weights())
def test_dual_is_an_involution(w):
    assert dual_weight(dual_weight(w)) == w


@given(bracket_weights(max_n=4, lo=-3, hi=3))
def test_three_encodings_agree(w):
    dw = dual_weight(w)
    assert dual_plot(to_plot(w)) == to_plot(dw)
    assert dual_spaced_forest(to_spaced_forest(w)) == to_spaced_forest(dw)
    assert dual_plot(dual_plot(to_plot(w))) == to_plot(w)


@given(bracket_weights(max_n=4, lo=-3, hi=3))
def test_omega_of_the_dual(w):
    assert omega(dual_weight(w)) == omega(w).substitute_inverse()


@given(full_weights(max_n=3))
def test_phi_commutes_with_duals(w):
    if atypicality(w) == 0:
        return
    assert phi(dual_weight(w)) == dual_weight(phi(w))
