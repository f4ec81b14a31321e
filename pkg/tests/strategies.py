"""Shared hypothesis strategies for weights."""

from hypothesis import strategies as st

from glnn.weights import Weight


def descending(n, lo=-4, hi=4):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(lambda xs: tuple(sorted(xs, reverse=True)))


@st.composite
def bracket_weights(draw, max_n=4, lo=-4, hi=4):
    n = draw(st.integers(1, max_n))
    return Weight.bracket(draw(descending(n, lo, hi)))


@st.composite
def full_weights(draw, max_n=4, lo=-4, hi=4):
    n = draw(st.integers(1, max_n))
    return Weight(draw(descending(n, lo, hi)), draw(descending(n, lo, hi)))
