import hypothesis.strategies as st

from z2z4 import MixedWord


@st.composite
def shapes(draw, max_alpha=3, max_beta=3):
    alpha = draw(st.integers(0, max_alpha))
    min_beta = 1 if alpha == 0 else 0
    beta = draw(st.integers(min_beta, max_beta))
    return alpha, beta


@st.composite
def words(draw, shape=None, **kwargs):
    if shape is None:
        shape = draw(shapes(**kwargs))
    alpha, beta = shape
    binary = tuple(draw(st.lists(st.integers(0, 1), min_size=alpha, max_size=alpha)))
    quaternary = tuple(draw(st.lists(st.integers(0, 3), min_size=beta, max_size=beta)))
    return MixedWord(binary, quaternary)


@st.composite
def word_pairs(draw, **kwargs):
    shape = draw(shapes(**kwargs))
    return draw(words(shape=shape)), draw(words(shape=shape))


@st.composite
def word_triples(draw, **kwargs):
    shape = draw(shapes(**kwargs))
    return tuple(draw(words(shape=shape)) for _ in range(3))
