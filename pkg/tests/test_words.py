import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import word_pairs, word_triples, words
from oracles import o_ambient, o_gray, o_inner, o_weight, to_tuple
from z2z4 import (
    GRAY_TABLE,
    LEE_TABLE,
    MixedWord,
    ShapeError,
    add_words,
    gray_scalar,
    gray_word,
    hamming_distance_mixed,
    hamming_weight,
    inner_product,
    lee_distance,
    lee_weight,
    parse_word,
    scalar_mul,
    word_str,
)
from z2z4.words import WordSyntaxError

W = parse_word


# -- construction and literals -------------------------------------------


def test_word_validation():
    with pytest.raises(ShapeError):
        MixedWord((), ())
    with pytest.raises(ValueError):
        MixedWord((2,), (0,))
    with pytest.raises(ValueError):
        MixedWord((0,), (4,))


def test_parse_word_examples():
    assert W("10|31") == MixedWord((1, 0), (3, 1))
    assert W("|31") == MixedWord((), (3, 1))
    assert W("10|") == MixedWord((1, 0), ())
    assert word_str(W("10|31")) == "10|31"


def test_parse_word_errors():
    with pytest.raises(WordSyntaxError):
        W("1031")
    with pytest.raises(WordSyntaxError):
        W("10|3|1")
    with pytest.raises(WordSyntaxError):
        W("|")
    with pytest.raises(WordSyntaxError) as err:
        W("10|14")
    assert err.value.column == 5
    with pytest.raises(WordSyntaxError):
        W("12|00")


@given(words())
def test_literal_round_trip(w):
    assert parse_word(word_str(w)) == w


# -- addition and scalar action -------------------------------------------


def test_add_examples():
    assert W("0|0000") + W("1|1302") == W("1|1302")
    assert W("1|1302") + W("1|1302") == W("0|2200")
    assert W("1|1302") + W("0|2200") == W("1|3102")


def test_add_shape_mismatch():
    with pytest.raises(ShapeError):
        add_words(W("10|1"), W("1|11"))
    with pytest.raises(ShapeError):
        lee_distance(W("10|1"), W("1|11"))
    with pytest.raises(ShapeError):
        hamming_distance_mixed(W("10|1"), W("1|11"))
    with pytest.raises(ShapeError):
        inner_product(W("10|1"), W("1|11"))


def test_scalar_examples():
    assert scalar_mul(0, W("1|1302")) == W("0|0000")
    assert 2 * W("1|1302") == W("0|2200")
    assert 3 * W("1|1302") == W("1|3102")


@given(word_pairs())
def test_add_commutes(pair):
    a, b = pair
    assert a + b == b + a


@given(word_triples())
def test_add_associates(triple):
    a, b, c = triple
    assert (a + b) + c == a + (b + c)


@given(words())
def test_torsion(w):
    zero = MixedWord.zero(*w.shape)
    assert w + w + w + w == zero
    doubled = 2 * w
    assert all(x == 0 for x in doubled.binary)
    assert w + (-w) == zero
    assert w - w == zero


@given(words(), st.integers(-5, 9))
def test_scalar_is_repeated_addition(w, k):
    total = MixedWord.zero(*w.shape)
    for _ in range(k % 4):
        total = total + w
    assert scalar_mul(k, w) == total


# -- Gray map and weights --------------------------------------------------


def test_gray_scalar_table():
    assert gray_scalar(0) == (0, 0)
    assert gray_scalar(1) == (0, 1)
    assert gray_scalar(2) == (1, 1)
    assert gray_scalar(3) == (1, 0)
    assert GRAY_TABLE == {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}


def test_gray_scalar_weight_identity():
    for i in range(4):
        assert LEE_TABLE[i] == hamming_weight(gray_scalar(i))


def test_gray_word_examples():
    assert gray_word(W("1|23")) == (1, 1, 1, 1, 0)
    assert gray_word(W("0|0")) == (0, 0, 0)
    assert gray_word(W("0|1")) == (0, 0, 1)


def test_lee_weight_examples():
    assert lee_weight(W("0|0000")) == 0
    assert lee_weight(W("1|1302")) == 5
    assert lee_weight(W("0|2200")) == 4


def test_hamming_weight_examples():
    assert hamming_weight((0, 0, 0)) == 0
    assert hamming_weight((1, 1, 0, 1)) == 3
    assert hamming_weight(gray_word(W("1|1302"))) == 5


def test_lee_distance_examples():
    a = W("1|1302")
    assert lee_distance(a, a) == 0
    assert lee_distance(a, W("0|0000")) == 5
    assert lee_distance(a, W("1|3102")) == 4


def test_hamming_distance_examples():
    a = W("1|1302")
    assert hamming_distance_mixed(a, a) == 0
    assert hamming_distance_mixed(a, W("0|0000")) == 4
    assert hamming_distance_mixed(W("0|2200"), W("0|0000")) == 2


@given(words())
def test_lee_weight_is_gray_hamming_weight(w):
    assert lee_weight(w) == hamming_weight(gray_word(w))
    assert gray_word(w) == o_gray(to_tuple(w), w.alpha)
    assert lee_weight(w) == o_weight(to_tuple(w), w.alpha)


def test_gray_isometry_exhaustive_small():
    # every pair in Z2^a x Z4^b for a, b <= 2
    for alpha in range(3):
        for beta in range(3):
            if alpha + beta == 0:
                continue
            space = [
                MixedWord(t[:alpha], t[alpha:]) for t in o_ambient(alpha, beta)
            ]
            for a, b in itertools.product(space, repeat=2):
                image_distance = hamming_weight(
                    tuple(x ^ y for x, y in zip(gray_word(a), gray_word(b)))
                )
                assert image_distance == lee_distance(a, b)


@given(word_pairs(max_alpha=6, max_beta=6))
def test_gray_isometry_random(pair):
    a, b = pair
    image_distance = sum(x != y for x, y in zip(gray_word(a), gray_word(b)))
    assert image_distance == lee_distance(a, b)


# -- inner product ----------------------------------------------------------


def test_inner_product_examples():
    zero = MixedWord.zero(2, 2)
    assert inner_product(zero, W("11|32")) == 0
    assert inner_product(W("10|02"), W("10|11")) == 0
    assert inner_product(W("1|1"), W("1|1")) == 3


@given(word_pairs())
def test_inner_product_symmetric(pair):
    a, b = pair
    assert inner_product(a, b) == inner_product(b, a) == o_inner(to_tuple(a), to_tuple(b), a.alpha)


@given(word_triples())
def test_inner_product_biadditive(triple):
    a, b, c = triple
    assert inner_product(a + b, c) == (inner_product(a, c) + inner_product(b, c)) % 4
