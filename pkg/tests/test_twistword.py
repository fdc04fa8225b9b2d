import pytest
from hypothesis import given

from conftest import X, Y, words
from opentorus.twistword import (
    DELTA,
    EMPTY,
    W,
    TwistWord,
    WordSyntaxError,
    concat,
    cyclic_reduce,
    cyclic_rotate,
    exponent_sum,
    format_word,
    invert,
    parse_word,
)


def test_parse_basic():
    assert parse_word("x^2 y^-1").letters == ((X, 2), (Y, -1))
    assert parse_word("x x^-1") == EMPTY
    assert parse_word("") == EMPTY


def test_parse_w_and_d():
    assert parse_word("w").letters == ((X, 1), (Y, 1)) * 3
    assert parse_word("d") == parse_word("x y " * 6)
    # negative powers expand to the reversed inverse
    assert parse_word("w^-1") == parse_word("y^-1 x^-1 y^-1 x^-1 y^-1 x^-1")


def test_parse_separators_and_case():
    assert parse_word("d^-1 * x y^3 x y^-2") == DELTA ** -1 * parse_word("x y^3 x y^-2")
    assert parse_word("X Y^+2") == parse_word("x y^2")
    assert parse_word("x*y*x") == parse_word("x y x")


def test_parse_big_exponent():
    big = 10 ** 40
    assert parse_word(f"x^{big}").letters == ((X, big),)


@pytest.mark.parametrize("text, offset", [("x z", 2), ("x^", 2), ("é x", 0), ("x^-", 2), ("x\u3000q", 4)])
def test_parse_errors_report_byte_offset(text, offset):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.offset == offset


def test_exponent_sum():
    assert exponent_sum(EMPTY) == 0
    assert exponent_sum(DELTA) == 12
    assert exponent_sum(W) == 6
    assert exponent_sum(parse_word("x^3 y^-5")) == -2


def test_concat_invert_rotate():
    x, xi = parse_word("x"), parse_word("x^-1")
    assert concat(x, xi) == EMPTY
    assert invert(parse_word("x y^2")) == parse_word("y^-2 x^-1")
    assert cyclic_rotate(parse_word("x y^2"), 1) == parse_word("y^2 x")
    # rotation splits syllables one letter at a time
    assert cyclic_rotate(parse_word("x^2 y"), 1) == parse_word("x y x")
    assert cyclic_rotate(parse_word("x y^2"), 3) == parse_word("x y^2")


def test_cyclic_reduce():
    assert cyclic_reduce(parse_word("x y x^2")) == parse_word("x^3 y")
    assert cyclic_reduce(parse_word("x y x^-1")) == parse_word("y")
    assert cyclic_reduce(EMPTY) == EMPTY


@given(words)
def test_format_parse_roundtrip(w):
    assert parse_word(format_word(w)) == w


@given(words)
def test_syllables_are_merged(w):
    assert all(e != 0 for _, e in w)
    assert all(a.gen is not b.gen for a, b in zip(w.letters, w.letters[1:]))


@given(words, words, words)
def test_concat_associative_and_sums(a, b, c):
    assert concat(concat(a, b), c) == concat(a, concat(b, c))
    assert exponent_sum(concat(a, b)) == exponent_sum(a) + exponent_sum(b)


@given(words)
def test_invert_involution(a):
    assert invert(invert(a)) == a
    assert exponent_sum(invert(a)) == -exponent_sum(a)
    assert concat(a, invert(a)) == EMPTY


@given(words)
def test_rotation_keeps_exponent_sum(a):
    for k in range(4):
        assert exponent_sum(cyclic_rotate(a, k)) == exponent_sum(a)


def test_word_is_hashable_value():
    assert {TwistWord([(X, 1)]), parse_word("x")} == {parse_word("x")}
