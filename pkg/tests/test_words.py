import pytest
from hypothesis import given
from hypothesis import strategies as st

from nlo.words import (
    Word,
    WordSyntaxError,
    SubstitutionError,
    concat,
    contains,
    cyclic_reduce,
    exponent_sum,
    format_word,
    invert,
    is_cyclic_rotation,
    is_positive,
    letters_list,
    parse_word,
    power,
    reduce,
    rotations,
    substitute,
    word_from_letters,
)

raw_syllables = st.lists(
    st.tuples(st.sampled_from("ab"), st.integers(-4, 4)), max_size=8
)
words = raw_syllables.map(Word)
xy_words = st.lists(
    st.tuples(st.sampled_from("xy"), st.integers(-3, 3)), max_size=6
).map(Word)


def test_reduce_inverse_cancellation():
    assert reduce([("a", 1), ("a", -1)]) == Word()


def test_reduce_adjacent_merge():
    assert reduce([("a", 2), ("b", -1), ("b", 1), ("a", 1)]) == parse_word("a^3")


def test_reduce_family_relator_concatenation():
    # LHS * RHS^-1 for the (3,5;2,1)-instance of the two-bridge style relator.
    lhs = parse_word("a^2 b^-1 a^2")
    rhs = parse_word("b^2 a b^2")
    assert lhs * ~rhs == parse_word("a^2 b^-1 a^2 b^-2 a^-1 b^-2")


def test_invert_examples():
    assert invert(Word()) == Word()
    assert invert(parse_word("a^2 b^-1")) == parse_word("b a^-2")
    w = parse_word("a^2 b^-1 a^2")
    assert invert(invert(w)) == w


def test_concat_and_power():
    assert concat(parse_word("a^-1 b^2"), parse_word("b^-2 a")) == Word()
    assert power(parse_word("a b"), 3) == parse_word("a b a b a b")
    assert power(parse_word("a^-1 b^2"), -2) == parse_word("b^-2 a b^-2 a")


def test_substitute_examples():
    # b^4 a with a -> (xy)x and b -> xy lands on (xy)^5 x.
    images = {"a": parse_word("x y x"), "b": parse_word("x y")}
    got = substitute(parse_word("b^4 a"), images)
    assert got == power(parse_word("x y"), 5) * parse_word("x")
    # a^-1 b^k with a -> (yx)^(k-1) y, b -> yx collapses to x at k = 2.
    images = {"a": parse_word("y x y"), "b": parse_word("y x")}
    assert substitute(parse_word("a^-1 b^2"), images) == parse_word("x")
    assert substitute(Word(), {"a": parse_word("x")}) == Word()


def test_substitute_missing_image():
    with pytest.raises(SubstitutionError):
        substitute(parse_word("a b"), {"a": parse_word("x")})


def test_exponent_sum_examples():
    w = parse_word("a^2 b^-1 a^2 b^-2 a^-1 b^-2")
    assert exponent_sum(w, "a") == 3
    assert exponent_sum(w, "b") == -5
    assert exponent_sum(Word(), "a") == 0


def test_positivity_examples():
    w = power(parse_word("x y"), 5) * parse_word("x")
    assert is_positive(w)
    assert contains(w, "x")
    assert not is_positive(parse_word("x^-1 y x"))
    assert not is_positive(Word())


def test_parse_format_examples():
    assert parse_word("a^2 b^-1 a^2").syllables == (("a", 2), ("b", -1), ("a", 2))
    assert parse_word("") == Word()
    assert format_word(parse_word("a a a")) == "a^3"
    assert format_word(Word()) == ""


def test_parse_errors_carry_position():
    with pytest.raises(WordSyntaxError) as err:
        parse_word("a^2 B")
    assert err.value.position == 4
    with pytest.raises(WordSyntaxError):
        parse_word("a^")
    with pytest.raises(WordSyntaxError):
        parse_word("^2")


def test_letters_round_trip():
    w = parse_word("a^3 b^-2 a")
    assert word_from_letters(letters_list(w)) == w
    assert w.letter_length == 6


def test_large_exponents_stay_symbolic():
    w = power(parse_word("a"), 10**9) * parse_word("b^-1")
    assert w.syllables == (("a", 10**9), ("b", -1))
    with pytest.raises(ValueError):
        letters_list(w)


def test_cyclic_reduce():
    assert cyclic_reduce(parse_word("a^-1 b a")) == parse_word("b")
    assert cyclic_reduce(parse_word("a b a^2")) == parse_word("b a^3")
    assert cyclic_reduce(parse_word("a b")) == parse_word("a b")


def test_rotations_and_cyclic_rotation():
    w = parse_word("a^2 b")
    rots = rotations(w)
    assert len(rots) == 3
    assert parse_word("a b a") in rots and parse_word("b a^2") in rots
    assert all(is_cyclic_rotation(r, w) for r in rots)
    assert not is_cyclic_rotation(parse_word("a b"), parse_word("a b^-1"))


@given(raw_syllables)
def test_reduce_idempotent(raw):
    w = reduce(raw)
    assert reduce(w.syllables) == w


@given(words, words, words)
def test_concat_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(words)
def test_invert_involution(w):
    assert ~~w == w
    assert w * ~w == Word()


@given(words, st.integers(-5, 5), st.integers(-5, 5))
def test_power_addition(w, m, n):
    assert power(w, m + n) == power(w, m) * power(w, n)


@given(words, words, xy_words, xy_words)
def test_substitute_is_homomorphism(u, v, img_a, img_b):
    images = {"a": img_a, "b": img_b}
    assert substitute(u * v, images) == substitute(u, images) * substitute(v, images)
    assert substitute(~u, images) == ~substitute(u, images)


@given(words, words)
def test_exponent_sum_additive(u, v):
    for g in "ab":
        assert exponent_sum(u * v, g) == exponent_sum(u, g) + exponent_sum(v, g)


@given(words, words)
def test_positive_closed_under_concat(u, v):
    if is_positive(u) and is_positive(v):
        assert is_positive(u * v)


@given(raw_syllables)
def test_parse_format_round_trip(raw):
    w = reduce(raw)
    assert reduce(parse_word(format_word(w)).syllables) == w
