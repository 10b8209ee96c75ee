import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import residues_of_ball
from padictile.words import (
    Ball,
    BaseMismatchError,
    Word,
    ball_contains,
    ball_of,
    is_composite,
    is_prefix,
    nu,
    word_cmp,
    word_from_int,
    words_up_to,
)


def W(base, *digits):
    return Word(base, tuple(digits))


@pytest.mark.parametrize("w, expected", [
    (W(3), 0),
    (W(3, 2, 1), 5),
    (W(2, 1, 1, 1), 7),
])
def test_nu(w, expected):
    assert nu(w) == expected


@pytest.mark.parametrize("v, w, expected", [
    (W(2), W(2, 0, 1), True),
    (W(2, 0), W(2, 0, 1), True),
    (W(2, 1), W(2, 0, 1), False),
    (W(2, 0, 1, 1), W(2, 0, 1), False),
])
def test_is_prefix(v, w, expected):
    assert is_prefix(v, w) is expected


def test_ball_of():
    assert ball_of(W(3)) == Ball(3, 0, 1)
    assert ball_of(W(3, 2, 1)) == Ball(3, 5, -1)
    assert ball_of(W(2, 0, 0)) == Ball(2, 0, -1)


def test_ball_contains_examples():
    assert ball_contains(W(3, 0), W(3, 0, 2))
    assert not ball_contains(W(3, 1), W(3, 2))
    assert ball_contains(W(3, 1, 2), W(3, 1, 2))


def test_word_cmp_examples():
    assert word_cmp(W(3, 1), W(3, 0, 0)) == -1
    assert word_cmp(W(3, 0, 1), W(3, 0, 2)) == -1
    assert word_cmp(W(3, 2), W(3, 2)) == 0
    assert W(3, 1) < W(3, 0, 0)
    assert sorted([W(3, 0, 0), W(3, 2), W(3)]) == [W(3), W(3, 2), W(3, 0, 0)]


def test_mixed_base_rejected():
    with pytest.raises(BaseMismatchError):
        is_prefix(W(2, 0), W(3, 0))
    with pytest.raises(BaseMismatchError):
        word_cmp(W(2), W(3))
    with pytest.raises(BaseMismatchError):
        W(2, 1) + W(3, 1)


def test_invalid_words():
    with pytest.raises(ValueError):
        W(3, 3)
    with pytest.raises(ValueError):
        Word(1, ())
    with pytest.raises(ValueError):
        Word.parse("1,,2", 3)


def test_text_form_round_trip():
    assert str(W(3, 2, 1)) == "2,1"
    assert str(W(3)) == ""
    assert Word.parse("", 5) == W(5)
    assert Word.parse("2,1", 3) == W(3, 2, 1)


@pytest.mark.parametrize("base", [2, 3])
def test_prefix_iff_residue(base):
    words = list(words_up_to(base, 4))
    for v, w in itertools.product(words, repeat=2):
        by_residue = len(v) <= len(w) and nu(w) % base ** len(v) == nu(v)
        assert is_prefix(v, w) == by_residue


@pytest.mark.parametrize("base", [2, 3])
def test_disjointness_trichotomy(base):
    words = list(words_up_to(base, 4))
    for v, w in itertools.product(words, repeat=2):
        level = max(len(v), len(w))
        disjoint = not (residues_of_ball(base, v.digits, level) & residues_of_ball(base, w.digits, level))
        cases = [is_prefix(v, w), is_prefix(w, v) and v != w, disjoint]
        assert sum(cases) == 1


@pytest.mark.parametrize("base", [2, 3])
def test_ball_inclusion_matches_residues(base):
    words = list(words_up_to(base, 3))
    for v, w in itertools.product(words, repeat=2):
        level = max(len(v), len(w))
        contained = residues_of_ball(base, w.digits, level) <= residues_of_ball(base, v.digits, level)
        assert (ball_of(w) in ball_of(v)) == contained == ball_contains(v, w)


@pytest.mark.parametrize("base, n", [(2, 5), (3, 4), (5, 2)])
def test_nu_bijective_on_fixed_length(base, n):
    values = sorted(nu(w) for w in words_up_to(base, n) if len(w) == n)
    assert values == list(range(base**n))
    assert all(nu(word_from_int(x, base, n)) == x for x in range(base**n))


words3 = st.lists(st.integers(0, 2), max_size=6).map(lambda d: Word(3, tuple(d)))


@given(words3, words3, words3)
def test_order_is_total_and_transitive(u, v, w):
    assert (word_cmp(u, v) == 0) == (u == v)
    assert word_cmp(u, v) == -word_cmp(v, u)
    if word_cmp(u, v) <= 0 and word_cmp(v, w) <= 0:
        assert word_cmp(u, w) <= 0
    if len(u) < len(v):
        assert word_cmp(u, v) == -1


def test_is_composite():
    assert [b for b in range(2, 13) if is_composite(b)] == [4, 6, 8, 9, 10, 12]
