from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import padic_digits
from padictile.streams import (
    DigitStream,
    NotPAdicIntegerError,
    Truncation,
    parse_rational,
    rational_to_stream,
    residue_equal,
    truncate,
)
from padictile.words import BaseMismatchError, Word, nu


def test_truncate():
    assert truncate(DigitStream(3, (), (2,)), 4).digits == Word(3, (2, 2, 2, 2))
    assert truncate(DigitStream(3, (2,), (1,)), 3).digits == Word(3, (2, 1, 1))
    assert truncate(DigitStream(3, (2,), (1,)), 0).digits == Word(3, ())


def test_rational_examples():
    assert rational_to_stream(-1, 1, 3) == DigitStream(3, (), (2,))
    for p in (2, 3, 7):
        assert rational_to_stream(0, 1, p) == DigitStream(p, (), (0,))
    half = rational_to_stream(1, 2, 3)
    assert (half.preperiod, half.period) == ((2,), (1,))
    for n in range(1, 21):
        assert truncate(half, n).digits.digits == padic_digits(1, 2, 3, n)


def test_rational_errors():
    with pytest.raises(NotPAdicIntegerError):
        rational_to_stream(1, 3, 3)
    with pytest.raises(NotPAdicIntegerError):
        rational_to_stream(1, 0, 3)
    with pytest.raises(NotPAdicIntegerError):
        rational_to_stream(1, 6, 4)


def test_canonical_form():
    s = DigitStream(3, (2, 2), (2,))
    assert s == DigitStream(3, (), (2,))
    # 1,0,1 then (0,1) repeating is (1,0) repeating from the start
    t = DigitStream(3, (1, 0, 1), (0, 1, 0, 1))
    assert (t.preperiod, t.period) == ((), (1, 0))
    u = DigitStream(3, (2, 1, 0, 1), (0, 1, 0, 1))
    assert (u.preperiod, u.period) == ((2,), (1, 0))
    assert DigitStream(3, t.preperiod, t.period) == t
    with pytest.raises(ValueError):
        DigitStream(3, (1,), ())


streams = st.builds(
    lambda pre, per: DigitStream(3, tuple(pre), tuple(per)),
    st.lists(st.integers(0, 2), max_size=6),
    st.lists(st.integers(0, 2), min_size=1, max_size=6),
)


@given(streams, st.integers(0, 4), st.integers(1, 3))
def test_canonicalization_idempotent(s, unroll, reps):
    assert DigitStream(s.base, s.preperiod, s.period) == s
    # unroll part of the period into the preperiod and repeat the period
    pre = tuple(s.digit(k) for k in range(len(s.preperiod) + unroll))
    per = tuple(s.digit(len(pre) + k) for k in range(len(s.period))) * reps
    other = DigitStream(3, pre, per)
    assert other == s
    n = 2 * (len(pre) + len(per))
    assert truncate(other, n) == truncate(s, n)


@given(streams)
def test_fraction_round_trip(s):
    x = s.to_fraction()
    assert rational_to_stream(x.numerator, x.denominator, 3) == s


@given(st.integers(-10**6, 10**6), st.integers(-500, 500), st.sampled_from([2, 3, 5, 7, 10]))
def test_rational_congruence(num, den, p):
    import math
    assume(den != 0 and math.gcd(den, p) == 1)
    s = rational_to_stream(num, den, p)
    for n in range(1, 21):
        assert (den * nu(truncate(s, n).digits) - num) % p**n == 0
    assert s.to_fraction() == Fraction(num, den)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_integer_streams(p):
    for n in range(1, 4):
        for k in range(p**n):
            s = rational_to_stream(k, 1, p)
            assert s.period == (0,)
            digits = []
            x = k
            while x:
                x, d = divmod(x, p)
                digits.append(d)
            assert s.preperiod == tuple(digits)


def test_residue_equal():
    a = DigitStream(3, (), (2,))
    b = DigitStream.parse("2,2;2", 3)
    assert residue_equal(a, b, 10)
    c, d = DigitStream(3, (2, 1), (0,)), DigitStream(3, (2, 0), (1,))
    assert residue_equal(c, d, 1) and not residue_equal(c, d, 2)
    assert residue_equal(c, c, 7)
    t = Truncation(Word(3, (2, 1)))
    assert residue_equal(t, c, 2) and t.residue == 5
    with pytest.raises(ValueError):
        residue_equal(t, c, 3)
    with pytest.raises(BaseMismatchError):
        residue_equal(a, DigitStream(5, (), (2,)), 1)


def test_text_forms():
    assert str(DigitStream(3, (2,), (1,))) == "2;1"
    assert str(DigitStream(3, (), (2,))) == ";2"
    assert DigitStream.parse(";2", 3) == DigitStream(3, (), (2,))
    assert parse_rational("-1/1") == (-1, 1)
    assert parse_rational("7") == (7, 1)
    with pytest.raises(ValueError):
        DigitStream.parse("1,2", 3)
    with pytest.raises(ValueError):
        parse_rational("a/b")
