"""Exact p-adic integers as eventually periodic digit streams."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .words import BaseMismatchError, Word, check_base, nu


class NotPAdicIntegerError(ValueError):
    """The rational has a denominator divisible by the base (or is 0/0)."""


def _primitive_root(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            return period[:d]
    return period


@dataclass(frozen=True)
class DigitStream:
    """The digit sequence ``preperiod + period + period + ...`` over ``range(base)``.

    Stored in canonical form: the period is primitive and the preperiod is as
    short as possible, so equal sequences give equal objects.
    """

    base: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        check_base(self.base)
        pre, per = tuple(self.preperiod), tuple(self.period)
        if not per:
            raise ValueError("period must be nonempty")
        for d in pre + per:
            if not isinstance(d, int) or not 0 <= d < self.base:
                raise ValueError(f"digit {d!r} out of range for base {self.base}")
        per = _primitive_root(per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1:] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def digit(self, k: int) -> int:
        if k < len(self.preperiod):
            return self.preperiod[k]
        return self.period[(k - len(self.preperiod)) % len(self.period)]

    def __str__(self) -> str:
        return ";".join(",".join(map(str, part)) for part in (self.preperiod, self.period))

    @classmethod
    def parse(cls, text: str, base: int) -> DigitStream:
        """Read ``pre;per``, e.g. ``2;1`` or ``;2``."""
        if text.count(";") != 1:
            raise ValueError(f"stream must look like 'pre;per', got {text!r}")
        pre, per = text.split(";")
        return cls(base, Word.parse(pre, base).digits, Word.parse(per, base).digits)

    def to_fraction(self) -> Fraction:
        """The rational number this stream expands."""
        p = self.base
        head = sum(d * p**k for k, d in enumerate(self.preperiod))
        cyc = sum(d * p**k for k, d in enumerate(self.period))
        # period block repeated: cyc * p**n / (1 - p**len(period))
        return Fraction(head) + Fraction(cyc * p ** len(self.preperiod), 1 - p ** len(self.period))


@dataclass(frozen=True)
class Truncation:
    """Residue class mod ``base**len(digits)``: the first digits of a p-adic integer."""

    digits: Word

    @property
    def base(self) -> int:
        return self.digits.base

    @property
    def precision(self) -> int:
        return len(self.digits)

    @property
    def residue(self) -> int:
        return nu(self.digits)


def truncate(s: DigitStream, n: int) -> Truncation:
    if n < 0:
        raise ValueError("precision must be >= 0")
    return Truncation(Word(s.base, tuple(s.digit(k) for k in range(n))))


def rational_to_stream(numerator: int, denominator: int, base: int) -> DigitStream:
    """p-adic expansion of ``numerator / denominator``.

    Digits come from ``d = r * den^-1 mod p`` and the update
    ``r <- (r - d * den) / p``; the remainder ``r`` lives in a bounded range,
    so a repeat is found and marks the start of the period.
    """
    check_base(base)
    if denominator == 0:
        raise NotPAdicIntegerError("denominator is zero")
    if math.gcd(denominator, base) != 1:
        raise NotPAdicIntegerError(
            f"denominator {denominator} is not invertible mod {base}: not a {base}-adic integer"
        )
    if denominator < 0:
        numerator, denominator = -numerator, -denominator
    inv = pow(denominator, -1, base)
    r = numerator
    seen: dict[int, int] = {}
    digits: list[int] = []
    while r not in seen:
        seen[r] = len(digits)
        d = (r * inv) % base
        digits.append(d)
        r = (r - d * denominator) // base
    start = seen[r]
    return DigitStream(base, tuple(digits[:start]), tuple(digits[start:]))


def parse_rational(text: str) -> tuple[int, int]:
    """``num/den`` (or a bare integer) in decimal."""
    num, _, den = text.strip().partition("/")
    try:
        return int(num), int(den) if den else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None


Approximant = Union[Truncation, DigitStream]


def _first_digits(a: Approximant, n: int) -> tuple[int, ...]:
    if isinstance(a, DigitStream):
        return truncate(a, n).digits.digits
    if a.precision < n:
        raise ValueError(f"truncation has only {a.precision} digits, {n} requested")
    return a.digits.digits[:n]


def residue_equal(a: Approximant, b: Approximant, n: int) -> bool:
    """True iff ``a`` and ``b`` agree mod ``base**n`` (lie in one ball of radius exponent ``1 - n``)."""
    if a.base != b.base:
        raise BaseMismatchError(f"bases {a.base} and {b.base}")
    return _first_digits(a, n) == _first_digits(b, n)
