"""Words over the digit alphabet {0, ..., p-1} and the balls they address.

A word ``a_0 a_1 ... a_{n-1}`` is stored little-endian: ``a_k`` is the
coefficient of ``p**k``.  The word is at the same time a vertex of the
complete p-ary tree and the address of the p-adic ball of all integers whose
expansion starts with those digits.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class BaseMismatchError(ValueError):
    """Two objects over different digit bases were combined."""


def check_base(base: int) -> int:
    if not isinstance(base, int) or isinstance(base, bool) or base < 2:
        raise ValueError(f"base must be an integer >= 2, got {base!r}")
    return base


def is_composite(base: int) -> bool:
    return base > 3 and any(base % d == 0 for d in range(2, int(base**0.5) + 1))


@functools.total_ordering
@dataclass(frozen=True)
class Word:
    """Finite digit string over ``range(base)``.

    Ordering (``<``, ``sorted``) is the length-then-lexicographic order:
    shorter words come first, words of equal length compare digit by digit.
    """

    base: int
    digits: tuple[int, ...] = ()

    def __post_init__(self):
        check_base(self.base)
        digits = tuple(self.digits)
        for d in digits:
            if not isinstance(d, int) or not 0 <= d < self.base:
                raise ValueError(f"digit {d!r} out of range for base {self.base}")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def empty(cls, base: int) -> Word:
        return cls(base, ())

    @classmethod
    def parse(cls, text: str, base: int) -> Word:
        """Read the comma-joined text form, e.g. ``"2,1"``; ``""`` is the empty word."""
        text = text.strip()
        if not text:
            return cls(base, ())
        try:
            digits = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed word {text!r}") from None
        return cls(base, digits)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __add__(self, other: Word) -> Word:
        _same_base(self, other)
        return Word(self.base, self.digits + other.digits)

    def __lt__(self, other: Word) -> bool:
        return word_cmp(self, other) < 0

    def prefix(self, n: int) -> Word:
        return Word(self.base, self.digits[:n])

    def suffix(self, n: int) -> Word:
        """Drop the first ``n`` digits."""
        return Word(self.base, self.digits[n:])

    def children(self) -> list[Word]:
        return [Word(self.base, self.digits + (c,)) for c in range(self.base)]

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.digits), self.digits)


@dataclass(frozen=True)
class Ball:
    """The ball ``B(center, base**radius_exponent)`` in Z_p.

    A word of length n gives ``radius_exponent = 1 - n``; membership is
    ``x = center (mod base**n)``.
    """

    base: int
    center: int
    radius_exponent: int

    @property
    def modulus_exponent(self) -> int:
        return 1 - self.radius_exponent

    def contains_residue(self, x: int) -> bool:
        return (x - self.center) % self.base**self.modulus_exponent == 0

    def __contains__(self, other: Ball) -> bool:
        """Ball inclusion ``other <= self``."""
        if other.base != self.base:
            raise BaseMismatchError(f"bases {self.base} and {other.base}")
        n, m = self.modulus_exponent, other.modulus_exponent
        return n <= m and (other.center - self.center) % self.base**n == 0


def _same_base(v: Word, w: Word) -> None:
    if v.base != w.base:
        raise BaseMismatchError(f"cannot combine words over bases {v.base} and {w.base}")


def nu(w: Word) -> int:
    """Integer ``sum(a_k * p**k)`` represented by the digits of ``w``."""
    value = 0
    for d in reversed(w.digits):
        value = value * w.base + d
    return value


def word_from_int(x: int, base: int, length: int) -> Word:
    """Inverse of :func:`nu` on words of a fixed length (``x`` is reduced mod base**length)."""
    x %= base**length
    digits = []
    for _ in range(length):
        x, d = divmod(x, base)
        digits.append(d)
    return Word(base, tuple(digits))


def is_prefix(v: Word, w: Word) -> bool:
    _same_base(v, w)
    n = len(v.digits)
    return n <= len(w.digits) and w.digits[:n] == v.digits


def ball_of(w: Word) -> Ball:
    return Ball(w.base, nu(w), 1 - len(w))


def ball_contains(v: Word, w: Word) -> bool:
    """True iff the ball of ``v`` contains the ball of ``w``; same as ``v`` prefixing ``w``."""
    return is_prefix(v, w)


def word_cmp(v: Word, w: Word) -> int:
    """Three-way comparison in length-then-lexicographic order: -1, 0 or 1."""
    _same_base(v, w)
    a, b = v.sort_key, w.sort_key
    return (a > b) - (a < b)


def sort_words(words: Iterable[Word]) -> list[Word]:
    return sorted(words, key=lambda w: w.sort_key)


def words_of_length(base: int, n: int) -> Iterator[Word]:
    """All ``base**n`` words of length ``n``, in increasing order."""
    for digits in itertools.product(range(base), repeat=n):
        yield Word(base, digits)


def words_up_to(base: int, n: int) -> Iterator[Word]:
    for k in range(n + 1):
        yield from words_of_length(base, k)


def concat(words: Sequence[Word], base: int) -> Word:
    digits: tuple[int, ...] = ()
    for w in words:
        if w.base != base:
            raise BaseMismatchError(f"word over base {w.base} in base-{base} concatenation")
        digits += w.digits
    return Word(base, digits)
