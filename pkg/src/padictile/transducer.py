"""Homeomorphisms Z_p -> Z_q as digit-block transducers.

Given tiles ``S`` (base p) and ``S'`` (base q) with equally many leaves and a
bijection ``tau`` between the leaf sets, every p-adic digit sequence factors
uniquely into leaves of ``S``; replacing each leaf ``l`` by ``tau(l)`` gives the
image in Z_q.  Output is emitted one completed block at a time, so every
emitted digit is final no matter how the input continues.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Union

from .caps import check_cap
from .streams import DigitStream
from .tiles import Tile, explicit_tile, iter_level, solve_diophantine
from .words import BaseMismatchError, Word, is_prefix, sort_words


class TauFormatError(ValueError):
    pass


@dataclass(frozen=True)
class LeafBijection:
    """A bijection from the leaves of ``source`` onto the leaves of ``target``."""

    source: Tile
    target: Tile
    pairs: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        pairs = tuple(sorted(self.pairs, key=lambda kv: kv[0].sort_key))
        if len(self.source) != len(self.target):
            raise ValueError(
                f"leaf counts differ: {len(self.source)} source leaves, {len(self.target)} target leaves"
            )
        dom = [a for a, _ in pairs]
        img = [b for _, b in pairs]
        if len(set(dom)) != len(dom) or set(dom) != self.source.leafset:
            raise ValueError("domain of tau must be exactly the source leaves")
        if len(set(img)) != len(img) or set(img) != self.target.leafset:
            raise ValueError("tau must map onto the target leaves without repeats")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def from_mapping(cls, source: Tile, target: Tile, mapping: Mapping[Word, Word]) -> LeafBijection:
        return cls(source, target, tuple(mapping.items()))

    @functools.cached_property
    def mapping(self) -> dict[Word, Word]:
        return dict(self.pairs)

    def __call__(self, leaf: Word) -> Word:
        return self.mapping[leaf]

    def inverse(self) -> LeafBijection:
        return LeafBijection(self.target, self.source, tuple((b, a) for a, b in self.pairs))


@dataclass
class ParseState:
    """Digits read since the last completed block; always an inner node of the source tile."""

    pending: Word

    def to_text(self) -> str:
        return f"{self.pending.base}:{self.pending}"

    @classmethod
    def from_text(cls, text: str) -> ParseState:
        base, _, digits = text.partition(":")
        return cls(Word.parse(digits, int(base)))


@dataclass(frozen=True)
class Homeo:
    """The map Z_p -> Z_q that rewrites each ``S``-leaf block ``l`` as ``tau(l)``."""

    S: Tile
    S_prime: Tile
    tau: LeafBijection

    def __post_init__(self):
        if self.tau.source != self.S or self.tau.target != self.S_prime:
            raise ValueError("tau must map the leaves of S onto the leaves of S_prime")

    @property
    def p(self) -> int:
        return self.S.base

    @property
    def q(self) -> int:
        return self.S_prime.base

    @functools.cached_property
    def _table(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        return {a.digits: b.digits for a, b in self.tau.pairs}

    @functools.cached_property
    def _inner(self) -> frozenset[tuple[int, ...]]:
        return frozenset(w.digits for w in self.S.inner_nodes)


class Transducer:
    """Streaming driver: feed source digits, receive target digits as blocks complete."""

    def __init__(self, h: Homeo, state: ParseState | None = None):
        self.h = h
        self.state = state if state is not None else ParseState(Word.empty(h.p))
        if self.state.pending.base != h.p or self.state.pending.digits not in h._inner:
            raise ValueError(f"pending word {self.state.pending} is not an inner node of the source tile")

    def feed(self, digits: Iterable[int]) -> list[int]:
        table = self.h._table
        p = self.h.p
        buf = self.state.pending.digits
        out: list[int] = []
        for d in digits:
            if not 0 <= d < p:
                raise ValueError(f"digit {d} out of range for base {p}")
            buf += (d,)
            img = table.get(buf)
            if img is not None:
                out.extend(img)
                buf = ()
        self.state = ParseState(Word(p, buf))
        return out


def factorize(digits: Word, S: Tile) -> tuple[list[Word], Word]:
    """Split ``digits`` into leaves of ``S`` from the left.

    Returns the complete blocks and the leftover digits, which form a proper
    prefix of some leaf.  Because the leaves form a prefix code this greedy
    parse is the only factorization.
    """
    if digits.base != S.base:
        raise BaseMismatchError(f"digits over base {digits.base}, tile over base {S.base}")
    leaves = {w.digits for w in S.leaves}
    blocks: list[Word] = []
    start = 0
    ds = digits.digits
    for end in range(1, len(ds) + 1):
        if ds[start:end] in leaves:
            blocks.append(Word(S.base, ds[start:end]))
            start = end
    return blocks, Word(S.base, ds[start:])


def apply(h: Homeo, digits: Word, state: ParseState | None = None) -> tuple[Word, ParseState]:
    """Image digits guaranteed for every p-adic integer starting with ``digits``, and the parse state left over."""
    if digits.base != h.p:
        raise BaseMismatchError(f"input over base {digits.base}, homeomorphism expects base {h.p}")
    t = Transducer(h, state)
    out = t.feed(digits.digits)
    return Word(h.q, tuple(out)), t.state


def apply_stream(h: Homeo, s: DigitStream) -> DigitStream:
    """Exact image of an eventually periodic input.

    After the preperiod, the run is determined by (position in period,
    pending word); the first repeated pair closes the output period.
    """
    if s.base != h.p:
        raise BaseMismatchError(f"stream over base {s.base}, homeomorphism expects base {h.p}")
    t = Transducer(h)
    out = t.feed(s.preperiod)
    seen: dict[tuple[int, tuple[int, ...]], int] = {}
    i = 0
    n = len(s.period)
    while (i, t.state.pending.digits) not in seen:
        seen[(i, t.state.pending.digits)] = len(out)
        out.extend(t.feed((s.period[i],)))
        i = (i + 1) % n
    start = seen[(i, t.state.pending.digits)]
    return DigitStream(h.q, tuple(out[:start]), tuple(out[start:]))


def inverse(h: Homeo) -> Homeo:
    return Homeo(h.S_prime, h.S, h.tau.inverse())


def canonical_tau(S: Tile, S_prime: Tile) -> LeafBijection:
    """Order-preserving bijection: the i-th smallest leaf of ``S`` goes to the i-th smallest of ``S_prime``."""
    if len(S) != len(S_prime):
        raise ValueError(f"leaf counts differ: {len(S)} vs {len(S_prime)}")
    return LeafBijection(S, S_prime, tuple(zip(S.leaves, S_prime.leaves)))


def explicit_homeo(p: int, q: int, m: int = 1, tau: LeafBijection | None = None) -> Homeo:
    """Homeomorphism built on the explicit tiles of the ``m``-th split-count solution."""
    sol = solve_diophantine(p, q, m)
    S, S_prime = explicit_tile(p, sol.s), explicit_tile(q, sol.s_prime)
    return Homeo(S, S_prime, tau if tau is not None else canonical_tau(S, S_prime))


def identity_homeo(p: int) -> Homeo:
    S = explicit_tile(p, 1)
    return Homeo(S, S, canonical_tau(S, S))


# tau of the worked 3-adic to 5-adic example, keyed by digits
WORKED_EXAMPLE_TAU = {
    (0, 0): (0,),
    (1,): (1,),
    (2,): (2,),
    (0, 1): (3,),
    (0, 2): (4,),
}


def worked_example_homeo() -> Homeo:
    """3-adic to 5-adic map on the explicit tiles with 2 and 1 splits and the hand-picked tau."""
    S, S_prime = explicit_tile(3, 2), explicit_tile(5, 1)
    mapping = {Word(3, a): Word(5, b) for a, b in WORKED_EXAMPLE_TAU.items()}
    return Homeo(S, S_prime, LeafBijection.from_mapping(S, S_prime, mapping))


def required_input_precision(h: Homeo | Composite, k: int) -> int:
    """Input digits that pin down the first ``k`` output digits.

    ``maxlen(S) * ceil(k / minlen(tau(S)))``: that many input digits hold at
    least ``ceil(k / minlen)`` complete blocks.  Safe, not tight.
    """
    if k < 0:
        raise ValueError("output precision must be >= 0")
    if isinstance(h, Composite):
        return h.required_input_precision(k)
    return h.S.max_len * math.ceil(k / h.S_prime.min_len)


@dataclass(frozen=True)
class Composite:
    """``parts[-1] o ... o parts[0]`` realised by piping digits through each stage."""

    parts: tuple[Homeo, ...] = field(default=())

    @property
    def p(self) -> int:
        return self.parts[0].p

    @property
    def q(self) -> int:
        return self.parts[-1].q

    def apply(self, digits: Word) -> Word:
        for h in self.parts:
            digits, _ = apply(h, digits)
        return digits

    def apply_stream(self, s: DigitStream) -> DigitStream:
        for h in self.parts:
            s = apply_stream(h, s)
        return s

    def required_input_precision(self, k: int) -> int:
        for h in reversed(self.parts):
            k = required_input_precision(h, k)
        return k

    def __call__(self, digits: Word) -> Word:
        return self.apply(digits)


def compose(h1: Homeo | Composite, h2: Homeo | Composite) -> Composite:
    """First ``h1`` then ``h2``."""
    if h1.q != h2.p:
        raise BaseMismatchError(f"cannot feed base-{h1.q} output into a base-{h2.p} map")
    parts = []
    for h in (h1, h2):
        parts.extend(h.parts if isinstance(h, Composite) else (h,))
    return Composite(tuple(parts))


def extend_blockwise(tau: LeafBijection, w: Word) -> Word:
    """Image of a leaf concatenation under blockwise ``tau``."""
    blocks, rest = factorize(w, tau.source)
    if len(rest):
        raise ValueError(f"{w} is not a concatenation of leaves")
    digits: tuple[int, ...] = ()
    for b in blocks:
        digits += tau(b).digits
    return Word(tau.target.base, digits)


LevelMap = Union[LeafBijection, Callable[[Word], Word]]


def check_inclusion_isomorphism(
    S: Tile, S_prime: Tile, tau: LevelMap, n: int, cap: int | None = None
) -> bool:
    """Does the level map carry levels ``n`` and ``n + 1`` of ``S`` bijectively onto those of ``S_prime``, preserving prefixes both ways?

    ``tau`` is a leaf bijection (extended blockwise) or any callable on
    level words, which lets a non-blockwise map be tested.
    """
    if n < 0:
        raise ValueError("level must be >= 0")
    check_cap(len(S) ** (n + 1), cap, "inclusion check")
    f = functools.partial(extend_blockwise, tau) if isinstance(tau, LeafBijection) else tau
    upper = sort_words(iter_level(S, n))
    lower = sort_words(iter_level(S, n + 1))
    for level, k in ((upper, n), (lower, n + 1)):
        images = [f(w) for w in level]
        if len(set(images)) != len(images) or set(images) != set(iter_level(S_prime, k)):
            return False
    img_upper = {v: f(v) for v in upper}
    img_lower = {w: f(w) for w in lower}
    for v in upper:
        for w in lower:
            if is_prefix(v, w) != is_prefix(img_upper[v], img_lower[w]):
                return False
    return True


def parse_tau(text: str, S: Tile, S_prime: Tile) -> LeafBijection:
    """Read ``tau`` followed by lines ``leaf -> leaf``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "tau":
        raise TauFormatError("first line must be 'tau'")
    mapping: dict[Word, Word] = {}
    for ln in lines[1:]:
        left, arrow, right = ln.partition("->")
        if not arrow:
            raise TauFormatError(f"expected 'leaf -> leaf', got {ln!r}")
        try:
            a, b = Word.parse(left, S.base), Word.parse(right, S_prime.base)
        except ValueError as exc:
            raise TauFormatError(str(exc)) from None
        if a in mapping:
            raise TauFormatError(f"leaf {a} mapped twice")
        mapping[a] = b
    try:
        return LeafBijection.from_mapping(S, S_prime, mapping)
    except ValueError as exc:
        raise TauFormatError(str(exc)) from None


def format_tau(tau: LeafBijection) -> str:
    return "\n".join(["tau"] + [f"{a} -> {b}" for a, b in tau.pairs]) + "\n"
