"""Tiles of the p-ary tree.

A tile is stored by its leaf set alone.  A finite set of words is the leaf
set of a tile exactly when it is a complete prefix code: no leaf is a proper
prefix of another, and every long enough word has a leaf as a prefix.  The
inner nodes are the proper prefixes of the leaves and are recomputed when
needed.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .caps import check_cap
from .words import BaseMismatchError, Word, check_base, sort_words, words_of_length


class InvalidTileError(ValueError):
    pass


class TileFormatError(ValueError):
    pass


class Violation(NamedTuple):
    """First reason a candidate leaf set is not a tile."""

    kind: str  # "nontrivial" | "prefix-freeness" | "completeness"
    message: str
    witness: Word | None


def _digit_sets(base: int, leaves: Iterable[Word]) -> list[tuple[int, ...]]:
    out = []
    for w in leaves:
        if w.base != base:
            raise BaseMismatchError(f"leaf {w} is over base {w.base}, expected {base}")
        out.append(w.digits)
    return out


def tile_violation(base: int, leaves: Iterable[Word]) -> Violation | None:
    """Return the first violated tile condition, or None for a valid tile.

    Checks run in a fixed order (nontriviality, prefix-freeness, complete
    splitting of every inner node) and scan words in length-then-lex order,
    so the witness is deterministic.
    """
    check_base(base)
    cands = sorted(_digit_sets(base, leaves), key=lambda d: (len(d), d))
    leafset = set(cands)
    if not leafset or leafset == {()}:
        return Violation("nontrivial", "a tile needs at least one split of the root", None)

    seen: set[tuple[int, ...]] = set()
    for d in cands:
        if d in seen:
            w = Word(base, d)
            return Violation("prefix-freeness", f"leaf {_fmt(w)} is listed twice", w)
        seen.add(d)
        for k in range(len(d)):
            if d[:k] in leafset:
                w = Word(base, d)
                return Violation(
                    "prefix-freeness",
                    f"leaf {_fmt(Word(base, d[:k]))} is a proper prefix of leaf {_fmt(w)}",
                    w,
                )

    inner = {d[:k] for d in cands for k in range(len(d))}
    for s in sorted(inner, key=lambda d: (len(d), d)):
        for c in range(base):
            child = s + (c,)
            if child not in inner and child not in leafset:
                w = Word(base, child)
                return Violation(
                    "completeness",
                    f"word {_fmt(w)} has no leaf prefix (node {_fmt(Word(base, s))} is not split completely)",
                    w,
                )
    return None


def _fmt(w: Word) -> str:
    return str(w) if len(w) else "ε"


def verify_tile(base: int, leaves: Iterable[Word]) -> bool:
    """True iff ``leaves`` is the leaf set of a finite subtree in which every inner node has all children."""
    check_base(base)
    cands = _digit_sets(base, leaves)
    leafset = set(cands)
    if len(leafset) != len(cands) or not leafset or leafset == {()}:
        return False
    inner = {d[:k] for d in cands for k in range(len(d))}
    if inner & leafset:
        return False
    # same conditions as tile_violation, without ordering for a witness
    return all(s + (c,) in inner or s + (c,) in leafset for s in inner for c in range(base))


def verify_tile_oracle(base: int, leaves: Iterable[Word], cap: int | None = None) -> bool:
    """Brute-force partition check.

    Every word of length D (the longest leaf) must have exactly one leaf as a
    prefix.  Costs ``base**D`` word scans; guarded by ``cap``.
    """
    check_base(base)
    cands = _digit_sets(base, leaves)
    if not cands or set(cands) == {()}:
        return False
    depth = max(len(d) for d in cands)
    check_cap(base**depth, cap, "oracle enumeration")
    for word in itertools.product(range(base), repeat=depth):
        hits = sum(1 for d in cands if word[: len(d)] == d)
        if hits != 1:
            return False
    return True


def kraft_sum(base: int, leaves: Iterable[Word]) -> Fraction:
    return sum((Fraction(1, base ** len(w)) for w in leaves), Fraction(0))


def is_prefix_free(leaves: Iterable[Word]) -> bool:
    ds = [w.digits for w in leaves]
    s = set(ds)
    if len(s) != len(ds):
        return False
    return not any(d[:k] in s for d in ds for k in range(len(d)))


@dataclass(frozen=True)
class Tile:
    """A complete prefix code over ``range(base)``; leaves are kept in sorted order.

    Raises InvalidTileError on construction from a set that is not a tile.
    Equality is equality of leaf sets.
    """

    base: int
    leaves: tuple[Word, ...]

    def __post_init__(self):
        leaves = tuple(sort_words(self.leaves))
        bad = tile_violation(self.base, leaves)
        if bad is not None:
            raise InvalidTileError(f"{bad.kind}: {bad.message}")
        object.__setattr__(self, "leaves", leaves)

    @classmethod
    def from_digits(cls, base: int, leaves: Iterable[Iterable[int]]) -> Tile:
        return cls(base, tuple(Word(base, tuple(d)) for d in leaves))

    def __len__(self) -> int:
        return len(self.leaves)

    def __contains__(self, w: Word) -> bool:
        return w in self.leafset

    @functools.cached_property
    def leafset(self) -> frozenset[Word]:
        return frozenset(self.leaves)

    @functools.cached_property
    def inner_nodes(self) -> tuple[Word, ...]:
        """Proper prefixes of leaves: the nodes with children, sorted."""
        inner = {w.prefix(k) for w in self.leaves for k in range(len(w))}
        return tuple(sort_words(inner))

    @property
    def nodes(self) -> tuple[Word, ...]:
        return tuple(sort_words(self.inner_nodes + self.leaves))

    @property
    def max_len(self) -> int:
        return max(len(w) for w in self.leaves)

    @property
    def min_len(self) -> int:
        return min(len(w) for w in self.leaves)

    @property
    def splits(self) -> int:
        """Number of completely split nodes, ``(#leaves - 1) / (base - 1)``."""
        return len(self.inner_nodes)

    def edges(self) -> list[tuple[Word, Word]]:
        return [(s, c) for s in self.inner_nodes for c in s.children()]


@dataclass(frozen=True)
class ExplicitTileParams:
    """Shape parameters of the explicit tile with ``s`` splits.

    Every word shorter than ``L - 1`` is split, and so are the first ``s_pen``
    words of length ``L - 1`` (the set ``B``).  The rest of that level (``A``)
    stay leaves, giving ``n_short`` leaves of length ``L - 1`` and ``n_long``
    leaves of length ``L``.
    """

    p: int
    s: int
    L: int
    s_pen: int
    n_short: int
    n_long: int
    A: tuple[Word, ...]
    B: tuple[Word, ...]

    def leaves(self) -> tuple[Word, ...]:
        long = [b + Word(self.p, (c,)) for b in self.B for c in range(self.p)]
        return tuple(sort_words(list(self.A) + long))


def _geometric(p: int, n: int) -> int:
    """``1 + p + ... + p**(n-1)`` (zero for n = 0)."""
    return sum(p**i for i in range(n))


def explicit_params(p: int, s: int) -> ExplicitTileParams:
    check_base(p)
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"number of splits must be a positive integer, got {s!r}")
    L = 1
    while not (_geometric(p, L - 1) < s <= _geometric(p, L)):
        L += 1
    s_pen = s - _geometric(p, L - 1)
    level = list(words_of_length(p, L - 1))
    B = tuple(level[:s_pen])
    A = tuple(level[s_pen:])
    return ExplicitTileParams(
        p=p, s=s, L=L, s_pen=s_pen,
        n_short=p ** (L - 1) - s_pen, n_long=p * s_pen,
        A=A, B=B,
    )


def explicit_tile(p: int, s: int) -> Tile:
    """The tile obtained by splitting ``s`` nodes in length-then-lex order."""
    return Tile(p, explicit_params(p, s).leaves())


def leaf_count(p: int, s: int) -> int:
    return 1 + (p - 1) * s


@dataclass(frozen=True)
class DiophantineSolution:
    p: int
    q: int
    d: int
    m: int
    s: int
    s_prime: int

    @property
    def leaves(self) -> int:
        return leaf_count(self.p, self.s)


def solve_diophantine(p: int, q: int, m: int = 1) -> DiophantineSolution:
    """Member ``m`` of the family of split counts with ``1 + (p-1)s = 1 + (q-1)s'``."""
    check_base(p)
    check_base(q)
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"family index m must be a positive integer, got {m!r}")
    d = math.gcd(p - 1, q - 1)
    return DiophantineSolution(p, q, d, m, (q - 1) * m // d, (p - 1) * m // d)


def iter_level(S: Tile, n: int) -> Iterator[Word]:
    """Concatenations of ``n`` leaves of ``S`` (n = 0 gives the empty word), in sorted-leaf product order."""
    for combo in itertools.product(S.leaves, repeat=n):
        digits: tuple[int, ...] = ()
        for leaf in combo:
            digits += leaf.digits
        yield Word(S.base, digits)


def partition_at_level(S: Tile, n: int, cap: int | None = None) -> list[Word]:
    """The ``n``-fold leaf concatenations of ``S``, sorted; their balls partition Z_p."""
    if n < 1:
        raise ValueError("level must be >= 1")
    check_cap(len(S) ** n, cap, "partition level")
    return sort_words(iter_level(S, n))


def replicate(S: Tile, n: int, cap: int | None = None) -> Tile:
    """The tile ``S_n`` whose leaves are all concatenations of ``n + 1`` leaves of ``S``."""
    if n < 0:
        raise ValueError("replication index must be >= 0")
    check_cap(len(S) ** (n + 1), cap, "replicate")
    return Tile(S.base, tuple(iter_level(S, n + 1)))


@functools.lru_cache(maxsize=None)
def _full_trees(p: int, splits: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    # leaf sets (as digit tuples) of the full p-ary trees with `splits` inner nodes
    if splits == 0:
        return ((),),
    out = []
    for parts in _compositions(splits - 1, p):
        for subs in itertools.product(*(_full_trees(p, k) for k in parts)):
            leaves = tuple((c,) + leaf for c, sub in enumerate(subs) for leaf in sub)
            out.append(leaves)
    return tuple(out)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_tiles(p: int, max_leaves: int, cap: int | None = None) -> list[Tile]:
    """Every tile over base ``p`` with at most ``max_leaves`` leaves, without repeats."""
    check_base(p)
    max_splits = (max_leaves - 1) // (p - 1) if max_leaves >= 1 else 0
    tiles: list[Tile] = []
    for k in range(1, max_splits + 1):
        trees = _full_trees(p, k)
        check_cap(len(tiles) + len(trees), cap, "tile enumeration")
        tiles.extend(Tile.from_digits(p, leaves) for leaves in trees)
    return tiles


def parse_tile_text(text: str) -> tuple[int, list[Word]]:
    """Read the line format ``base <p>`` followed by one leaf per line; no validation of the tile itself."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise TileFormatError("empty tile file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "base":
        raise TileFormatError(f"first line must be 'base <p>', got {lines[0]!r}")
    try:
        base = check_base(int(head[1]))
        leaves = [Word.parse(ln, base) for ln in lines[1:]]
    except ValueError as exc:
        raise TileFormatError(str(exc)) from None
    return base, leaves


def read_tile(text: str) -> Tile:
    base, leaves = parse_tile_text(text)
    return Tile(base, tuple(leaves))


def format_tile(S: Tile) -> str:
    return "\n".join([f"base {S.base}"] + [str(w) for w in S.leaves]) + "\n"
