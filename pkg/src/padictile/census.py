"""Exhaustive census of the rooted subtrees of a truncated p-ary tree.

Every prefix-closed node set containing the root, down to a fixed depth, is
checked twice: once for complete splitting of its inner nodes and once by
brute-force leaf coverage of the deepest level.  The two predicates must
agree on every subtree.

Subtrees are encoded as bit masks in heap order (the children of node ``i``
are ``p*i + 1, ..., p*i + p``), which keeps the hot loop inside a numba
kernel; the base-3 depth-3 case alone has 730**3 subtrees.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np
from numba import njit

from .words import Word

NodeSet = frozenset  # of digit tuples


def node_index(p: int, digits: tuple[int, ...]) -> int:
    j = 0
    for d in digits:
        j = p * j + 1 + d
    return j


def index_digits(p: int, j: int) -> tuple[int, ...]:
    out = []
    while j > 0:
        j, d = divmod(j - 1, p)
        out.append(d)
    return tuple(reversed(out))


def subtrees(p: int, depth: int) -> list[NodeSet]:
    """All subtrees rooted at the empty word with nodes of length <= depth."""
    if depth == 0:
        return [frozenset({()})]
    below = [None] + subtrees(p, depth - 1)
    out = []
    for combo in itertools.product(below, repeat=p):
        nodes = {()}
        for c, sub in enumerate(combo):
            if sub is not None:
                nodes.update((c,) + t for t in sub)
        out.append(frozenset(nodes))
    return out


def leaves_of(nodes: NodeSet, p: int) -> list[Word]:
    """Nodes of the subtree that have no child in it."""
    parents = {t[:-1] for t in nodes if t}
    return [Word(p, t) for t in nodes - parents]


def to_mask(p: int, nodes: NodeSet) -> int:
    m = 0
    for t in nodes:
        m |= 1 << node_index(p, t)
    return m


def from_mask(p: int, mask: int) -> NodeSet:
    return frozenset(index_digits(p, j) for j in range(mask.bit_length()) if mask >> j & 1)


@dataclass(frozen=True)
class _Layout:
    p: int
    depth: int
    n_inner: int
    levels: np.ndarray  # start index of each level, plus the end
    level_masks: np.ndarray
    ancestors: np.ndarray  # bit mask of each node and its ancestors


def _layout(p: int, depth: int) -> _Layout:
    levels = [0]
    for d in range(depth + 1):
        levels.append(levels[-1] + p**d)
    total = levels[-1]
    if total > 63:
        raise ValueError(f"tree of base {p} and depth {depth} has {total} nodes; at most 63 fit a mask")
    level_masks = [sum(1 << i for i in range(levels[d], levels[d + 1])) for d in range(depth + 1)]
    anc = []
    for i in range(total):
        a, j = 1 << i, i
        while j > 0:
            j = (j - 1) // p
            a |= 1 << j
        anc.append(a)
    return _Layout(
        p, depth, levels[depth],
        np.array(levels, dtype=np.int64),
        np.array(level_masks, dtype=np.int64),
        np.array(anc, dtype=np.int64),
    )


@njit(cache=True)
def _census_kernel(tabs, p, n_inner, levels, level_masks, ancestors):
    nopt = tabs.shape[1]
    idx = np.zeros(p, dtype=np.int64)
    total = 0
    agree = 0
    tiles = 0
    first_bad = np.int64(-1)
    full = (1 << p) - 1
    while True:
        head = np.int64(1)
        for c in range(p - 1):
            head |= tabs[c, idx[c]]
        for last in range(nopt):
            m = head | tabs[p - 1, last]
            if m == 1:
                continue
            total += 1
            # complete splitting: each present inner node has none or all children
            a = True
            leaf = m
            for i in range(n_inner):
                if (m >> i) & 1:
                    ch = (m >> (p * i + 1)) & full
                    if ch != 0:
                        leaf &= ~(1 << i)
                        if ch != full:
                            a = False
            # partition: each word of the deepest leaf level has exactly one leaf ancestor
            deepest = 0
            for d in range(level_masks.shape[0] - 1, -1, -1):
                if leaf & level_masks[d]:
                    deepest = d
                    break
            b = True
            for i in range(levels[deepest], levels[deepest + 1]):
                y = leaf & ancestors[i]
                if y == 0 or (y & (y - 1)) != 0:
                    b = False
                    break
            if a == b:
                agree += 1
            elif first_bad < 0:
                first_bad = m
            if a:
                tiles += 1
        c = p - 2
        while c >= 0:
            idx[c] += 1
            if idx[c] < nopt:
                break
            idx[c] = 0
            c -= 1
        if c < 0:
            break
    return total, agree, tiles, first_bad


def classify_mask(p: int, depth: int, mask: int) -> tuple[bool, bool]:
    """(complete-splitting verdict, leaf-partition verdict) for one encoded subtree."""
    if mask == 1:
        return False, False
    lay = _layout(p, depth)
    # one-subtree table: the kernel sees exactly the mask 1 | mask
    tabs = np.zeros((p, 1), dtype=np.int64)
    tabs[0, 0] = mask
    total, agree, tiles, _ = _census_kernel(tabs, p, lay.n_inner, lay.levels, lay.level_masks, lay.ancestors)
    split_ok = tiles == 1
    return split_ok, split_ok if agree == 1 else not split_ok


@dataclass(frozen=True)
class CensusResult:
    p: int
    depth: int
    subtrees: int  # nontrivial ones
    agreements: int
    tiles: int
    first_disagreement: NodeSet | None

    @property
    def all_agree(self) -> bool:
        return self.agreements == self.subtrees


def census(p: int, depth: int) -> CensusResult:
    """Check both tile predicates on every nontrivial subtree of depth <= ``depth``."""
    if depth < 1:
        return CensusResult(p, depth, 0, 0, 0, None)
    lay = _layout(p, depth)
    options = [None] + subtrees(p, depth - 1)
    tabs = np.zeros((p, len(options)), dtype=np.int64)
    for c in range(p):
        for k, sub in enumerate(options):
            if sub is not None:
                tabs[c, k] = to_mask(p, frozenset((c,) + t for t in sub))
    total, agree, tiles, bad = _census_kernel(
        tabs, p, lay.n_inner, lay.levels, lay.level_masks, lay.ancestors
    )
    return CensusResult(
        p, depth, int(total), int(agree), int(tiles),
        from_mask(p, int(bad)) if bad >= 0 else None,
    )


def iter_nontrivial_subtrees(p: int, depth: int) -> Iterator[NodeSet]:
    for nodes in subtrees(p, depth):
        if len(nodes) > 1:
            yield nodes
