"""ASCII and Graphviz DOT pictures of the partitions a homeomorphism matches up.

Both trees show the root, every concatenation of at most ``depth`` leaves,
and the uncoloured inner nodes on the way.  Under ``leaf-orbit`` colouring a
level word gets the colour of its last block, and a source leaf shares its
colour with its image under tau, so matched balls carry matching colours at
every level.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .caps import check_cap
from .tiles import Tile
from .transducer import Homeo
from .words import Word

PALETTE = (
    "red", "blue", "forestgreen", "orange", "plum", "gold", "cyan", "brown",
    "pink", "gray", "olivedrab", "navy", "salmon", "turquoise", "khaki", "orchid",
)


@dataclass(frozen=True)
class RenderSpec:
    depth: int
    format: Literal["ascii", "dot"] = "ascii"
    coloring: Literal["none", "leaf-orbit"] = "leaf-orbit"

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        if self.format not in ("ascii", "dot"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.coloring not in ("none", "leaf-orbit"):
            raise ValueError(f"unknown coloring {self.coloring!r}")


def color_name(i: int) -> str:
    return PALETTE[i % len(PALETTE)]


def _tree(S: Tile, leaf_color: dict[Word, int], depth: int) -> dict[tuple[int, ...], int | None]:
    # node digits -> colour index (None for uncoloured)
    nodes: dict[tuple[int, ...], int | None] = {(): None}
    for k in range(1, depth + 1):
        for combo in itertools.product(S.leaves, repeat=k):
            digits: tuple[int, ...] = ()
            for leaf in combo:
                for j in range(1, len(leaf) + 1):
                    nodes.setdefault(digits + leaf.digits[:j], None)
                digits += leaf.digits
            nodes[digits] = leaf_color[combo[-1]]
    return nodes


def _label(digits: tuple[int, ...]) -> str:
    return ",".join(map(str, digits)) if digits else "ε"


def _ascii(title: str, nodes: dict, base: int, colored: bool) -> list[str]:
    lines = [title, "ε"]

    def walk(node: tuple[int, ...], indent: str) -> None:
        kids = [node + (c,) for c in range(base) if node + (c,) in nodes]
        for i, kid in enumerate(kids):
            last = i == len(kids) - 1
            tag = ""
            if colored and nodes[kid] is not None:
                tag = f" [c{nodes[kid]} {color_name(nodes[kid])}]"
            lines.append(f"{indent}{'└── ' if last else '├── '}{_label(kid)}{tag}")
            walk(kid, indent + ("    " if last else "│   "))

    walk((), "")
    return lines


def _dot(prefix: str, title: str, nodes: dict, colored: bool) -> list[str]:
    order = sorted(nodes, key=lambda d: (len(d), d))
    out = [f"  subgraph cluster_{prefix} {{", f'    label="{title}";']
    for d in order:
        name = f"{prefix}_{'_'.join(map(str, d)) or 'root'}"
        attrs = [f'label="{_label(d)}"']
        if colored and nodes[d] is not None:
            attrs += ["style=filled", f'fillcolor="{color_name(nodes[d])}"', f'colorindex="{nodes[d]}"']
        out.append(f"    {name} [{', '.join(attrs)}];")
    for d in order:
        if d:
            parent = f"{prefix}_{'_'.join(map(str, d[:-1])) or 'root'}"
            out.append(f"    {parent} -> {prefix}_{'_'.join(map(str, d))};")
    out.append("  }")
    return out


def render(h: Homeo, spec: RenderSpec, cap: int | None = None) -> str:
    n = len(h.S)
    check_cap(sum(n**k for k in range(spec.depth + 1)) * max(h.S.max_len, h.S_prime.max_len),
              cap, "render")
    src_color = {leaf: i for i, leaf in enumerate(h.S.leaves)}
    dst_color = {h.tau(leaf): i for leaf, i in src_color.items()}
    src = _tree(h.S, src_color, spec.depth)
    dst = _tree(h.S_prime, dst_color, spec.depth)
    colored = spec.coloring == "leaf-orbit"
    src_title = f"source T_{h.p} ({n} leaves, depth {spec.depth})"
    dst_title = f"target T_{h.q} ({n} leaves, depth {spec.depth})"
    if spec.format == "ascii":
        lines = _ascii(src_title, src, h.p, colored) + [""] + _ascii(dst_title, dst, h.q, colored)
    else:
        lines = ["digraph homeo {", "  node [shape=circle];"]
        lines += _dot("s", src_title, src, colored) + _dot("t", dst_title, dst, colored)
        lines.append("}")
    return "\n".join(lines) + "\n"
