"""File formats: graph6 with a JSON partition sidecar, plus DOT export.

graph6 carries only the plain graph, so the partition travels in a
sidecar ``<prefix>.parts.json`` of the form {"k": ..., "part_sizes": [...]}.
Construction metadata goes to ``<prefix>.meta.json`` and verification
reports to ``<prefix>.report.json``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graphs import PartSpec, PartiteGraph


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(
            chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)
        )
    raise ValueError("graph too large for this writer")


def to_graph6(g: PartiteGraph) -> str:
    n = g.num_vertices
    bits = []
    for v in range(1, n):
        row = g.adjacency_mask(v)
        for u in range(v):
            bits.append(row >> u & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = x << 1 | b
        chars.append(chr(x + 63))
    return _encode_n(n) + "".join(chars)


def from_graph6(text: str, spec: PartSpec) -> PartiteGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ValueError("empty graph6 string")
    if ord(s[0]) == 126:
        if len(s) < 4 or ord(s[1]) == 126:
            raise ValueError("unsupported graph6 order encoding")
        n = 0
        for c in s[1:4]:
            n = n << 6 | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n != spec.num_vertices:
        raise ValueError(
            f"graph6 order {n} does not match part sizes {spec.part_sizes}"
        )
    bits = []
    for c in body:
        x = ord(c) - 63
        if not 0 <= x <= 63:
            raise ValueError(f"invalid graph6 character {c!r}")
        bits.extend((x >> shift) & 1 for shift in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise ValueError("graph6 body too short")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return PartiteGraph(spec, edges)


def save_graph(g: PartiteGraph, prefix: str | Path) -> None:
    prefix = Path(prefix)
    prefix.with_suffix(".g6").write_text(to_graph6(g) + "\n")
    sidecar = {"k": g.spec.k, "part_sizes": list(g.spec.part_sizes)}
    prefix.with_suffix(".parts.json").write_text(json.dumps(sidecar) + "\n")


def load_graph(prefix: str | Path) -> PartiteGraph:
    prefix = Path(prefix)
    sidecar = json.loads(prefix.with_suffix(".parts.json").read_text())
    spec = PartSpec(tuple(sidecar["part_sizes"]))
    if sidecar.get("k") != spec.k:
        raise ValueError("sidecar k does not match part_sizes")
    return from_graph6(prefix.with_suffix(".g6").read_text(), spec)


_DOT_COLORS = (
    "lightblue",
    "lightpink",
    "lightgreen",
    "khaki",
    "plum",
    "lightsalmon",
    "lightcyan",
    "wheat",
)


def to_dot(g: PartiteGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [style=filled];"]
    for v in range(g.num_vertices):
        color = _DOT_COLORS[g.part_of(v) % len(_DOT_COLORS)]
        lines.append(f'  {v} [fillcolor="{color}", label="{v}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
