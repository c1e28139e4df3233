"""Immutable partite graphs and their basic metrics.

Hosts are complete multipartite graphs K_{n_1,...,n_k}; every construction
and search works on subgraphs of such a host.  Vertices are numbered
0..N-1 with contiguous blocks per part, so "the j-th vertex of part i" is
a stable, reproducible address.  Adjacency is a dense bit matrix (one
Python int per row), which makes edge tests O(1) and row intersections
cheap for the search modules.

Distances use math.inf as the explicit "disconnected" sentinel; the
partite diameter diam_p must be able to distinguish disconnection from
merely large distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

INFINITY = math.inf


@dataclass(frozen=True)
class PartSpec:
    """Part sizes n_1..n_k of a complete multipartite host."""

    part_sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.part_sizes) < 2:
            raise ValueError("need at least 2 parts")
        if any(n < 1 for n in self.part_sizes):
            raise ValueError("every part needs at least one vertex")

    @classmethod
    def balanced(cls, k: int, n: int) -> "PartSpec":
        return cls((n,) * k)

    @property
    def k(self) -> int:
        return len(self.part_sizes)

    @property
    def num_vertices(self) -> int:
        return sum(self.part_sizes)

    @property
    def offsets(self) -> tuple[int, ...]:
        """Start id of each part block."""
        out = []
        acc = 0
        for n in self.part_sizes:
            out.append(acc)
            acc += n
        return tuple(out)

    def part_of(self, v: int) -> int:
        acc = 0
        for i, n in enumerate(self.part_sizes):
            acc += n
            if v < acc:
                return i
        raise ValueError(f"vertex {v} out of range")

    def part_vertices(self, i: int) -> range:
        start = self.offsets[i]
        return range(start, start + self.part_sizes[i])

    @property
    def is_balanced(self) -> bool:
        return len(set(self.part_sizes)) == 1


class PartiteGraph:
    """Simple graph on a PartSpec universe; parts are independent sets.

    Immutable: all edits go through `with_edges` / builders that return a
    new instance, so instances are safe to share across workers.
    """

    __slots__ = ("spec", "_adj", "_parts", "_edge_count")

    def __init__(self, spec: PartSpec, edges: Iterable[tuple[int, int]] = ()):
        n = spec.num_vertices
        parts = []
        for i, size in enumerate(spec.part_sizes):
            parts.extend([i] * size)
        adj = [0] * n
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError("self-loop")
            if parts[u] == parts[v]:
                raise ValueError(f"edge ({u},{v}) inside part {parts[u]}")
            if not adj[u] >> v & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                count += 1
        self.spec = spec
        self._adj = tuple(adj)
        self._parts = tuple(parts)
        self._edge_count = count

    # -- basic accessors ------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self._adj)

    def part_of(self, v: int) -> int:
        return self._parts[v]

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> Iterator[int]:
        m = self._adj[v]
        while m:
            b = m & -m
            yield b.bit_length() - 1
            m ^= b

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.num_vertices):
            m = self._adj[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                out.append((u, b.bit_length() - 1))
                m ^= b
        return out

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "PartiteGraph":
        return PartiteGraph(self.spec, self.edges() + list(extra))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PartiteGraph)
            and self.spec == other.spec
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.spec, self._adj))

    def __repr__(self) -> str:
        return (
            f"PartiteGraph(parts={self.spec.part_sizes}, "
            f"edges={self.edge_count})"
        )


# -- host and metrics ---------------------------------------------------


def build_host(spec: PartSpec) -> PartiteGraph:
    """The complete multipartite graph on `spec`."""
    edges = []
    for i in range(spec.k):
        for j in range(i + 1, spec.k):
            for u in spec.part_vertices(i):
                for v in spec.part_vertices(j):
                    edges.append((u, v))
    return PartiteGraph(spec, edges)


def admissible_nonedges(g: PartiteGraph) -> list[tuple[int, int]]:
    """Cross-part vertex pairs with no edge, in lexicographic order."""
    out = []
    n = g.num_vertices
    for u in range(n):
        for v in range(u + 1, n):
            if g.part_of(u) != g.part_of(v) and not g.has_edge(u, v):
                out.append((u, v))
    return out


def bfs_distances(g: PartiteGraph, source: int) -> list[float]:
    """Edge-count distance from `source` to every vertex (INFINITY if unreachable)."""
    n = g.num_vertices
    if not 0 <= source < n:
        raise ValueError(f"vertex {source} out of range")
    dist: list[float] = [INFINITY] * n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            m = g.adjacency_mask(u)
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                if dist[v] == INFINITY:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def diam_p(g: PartiteGraph) -> float:
    """Max distance over cross-part pairs; INFINITY if any such pair is disconnected."""
    best: float = 0
    for u in range(g.num_vertices):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.num_vertices):
            if g.part_of(u) != g.part_of(v):
                best = max(best, dist[v])
                if best == INFINITY:
                    return INFINITY
    return best


def is_connected(g: PartiteGraph) -> bool:
    return INFINITY not in bfs_distances(g, 0)


def min_degree(g: PartiteGraph) -> int:
    return min(g.degree(v) for v in range(g.num_vertices))


@dataclass(frozen=True)
class PathWitness:
    """Ordered distinct vertices; consecutive ones adjacent in the host graph.

    "Length" follows the vertex-count convention used throughout:
    a path of length L has L vertices and L-1 edges.
    """

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, g: PartiteGraph, closed: bool = False) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                return False
        if closed:
            if len(vs) < 3 or not g.has_edge(vs[-1], vs[0]):
                return False
        return True
