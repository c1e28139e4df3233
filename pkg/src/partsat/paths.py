"""Exact-length path and cycle detection.

"Adding nonedge uv creates a C_l" is equivalent to "g already has a path
of exactly l vertices from u to v", so exact-length path search is the
operational core of every saturation check.

The search is a DFS over simple paths with two admissible prunings:

* remaining-budget versus BFS-distance lower bound: with r edges still
  to traverse, a vertex farther than r from the target (distances
  precomputed from the target) can never finish the path in time;
* pendant shortcut: a degree-1 vertex other than the target is a dead
  end and is never entered.

Both prunings only discard provably hopeless branches, so the search is
complete.  A per-call node-expansion budget raises BudgetExhausted so
callers can distinguish "searched everything, absent" from "gave up".
"""

from __future__ import annotations

from .graphs import PartiteGraph, PathWitness, bfs_distances

DEFAULT_BUDGET = 10**7

SPECTRUM_VERTEX_BOUND = 24


class BudgetExhausted(Exception):
    """Raised when a search runs out of its node-expansion budget."""


def exists_path_exact(
    g: PartiteGraph,
    u: int,
    v: int,
    length: int,
    budget: int | None = DEFAULT_BUDGET,
) -> PathWitness | None:
    """A path of exactly `length` vertices from u to v, or None.

    `length` counts vertices (a path of length L has L-1 edges).
    Raises BudgetExhausted if the node-expansion budget runs out before
    the search space is exhausted.
    """
    n = g.num_vertices
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError("vertex id out of range")
    if u == v:
        raise ValueError("endpoints must differ")
    if length < 2:
        raise ValueError("length must be at least 2")

    dist = bfs_distances(g, v)
    edges_needed = length - 1
    if dist[u] > edges_needed:
        return None

    remaining_budget = [budget if budget is not None else -1]
    path = [u]
    visited = 1 << u

    def dfs(cur: int, remaining: int) -> bool:
        nonlocal visited
        if remaining_budget[0] == 0:
            raise BudgetExhausted()
        if remaining_budget[0] > 0:
            remaining_budget[0] -= 1
        m = g.adjacency_mask(cur)
        if remaining == 1:
            if m >> v & 1:
                path.append(v)
                return True
            return False
        while m:
            b = m & -m
            w = b.bit_length() - 1
            m ^= b
            if w == v or visited >> w & 1:
                continue
            if dist[w] > remaining - 1:
                continue
            if g.degree(w) == 1:
                continue
            visited |= 1 << w
            path.append(w)
            if dfs(w, remaining - 1):
                return True
            path.pop()
            visited ^= 1 << w
        return False

    if dfs(u, edges_needed):
        return PathWitness(tuple(path))
    return None


def creates_cycle(
    g: PartiteGraph,
    u: int,
    v: int,
    l: int,
    budget: int | None = DEFAULT_BUDGET,
) -> PathWitness | None:
    """Witness that adding nonedge uv would close a C_l, or None.

    The returned witness is the u..v path; together with the edge uv it
    is a cycle of l vertices in g+uv.
    """
    if g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is already an edge")
    if g.part_of(u) == g.part_of(v):
        raise ValueError(f"({u},{v}) lies inside one part")
    return exists_path_exact(g, u, v, l, budget)


def has_cycle_of_length(
    g: PartiteGraph,
    l: int,
    budget: int | None = DEFAULT_BUDGET,
) -> PathWitness | None:
    """A closed witness of exactly l vertices, or None; complete search.

    A C_l through edge uv is a u-v path of l vertices, so it suffices to
    scan edges and search for the completing path.
    """
    if l < 3:
        raise ValueError("cycles need at least 3 vertices")
    for u, v in g.edges():
        w = exists_path_exact(g, u, v, l, budget)
        if w is not None:
            return w
    return None


def cycle_length_spectrum(
    g: PartiteGraph,
    max_len: int,
    vertex_bound: int = SPECTRUM_VERTEX_BOUND,
) -> set[int]:
    """All cycle lengths 3..max_len present in g (small graphs only).

    Enumerates every cycle once, anchored at its minimum vertex, by DFS
    over paths that only use vertices larger than the anchor.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    if g.num_vertices > vertex_bound:
        raise ValueError(
            f"graph has {g.num_vertices} vertices, spectrum bound is {vertex_bound}"
        )
    found: set[int] = set()
    n = g.num_vertices

    def dfs(anchor: int, cur: int, visited: int, depth: int) -> None:
        m = g.adjacency_mask(cur)
        if depth >= 3 and m >> anchor & 1:
            found.add(depth)
        if depth == max_len:
            return
        # only vertices above the anchor keep each cycle counted once
        m >>= anchor + 1
        base = anchor + 1
        while m:
            b = m & -m
            w = base + b.bit_length() - 1
            m ^= b
            if not visited >> w & 1:
                dfs(anchor, w, visited | 1 << w, depth + 1)

    for a in range(n):
        dfs(a, a, 1 << a, 1)
    return found
