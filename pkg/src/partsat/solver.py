"""Exact saturation numbers by pruned exhaustive search.

sat(host, C_l) is the minimum edge count of a C_l-saturated subgraph of
the host.  `exact_sat` enumerates edge subsets by increasing size m, so
the first m admitting a saturated graph is the answer and the exhausted
enumeration below it is the minimality certificate.  `greedy_upper` is a
randomized maximal C_l-free completion (always saturated, so its size is
an upper bound).  `canonical_form` canonicalizes graphs under part
permutations (between equal-size parts) composed with vertex relabeling
inside parts, for deduplicating extremal sets.

The subset search prunes:
* anti-monotone freeness: an edge whose addition closes a C_l is never
  added, so every node of the tree is C_l-free;
* counting: not enough candidate edges left to reach m;
* dead vertices: once the last edge incident to a still-isolated vertex
  has been passed over, no completion can be connected;
* saturation is only tested on connected leaves.

Workers split the tree at the first two include-decisions into
independent subtrees; results are merged and sorted, so the outcome is
identical for any worker count.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product

from .graphs import PartSpec, PartiteGraph, admissible_nonedges, build_host
from .graphio import to_graph6
from .paths import exists_path_exact


class SearchBudgetExhausted(Exception):
    pass


@dataclass
class SearchOutcome:
    """Result of a saturation-number computation."""

    mode: str  # "exact" | "upper-bound" | "inconclusive"
    value: int | None
    extremal: list[PartiteGraph]
    nodes: int
    seconds: float
    lower: int

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "mode": self.mode,
            "extremal": [
                {"graph6": to_graph6(g), "part_sizes": list(g.spec.part_sizes)}
                for g in self.extremal
            ],
            "nodes": self.nodes,
            "seconds": self.seconds,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def lower_bound(spec: PartSpec, l: int) -> int:
    """A lower bound for sat(host, C_l): connectivity gives N-1; for
    three or more parts a saturated graph cannot be a tree once the host
    holds a C_l, giving N."""
    if l < 3:
        raise ValueError("need l >= 3")
    n = spec.num_vertices
    if spec.k >= 3 and l >= 4 and n >= l:
        return n
    return n - 1


def greedy_upper(spec: PartSpec, l: int, seed: int = 0) -> SearchOutcome:
    """Maximal C_l-free completion in a seeded random edge order.

    The result is saturated by construction, so its edge count bounds
    sat(host, C_l) from above."""
    start = time.perf_counter()
    host = build_host(spec)
    pairs = admissible_nonedges(PartiteGraph(spec))
    rng = random.Random(seed)
    rng.shuffle(pairs)
    g = PartiteGraph(spec)
    nodes = 0
    for u, v in pairs:
        nodes += 1
        if exists_path_exact(g, u, v, l, budget=None) is None:
            g = g.with_edges([(u, v)])
    return SearchOutcome(
        mode="upper-bound",
        value=g.edge_count,
        extremal=[g],
        nodes=nodes,
        seconds=time.perf_counter() - start,
        lower=lower_bound(spec, l),
    )


# ----------------------------------------------------------------------
# canonical forms
# ----------------------------------------------------------------------


def _vertex_signature(g: PartiteGraph, v: int) -> tuple:
    degs = sorted(g.degree(w) for w in g.neighbors(v))
    return (g.degree(v), tuple(degs))


def canonical_form(g: PartiteGraph) -> bytes:
    """Canonical adjacency encoding under part-preserving isomorphism
    (parts of equal size may swap; vertices may permute within parts)."""
    n = g.num_vertices
    if n > 16:
        raise ValueError("canonical form capped at 16 vertices")
    spec = g.spec
    sizes = spec.part_sizes
    sigs = [_vertex_signature(g, v) for v in range(n)]
    part_sig = [
        (sizes[i], tuple(sorted(sigs[v] for v in spec.part_vertices(i))))
        for i in range(spec.k)
    ]
    # vertices inside a part only permute within equal-signature blocks
    part_blocks: list[list[list[int]]] = []
    for i in range(spec.k):
        by_sig: dict[tuple, list[int]] = {}
        for v in sorted(spec.part_vertices(i), key=lambda v: sigs[v]):
            by_sig.setdefault(sigs[v], []).append(v)
        part_blocks.append([by_sig[s] for s in sorted(by_sig)])

    # slots keep their sizes; parts of one size are laid out in sorted
    # signature order, exploring all orders within equal-signature runs
    size_slots: dict[int, list[int]] = {}
    for i, s in enumerate(sizes):
        size_slots.setdefault(s, []).append(i)
    part_perms = []
    per_size_orders = []
    size_keys = sorted(size_slots)
    for s in size_keys:
        members = sorted(size_slots[s], key=lambda i: part_sig[i])
        runs: dict[tuple, list[int]] = {}
        for i in members:
            runs.setdefault(part_sig[i], []).append(i)
        orderings = [
            sum((list(c) for c in combo), [])
            for combo in product(
                *(list(permutations(runs[sig])) for sig in sorted(runs))
            )
        ]
        per_size_orders.append(orderings)
    for combo in product(*per_size_orders):
        perm = [0] * spec.k
        for s, order in zip(size_keys, combo):
            for slot, part in zip(size_slots[s], order):
                perm[slot] = part
        part_perms.append(tuple(perm))

    best: bytes | None = None
    for pperm in part_perms:
        per_part_orders = []
        for i in range(spec.k):
            blocks = part_blocks[pperm[i]]
            choices = [list(permutations(b)) for b in blocks]
            orders = [sum((list(c) for c in combo), []) for combo in product(*choices)]
            per_part_orders.append(orders)
        for combo in product(*per_part_orders):
            # inv: new id (listing order) -> old vertex
            inv = [v for i in range(spec.k) for v in combo[i]]
            bits = bytearray()
            acc = 0
            cnt = 0
            for a in range(n):
                for b in range(a + 1, n):
                    acc = acc << 1 | (1 if g.has_edge(inv[a], inv[b]) else 0)
                    cnt += 1
                    if cnt == 8:
                        bits.append(acc)
                        acc = cnt = 0
            if cnt:
                bits.append(acc << (8 - cnt))
            cand = bytes(bits)
            if best is None or cand < best:
                best = cand
    assert best is not None
    return bytes(sizes) + best


# ----------------------------------------------------------------------
# exact search
# ----------------------------------------------------------------------


def _path_exists(adj: list[int], u: int, v: int, edges_needed: int,
                 counter: list[int]) -> bool:
    """Path with exactly edges_needed edges from u to v over masks."""

    def dfs(cur: int, visited: int, remaining: int) -> bool:
        counter[0] += 1
        m = adj[cur]
        if remaining == 1:
            return bool(m >> v & 1)
        m &= ~visited
        while m:
            b = m & -m
            w = b.bit_length() - 1
            m ^= b
            if w == v:
                continue
            if dfs(w, visited | b, remaining - 1):
                return True
        return False

    return dfs(u, 1 << u, edges_needed)


def _connected(adj: list[int], n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def _enumerate(
    sizes: tuple[int, ...],
    l: int,
    m: int,
    prefix: tuple[int, ...],
    start: int,
    budget: int | None,
) -> tuple[list[tuple[tuple[int, int], ...]], int, bool]:
    """All saturated m-edge subsets extending `prefix` using edge indices
    >= start.  Returns (edge tuples, nodes, budget_ok)."""
    spec = PartSpec(sizes)
    n = spec.num_vertices
    edges = admissible_nonedges(PartiteGraph(spec))
    ne = len(edges)
    closing_at: list[list[int]] = [[] for _ in range(ne)]
    last = {}
    for i, (u, v) in enumerate(edges):
        last[u] = i
        last[v] = i
    for v, i in last.items():
        closing_at[i].append(v)

    adj = [0] * n
    deg = [0] * n
    counter = [0]
    found: list[tuple[tuple[int, int], ...]] = []
    chosen: list[int] = []
    all_pairs = edges
    budget_ok = [True]

    def add(i: int) -> None:
        u, v = edges[i]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
        chosen.append(i)

    def drop(i: int) -> None:
        u, v = edges[i]
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        deg[u] -= 1
        deg[v] -= 1
        chosen.pop()

    def saturated_leaf() -> bool:
        if not _connected(adj, n):
            return False
        cset = set(chosen)
        for i, (u, v) in enumerate(all_pairs):
            if i in cset:
                continue
            if not _path_exists(adj, u, v, l - 1, counter):
                return False
        return True

    def dfs(i: int, need: int) -> None:
        counter[0] += 1
        if budget is not None and counter[0] > budget:
            raise SearchBudgetExhausted()
        if need == 0:
            if all(d > 0 for d in deg) and saturated_leaf():
                found.append(tuple(edges[j] for j in chosen))
            return
        if ne - i < need:
            return
        u, v = edges[i]
        if not (adj[u] and _path_exists(adj, u, v, l - 1, counter)):
            add(i)
            dfs(i + 1, need - 1)
            drop(i)
        for w in closing_at[i]:
            if deg[w] == 0:
                return
        dfs(i + 1, need)

    feasible = True
    for idx, i in enumerate(prefix):
        lo = prefix[idx - 1] + 1 if idx else 0
        for j in range(lo, i):
            if any(deg[w] == 0 for w in closing_at[j]):
                feasible = False
        u, v = edges[i]
        if adj[u] and _path_exists(adj, u, v, l - 1, counter):
            feasible = False
        if not feasible:
            break
        add(i)
    if feasible:
        try:
            dfs(start, m - len(prefix))
        except SearchBudgetExhausted:
            budget_ok[0] = False
    return found, counter[0], budget_ok[0]


def exact_sat(
    spec: PartSpec,
    l: int,
    budget: int | None = None,
    workers: int = 1,
    iso_reject: bool | None = None,
) -> SearchOutcome:
    """sat(host, C_l) with all extremal graphs up to isomorphism.

    Enumerates m from the lower bound upward; the first m with a
    saturated subgraph is exact.  `budget` caps total node expansions
    (search tree plus pathfinder); exceeding it yields an inconclusive
    outcome.  `workers` > 1 splits the tree at the first two chosen
    edges; results are independent of the worker count.
    """
    if l < 3:
        raise ValueError("need l >= 3")
    start_t = time.perf_counter()
    host = build_host(spec)
    ne = host.edge_count
    if ne > 40:
        raise ValueError("host has too many candidate edges for exact search")
    lo = lower_bound(spec, l)
    total_nodes = 0
    sizes = spec.part_sizes
    edges = admissible_nonedges(PartiteGraph(spec))

    for m in range(lo, ne + 1):
        masks: list[tuple[tuple[int, int], ...]] = []
        ok = True
        if workers > 1 and m >= 2 and budget is None:
            prefixes = [
                (i, j) for i in range(ne) for j in range(i + 1, ne)
                if ne - j >= m - 1
            ]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for found, nodes, bok in pool.map(
                    _enum_task,
                    [(sizes, l, m, p, p[1] + 1, None) for p in prefixes],
                    chunksize=max(1, len(prefixes) // (workers * 8)),
                ):
                    masks += found
                    total_nodes += nodes
                    ok = ok and bok
        else:
            remaining = None if budget is None else budget - total_nodes
            found, nodes, ok = _enumerate(sizes, l, m, (), 0, remaining)
            masks += found
            total_nodes += nodes
        if not ok:
            return SearchOutcome(
                mode="inconclusive",
                value=None,
                extremal=[],
                nodes=total_nodes,
                seconds=time.perf_counter() - start_t,
                lower=m,
            )
        if masks:
            graphs = [PartiteGraph(spec, es) for es in sorted(masks)]
            if iso_reject is None:
                iso_reject = spec.num_vertices <= 16
            if iso_reject:
                seen: dict[bytes, PartiteGraph] = {}
                for g in graphs:
                    seen.setdefault(canonical_form(g), g)
                graphs = list(seen.values())
            return SearchOutcome(
                mode="exact",
                value=m,
                extremal=graphs,
                nodes=total_nodes,
                seconds=time.perf_counter() - start_t,
                lower=lo,
            )
    raise AssertionError("host itself must be saturated; unreachable")


def _enum_task(args):
    return _enumerate(*args)
