"""The long-target-cycle family: base cycle plus 5-vertex expansion units.

Shape.  A base cycle C of l-1 vertices is split into k arcs; arc i is a
marked vertex x_i followed by internal vertices v_i^1..v_i^{s_i}.  The
first 4*m_i internal positions after v_i^3 carry m_i "units": unit t sits
on the four consecutive base vertices p0..p3 = v_i^{4t}..v_i^{4t+3} and
adds five new vertices l1, l2, r1, r2, w with edges

    p0-l1, l1-l2, l2-p1,  p2-r1, r1-r2, r2-p3,  r1-w, w-r2, w-p3,

one extra edge from the base vertex before p0 to l2, and one edge from
w to the l1 of the next unit in the same arc (when it exists).  Pendant
vertices fill every part up to n; the pendants of part j all attach to
x_j.  Edge count: k(n-1) + 6*ceil(l/5).

Witnesses.  Every unit whose base edges lie on a path can be "inserted"
into it, lengthening the path by 2 (l1-l2 for the left base edge, r1-r2
for the right) or by 3 (r1-w-r2).  A path between two vertices therefore
consists of climbs from the endpoints down to base anchors, one base arc
between the anchors, and a set of insertions; enumerating anchor choices
and both directions yields paths of every achievable length.  Deviations
from a base arc always cost 0 or at least 2 extra edges, never exactly 1,
which is what keeps the graph free of C_l while allowing paths of l
vertices to every admissible nonedge.

Part coloring.  Units are 2-colored along each arc (p2, l1, r2 in the
arc's own part; p0, l2, r1 in the next part cyclically); v_i^2 joins part
i, v_i^{s_i-1} joins part i+1, and all remaining vertices greedily take
the lowest part not used by an already-colored neighbor, with x_i barred
from part i.  Feasibility needs k >= 4 and l >= 60k + 12.
"""

from __future__ import annotations

from itertools import combinations
from typing import Any, Iterator

from .constructions import ConstructionMeta
from .graphs import PartSpec, PartiteGraph, PathWitness, bfs_distances

_ROLES = ("l1", "l2", "r1", "r2", "w")


def _layout(l: int, k: int) -> tuple[list[int], list[int], int]:
    """Arc sizes s_i, unit counts m_i and the total unit count m."""
    if k < 4:
        raise ValueError("need k >= 4")
    if l < 60 * k + 12:
        raise ValueError(f"need l >= 60k + 12 = {60 * k + 12}")
    big_l = l - 1
    q, r = divmod(big_l - k, k)
    s = [q + 1 if i < r else q for i in range(k)]
    m = -(-l // 5)
    mq, mr = divmod(m, k)
    m_arc = [mq + 1 if i < mr else mq for i in range(k)]
    for i in range(k):
        if s[i] < 4 * m_arc[i] + 6:
            raise ValueError("arc too short for its units")
    return s, m_arc, m


def minimum_part_size(l: int, k: int) -> int:
    """Smallest n for which the construction fits (the largest part load
    of the colored core)."""
    _, _, _, color, _ = _colored_core(l, k)
    loads = [0] * k
    for part in color.values():
        loads[part] += 1
    return max(loads)


def _core_structure(l: int, k: int):
    """Abstract labels, positions and edges of the core (pre-coloring)."""
    s, m_arc, m = _layout(l, k)
    big_l = l - 1
    arc_start = []
    acc = 0
    for i in range(k):
        arc_start.append(acc)
        acc += 1 + s[i]
    x_pos = arc_start[:]
    units = []
    for i in range(k):
        for t in range(1, m_arc[i] + 1):
            p0 = arc_start[i] + 4 * t
            units.append({"arc": i, "t": t, "pos": (p0, p0 + 1, p0 + 2, p0 + 3)})
    edges = []
    for p in range(big_l):
        edges.append((("b", p), ("b", (p + 1) % big_l)))
    for uidx, u in enumerate(units):
        i, t = u["arc"], u["t"]
        p0, p1, p2, p3 = (("b", p) for p in u["pos"])
        l1, l2, r1, r2, w = (("t", i, t, r) for r in _ROLES)
        edges += [
            (p0, l1), (l1, l2), (l2, p1),
            (p2, r1), (r1, r2), (r2, p3),
            (r1, w), (w, r2), (w, p3),
            (("b", u["pos"][0] - 1), l2),
        ]
        if t < m_arc[i]:
            edges.append((w, ("t", i, t + 1, "l1")))
    return s, m_arc, m, x_pos, units, edges, big_l


def _colored_core(l: int, k: int):
    """Core structure plus a part for every abstract vertex."""
    s, m_arc, m, x_pos, units, edges, big_l = _core_structure(l, k)
    adj: dict[Any, set[Any]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    color: dict[Any, int] = {}
    for u in units:
        i, t = u["arc"], u["t"]
        nxt = (i + 1) % k
        color[("b", u["pos"][2])] = i
        color[("t", i, t, "l1")] = i
        color[("t", i, t, "r2")] = i
        color[("b", u["pos"][0])] = nxt
        color[("t", i, t, "l2")] = nxt
        color[("t", i, t, "r1")] = nxt
    for i in range(k):
        color[("b", x_pos[i] + 2)] = i
        color[("b", x_pos[i] + s[i] - 1)] = (i + 1) % k
        # continue the unit 2-coloring one step past the last unit, so
        # the base vertex after its p3 shares a part with its r1 (their
        # connecting paths all have the parity of the base arc)
        color[("b", x_pos[i] + 4 * m_arc[i] + 4)] = (i + 1) % k

    order = [("b", p) for p in range(big_l)]
    order += [("t", u["arc"], u["t"], "w") for u in units]
    forbidden = {("b", x_pos[i]): i for i in range(k)}
    for v in order:
        if v in color:
            continue
        taken = {color[w] for w in adj[v] if w in color}
        bar = forbidden.get(v)
        part = next(p for p in range(k) if p not in taken and p != bar)
        color[v] = part

    for a, b in edges:
        if color[a] == color[b]:
            raise AssertionError(f"coloring failure on edge {a} {b}")
    return (s, m_arc, m, x_pos, units, big_l), edges, adj, color, None


def build_construction3(
    l: int, k: int, n: int | None = None
) -> tuple[PartiteGraph, ConstructionMeta]:
    """Balanced k-partite graph saturated for C_l (l >= 60k + 12, k >= 4).

    With n omitted the smallest feasible part size is used.  Edge count:
    k(n-1) + 6*ceil(l/5).
    """
    (s, m_arc, m, x_pos, units, big_l), edges, _, color, _ = _colored_core(l, k)
    loads = [0] * k
    for part in color.values():
        loads[part] += 1
    n_min = max(loads)
    if n is None:
        n = n_min
    if n < n_min:
        raise ValueError(f"need n >= {n_min}")
    spec = PartSpec.balanced(k, n)
    offsets = spec.offsets

    def sort_key(v: Any) -> tuple:
        if v[0] == "b":
            return (0, v[1])
        return (1, v[1], v[2], _ROLES.index(v[3]))

    vid: dict[Any, int] = {}
    pendants: dict[int, list[int]] = {}
    for part in range(k):
        members = sorted((v for v, c in color.items() if c == part), key=sort_key)
        for j, v in enumerate(members):
            vid[v] = offsets[part] + j
        pendants[part] = list(range(offsets[part] + len(members), offsets[part] + n))

    id_edges = [(vid[a], vid[b]) for a, b in edges]
    x_ids = [vid[("b", p)] for p in x_pos]
    for part in range(k):
        id_edges += [(u, x_ids[part]) for u in pendants[part]]

    g = PartiteGraph(spec, id_edges)
    expected = construction3_edge_count(l, k, n)
    assert g.edge_count == expected, (g.edge_count, expected)

    unit_records = []
    for u in units:
        i, t = u["arc"], u["t"]
        unit_records.append(
            {
                "arc": i,
                "t": t,
                "positions": list(u["pos"]),
                "base": [vid[("b", p)] for p in u["pos"]],
                **{role: vid[("t", i, t, role)] for role in _ROLES},
            }
        )
    meta = ConstructionMeta(
        family="long-cycle",
        params={"l": l, "k": k, "n": n, "m": m},
        landmarks={
            "base": [vid[("b", p)] for p in range(big_l)],
            "x": x_ids,
            "x_pos": x_pos,
            "s": s,
            "m_arc": m_arc,
            "n_min": n_min,
            "units": unit_records,
            "pendants": pendants,
        },
        graph=g,
        target_length=l,
    )
    return g, meta


def construction3_edge_count(l: int, k: int, n: int) -> int:
    return k * (n - 1) + 6 * (-(-l // 5))


# ----------------------------------------------------------------------
# witness paths
# ----------------------------------------------------------------------


class _Index:
    """Lookup tables over a built long-cycle graph."""

    def __init__(self, meta: ConstructionMeta):
        lm = meta.landmarks
        self.meta = meta
        self.g: PartiteGraph = meta.graph  # type: ignore[assignment]
        self.l: int = meta.params["l"]
        self.big_l = self.l - 1
        self.base: list[int] = lm["base"]
        self.pos_of = {v: p for p, v in enumerate(self.base)}
        self.x_ids: list[int] = lm["x"]
        self.units: list[dict] = lm["units"]
        self.top_role: dict[int, tuple[int, str]] = {}
        self.unit_index: dict[tuple[int, int], int] = {}
        for idx, u in enumerate(self.units):
            self.unit_index[(u["arc"], u["t"])] = idx
            for role in _ROLES:
                self.top_role[u[role]] = (idx, role)
        # map the lower position of a base edge to the unit whose left
        # (p0-p1) or right (p2-p3) pair it is
        self.left_edge: dict[int, int] = {}
        self.right_edge: dict[int, int] = {}
        for idx, u in enumerate(self.units):
            self.left_edge[u["positions"][0]] = idx
            self.right_edge[u["positions"][2]] = idx
        self.pendant_attach: dict[int, int] = {}
        for part, vs in lm["pendants"].items():
            for v in vs:
                self.pendant_attach[v] = self.x_ids[int(part)]

    def prev_unit(self, idx: int) -> int | None:
        u = self.units[idx]
        return self.unit_index.get((u["arc"], u["t"] - 1))

    def next_unit(self, idx: int) -> int | None:
        u = self.units[idx]
        return self.unit_index.get((u["arc"], u["t"] + 1))

    def anchors(self, v: int) -> list[tuple[int, tuple[int, ...]]]:
        """(base position, climb-down path v..anchor) options for v."""
        if v in self.pos_of:
            return [(self.pos_of[v], (v,))]
        idx, role = self.top_role[v]
        u = self.units[idx]
        p = u["positions"]
        b = u["base"]
        ypos = p[0] - 1
        y = self.base[ypos]
        l1, l2, r1, r2, w = (u[r] for r in _ROLES)
        out: list[tuple[int, tuple[int, ...]]] = []
        if role == "l1":
            out += [(p[0], (v, b[0])), (p[1], (v, l2, b[1])), (ypos, (v, l2, y))]
            pv = self.prev_unit(idx)
            if pv is not None:
                pu = self.units[pv]
                out += [
                    (ypos, (v, pu["w"], y)),
                    (ypos, (v, pu["w"], pu["r2"], y)),
                ]
        elif role == "l2":
            out += [(p[1], (v, b[1])), (p[0], (v, l1, b[0])), (ypos, (v, y))]
        elif role == "r1":
            out += [(p[2], (v, b[2])), (p[3], (v, r2, b[3])), (p[3], (v, w, b[3]))]
            nx = self.next_unit(idx)
            if nx is not None:
                nu = self.units[nx]
                out.append((nu["positions"][0], (v, w, nu["l1"], nu["base"][0])))
        elif role == "r2":
            out += [(p[3], (v, b[3])), (p[2], (v, r1, b[2])), (p[3], (v, w, b[3]))]
        elif role == "w":
            out += [(p[3], (v, b[3])), (p[2], (v, r1, b[2])), (p[3], (v, r2, b[3]))]
            nx = self.next_unit(idx)
            if nx is not None:
                nu = self.units[nx]
                out += [
                    (nu["positions"][0], (v, nu["l1"], nu["base"][0])),
                    (nu["positions"][1], (v, nu["l1"], nu["l2"], nu["base"][1])),
                    (p[3], (v, nu["l1"], nu["l2"], b[3])),
                ]
        return out


_INDEX_CACHE: dict[int, _Index] = {}


def _index_for(meta: ConstructionMeta) -> _Index:
    idx = _INDEX_CACHE.get(id(meta))
    if idx is None or idx.meta is not meta:
        idx = _Index(meta)
        _INDEX_CACHE.clear()
        _INDEX_CACHE[id(meta)] = idx
    return idx


def _skeletons(idx: _Index, a: int, b: int) -> Iterator[tuple]:
    """(lift_a, lift_b, direction, arc length) combinations; lifts are
    vertex-disjoint except for a possibly shared anchor."""
    for pa, lift_a in idx.anchors(a):
        for pb, lift_b in idx.anchors(b):
            shared = set(lift_a) & set(lift_b)
            if lift_a[-1] == lift_b[-1]:
                if shared == {lift_a[-1]}:
                    yield (lift_a, lift_b, 0, 0)
                continue
            if shared:
                continue
            for dirn in (1, -1):
                d_arc = ((pb - pa) * dirn) % idx.big_l
                yield (lift_a, lift_b, dirn, d_arc)


def _arc_slots(
    idx: _Index, pa: int, dirn: int, d_arc: int, used: set[int]
) -> list[tuple[int, str]]:
    """Insertion slots (position of the slot's lower base edge end, kind)
    available along the walked arc; kinds: L (gain 2), R2 (gain 2),
    R3 (gain 2 or 3)."""

    def in_arc(p: int) -> bool:
        return ((p - pa) * dirn) % idx.big_l <= d_arc

    slots = []
    for low, uidx in idx.left_edge.items():
        if in_arc(low) and in_arc(low + 1):
            u = idx.units[uidx]
            if u["l1"] not in used and u["l2"] not in used:
                slots.append((low, "L"))
    for low, uidx in idx.right_edge.items():
        if in_arc(low) and in_arc(low + 1):
            u = idx.units[uidx]
            if u["r1"] not in used and u["r2"] not in used:
                slots.append((low, "R3" if u["w"] not in used else "R2"))
    return slots


def _assemble(
    idx: _Index,
    lift_a: tuple[int, ...],
    lift_b: tuple[int, ...],
    dirn: int,
    d_arc: int,
    chosen: dict[int, tuple[str, int]],
) -> list[int]:
    """Concatenate climb, arc walk with insertions, reverse climb."""
    path = list(lift_a)
    pa = idx.pos_of[lift_a[-1]]
    pos = pa
    for _ in range(d_arc):
        nxt = (pos + dirn) % idx.big_l
        low = pos if dirn == 1 else nxt
        ins = chosen.get(low)
        if ins is not None:
            kind, gain = ins
            u = idx.units[idx.left_edge[low] if kind == "L" else idx.right_edge[low]]
            if kind == "L":
                seq = [u["l1"], u["l2"]]
                if idx.pos_of[path[-1]] != u["positions"][0]:
                    seq.reverse()
            else:
                seq = [u["r1"], u["w"], u["r2"]] if gain == 3 else [u["r1"], u["r2"]]
                if idx.pos_of[path[-1]] != u["positions"][2]:
                    seq.reverse()
            path += seq
        path.append(idx.base[nxt])
        pos = nxt
    path += list(reversed(lift_b))[1:]
    return path


def _core_path(idx: _Index, a: int, b: int, q_edges: int) -> list[int] | None:
    """A simple a-b path with exactly q_edges edges inside the core, or
    None when no anchored skeleton achieves it."""
    if q_edges >= 1 and idx.g.has_edge(a, b) and q_edges == 1:
        return [a, b]
    for lift_a, lift_b, dirn, d_arc in _skeletons(idx, a, b):
        if dirn == 0:
            if q_edges == len(lift_a) + len(lift_b) - 2:
                return list(lift_a) + list(reversed(lift_b))[1:]
            continue
        base_len = (len(lift_a) - 1) + d_arc + (len(lift_b) - 1)
        extra = q_edges - base_len
        if extra < 0 or extra == 1:
            continue
        if extra == 0:
            return _assemble(idx, lift_a, lift_b, dirn, d_arc, {})
        used = set(lift_a) | set(lift_b)
        slots = _arc_slots(idx, idx.pos_of[lift_a[-1]], dirn, d_arc, used)
        t3 = sum(1 for _, kind in slots if kind == "R3")
        total = len(slots)
        n3 = extra % 2
        picked = None
        while n3 <= t3 and 3 * n3 <= extra:
            n2 = (extra - 3 * n3) // 2
            if n3 + n2 <= total:
                picked = (n3, n2)
                break
            n3 += 2
        if picked is None:
            continue
        n3, n2 = picked
        chosen: dict[int, tuple[str, int]] = {}
        r3_slots = [s for s in slots if s[1] == "R3"]
        rest = [s for s in slots if s[1] != "R3"]
        for low, kind in r3_slots[:n3]:
            chosen[low] = ("R", 3)
        pool = rest + r3_slots[n3:]
        for low, kind in pool[:n2]:
            chosen[low] = ("L" if kind == "L" else "R", 2)
        return _assemble(idx, lift_a, lift_b, dirn, d_arc, chosen)
    return None


def path_length_bounds(meta: ConstructionMeta, u: int, v: int) -> tuple[int, int]:
    """(min, max) vertex counts of guaranteed witness paths between u and
    v.  The minimum is the true graph distance; the maximum is the best
    anchored skeleton plus all of its insertions."""
    idx = _index_for(meta)
    g = idx.g
    if u == v:
        raise ValueError("endpoints must differ")
    hops_u = []
    a = u
    while a in idx.pendant_attach:
        hops_u.append(a)
        a = idx.pendant_attach[a]
    hops_v = []
    b = v
    while b in idx.pendant_attach:
        hops_v.append(b)
        b = idx.pendant_attach[b]
    pend = len(hops_u) + len(hops_v)
    dist = bfs_distances(g, u)[v]
    if dist == float("inf"):
        raise ValueError("disconnected pair")
    best_max = 0
    if a == b:
        return int(dist) + 1, int(dist) + 1
    for lift_a, lift_b, dirn, d_arc in _skeletons(idx, a, b):
        if dirn == 0:
            best_max = max(best_max, len(lift_a) + len(lift_b) - 2)
            continue
        base_len = (len(lift_a) - 1) + d_arc + (len(lift_b) - 1)
        used = set(lift_a) | set(lift_b)
        slots = _arc_slots(idx, idx.pos_of[lift_a[-1]], dirn, d_arc, used)
        cap = sum(3 if kind == "R3" else 2 for _, kind in slots)
        best_max = max(best_max, base_len + cap)
    return int(dist) + 1, best_max + pend + 1


def witness_path_c3(
    meta: ConstructionMeta, u: int, v: int, length: int
) -> PathWitness | None:
    """A path of exactly `length` vertices between u and v built from the
    construction's landmarks (anchored arc plus unit insertions), or None
    when no such anchored path exists.

    `length` counts vertices.  Pendant endpoints climb through their
    attachment x vertex first.
    """
    idx = _index_for(meta)
    g = idx.g
    n = g.num_vertices
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError("vertex id out of range")
    if u == v:
        raise ValueError("endpoints must differ")
    if length < 2:
        raise ValueError("length must be at least 2")
    q_edges = length - 1

    hops_u: list[int] = []
    a = u
    while a in idx.pendant_attach:
        hops_u.append(a)
        a = idx.pendant_attach[a]
    hops_v: list[int] = []
    b = v
    while b in idx.pendant_attach:
        hops_v.append(b)
        b = idx.pendant_attach[b]
    if a == b:
        # the only route between two pendant stubs of one x vertex runs
        # straight through it
        core = [a]
    else:
        inner = q_edges - len(hops_u) - len(hops_v)
        if inner < 1:
            return None
        core = _core_path(idx, a, b, inner)
        if core is None and inner <= 12:
            from .paths import exists_path_exact

            w = exists_path_exact(g, a, b, inner + 1, budget=10**6)
            core = list(w.vertices) if w is not None else None
        if core is None:
            return None
    path = hops_u + core + list(reversed(hops_v))
    if len(path) != length:
        return None
    witness = PathWitness(tuple(path))
    assert witness.validate(g), path
    return witness


# ----------------------------------------------------------------------
# structural C_l-freeness
# ----------------------------------------------------------------------


def _window_adj(idx: _Index, vertices: set[int]) -> dict[int, set[int]]:
    g = idx.g
    return {
        v: {w for w in g.neighbors(v) if w in vertices} for v in vertices
    }


def _all_paths(
    adj: dict[int, set[int]], a: int, b: int, cap: int = 20000
) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    stack = [a]
    seen = {a}

    def dfs(cur: int) -> None:
        if len(out) >= cap:
            raise RuntimeError("path enumeration cap exceeded")
        if cur == b:
            out.append(tuple(stack))
            return
        for w in adj[cur]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
                dfs(w)
                stack.pop()
                seen.remove(w)

    dfs(a)
    return out


def _local_cycles(adj: dict[int, set[int]]) -> set[int]:
    lengths: set[int] = set()
    order = sorted(adj)
    rank = {v: i for i, v in enumerate(order)}

    def dfs(anchor: int, cur: int, seen: set[int], depth: int) -> None:
        for w in adj[cur]:
            if w == anchor and depth >= 3:
                lengths.add(depth)
            if rank.get(w, -1) > rank[anchor] and w not in seen:
                seen.add(w)
                dfs(anchor, w, seen, depth + 1)
                seen.remove(w)

    for v in order:
        dfs(v, v, {v}, 1)
    return lengths


def check_cfree_structural(meta: ConstructionMeta) -> list[str]:
    """Mechanical C_l-freeness certificate; returns a list of violated
    invariants (empty means free).

    Argument.  Pendants have degree 1, so cycles live in the core.  Each
    marked vertex x_i and each post-unit gap vertex has core degree 2
    (checked), and every non-base edge spans at most two consecutive
    units (checked), so a cycle either avoids some degree-2 base stretch,
    in which case it is confined to a one- or two-unit window and has one
    of the checked local lengths, all far below l; or it winds around the
    whole base cycle.  A winding cycle crosses each inter-unit interface
    exactly once (no window admits two vertex-disjoint left-right
    crossings; checked), so it decomposes into window-local segments
    between base vertices, and every such segment exceeds its base-arc
    length by 0 or by at least 2 (checked).  The winding length is then
    l - 1 plus a sum of per-window surpluses that cannot equal 1, so it
    is never l.
    """
    idx = _index_for(meta)
    g = idx.g
    l = idx.l
    findings: list[str] = []
    core = set(idx.base) | set(idx.top_role)

    for p_vertex in idx.pendant_attach:
        if g.degree(p_vertex) != 1:
            findings.append(f"pendant {p_vertex} has degree {g.degree(p_vertex)}")
    core_deg = {
        v: sum(1 for w in g.neighbors(v) if w in core) for v in core
    }
    unit_positions = {
        p for u in idx.units for p in u["positions"]
    }
    near_unit = unit_positions | {(p - 1) % idx.big_l for p in unit_positions}
    for p in range(idx.big_l):
        if p not in near_unit and core_deg[idx.base[p]] != 2:
            findings.append(f"gap base position {p} has core degree "
                            f"{core_deg[idx.base[p]]}")

    span_limit = 9
    for a, b in g.edges():
        if a not in core or b not in core:
            continue
        pos = []
        for v in (a, b):
            if v in idx.pos_of:
                pos.append(idx.pos_of[v])
            else:
                uidx, _ = idx.top_role[v]
                pos.extend(idx.units[uidx]["positions"])
        spread = max(pos) - min(pos)
        spread = min(spread, idx.big_l - spread)
        if spread > span_limit:
            findings.append(f"edge ({a},{b}) spans {spread} base positions")

    for uidx, u in enumerate(idx.units):
        p = u["positions"]
        window = {idx.base[(p[0] - 1) % idx.big_l]}
        window |= {idx.base[q] for q in p}
        window |= {u[r] for r in _ROLES}
        adj = _window_adj(idx, window)
        y = idx.base[(p[0] - 1) % idx.big_l]
        p3 = idx.base[p[3]]
        entries = [y]
        pv = idx.prev_unit(uidx)
        if pv is not None:
            # the cyan edge from the previous unit enters at l1
            entries.append(u["l1"])
        exits = [p3]
        if idx.next_unit(uidx) is not None:
            exits.append(u["w"])
        crossing = []
        for e_in in entries:
            for e_out in exits:
                if e_in == e_out:
                    continue
                crossing += _all_paths(adj, e_in, e_out)
        for pa, pb in combinations(crossing, 2):
            if not set(pa) & set(pb):
                findings.append(
                    f"unit {uidx}: two disjoint crossings {pa} {pb}"
                )
                break

        surpluses = {len(path) - 1 - 4 for path in _all_paths(adj, y, p3)}
        bad = {x for x in surpluses if x == 1 or x < 0}
        if bad:
            findings.append(f"unit {uidx}: segment surpluses {sorted(bad)}")

        cyc = _local_cycles(adj)
        if any(c >= l or c > 12 for c in cyc):
            findings.append(f"unit {uidx}: local cycle lengths {sorted(cyc)}")

        nx = idx.next_unit(uidx)
        if nx is not None:
            nu = idx.units[nx]
            np_ = nu["positions"]
            dwindow = set(window)
            dwindow |= {idx.base[q] for q in np_}
            dwindow |= {nu[r] for r in _ROLES}
            dadj = _window_adj(idx, dwindow)
            np3 = idx.base[np_[3]]
            dsurp = {len(path) - 1 - 8 for path in _all_paths(dadj, y, np3)}
            dbad = {x for x in dsurp if x == 1 or x < 0}
            if dbad:
                findings.append(f"units {uidx},{nx}: surpluses {sorted(dbad)}")
            dcyc = _local_cycles(dadj)
            if any(c >= l or c > 12 for c in dcyc):
                findings.append(
                    f"units {uidx},{nx}: local cycle lengths {sorted(dcyc)}"
                )
    return findings
