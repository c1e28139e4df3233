"""Generators for every saturated family, with labeled landmark vertices.

Each builder returns ``(PartiteGraph, ConstructionMeta)``.  Landmarks use
stable vertex ids (contiguous part blocks) so tests and the CLI can
address "the pendant block of part 2" or "unit 3 of arc 1" directly.

Families:

* ``bipartite-g``  — bipartite graph saturated for C_{2l}; two anchor
  blocks B_1, B_2 joined completely except one marked vertex y_1.
* ``gamma``        — the complete multipartite core on l-1 vertices.
* ``w``            — gamma core plus pendant blocks, one per part,
  attached to a good pair of core vertices.
* ``w-star-53``    — the special tripartite core-plus-pendants family
  for target C_5 on 3 parts (the (5,3) case the gamma family excludes).
* ``zeta`` / ``z`` — independent set A fed by an adjacent pair b_4 b_5
  that dominates everything; z adds pendant blocks on A.
* ``y``            — the C_4 family: triangle x_1 x_2 x_3 with matched
  pendant pair-blocks, grown two parts at a time.
* ``long-cycle``   — base cycle of l-1 vertices with 5-vertex expansion
  units, for very long target cycles; supports explicit path witnesses
  of any guaranteed length via unit insertions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator

from .graphs import PartSpec, PartiteGraph


@dataclass(frozen=True)
class GoodPair:
    """k marked vertices, not all in one part, with a derangement-style
    assignment f sending each to a part other than its own."""

    vertices: tuple[int, ...]
    parts: tuple[int, ...]
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.vertices)
        if sorted(self.assignment) != list(range(k)):
            raise ValueError("assignment is not a bijection onto the parts")
        if any(f == p for f, p in zip(self.assignment, self.parts)):
            raise ValueError("assignment maps a vertex to its own part")
        if len(set(self.parts)) < 2:
            raise ValueError("good pair vertices all lie in one part")

    def target_of_part(self, part: int) -> int:
        """The marked vertex whose pendant block lives in `part`."""
        return self.vertices[self.assignment.index(part)]


def good_pair_assignment(parts: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """A bijection f: positions -> parts with f(x_i) != part(x_i).

    Rotate the distinct parts among one representative each; everyone
    else takes a leftover part index (necessarily not its own).
    Raises ValueError when all inputs share one part.
    """
    k = len(parts)
    distinct = sorted(set(parts))
    if any(not 0 <= p < k for p in parts):
        raise ValueError("part indices out of range")
    if len(distinct) < 2:
        raise ValueError("good pair requires vertices in at least two parts")
    rep_of = {}
    for idx, p in enumerate(parts):
        if p not in rep_of:
            rep_of[p] = idx
    out: list[int | None] = [None] * k
    for j, p in enumerate(distinct):
        prev = distinct[j - 1]
        out[rep_of[p]] = prev
    leftovers = sorted(set(range(k)) - set(distinct))
    it = iter(leftovers)
    for idx in range(k):
        if out[idx] is None:
            out[idx] = next(it)
    return tuple(out)  # type: ignore[arg-type]


@dataclass
class ConstructionMeta:
    """Family tag, parameters and landmark vertex sets of a built graph."""

    family: str
    params: dict[str, int]
    landmarks: dict[str, Any]
    graph: PartiteGraph | None = None
    target_length: int | None = None

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": self.params,
            "target_length": self.target_length,
            "landmarks": self.landmarks,
        }


# ----------------------------------------------------------------------
# bipartite family for even target cycles
# ----------------------------------------------------------------------


def build_bipartite_G(n1: int, n2: int, l: int) -> tuple[PartiteGraph, ConstructionMeta]:
    """Bipartite graph on n1+n2 vertices saturated for C_{2l}.

    B_i are the last l vertices of each side; edges are the complete join
    between B_1 and B_2 minus the marked vertex y_1, plus stars from the
    remainder blocks A_1 -> y_1 and A_2 -> x_1, plus the single edge
    y_1 x_2.  Edge count: n1 + n2 + l^2 - 3l + 1.
    """
    if l < 3:
        raise ValueError("need l >= 3")
    if n1 < l + 2 or n2 < l + 2:
        raise ValueError(f"need n1, n2 >= l+2 = {l + 2}")
    spec = PartSpec((n1, n2))
    a1 = list(range(0, n1 - l))
    b1 = list(range(n1 - l, n1))
    a2 = list(range(n1, n1 + n2 - l))
    b2 = list(range(n1 + n2 - l, n1 + n2))
    x1, x2 = b1[0], b1[1]
    y1 = b2[0]
    edges = [(u, y1) for u in a1]
    edges += [(v, x1) for v in a2]
    edges.append((y1, x2))
    edges += [(u, v) for u in b1 for v in b2 if v != y1]
    g = PartiteGraph(spec, edges)
    expected = n1 + n2 + l * l - 3 * l + 1
    assert g.edge_count == expected, (g.edge_count, expected)
    meta = ConstructionMeta(
        family="bipartite-g",
        params={"n1": n1, "n2": n2, "l": l},
        landmarks={
            "A1": a1,
            "B1": b1,
            "A2": a2,
            "B2": b2,
            "x1": x1,
            "x2": x2,
            "y1": y1,
        },
        graph=g,
        target_length=2 * l,
    )
    return g, meta


# ----------------------------------------------------------------------
# gamma core and the W family
# ----------------------------------------------------------------------


def _gamma_block_sizes(l: int, k: int) -> tuple[int, ...]:
    if not l > k >= 3:
        raise ValueError("need l > k >= 3")
    if (l, k) == (5, 3):
        raise ValueError("(5,3) excluded; use the w-star-53 family")
    if l == 4:
        return (1, 1, 1)
    if l == 5:
        return (1, 1, 1, 1)
    half = (l - 2) // 2
    return (half, half, l - 1 - 2 * half)


def build_gamma(l: int, k: int) -> PartiteGraph:
    """The complete multipartite core on l-1 vertices (K_3, K_4, or
    K_{h,h,l-1-2h} with h = (l-2)//2)."""
    sizes = _gamma_block_sizes(l, k)
    return _complete_multipartite(sizes)


def _complete_multipartite(sizes: tuple[int, ...]) -> PartiteGraph:
    spec = PartSpec(sizes)
    edges = []
    for i in range(spec.k):
        for j in range(i + 1, spec.k):
            for u in spec.part_vertices(i):
                for v in spec.part_vertices(j):
                    edges.append((u, v))
    return PartiteGraph(spec, edges)


def gamma_edge_count(l: int, k: int) -> int:
    sizes = _gamma_block_sizes(l, k)
    total = sum(sizes)
    return (total * total - sum(s * s for s in sizes)) // 2


def build_W(
    l: int,
    k: int,
    n: int,
    pendant_assignment: tuple[int, ...] | None = None,
    core_choice: tuple[int, ...] | None = None,
) -> tuple[PartiteGraph, ConstructionMeta]:
    """Core gamma(l,k) embedded in parts 0..2 (0..3 for the K_4 core)
    plus one pendant block per part, attached to a good pair of core
    vertices.  Edge count: (kn - l + 1) + e(gamma).

    `core_choice` overrides the default round-robin pick of the k good
    pair vertices (as indices into the core vertex list); a custom
    `pendant_assignment` overrides the derived part assignment f.
    """
    sizes = _gamma_block_sizes(l, k)
    if n < max(sizes):
        raise ValueError(f"need n >= {max(sizes)} to embed the core blocks")
    spec = PartSpec.balanced(k, n)
    offsets = spec.offsets

    # core vertices: block j of gamma occupies the first vertices of part j
    core: list[int] = []
    core_parts: list[int] = []
    blocks: list[list[int]] = []
    for j, size in enumerate(sizes):
        block = [offsets[j] + t for t in range(size)]
        blocks.append(block)
        core.extend(block)
        core_parts.extend([j] * size)
    edges = []
    for bi in range(len(blocks)):
        for bj in range(bi + 1, len(blocks)):
            for u in blocks[bi]:
                for v in blocks[bj]:
                    edges.append((u, v))

    if core_choice is None:
        order: list[int] = []
        for t in range(max(sizes)):
            for block in blocks:
                if t < len(block):
                    order.append(block[t])
        chosen = order[:k]
    else:
        if len(core_choice) != k or len(set(core_choice)) != k:
            raise ValueError("core_choice must pick k distinct core vertices")
        chosen = [core[i] for i in core_choice]
    chosen_parts = [spec.part_of(x) for x in chosen]
    if pendant_assignment is None:
        assignment = good_pair_assignment(chosen_parts)
    else:
        assignment = tuple(pendant_assignment)
    pair = GoodPair(tuple(chosen), tuple(chosen_parts), assignment)

    pendant_blocks: dict[int, list[int]] = {}
    for part in range(k):
        used = sizes[part] if part < len(sizes) else 0
        block = [offsets[part] + t for t in range(used, n)]
        pendant_blocks[part] = block
        target = pair.target_of_part(part)
        edges += [(v, target) for v in block]

    g = PartiteGraph(spec, edges)
    expected = (k * n - l + 1) + gamma_edge_count(l, k)
    assert g.edge_count == expected, (g.edge_count, expected)
    meta = ConstructionMeta(
        family="w",
        params={"l": l, "k": k, "n": n},
        landmarks={
            "A": core,
            "core_blocks": blocks,
            "good_pair": list(pair.vertices),
            "assignment": list(pair.assignment),
            "pendants": pendant_blocks,
        },
        graph=g,
        target_length=l,
    )
    return g, meta


def enumerate_W_variants(l: int, k: int, n: int) -> Iterator[tuple[PartiteGraph, ConstructionMeta]]:
    """All good-pair choices and assignments (may repeat up to isomorphism).

    Intended for small instances only (the caller deduplicates with
    solver.canonical_form).
    """
    from itertools import combinations, permutations

    sizes = _gamma_block_sizes(l, k)
    total = sum(sizes)
    for combo in combinations(range(total), k):
        parts = []
        acc = 0
        bounds = []
        for s in sizes:
            bounds.append((acc, acc + s))
            acc += s
        for idx in combo:
            for j, (lo, hi) in enumerate(bounds):
                if lo <= idx < hi:
                    parts.append(j)
        if len(set(parts)) < 2:
            continue
        for perm in permutations(range(k)):
            if any(f == p for f, p in zip(perm, parts)):
                continue
            yield build_W(l, k, n, pendant_assignment=perm, core_choice=combo)


def build_W_star_5_3(n: int) -> tuple[PartiteGraph, ConstructionMeta]:
    """The tripartite C_5 family: 5-vertex core {u*, w, u1, u2, u3} with
    6 edges, pendant blocks B_i -> u_i.  Edge count: 3n + 1."""
    if n < 2:
        raise ValueError("need n >= 2")
    spec = PartSpec.balanced(3, n)
    o = spec.offsets
    u_star, w = o[0], o[0] + 1
    u1, u3 = o[1], o[1] + 1
    u2 = o[2]
    b1 = list(range(o[0] + 2, o[0] + n))
    b2 = list(range(o[1] + 2, o[1] + n))
    b3 = list(range(o[2] + 1, o[2] + n))
    edges = [(u1, u_star), (u3, u_star), (u3, w), (u_star, u2), (u3, u2), (w, u2)]
    edges += [(v, u1) for v in b1]
    edges += [(v, u2) for v in b2]
    edges += [(v, u3) for v in b3]
    g = PartiteGraph(spec, edges)
    assert g.edge_count == 3 * n + 1
    meta = ConstructionMeta(
        family="w-star-53",
        params={"l": 5, "k": 3, "n": n},
        landmarks={
            "u_star": u_star,
            "w": w,
            "u1": u1,
            "u2": u2,
            "u3": u3,
            "B1": b1,
            "B2": b2,
            "B3": b3,
        },
        graph=g,
        target_length=5,
    )
    return g, meta


# ----------------------------------------------------------------------
# zeta core and the Z family
# ----------------------------------------------------------------------


def build_zeta(l: int, k: int) -> tuple[PartiteGraph, ConstructionMeta]:
    """The core on k + l - 2 vertices: independent A (k vertices in two
    parts), adjacent pair {b4, b5} joined to everything outside itself,
    and a complete multipartite block C on l - 4 vertices.

    Edge count: 1 + 2(k + l - 4) + e(C)."""
    if not k >= l >= 5:
        raise ValueError("need k >= l >= 5")
    a_half = (l - 4) // 2
    c3_size = l - 4 - 2 * a_half
    a1_size = (k + 1) // 2
    a2_size = k // 2
    # parts in slot order V1..V5; empty slots are dropped from the spec
    slot_content = [
        a1_size + a_half,
        a2_size + a_half,
        c3_size,
        1,
        1,
    ]
    sizes = tuple(s for s in slot_content if s > 0)
    spec = PartSpec(sizes)
    offsets = spec.offsets
    part_index = 0
    slot_to_part = {}
    for slot, s in enumerate(slot_content):
        if s > 0:
            slot_to_part[slot] = part_index
            part_index += 1
    a_vertices = []
    c_blocks: list[list[int]] = []
    o1 = offsets[slot_to_part[0]]
    a_vertices += list(range(o1, o1 + a1_size))
    c1 = list(range(o1 + a1_size, o1 + a1_size + a_half))
    o2 = offsets[slot_to_part[1]]
    a_vertices += list(range(o2, o2 + a2_size))
    c2 = list(range(o2 + a2_size, o2 + a2_size + a_half))
    c_blocks = [c1, c2]
    if c3_size:
        o3 = offsets[slot_to_part[2]]
        c_blocks.append(list(range(o3, o3 + c3_size)))
    b4 = offsets[slot_to_part[3]]
    b5 = offsets[slot_to_part[4]]
    c_vertices = [v for block in c_blocks for v in block]

    edges = [(b4, b5)]
    for b in (b4, b5):
        edges += [(b, v) for v in a_vertices + c_vertices]
    for i in range(len(c_blocks)):
        for j in range(i + 1, len(c_blocks)):
            edges += [(u, v) for u in c_blocks[i] for v in c_blocks[j]]
    g = PartiteGraph(spec, edges)
    expected = zeta_edge_count(l, k)
    assert g.edge_count == expected, (g.edge_count, expected)
    meta = ConstructionMeta(
        family="zeta",
        params={"l": l, "k": k},
        landmarks={
            "A": a_vertices,
            "B": [b4, b5],
            "b4": b4,
            "b5": b5,
            "C": c_vertices,
            "C_blocks": c_blocks,
        },
        graph=g,
        target_length=l,
    )
    return g, meta


def zeta_edge_count(l: int, k: int) -> int:
    a_half = (l - 4) // 2
    c3 = l - 4 - 2 * a_half
    e_c = a_half * a_half + 2 * c3 * a_half
    return 1 + 2 * (k + l - 4) + e_c


def build_Z(l: int, k: int, n: int) -> tuple[PartiteGraph, ConstructionMeta]:
    """zeta core embedded in a balanced k-partite host plus one pendant
    block per part attached to the good pair A.

    Edge count: kn + k + l - 5 + e(C)."""
    if not k >= l >= 5:
        raise ValueError("need k >= l >= 5")
    need = (k + l - 2 + 1) // 2
    if n < need:
        raise ValueError(f"need n >= {need}")
    spec = PartSpec.balanced(k, n)
    offsets = spec.offsets
    a_half = (l - 4) // 2
    c3_size = l - 4 - 2 * a_half
    a1_size = (k + 1) // 2
    a2_size = k // 2

    o0, o1, o2, o3, o4 = offsets[0], offsets[1], offsets[2], offsets[3], offsets[4]
    a_vertices = list(range(o0, o0 + a1_size)) + list(range(o1, o1 + a2_size))
    a_parts = [0] * a1_size + [1] * a2_size
    c1 = list(range(o0 + a1_size, o0 + a1_size + a_half))
    c2 = list(range(o1 + a2_size, o1 + a2_size + a_half))
    c_blocks = [c1, c2]
    if c3_size:
        c_blocks.append(list(range(o2, o2 + c3_size)))
    b4, b5 = o3, o4
    c_vertices = [v for block in c_blocks for v in block]

    edges = [(b4, b5)]
    for b in (b4, b5):
        edges += [(b, v) for v in a_vertices + c_vertices]
    for i in range(len(c_blocks)):
        for j in range(i + 1, len(c_blocks)):
            edges += [(u, v) for u in c_blocks[i] for v in c_blocks[j]]

    assignment = good_pair_assignment(a_parts)
    pair = GoodPair(tuple(a_vertices), tuple(a_parts), assignment)
    core = set(a_vertices) | set(c_vertices) | {b4, b5}
    pendant_blocks: dict[int, list[int]] = {}
    for part in range(k):
        block = [v for v in spec.part_vertices(part) if v not in core]
        pendant_blocks[part] = block
        target = pair.target_of_part(part)
        edges += [(v, target) for v in block]

    g = PartiteGraph(spec, edges)
    expected = z_edge_count(l, k, n)
    assert g.edge_count == expected, (g.edge_count, expected)
    meta = ConstructionMeta(
        family="z",
        params={"l": l, "k": k, "n": n},
        landmarks={
            "A": a_vertices,
            "B": [b4, b5],
            "b4": b4,
            "b5": b5,
            "C": c_vertices,
            "C_blocks": c_blocks,
            "good_pair": list(pair.vertices),
            "assignment": list(pair.assignment),
            "pendants": pendant_blocks,
        },
        graph=g,
        target_length=l,
    )
    return g, meta


def z_edge_count(l: int, k: int, n: int) -> int:
    a_half = (l - 4) // 2
    c3 = l - 4 - 2 * a_half
    e_c = a_half * a_half + 2 * c3 * a_half
    return k * n + k + l - 5 + e_c


# ----------------------------------------------------------------------
# the Y family for target C_4
# ----------------------------------------------------------------------


def build_Y(k: int, n: int) -> tuple[PartiteGraph, ConstructionMeta]:
    """The C_4 family on k >= 4 balanced parts.

    Base: triangle x_1 x_2 x_3; B_1 -> x_2; parts 4.. attached as stars
    or matched pair-blocks through x_1.  Growth from k-2 to k adds a
    perfect matching between the two new parts, all joined to x_1.
    Edge count: 5n - 1 at k = 4, (3(k-1)n - 2) // 2 for k >= 5.
    """
    if k < 4:
        raise ValueError("need k >= 4")
    if n < 1:
        raise ValueError("need n >= 1")
    spec = PartSpec.balanced(k, n)
    o = spec.offsets
    x1, x2, x3 = o[0], o[1], o[2]
    b = [list(spec.part_vertices(i))[1:] for i in range(3)]
    part4 = list(spec.part_vertices(3))
    matchings: list[list[tuple[int, int]]] = []

    if k >= 7:
        # grow two matched parts at a time; part ids of the shared prefix
        # coincide because part blocks are contiguous and balanced
        inner_g, inner_meta = build_Y(k - 2, n)
        edges = inner_g.edges()
        matchings = [
            [tuple(p) for p in m] for m in inner_meta.landmarks["matchings"]
        ]
        left = list(spec.part_vertices(k - 2))
        right = list(spec.part_vertices(k - 1))
        match = list(zip(left, right))
        matchings.append(match)
        edges += match
        edges += [(u, x1) for u in left + right]
    elif k == 6 and n % 2 == 1:
        edges = [(x1, x2), (x2, x3), (x1, x3)]
        half = (n - 1) // 2
        split = {i: (b[i][:half], b[i][half:]) for i in range(3)}
        xs = [x1, x2, x3]
        # for each label m, match the m-halves of the other two blocks
        # and join every matched vertex to x_m; the half of block i with
        # the smaller label among {0,1,2} minus {i} comes first
        for m in range(3):
            others = [i for i in range(3) if i != m]
            pick = {}
            for i in others:
                labels = sorted(j for j in range(3) if j != i)
                pick[i] = split[i][0 if labels[0] == m else 1]
            match = list(zip(pick[others[0]], pick[others[1]]))
            matchings.append(match)
            for u, v in match:
                edges += [(u, v), (u, xs[m]), (v, xs[m])]
        edges += [(u, x2) for u in part4]
        edges += [(u, x3) for u in spec.part_vertices(4)]
        edges += [(u, x1) for u in spec.part_vertices(5)]
    elif k == 6:
        edges = [(x1, x2), (x2, x3), (x1, x3)]
        half = n // 2
        b2_plus, b2_minus = b[1][:half], b[1][half:]
        b3_plus, b3_minus = b[2][:half], b[2][half:]
        v4_2, v4_3 = part4[:half], part4[half:]
        for left, right in (
            (b2_plus, v4_2),
            (b3_plus, v4_3),
            (b2_minus, b3_minus),
        ):
            match = list(zip(left, right))
            matchings.append(match)
            edges += match
        edges += [(u, x1) for u in b[1] + b[2] + part4]
        edges += [(u, x2) for u in b[0]]
        edges += [(u, x3) for u in spec.part_vertices(4)]
        edges += [(u, x1) for u in spec.part_vertices(5)]
    else:
        edges = [(x1, x2), (x2, x3), (x1, x3)]
        edges += [(u, x2) for u in b[0]]
        edges += [(u, x3) for u in part4]
        match = list(zip(b[1], b[2]))
        matchings.append(match)
        edges += match
        edges += [(u, x1) for u in b[1] + b[2]]
        if k == 5:
            edges += [(u, x1) for u in spec.part_vertices(4)]

    g = PartiteGraph(spec, edges)
    expected = y_edge_count(k, n)
    assert g.edge_count == expected, (g.edge_count, expected)
    meta = ConstructionMeta(
        family="y",
        params={"k": k, "n": n},
        landmarks={
            "X": [x1, x2, x3],
            "x1": x1,
            "x2": x2,
            "x3": x3,
            "B": b,
            "matchings": [[list(p) for p in m] for m in matchings],
        },
        graph=g,
        target_length=4,
    )
    return g, meta


def y_edge_count(k: int, n: int) -> int:
    if k == 4:
        return 5 * n - 1
    return (3 * (k - 1) * n - 2) // 2


# ----------------------------------------------------------------------
# tripartite fixtures
# ----------------------------------------------------------------------


def build_matched_tripartite(n: int) -> tuple[PartiteGraph, ConstructionMeta]:
    """Tripartite graph whose three cross-part pairs are all perfect
    matchings forming one Hamilton cycle (parts repeat 1,2,3 around it).

    For n = 2 this is the hexagon with antipodal vertices sharing a
    part: saturated for C_5 but not for C_4.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    spec = PartSpec.balanced(3, n)
    o = spec.offsets
    cycle = [o[t % 3] + t // 3 for t in range(3 * n)]
    edges = [(cycle[i], cycle[(i + 1) % (3 * n)]) for i in range(3 * n)]
    g = PartiteGraph(spec, edges)
    meta = ConstructionMeta(
        family="matched-tripartite",
        params={"n": n},
        landmarks={"cycle": cycle},
        graph=g,
        target_length=5 if n == 2 else None,
    )
    return g, meta


# placed last: the long-cycle module needs ConstructionMeta from above
from .longcycle import build_construction3, construction3_edge_count  # noqa: E402
