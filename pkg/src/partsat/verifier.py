"""Saturation verification and trunk/branch structure analysis.

A graph is C_l-saturated relative to its complete multipartite host when
it contains no C_l but adding any admissible nonedge (cross-part,
nonadjacent pair) creates one.  `verify` checks both halves mechanically
and reports every failing nonedge.  Budget exhaustion during a path
search is an in-band verdict (None), never silently treated as absence.

The trunk of a connected non-tree is its 2-core; the branches are the
pendant trees hanging off it, each attached at a single trunk vertex.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .graphs import PartiteGraph, admissible_nonedges, bfs_distances, diam_p, is_connected
from .paths import BudgetExhausted, DEFAULT_BUDGET, creates_cycle, has_cycle_of_length
from .graphs import PathWitness

REASON_NO_CYCLE = "no C_l created"
REASON_BUDGET = "budget exhausted"


@dataclass
class VerificationReport:
    """Outcome of a saturation check.  cfree/saturated are True, False or
    None (inconclusive: some search ran out of budget)."""

    l: int
    cfree: bool | None
    saturated: bool | None
    failures: list[dict]
    connected: bool
    diam_p: float
    edges: int
    elapsed: float
    cycle_witness: PathWitness | None = None

    @property
    def inconclusive(self) -> bool:
        return self.cfree is None or self.saturated is None

    def to_json_dict(self) -> dict:
        d = self.diam_p
        return {
            "l": self.l,
            "cfree": self.cfree,
            "saturated": self.saturated,
            "failures": self.failures,
            "diam_p": None if d == float("inf") else d,
            "edges": self.edges,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def verify(
    g: PartiteGraph, l: int, budget: int | None = DEFAULT_BUDGET
) -> VerificationReport:
    """Full saturation check of g for target cycle length l.

    Checks C_l-freeness, then that every admissible nonedge closes a C_l;
    failures are collected exhaustively so reports are actionable.
    """
    if l < 3:
        raise ValueError("need l >= 3")
    start = time.perf_counter()
    failures: list[dict] = []
    cycle_witness = None
    try:
        cycle_witness = has_cycle_of_length(g, l, budget)
        cfree: bool | None = cycle_witness is None
    except BudgetExhausted:
        cfree = None

    saturated: bool | None
    if cfree is False:
        saturated = False
    else:
        budget_hit = cfree is None
        for u, v in admissible_nonedges(g):
            try:
                if creates_cycle(g, u, v, l, budget) is None:
                    failures.append({"u": u, "v": v, "reason": REASON_NO_CYCLE})
            except BudgetExhausted:
                failures.append({"u": u, "v": v, "reason": REASON_BUDGET})
                budget_hit = True
        hard = any(f["reason"] == REASON_NO_CYCLE for f in failures)
        if budget_hit:
            saturated = None
        else:
            saturated = not hard
        if cfree is True and hard:
            saturated = False
    return VerificationReport(
        l=l,
        cfree=cfree,
        saturated=saturated,
        failures=failures,
        connected=is_connected(g),
        diam_p=diam_p(g),
        edges=g.edge_count,
        elapsed=time.perf_counter() - start,
        cycle_witness=cycle_witness,
    )


@dataclass(frozen=True)
class Branch:
    """A pendant tree hanging off the trunk at a single vertex."""

    root: int
    vertices: tuple[int, ...]
    radius: int


@dataclass
class TrunkDecomposition:
    trunk: frozenset[int]
    branches: list[Branch]
    degenerate: bool

    def branch_vertices(self) -> set[int]:
        return {v for br in self.branches for v in br.vertices}


def trunk_branch(g: PartiteGraph) -> TrunkDecomposition:
    """Trunk (2-core) and branches of a connected graph.

    Trees have an empty 2-core and come back flagged degenerate with no
    branches.  Every cycle of g lies inside the trunk.
    """
    if not is_connected(g):
        raise ValueError("trunk decomposition needs a connected graph")
    n = g.num_vertices
    alive = set(range(n))
    deg = {v: g.degree(v) for v in alive}
    queue = [v for v in alive if deg[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    trunk = frozenset(alive)
    if not trunk:
        return TrunkDecomposition(trunk=trunk, branches=[], degenerate=True)

    branches: list[Branch] = []
    outside = sorted(set(range(n)) - trunk)
    seen: set[int] = set()
    for v0 in outside:
        if v0 in seen:
            continue
        comp = {v0}
        frontier = [v0]
        roots = set()
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if w in trunk:
                    roots.add(w)
                elif w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        if len(roots) != 1:
            raise AssertionError(f"branch {sorted(comp)} attaches at {sorted(roots)}")
        root = roots.pop()
        dist = bfs_distances(g, root)
        radius = max(int(dist[v]) for v in comp)
        branches.append(Branch(root=root, vertices=tuple(sorted(comp)), radius=radius))
    branches.sort(key=lambda br: (br.root, br.vertices))
    return TrunkDecomposition(trunk=trunk, branches=branches, degenerate=False)


def check_structural_lemmas(
    g: PartiteGraph, l: int, report: VerificationReport
) -> list[str]:
    """Structural facts every saturated graph must satisfy; returns the
    violated ones (none expected; a hit means an implementation bug).

    Checks the partite diameter bound diam_p <= l-1, trunk/branch
    bookkeeping, and for l = 5 the branch-radius bound (radius <= 2 with
    depth-2 branch tips in the root's part)."""
    findings: list[str] = []
    if report.saturated is not True:
        findings.append("input report is not a saturated verdict")
        return findings
    if not is_connected(g):
        findings.append("saturated graph is disconnected")
        return findings
    d = diam_p(g)
    if d > l - 1:
        findings.append(f"diam_p = {d} exceeds l-1 = {l - 1}")
    dec = trunk_branch(g)
    if not dec.degenerate:
        trunk_deg = {
            v: sum(1 for w in g.neighbors(v) if w in dec.trunk) for v in dec.trunk
        }
        if trunk_deg and min(trunk_deg.values()) < 2:
            findings.append("trunk has a vertex of induced degree < 2")
        n_branch = len(dec.branch_vertices())
        trunk_edges = sum(
            1 for u, v in g.edges() if u in dec.trunk and v in dec.trunk
        )
        if trunk_edges != g.edge_count - n_branch:
            findings.append("e(trunk) != e(G) - |branch vertices|")
        if l == 5:
            for br in dec.branches:
                if br.radius > 2:
                    findings.append(
                        f"branch at {br.root} has radius {br.radius} > 2"
                    )
                elif br.radius == 2:
                    dist = bfs_distances(g, br.root)
                    tips = [v for v in br.vertices if dist[v] == 2]
                    root_part = g.part_of(br.root)
                    for t in tips:
                        if g.part_of(t) != root_part:
                            findings.append(
                                f"depth-2 tip {t} outside part of root {br.root}"
                            )
    return findings
