import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_sat
from partsat.constructions import build_W, build_matched_tripartite
from partsat.graphs import PartSpec, PartiteGraph, build_host
from partsat.solver import (
    canonical_form,
    exact_sat,
    greedy_upper,
    lower_bound,
)
from partsat.verifier import verify


def test_lower_bound_values():
    assert lower_bound(PartSpec.balanced(3, 2), 4) == 6
    assert lower_bound(PartSpec.balanced(3, 2), 5) == 6
    assert lower_bound(PartSpec((5, 5)), 6) == 9
    assert lower_bound(PartSpec((1, 4)), 4) == 4  # host too small for C_4 cycle? N-1


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_greedy_result_is_saturated(seed):
    spec = PartSpec.balanced(3, 2)
    out = greedy_upper(spec, 4, seed=seed)
    g = out.extremal[0]
    rep = verify(g, 4)
    assert rep.cfree is True and rep.saturated is True
    assert out.value == g.edge_count >= 6


def _permuted(g, part_perm, seed):
    """Relabel g by permuting equal-size parts and vertices within parts."""
    spec = g.spec
    sizes = tuple(spec.part_sizes[p] for p in part_perm)
    new_spec = PartSpec(sizes)
    rng = random.Random(seed)
    mapping = {}
    for new_i, old_i in enumerate(part_perm):
        olds = list(spec.part_vertices(old_i))
        news = list(new_spec.part_vertices(new_i))
        rng.shuffle(news)
        for o, nn in zip(olds, news):
            mapping[o] = nn
    return PartiteGraph(new_spec, [(mapping[u], mapping[v]) for u, v in g.edges()])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**30), st.integers(0, 2**30))
def test_canonical_form_is_isomorphism_invariant(gseed, pseed):
    spec = PartSpec.balanced(3, 2)
    host = build_host(spec)
    rng = random.Random(gseed)
    g = PartiteGraph(spec, [e for e in host.edges() if rng.random() < 0.5])
    perm = [0, 1, 2]
    random.Random(pseed).shuffle(perm)
    h = _permuted(g, perm, pseed)
    assert canonical_form(g) == canonical_form(h)


def test_canonical_form_separates_nonisomorphic():
    spec = PartSpec.balanced(3, 2)
    path = PartiteGraph(spec, [(0, 2), (2, 4), (4, 1)])
    star = PartiteGraph(spec, [(0, 2), (0, 4), (0, 3)])
    assert canonical_form(path) != canonical_form(star)


def test_exact_sat_matches_naive_spot_checks():
    for sizes, l in [((2, 2), 4), ((2, 2, 2), 4), ((2, 2, 2), 5), ((1, 2, 2), 3)]:
        spec = PartSpec(sizes)
        v, ext = naive_sat(spec, l)
        out = exact_sat(spec, l)
        assert out.mode == "exact" and out.value == v
        assert {canonical_form(g) for g in out.extremal} == {
            canonical_form(g) for g in ext
        }


def test_extremal_graphs_are_saturated():
    out = exact_sat(PartSpec.balanced(3, 2), 4)
    assert out.value == 6
    for g in out.extremal:
        rep = verify(g, 4)
        assert rep.cfree is True and rep.saturated is True


def test_w432_is_the_unique_c4_extremal():
    out = exact_sat(PartSpec.balanced(3, 2), 4)
    w, _ = build_W(4, 3, 2)
    assert len(out.extremal) == 1
    assert canonical_form(out.extremal[0]) == canonical_form(w)


def test_hexagon_among_c5_extremals():
    out = exact_sat(PartSpec.balanced(3, 2), 5)
    assert out.value == 6
    hexagon, _ = build_matched_tripartite(2)
    assert canonical_form(hexagon) in {canonical_form(g) for g in out.extremal}


def test_budget_exhaustion_is_inconclusive():
    out = exact_sat(PartSpec.balanced(3, 3), 4, budget=10)
    assert out.mode == "inconclusive"
    assert out.value is None


def test_worker_counts_agree():
    spec = PartSpec.balanced(3, 2)
    outs = [exact_sat(spec, 4, workers=w) for w in (1, 2, 3)]
    forms = [sorted(canonical_form(g) for g in o.extremal) for o in outs]
    assert len({o.value for o in outs}) == 1
    assert forms[0] == forms[1] == forms[2]


def test_oversized_host_rejected():
    with pytest.raises(ValueError):
        exact_sat(PartSpec.balanced(4, 4), 4)
