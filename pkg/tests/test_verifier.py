import json

import pytest

from partsat.constructions import build_W, build_Y, build_matched_tripartite
from partsat.graphs import PartSpec, PartiteGraph, build_host
from partsat.verifier import (
    REASON_NO_CYCLE,
    check_structural_lemmas,
    trunk_branch,
    verify,
)


def test_w432_verifies_saturated():
    g, _ = build_W(4, 3, 2)
    rep = verify(g, 4)
    assert rep.cfree is True
    assert rep.saturated is True
    assert rep.failures == []
    assert rep.connected
    assert rep.diam_p <= 3


def test_hexagon_fails_c4_saturation_on_antipodal_pairs():
    g, _ = build_matched_tripartite(2)
    rep = verify(g, 4)
    assert rep.cfree is True
    assert rep.saturated is False
    bad = {(f["u"], f["v"]) for f in rep.failures}
    # every admissible chord closes only a C_3 and a C_5, never a C_4
    from partsat.graphs import admissible_nonedges
    from partsat.paths import cycle_length_spectrum

    assert bad == set(admissible_nonedges(g))
    assert all(f["reason"] == REASON_NO_CYCLE for f in rep.failures)
    for u, v in bad:
        g2 = g.with_edges([(u, v)])
        assert cycle_length_spectrum(g2, 6) == {3, 5, 6}


def test_graph_containing_target_cycle_is_not_saturated():
    g = build_host(PartSpec.balanced(3, 2))
    rep = verify(g, 4)
    assert rep.cfree is False
    assert rep.saturated is False
    assert rep.cycle_witness is not None
    assert rep.cycle_witness.validate(g, closed=True)


def test_budget_one_is_inconclusive():
    g, _ = build_W(4, 3, 2)
    rep = verify(g, 4, budget=1)
    assert rep.inconclusive
    assert rep.saturated is None


def test_report_json_shape():
    g, _ = build_W(4, 3, 2)
    rep = verify(g, 4)
    d = json.loads(rep.to_json())
    assert set(d) == {"l", "cfree", "saturated", "failures", "diam_p", "edges"}
    assert d["edges"] == 6 and d["saturated"] is True


def test_trunk_branch_w433():
    g, _ = build_W(4, 3, 3)
    dec = trunk_branch(g)
    assert not dec.degenerate
    # the triangle core is the 2-core; every pendant is its own branch
    assert len(dec.trunk) == 3
    assert len(dec.branches) == 6
    assert all(br.radius == 1 and len(br.vertices) == 1 for br in dec.branches)


def test_trunk_branch_y4():
    g, _ = build_Y(4, 2)
    dec = trunk_branch(g)
    assert not dec.degenerate
    assert len(dec.trunk) == 5
    assert len(dec.branches) == 3


def test_tree_is_degenerate():
    spec = PartSpec((2, 2))
    g = PartiteGraph(spec, [(0, 2), (2, 1), (1, 3)])
    dec = trunk_branch(g)
    assert dec.degenerate
    assert dec.trunk == frozenset()


def test_disconnected_trunk_rejected():
    spec = PartSpec((2, 2))
    g = PartiteGraph(spec, [(0, 2)])
    with pytest.raises(ValueError):
        trunk_branch(g)


def test_structural_lemmas_clean_on_saturated_instances():
    for g, l in [
        (build_W(4, 3, 3)[0], 4),
        (build_W(6, 3, 4)[0], 6),
        (build_Y(5, 2)[0], 4),
        (build_matched_tripartite(2)[0], 5),
    ]:
        rep = verify(g, l)
        assert rep.saturated is True
        assert check_structural_lemmas(g, l, rep) == []


def test_structural_lemmas_require_saturated_report():
    g, _ = build_matched_tripartite(2)
    rep = verify(g, 4)
    findings = check_structural_lemmas(g, 4, rep)
    assert findings and "not a saturated verdict" in findings[0]
