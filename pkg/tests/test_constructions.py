import pytest
from hypothesis import given, strategies as st

from partsat.constructions import (
    GoodPair,
    build_W,
    build_W_star_5_3,
    build_Y,
    build_Z,
    build_bipartite_G,
    build_gamma,
    build_matched_tripartite,
    build_zeta,
    enumerate_W_variants,
    gamma_edge_count,
    good_pair_assignment,
    y_edge_count,
    z_edge_count,
    zeta_edge_count,
)
from partsat.graphs import is_connected, min_degree
from partsat.verifier import verify


# part lists covering at least two parts, with valid part indices
parts_lists = st.lists(st.integers(0, 7), min_size=2, max_size=8).filter(
    lambda p: len(set(p)) >= 2 and max(p) < len(p)
)


@given(parts_lists)
def test_good_pair_assignment_is_valid(parts):
    assignment = good_pair_assignment(parts)
    k = len(parts)
    assert sorted(assignment) == list(range(k))
    assert all(assignment[i] != parts[i] for i in range(k))
    # constructing the pair revalidates everything
    GoodPair(tuple(range(k)), tuple(parts), assignment)


def test_good_pair_rejects_single_part():
    with pytest.raises(ValueError):
        GoodPair((0, 1), (2, 2), (1, 0))


def test_gamma_edge_counts_and_exclusion():
    assert gamma_edge_count(4, 3) == 3
    assert gamma_edge_count(6, 3) == 8
    with pytest.raises(ValueError):
        build_gamma(5, 3)
    g = build_gamma(8, 4)
    assert g.edge_count == gamma_edge_count(8, 4)


@pytest.mark.parametrize(
    "l,k,n",
    [(4, 3, 2), (4, 3, 5), (6, 3, 3), (6, 4, 4), (7, 5, 4), (8, 3, 4), (12, 6, 6)],
)
def test_w_edge_count(l, k, n):
    g, meta = build_W(l, k, n)
    h = (l - 2) // 2
    core = gamma_edge_count(l, k)
    assert g.edge_count == k * n - l + 1 + core
    assert meta.family == "w"
    assert is_connected(g)


def test_w_small_n_rejected():
    with pytest.raises(ValueError):
        build_W(8, 3, 2)


def test_w_star_53_shape():
    g, meta = build_W_star_5_3(4)
    assert g.edge_count == 3 * 4 + 1
    assert is_connected(g)
    rep = verify(g, 5)
    assert rep.cfree is True and rep.saturated is True


@pytest.mark.parametrize("l,k", [(5, 5), (5, 8), (6, 6), (7, 8), (8, 8)])
def test_zeta_edge_count(l, k):
    g, meta = build_zeta(l, k)
    assert g.edge_count == zeta_edge_count(l, k)


@pytest.mark.parametrize("l,k,n", [(5, 5, 4), (5, 6, 5), (6, 6, 5), (7, 7, 6), (5, 8, 6)])
def test_z_edge_count(l, k, n):
    g, meta = build_Z(l, k, n)
    assert g.edge_count == z_edge_count(l, k, n)
    assert is_connected(g)


@pytest.mark.parametrize("k,n", [(4, 1), (4, 2), (4, 5), (5, 2), (5, 4), (6, 3), (7, 2), (8, 4)])
def test_y_edge_count(k, n):
    g, meta = build_Y(k, n)
    assert g.edge_count == y_edge_count(k, n)
    if k == 4:
        assert g.edge_count == 5 * n - 1
    else:
        assert g.edge_count == (3 * (k - 1) * n - 2) // 2
    assert is_connected(g)


def test_bipartite_g_counts_and_saturation():
    g, meta = build_bipartite_G(6, 6, 4)
    assert g.edge_count == 6 + 6 + 16 - 12 + 1
    rep = verify(g, 8)
    assert rep.cfree is True and rep.saturated is True


def test_bipartite_g_preconditions():
    with pytest.raises(ValueError):
        build_bipartite_G(4, 9, 4)


def test_matched_tripartite_is_one_cycle():
    g, meta = build_matched_tripartite(2)
    assert g.edge_count == 6
    assert min_degree(g) == 2
    rep = verify(g, 5)
    assert rep.cfree is True and rep.saturated is True


def test_w_variants_all_saturated_smallest_case():
    variants = list(enumerate_W_variants(4, 3, 2))
    assert variants
    for g, meta in variants:
        rep = verify(g, 4)
        assert rep.cfree is True and rep.saturated is True
        assert g.edge_count == 6
