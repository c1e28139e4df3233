import pytest

from partsat.formulas import (
    NO_ODD_CYCLE,
    KnownBound,
    construction_for,
    expected_edges,
    format_table,
    known_value,
)
from partsat.graphs import PartSpec


def test_registry_examples():
    b = known_value(PartSpec.balanced(3, 5), 4)
    assert b.kind == "exact" and b.value == 15 and b.source == "Thm 1.5"

    b = known_value(PartSpec.balanced(5, 3), 4)
    assert b.kind == "exact" and b.value == 17 and b.source == "Thm 1.9"

    b = known_value(PartSpec((7, 8)), 8)
    assert b.kind == "upper" and b.upper == 20 and b.source == "Thm 1.1"

    b = known_value(PartSpec.balanced(4, 2), 4)
    assert b.kind == "open" and b.lower == 8 and b.upper == 9

    b = known_value(PartSpec((5, 5)), 6)
    assert b.kind == "exact" and b.value == 11 and b.source == "Thm 1.1"

    b = known_value(PartSpec((4, 4)), 4)
    assert b.kind == "exact" and b.value == 7

    b = known_value(PartSpec((3, 3)), 5)
    assert b.kind == NO_ODD_CYCLE


def test_exact_only_inside_hypotheses():
    # the C_5 value on four parts is exact only from n = 10 on
    assert known_value(PartSpec.balanced(4, 10), 5).kind == "exact"
    assert known_value(PartSpec.balanced(4, 9), 5).kind == "upper"
    # bipartite C_6 value needs both sides >= 5
    assert known_value(PartSpec((5, 4)), 6).kind != "exact"
    # the three-part C_4 value needs n >= 2
    assert known_value(PartSpec.balanced(3, 1), 4).kind != "exact"


def test_bound_ordering_invariant():
    for k in range(2, 9):
        for l in range(3, 13):
            for n in range(1, 9):
                b = known_value(PartSpec.balanced(k, n), l)
                if b.lower is not None and b.upper is not None:
                    assert b.lower <= b.upper, (k, l, n)


def test_invalid_bound_rejected():
    with pytest.raises(AssertionError):
        KnownBound(kind="open", lower=5, upper=4)


def test_long_cycle_cell_uses_tightest_bound():
    from partsat.longcycle import minimum_part_size

    l, k = 252, 4
    n = minimum_part_size(l, k)
    b = known_value(PartSpec.balanced(k, n), l)
    assert b.kind == "upper" and b.source == "Thm 1.10"
    assert b.upper == k * (n - 1) + 6 * ((l + 4) // 5)


def test_construction_matches_registered_upper_bound():
    checked = 0
    for k in range(2, 9):
        for l in range(3, 13):
            for n in range(1, 9):
                spec = PartSpec.balanced(k, n)
                try:
                    pair = construction_for(spec, l)
                except ValueError:
                    pair = None
                if pair is None:
                    continue
                g, meta = pair
                b = known_value(spec, l)
                assert g.edge_count == b.best_upper, (k, l, n)
                assert expected_edges(spec, l) == g.edge_count
                checked += 1
    assert checked > 200


def test_unbalanced_host_downgrades_to_open():
    b = known_value(PartSpec((2, 3, 4)), 5)
    assert b.kind == "open" and b.lower == 8


def test_table_rendering():
    text = format_table(5, 6, 3)
    assert "= 10 (Thm 1.6)" in text
    assert "-" in text  # bipartite odd-cycle cells
    n2 = format_table(4, 5, 2)
    assert "8 <= . <= 9" in n2
    csv_text = format_table(4, 5, 2, as_csv=True)
    assert csv_text.splitlines()[0].startswith("l \\ k,2,3,4")
