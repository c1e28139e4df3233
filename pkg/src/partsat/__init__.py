"""Partite cycle saturation: constructions, verification, exact search."""

from .graphs import (
    INFINITY,
    PartSpec,
    PartiteGraph,
    PathWitness,
    admissible_nonedges,
    bfs_distances,
    build_host,
    diam_p,
    is_connected,
    min_degree,
)
from .paths import (
    BudgetExhausted,
    DEFAULT_BUDGET,
    creates_cycle,
    cycle_length_spectrum,
    exists_path_exact,
    has_cycle_of_length,
)
from .constructions import (
    ConstructionMeta,
    GoodPair,
    build_W,
    build_W_star_5_3,
    build_Y,
    build_Z,
    build_bipartite_G,
    build_construction3,
    build_gamma,
    build_matched_tripartite,
    build_zeta,
    good_pair_assignment,
)
from .longcycle import (
    check_cfree_structural,
    construction3_edge_count,
    minimum_part_size,
    path_length_bounds,
    witness_path_c3,
)
from .verifier import (
    TrunkDecomposition,
    VerificationReport,
    check_structural_lemmas,
    trunk_branch,
    verify,
)
from .solver import (
    SearchOutcome,
    canonical_form,
    exact_sat,
    greedy_upper,
    lower_bound,
)
from .formulas import (
    KnownBound,
    construction_for,
    expected_edges,
    format_table,
    known_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
