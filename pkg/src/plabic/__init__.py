"""Clusters of Plücker coordinates, dimer quivers, polygon tilings and
SL2/SL3 frieze patterns, computed in exact integer arithmetic."""

from .combinat import (
    KSubset,
    SignedIndex,
    block_decomposition,
    complement,
    is_interval,
    normalize_index,
    weakly_separated,
)
from .cluster import (
    Clique,
    Cluster,
    Quiver,
    check_prop_pairing,
    classify_edge_subset,
    cliques,
    cluster_from_json,
    cluster_to_json,
    complement_cluster,
    fz_mutate_quiver,
    is_rectangular,
    lattice_rows,
    mutate_subset,
    opposite_in_square,
    quiver_dot,
    quiver_from_cluster,
    validate_cluster,
)
from .geometry import (
    SuperimposedTriangulation,
    Tiling,
    arc_quiddity,
    cc_quiddity_from_triangulation,
    lower_arc,
    quadrilateral_cluster,
    row_tiling,
    snake_triangulation,
    superimposed_from_cluster,
    tilings_noncrossing,
    upper_arc,
)
from .pluecker import (
    PlueckerTable,
    check_long_relations,
    check_short_relations,
    solve_from_cluster,
)
from .frieze import (
    Frieze,
    build_sl2_from_quiddity,
    build_sl3_from_cluster,
    extract_quiddity,
    render,
    validate_sl2,
    validate_sl3,
)
from .oracle import (
    EnumerationReport,
    brute_force_is_maximal,
    cross_validate_gr2,
    enumerate_clusters,
    enumerate_maximal_brute,
    polygon_triangulations,
)

__all__ = [name for name in dir() if not name.startswith("_")]
