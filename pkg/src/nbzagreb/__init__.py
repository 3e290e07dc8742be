"""Neighborhood-degree Zagreb index toolkit.

Compute NM_a and its 2-distance variant, reconstruct them exactly from
degree histograms, evaluate sharp bounds with structural equality
detection, lower-bound the adjacency spectral radius, and verify all of it
exhaustively over every small graph.
"""

from .bounds import (
    BOUND_SOURCES,
    BoundReport,
    CongruenceData,
    congruence_classify,
    nm_bound_congruence,
    nm_bound_secant,
    nm_bound_unit,
    secant_coefficient,
    unit_coefficient,
)
from .enumeration import (
    ExtremalRecord,
    VerificationReport,
    canonical_form,
    enumerate_connected,
    find_equality_graphs,
    coefficient_sign_grid,
    verify_all,
)
from .graphs import (
    DegreeProfile,
    Graph,
    complete_graph,
    cycle_graph,
    degree_profile,
    diameter,
    encode_graph6,
    is_connected,
    is_path,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
)
from .indices import (
    Alpha,
    IndexReport,
    as_alpha,
    chemical_tree_m1,
    first_zagreb,
    general_neighborhood_zagreb,
    index_report,
    nm2_direct,
    nm2_reconstruct_secant,
    nm2_reconstruct_unit,
    nm_direct,
    nm_reconstruct_secant,
    nm_reconstruct_unit,
    two_distance_index,
)
from .spectral import (
    SpectralResult,
    min_nbr_lower_bound,
    nm2_ratio_lower_bound,
    spectral_radius,
    spectral_report,
)

__version__ = "0.1.0"

__all__ = [
    "Alpha",
    "BoundReport",
    "BOUND_SOURCES",
    "CongruenceData",
    "DegreeProfile",
    "ExtremalRecord",
    "Graph",
    "IndexReport",
    "SpectralResult",
    "VerificationReport",
    "as_alpha",
    "canonical_form",
    "chemical_tree_m1",
    "complete_graph",
    "congruence_classify",
    "cycle_graph",
    "degree_profile",
    "diameter",
    "encode_graph6",
    "enumerate_connected",
    "find_equality_graphs",
    "first_zagreb",
    "general_neighborhood_zagreb",
    "index_report",
    "is_connected",
    "is_path",
    "coefficient_sign_grid",
    "min_nbr_lower_bound",
    "nm2_direct",
    "nm2_ratio_lower_bound",
    "nm2_reconstruct_secant",
    "nm2_reconstruct_unit",
    "nm_bound_congruence",
    "nm_bound_secant",
    "nm_bound_unit",
    "nm_direct",
    "nm_reconstruct_secant",
    "nm_reconstruct_unit",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "secant_coefficient",
    "spectral_radius",
    "spectral_report",
    "star_graph",
    "two_distance_index",
    "unit_coefficient",
    "verify_all",
]
