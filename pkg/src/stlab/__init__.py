"""Workbench for size-constrained spectral extremal graph problems.

The package answers questions of the form: among graphs with a fixed number
of edges that avoid a forbidden hub-and-paths (theta) pattern, how large can
the adjacency spectral radius get, and which graphs attain it?  It bundles
an immutable bitset graph type, a Perron solver, theta and generic subgraph
detectors, isomorph-free enumeration of connected graphs by edge count,
exhaustive small-size certification, decomposition reports, and a seeded
hill-climbing search.
"""

from .graphs import (
    CANONICAL_CAP,
    MAX_VERTICES,
    FamilySpec,
    Graph,
    canonical_graph,
    canonical_pair,
    certificate,
    complete_bipartite_graph,
    complete_graph,
    construct,
    cycle_graph,
    decode_graph6,
    double_star,
    encode_graph6,
    is_complete_bipartite,
    join,
    k_join,
    path_graph,
    random_connected_graph,
    star_graph,
    star_plus_edge,
    theta_graph,
)
from .spectral import PerronResult, RotationMove, rotate_edges, spectral_radius
from .subgraph import (
    SubgraphWitness,
    ThetaSpec,
    ThetaWitness,
    contains_subgraph,
    find_theta,
)
from .enumeration import connected_graphs, count_theta_free
from .extremal import (
    ComponentSummary,
    DecompositionReport,
    SearchReport,
    VerificationReport,
    bound_clique_size,
    bound_value,
    extremal_construction,
    inspect,
    landscape_table,
    local_search,
    verify_class,
)

__version__ = "0.1.0"

__all__ = [
    "CANONICAL_CAP",
    "MAX_VERTICES",
    "FamilySpec",
    "Graph",
    "canonical_graph",
    "canonical_pair",
    "certificate",
    "complete_bipartite_graph",
    "complete_graph",
    "construct",
    "cycle_graph",
    "decode_graph6",
    "double_star",
    "encode_graph6",
    "is_complete_bipartite",
    "join",
    "k_join",
    "path_graph",
    "random_connected_graph",
    "star_graph",
    "star_plus_edge",
    "theta_graph",
    "PerronResult",
    "RotationMove",
    "rotate_edges",
    "spectral_radius",
    "SubgraphWitness",
    "ThetaSpec",
    "ThetaWitness",
    "contains_subgraph",
    "find_theta",
    "connected_graphs",
    "count_theta_free",
    "ComponentSummary",
    "DecompositionReport",
    "SearchReport",
    "VerificationReport",
    "bound_clique_size",
    "bound_value",
    "extremal_construction",
    "inspect",
    "landscape_table",
    "local_search",
    "verify_class",
]
