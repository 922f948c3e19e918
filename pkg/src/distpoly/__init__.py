"""Exact-arithmetic toolkit for distance characteristic polynomials.

Computes exact characteristic polynomials of graph distance matrices,
derives the normalized coefficient sequences, and verifies unimodality,
log-concavity and peak-location bounds exhaustively over all free trees
up to a configurable order.
"""

from .analysis import (
    AggregateReport,
    SweepInterrupted,
    TreeReport,
    analyze_graph,
    verify_range,
)
from .graphs import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    GraphParseError,
    GraphStructureError,
    count_p3,
    diameter,
    distance_matrix,
    from_edge_list,
    from_graph6,
    graph_from_edges,
    heawood,
    is_connected,
    is_tree,
    path_graph,
    star_graph,
    to_edge_list,
)
from .polynomials import (
    CharPoly,
    DeltaSeq,
    NormalizedSeq,
    charpoly,
    delta_seq,
    det_at,
    normalized_seq,
    scaled_poly,
    trace_power,
)
from .sequences import (
    BoundSet,
    PeakInterval,
    SeqCheck,
    bound_set,
    conjecture_range,
    is_log_concave,
    is_unimodal,
    lower_bound_diam,
    newton_check,
    peak_interval,
    ratio_bound_check,
    upper_bound_rho,
)
from .treegen import (
    CanonicalTree,
    count_trees,
    enumerate_trees,
    to_graph,
    tree_count_recurrence,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateReport",
    "BoundSet",
    "CanonicalTree",
    "CharPoly",
    "DeltaSeq",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "Graph",
    "GraphParseError",
    "GraphStructureError",
    "NormalizedSeq",
    "PeakInterval",
    "SeqCheck",
    "SweepInterrupted",
    "TreeReport",
    "analyze_graph",
    "bound_set",
    "charpoly",
    "conjecture_range",
    "count_p3",
    "count_trees",
    "delta_seq",
    "det_at",
    "diameter",
    "distance_matrix",
    "enumerate_trees",
    "from_edge_list",
    "from_graph6",
    "graph_from_edges",
    "heawood",
    "is_connected",
    "is_log_concave",
    "is_tree",
    "is_unimodal",
    "lower_bound_diam",
    "newton_check",
    "normalized_seq",
    "path_graph",
    "peak_interval",
    "ratio_bound_check",
    "scaled_poly",
    "star_graph",
    "to_edge_list",
    "to_graph",
    "trace_power",
    "tree_count_recurrence",
    "upper_bound_rho",
    "verify_range",
]
