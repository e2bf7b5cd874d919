"""Exact Hermitian-adjacency spectra, inertia and matching structure of mixed graphs."""

from .graph import (
    GraphError,
    MixedGraph,
    complete_graph,
    cycle_graph,
    load_graph,
    parse_mg,
    path_graph,
    star_graph,
    to_mg,
)
from .matching import matching_counts, matching_number
from .spectra import (
    ConsistencyError,
    HermitianMatrix,
    Inertia,
    IntPolynomial,
    charpoly,
    graph_charpoly,
    graph_inertia,
    hermitian_adjacency,
    inertia,
)
from .structure import (
    characterize_inertia_min,
    characterize_n_minus_max,
    characterize_p_plus_max,
    classify_unicyclic,
    inertia_bounds,
)

__all__ = [
    "ConsistencyError", "GraphError", "HermitianMatrix", "Inertia", "IntPolynomial",
    "MixedGraph", "characterize_inertia_min", "characterize_n_minus_max",
    "characterize_p_plus_max", "charpoly", "classify_unicyclic", "complete_graph",
    "cycle_graph", "graph_charpoly", "graph_inertia", "hermitian_adjacency", "inertia",
    "inertia_bounds", "load_graph", "matching_counts", "matching_number", "parse_mg",
    "path_graph", "star_graph", "to_mg",
]
__version__ = "0.1.0"
