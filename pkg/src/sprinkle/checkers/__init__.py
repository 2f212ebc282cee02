"""Exact decision procedures for the graph properties under study:
cliques, diameter, vertex connectivity, chromatic number, and maximum
subgraph density."""

from ._verdict import PropertyVerdict
from .cliques import clique_number, contains_kr, count_kr, max_clique
from .coloring import chromatic_number, greedy_coloring, minimum_coloring
from .connectivity import (
    connected_components,
    is_connected,
    is_k_connected,
    vertex_connectivity,
)
from .density import DensityMeasure, max_subgraph_density
from .distance import diameter, diameter_at_most

__all__ = [
    "PropertyVerdict",
    "DensityMeasure",
    "max_clique",
    "clique_number",
    "contains_kr",
    "count_kr",
    "chromatic_number",
    "minimum_coloring",
    "greedy_coloring",
    "connected_components",
    "is_connected",
    "is_k_connected",
    "vertex_connectivity",
    "diameter",
    "diameter_at_most",
    "max_subgraph_density",
]
