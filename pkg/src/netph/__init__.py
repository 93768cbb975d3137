"""Persistent homology of unweighted networks.

Edges are weighted by Forman-Ricci curvature or edge betweenness, the
weights are extended to the clique complex (dimension <= 3), and the
resulting filtration is reduced to barcodes and persistence diagrams.
"""

from .centrality import ebc_brute_force, edge_betweenness_all
from .complex import FilteredComplex, build_filtration, enumerate_cliques, validate_complex
from .curvature import forman_ricci, forman_ricci_all, triangles_on_edge
from .diagrams import PersistenceDiagram, bottleneck, diagram_from_pairs, multiplicity_oracle
from .graph import Graph, connected_components, degree, load_edge_list
from .persistence import (
    PersistencePair,
    barcodes,
    boundary_matrix,
    compute_persistence,
    persistent_betti,
    reduce,
)
from .pipeline import PipelineConfig, persistence_of_graph, run_pipeline
from .weighting import extend_weights, normalize_ebc, normalize_forman

__version__ = "0.1.0"

__all__ = [
    "FilteredComplex",
    "Graph",
    "PersistenceDiagram",
    "PersistencePair",
    "PipelineConfig",
    "barcodes",
    "bottleneck",
    "boundary_matrix",
    "build_filtration",
    "compute_persistence",
    "connected_components",
    "degree",
    "diagram_from_pairs",
    "ebc_brute_force",
    "edge_betweenness_all",
    "enumerate_cliques",
    "extend_weights",
    "forman_ricci",
    "forman_ricci_all",
    "load_edge_list",
    "multiplicity_oracle",
    "normalize_ebc",
    "normalize_forman",
    "persistence_of_graph",
    "persistent_betti",
    "reduce",
    "run_pipeline",
    "triangles_on_edge",
    "validate_complex",
]
