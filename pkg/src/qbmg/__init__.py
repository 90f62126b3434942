"""Recognize undirected 2-quasi best match graphs and build their least-resolved trees."""

from .bigraph import BiGraph, connected_components, heart_vertices, induced_subgraph, infer_bipartition
from .formats import export_dot, parse_graph, parse_tree, serialize_graph, serialize_tree
from .oracles import find_forbidden, hereditary_heart_check
from .phylo import PhyloTree, Trunc, contract_arc, lca
from .recognition import Verdict, Witness, WitnessKind, heart_tree, recognize_with_colors
from .semantics import (
    best_matches,
    check_explains,
    check_least_resolved,
    directed_qbmg,
    explain,
    union_explainer,
    validate_lrt_structure,
)

__version__ = "0.1.0"

__all__ = [
    "BiGraph",
    "PhyloTree",
    "Trunc",
    "Verdict",
    "Witness",
    "WitnessKind",
    "best_matches",
    "check_explains",
    "check_least_resolved",
    "connected_components",
    "contract_arc",
    "directed_qbmg",
    "explain",
    "export_dot",
    "find_forbidden",
    "heart_tree",
    "heart_vertices",
    "hereditary_heart_check",
    "induced_subgraph",
    "infer_bipartition",
    "lca",
    "parse_graph",
    "parse_tree",
    "recognize_with_colors",
    "serialize_graph",
    "serialize_tree",
    "union_explainer",
    "validate_lrt_structure",
]
