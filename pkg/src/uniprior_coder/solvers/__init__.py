"""Cycle packing and feedback set solvers.

The supergraph-level entry point lives in uniprior_coder.solvers.supergraph
and is imported from there directly.
"""

from uniprior_coder.solvers.base import (
    CyclePacking,
    Disjointness,
    FeedbackEdgeSet,
    FeedbackVertexSet,
    PackingStrategy,
)
from uniprior_coder.solvers.exact import ExactPacking
from uniprior_coder.solvers.feedback import min_feedback_edge_set, min_feedback_vertex_set
from uniprior_coder.solvers.greedy import GreedyPacking
from uniprior_coder.solvers.packing import (
    eulerian_decomposition,
    max_edge_disjoint_packing,
    max_vertex_disjoint_packing,
    maximal_packing,
)

__all__ = [
    "CyclePacking",
    "Disjointness",
    "ExactPacking",
    "FeedbackEdgeSet",
    "FeedbackVertexSet",
    "GreedyPacking",
    "PackingStrategy",
    "eulerian_decomposition",
    "max_edge_disjoint_packing",
    "max_vertex_disjoint_packing",
    "maximal_packing",
    "min_feedback_edge_set",
    "min_feedback_vertex_set",
]
