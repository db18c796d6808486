"""Minimum feedback edge and vertex sets.

Both are minimum hitting sets over enumerated cycles: the edge sets of all
simple cycles for tau_e, the vertex sets of the induced cycles for tau_v.
The matching packing size seeds the search as a lower bound, and every
returned set is checked by deleting it and testing the residual graph for
acyclicity.
"""

import logging
from collections.abc import Sequence

from uniprior_coder.exceptions import InvalidFeedbackSetError
from uniprior_coder.graphs import (
    DEFAULT_CYCLE_LIMIT,
    DirectedMultigraph,
    SimpleCycle,
    enumerate_chordless_cycles,
    enumerate_simple_cycles,
    is_acyclic,
)
from uniprior_coder.solvers.base import (
    DEFAULT_SOLVER_BUDGET,
    Disjointness,
    FeedbackEdgeSet,
    FeedbackVertexSet,
    cycle_mask,
)
from uniprior_coder.solvers.exact import ExactPacking, min_hitting_set
from uniprior_coder.solvers.packing import pack_cycles

logger = logging.getLogger(__name__)


def _hit_cycles(
    graph: DirectedMultigraph,
    cycles: Sequence[SimpleCycle],
    disjointness: Disjointness,
    lower_bound: int | None,
    budget: int,
) -> tuple[int, ...]:
    if lower_bound is None:
        lower_bound = len(pack_cycles(graph, cycles, ExactPacking(budget), disjointness))
    masks = [cycle_mask(graph, cycle, disjointness) for cycle in cycles]
    return min_hitting_set(masks, lower_bound=lower_bound, budget=budget)


def min_feedback_edge_set(
    graph: DirectedMultigraph,
    cycle_limit: int = DEFAULT_CYCLE_LIMIT,
    budget: int = DEFAULT_SOLVER_BUDGET,
    lower_bound: int | None = None,
    cycles: Sequence[SimpleCycle] | None = None,
) -> FeedbackEdgeSet:
    """Find a minimum set of edges meeting every cycle (size tau_e).

    Args:
        graph: The multigraph
        cycle_limit: Cap on enumerated simple cycles
        budget: Search-node budget of each branch-and-bound call
        lower_bound: Known packing size; computed exactly when None
        cycles: Precomputed output of enumerate_simple_cycles, if available

    Returns:
        FeedbackEdgeSet of minimum cardinality

    Raises:
        CycleLimitExceededError: If enumeration exceeds `cycle_limit`
        SolverBudgetExceededError: If a search exceeds `budget`
    """
    if cycles is None:
        cycles = enumerate_simple_cycles(graph, cycle_limit)
    chosen = _hit_cycles(graph, cycles, Disjointness.EDGE, lower_bound, budget)
    if not is_acyclic(graph, removed_edges=chosen):
        raise InvalidFeedbackSetError(f"removing edges {list(chosen)} leaves a cycle")
    logger.debug("minimum feedback edge set: %s", list(chosen))
    return FeedbackEdgeSet(frozenset(chosen))


def min_feedback_vertex_set(
    graph: DirectedMultigraph,
    cycle_limit: int = DEFAULT_CYCLE_LIMIT,
    budget: int = DEFAULT_SOLVER_BUDGET,
    lower_bound: int | None = None,
    cycles: Sequence[SimpleCycle] | None = None,
) -> FeedbackVertexSet:
    """Find a minimum set of vertices meeting every cycle (size tau_v).

    Only induced cycles need hitting: every cycle contains one on a subset of
    its vertices.

    Raises:
        CycleLimitExceededError: If enumeration exceeds `cycle_limit`
        SolverBudgetExceededError: If a search exceeds `budget`
    """
    if cycles is None:
        cycles = enumerate_chordless_cycles(graph, cycle_limit)
    chosen = _hit_cycles(graph, cycles, Disjointness.VERTEX, lower_bound, budget)
    if not is_acyclic(graph, removed_vertices=chosen):
        raise InvalidFeedbackSetError(f"removing vertices {list(chosen)} leaves a cycle")
    logger.debug("minimum feedback vertex set: %s", list(chosen))
    return FeedbackVertexSet(frozenset(chosen))
