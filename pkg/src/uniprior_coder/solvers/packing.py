"""Cycle packings of directed multigraphs.

Exact packings run branch and bound over the enumerated cycles (all simple
cycles for edge packings, induced cycles for vertex packings);
greedy packings take cycles shortest first. On an Eulerian graph every
maximal edge-disjoint packing covers all edges, and eulerian_decomposition
builds such a covering packing directly without enumerating cycles.
"""

import logging
import random
from collections import deque
from collections.abc import Iterable, Sequence

from uniprior_coder.exceptions import NotEulerianError
from uniprior_coder.graphs import (
    DEFAULT_CYCLE_LIMIT,
    DirectedMultigraph,
    SimpleCycle,
    enumerate_chordless_cycles,
    enumerate_simple_cycles,
    is_eulerian,
)
from uniprior_coder.models import SolverMode
from uniprior_coder.solvers.base import (
    DEFAULT_SOLVER_BUDGET,
    CyclePacking,
    Disjointness,
    PackingStrategy,
    cycle_mask,
)
from uniprior_coder.solvers.exact import ExactPacking
from uniprior_coder.solvers.greedy import GreedyPacking

logger = logging.getLogger(__name__)


def _strategy(mode: SolverMode, budget: int) -> PackingStrategy:
    if mode is SolverMode.EXACT:
        return ExactPacking(budget)
    return GreedyPacking()


def pack_cycles(
    graph: DirectedMultigraph,
    cycles: Sequence[SimpleCycle],
    strategy: PackingStrategy,
    disjointness: Disjointness = Disjointness.EDGE,
) -> CyclePacking:
    """Run a packing strategy over an explicit cycle list.

    Args:
        graph: The multigraph the cycles belong to
        cycles: Candidate cycles, in the order the strategy should see them
        strategy: Exact or greedy selection
        disjointness: Resource the chosen cycles may not share

    Returns:
        CyclePacking of the chosen cycles, in candidate order
    """
    masks = [cycle_mask(graph, cycle, disjointness) for cycle in cycles]
    chosen = strategy.select(masks)
    return CyclePacking(tuple(cycles[index] for index in chosen), graph, disjointness)


def max_edge_disjoint_packing(
    graph: DirectedMultigraph,
    mode: SolverMode = SolverMode.EXACT,
    cycle_limit: int = DEFAULT_CYCLE_LIMIT,
    budget: int = DEFAULT_SOLVER_BUDGET,
    cycles: Sequence[SimpleCycle] | None = None,
) -> CyclePacking:
    """Pack edge-disjoint cycles.

    Exact mode returns a packing of maximum cardinality nu_e; greedy mode a
    maximal packing built shortest cycle first, ties by edge index.

    Args:
        graph: The multigraph to pack
        mode: Exact or greedy
        cycle_limit: Cap on enumerated simple cycles
        budget: Search-node budget of the exact solver
        cycles: Precomputed output of enumerate_simple_cycles, if available

    Returns:
        The packing

    Raises:
        CycleLimitExceededError: If enumeration exceeds `cycle_limit`
        SolverBudgetExceededError: If the exact search exceeds `budget`

    Example:
        >>> triangle = DirectedMultigraph(3, ((0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)))
        >>> len(max_edge_disjoint_packing(triangle))
        3
    """
    if cycles is None:
        cycles = enumerate_simple_cycles(graph, cycle_limit)
    packing = pack_cycles(graph, cycles, _strategy(mode, budget), Disjointness.EDGE)
    logger.debug("%s edge-disjoint packing: %d cycles", mode.value, len(packing))
    return packing


def max_vertex_disjoint_packing(
    graph: DirectedMultigraph,
    mode: SolverMode = SolverMode.EXACT,
    cycle_limit: int = DEFAULT_CYCLE_LIMIT,
    budget: int = DEFAULT_SOLVER_BUDGET,
    cycles: Sequence[SimpleCycle] | None = None,
) -> CyclePacking:
    """Pack vertex-disjoint cycles; exact mode returns nu_v cycles.

    Candidates are the induced cycles only; nu_v is the same over them.

    Raises:
        CycleLimitExceededError: If enumeration exceeds `cycle_limit`
        SolverBudgetExceededError: If the exact search exceeds `budget`
    """
    if cycles is None:
        cycles = enumerate_chordless_cycles(graph, cycle_limit)
    packing = pack_cycles(graph, cycles, _strategy(mode, budget), Disjointness.VERTEX)
    logger.debug("%s vertex-disjoint packing: %d cycles", mode.value, len(packing))
    return packing


def maximal_packing(
    graph: DirectedMultigraph,
    rng: random.Random | None = None,
    cycle_limit: int = DEFAULT_CYCLE_LIMIT,
    cycles: Sequence[SimpleCycle] | None = None,
) -> CyclePacking:
    """Greedy maximal edge-disjoint packing in a random or fixed cycle order.

    Args:
        graph: The multigraph to pack
        rng: Source of the visiting order; None keeps enumeration order
        cycle_limit: Cap on enumerated simple cycles
        cycles: Precomputed output of enumerate_simple_cycles, if available

    Returns:
        A packing to which no further cycle can be added
    """
    if cycles is None:
        cycles = enumerate_simple_cycles(graph, cycle_limit)
    order = list(range(len(cycles)))
    if rng is not None:
        rng.shuffle(order)
    return pack_cycles(graph, cycles, GreedyPacking(order), Disjointness.EDGE)


def _rotate_to_smallest(graph: DirectedMultigraph, indices: list[int]) -> SimpleCycle:
    tails = [graph.edges[index][0] for index in indices]
    start = tails.index(min(tails))
    return SimpleCycle(tuple(indices[start:] + indices[:start]))


def eulerian_decomposition(
    graph: DirectedMultigraph, edge_order: Iterable[int] | None = None
) -> CyclePacking:
    """Partition the edges of an Eulerian multigraph into simple cycles.

    Walks along unused edges until a vertex repeats, peels off the closed
    cycle and continues from the repeated vertex. Outgoing edges are taken
    in `edge_order`, so different orders give different decompositions.

    Args:
        graph: A balanced, strongly connected multigraph
        edge_order: Permutation of edge indices (default: list order)

    Returns:
        Edge-disjoint packing covering every edge

    Raises:
        IsolatedVertexError: If some vertex has no incident edge
        NotEulerianError: If the graph is unbalanced or not strongly connected
        ValueError: If `edge_order` is not a permutation of the edge indices
    """
    if not is_eulerian(graph):
        raise NotEulerianError("cannot decompose a multigraph that is not Eulerian")
    order = list(range(graph.edge_count)) if edge_order is None else list(edge_order)
    if sorted(order) != list(range(graph.edge_count)):
        raise ValueError("edge order must be a permutation of the edge indices")

    outgoing: dict[int, deque[int]] = {v: deque() for v in range(graph.vertex_count)}
    for index in order:
        outgoing[graph.edges[index][0]].append(index)

    cycles: list[SimpleCycle] = []
    for index in order:
        path_vertices = [graph.edges[index][0]]
        path_edges: list[int] = []
        while outgoing[path_vertices[-1]]:
            edge = outgoing[path_vertices[-1]].popleft()
            head = graph.edges[edge][1]
            path_edges.append(edge)
            if head in path_vertices:
                cut = path_vertices.index(head)
                cycles.append(_rotate_to_smallest(graph, path_edges[cut:]))
                del path_edges[cut:]
                del path_vertices[cut + 1 :]
            else:
                path_vertices.append(head)

    logger.debug("decomposed %d edges into %d cycles", graph.edge_count, len(cycles))
    return CyclePacking(tuple(cycles), graph, Disjointness.EDGE)
