"""Demand-decomposable supergraphs.

A supergraph is demand-decomposable when it contains a spanning generalized
cycle whose maximal edge-disjoint packing keeps every extra demand inside a
single cycle: the extra demand starts at a message of some packed cycle and
ends at a supervertex of the same cycle. The cyclic code of that packing then
serves the extra demands too.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from uniprior_coder.exceptions import (
    InvalidCycleError,
    InvalidPackingError,
    InvalidSubgraphError,
    SearchLimitExceededError,
)
from uniprior_coder.graphs import is_acyclic, strongly_connected
from uniprior_coder.models import SolverLimits
from uniprior_coder.solvers.exact import max_exact_cover
from uniprior_coder.supergraph import (
    DemandEdge,
    DemandSupergraph,
    SupergraphCycle,
    enumerate_supergraph_cycles,
    is_generalized_cycle,
    natural_key,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """A spanning generalized cycle together with its decomposing packing.

    Attributes:
        core: Spanning generalized-cycle subgraph
        cycles: Edge-disjoint cycles of `core` covering all of its edges
    """

    core: DemandSupergraph
    cycles: tuple[SupergraphCycle, ...]

    def __len__(self) -> int:
        return len(self.cycles)


def _check_subgraph(graph: DemandSupergraph, core: DemandSupergraph) -> None:
    if dict(core.side_info) != dict(graph.side_info):
        raise InvalidSubgraphError("subgraph does not span the same receivers and messages")
    if not core.demands <= graph.demands:
        extra = min(core.demands - graph.demands, key=DemandEdge.sort_key)
        raise InvalidSubgraphError(f"demand {extra} is not in the supergraph")
    verdict = is_generalized_cycle(core)
    if not verdict:
        raise InvalidSubgraphError(f"subgraph is not a generalized cycle: {verdict.witness}")


def _check_packing(core: DemandSupergraph, cycles: Sequence[SupergraphCycle]) -> None:
    used: set[DemandEdge] = set()
    for cycle in cycles:
        try:
            cycle.validate(core)
        except InvalidCycleError as error:
            raise InvalidPackingError(f"invalid cycle {cycle}: {error}") from error
        if used & set(cycle.edges):
            raise InvalidPackingError(f"cycle {cycle} shares a demand edge with another cycle")
        used.update(cycle.edges)

    multigraph, provenance = core.holder_graph()
    packed = [index for index, edge in enumerate(provenance) if edge in used]
    if not is_acyclic(multigraph, removed_edges=packed):
        raise InvalidPackingError("packing is not maximal: a cycle remains outside it")


def _keeps_inside(cycle: SupergraphCycle, edge: DemandEdge) -> bool:
    return edge.message in cycle.messages and edge.receiver in cycle.supervertices


def is_demand_decomposable(
    graph: DemandSupergraph,
    core: DemandSupergraph,
    cycles: Sequence[SupergraphCycle],
) -> bool:
    """Check a supergraph against a given spanning generalized cycle and packing.

    Args:
        graph: The supergraph to test
        core: Spanning generalized-cycle subgraph of `graph`
        cycles: Maximal edge-disjoint packing of `core`

    Returns:
        True if every demand of `graph` outside the packed cycles starts at a
        message of some packed cycle and ends at a supervertex of that cycle

    Raises:
        InvalidSubgraphError: If `core` is not a spanning generalized-cycle subgraph
        InvalidPackingError: If the cycles are invalid, share an edge, or are
            not maximal in `core`

    Example:
        >>> is_demand_decomposable(extended, example, example_cycles)
        True
    """
    _check_subgraph(graph, core)
    _check_packing(core, cycles)
    packed = {edge for cycle in cycles for edge in cycle.edges}
    for edge in sorted(graph.demands - packed, key=DemandEdge.sort_key):
        if not any(_keeps_inside(cycle, edge) for cycle in cycles):
            logger.debug("demand %s leaves every packed cycle", edge)
            return False
    return True


def _spanning_cores(graph: DemandSupergraph, budget: int):
    """Yield spanning generalized cycles of `graph` in a deterministic order.

    Each message keeps exactly one of its demands; a receiver may keep at most
    s_j demands. Complete choices are tested for strong connectivity.
    """
    choices: list[list[DemandEdge]] = []
    for message in graph.messages:
        options = sorted(
            (edge for edge in graph.demands if edge.message == message),
            key=lambda edge: natural_key(edge.receiver),
        )
        if not options:
            return
        choices.append(options)

    capacity = {receiver: graph.s(receiver) for receiver in graph.receivers}
    chosen: list[DemandEdge] = []
    nodes = 0

    def search(position: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchLimitExceededError(budget)
        if position == len(choices):
            core = DemandSupergraph(graph.side_info, frozenset(chosen))
            multigraph, _ = core.holder_graph()
            if not multigraph.isolated_vertices() and strongly_connected(multigraph):
                yield core
            return
        for edge in choices[position]:
            if capacity[edge.receiver]:
                capacity[edge.receiver] -= 1
                chosen.append(edge)
                yield from search(position + 1)
                chosen.pop()
                capacity[edge.receiver] += 1

    yield from search(0)


def decomposing_packing(
    graph: DemandSupergraph, core: DemandSupergraph, limits: SolverLimits | None = None
) -> tuple[SupergraphCycle, ...] | None:
    """Largest maximal packing of `core` under which `graph` is demand-decomposable.

    A maximal packing of a generalized cycle covers all of its edges, so the
    search is an exact cover of the core's demands by cycles that keep every
    extra demand on their own messages inside themselves.

    Returns:
        The packing, or None when no maximal packing decomposes `graph`

    Raises:
        CycleLimitExceededError: If the core has more cycles than the cap
        SolverBudgetExceededError: If the exact cover search exceeds its budget
    """
    limits = limits or SolverLimits()
    extras = graph.demands - core.demands
    cycles = enumerate_supergraph_cycles(core, limits.cycle_cap)
    admissible = [
        cycle
        for cycle in cycles
        if all(
            edge.receiver in cycle.supervertices
            for edge in extras
            if edge.message in cycle.messages
        )
    ]
    position = {edge: index for index, edge in enumerate(core.sorted_demands)}
    masks = [sum(1 << position[edge] for edge in cycle.edges) for cycle in admissible]
    cover = max_exact_cover(masks, (1 << len(position)) - 1, limits.solver_budget)
    if cover is None:
        return None
    return tuple(admissible[index] for index in cover)


def find_spanning_generalized_cycle(
    graph: DemandSupergraph, limits: SolverLimits | None = None
) -> Decomposition | None:
    """Search for a spanning generalized cycle that decomposes `graph`.

    Candidate cores are visited in canonical order (messages in label order,
    each trying its demanders in label order); the first core admitting a
    decomposing packing is returned with its largest such packing. A
    generalized cycle yields itself with a maximum packing.

    Args:
        graph: Any valid supergraph
        limits: Search budget, cycle cap and solver budget

    Returns:
        The decomposition, or None if no spanning generalized cycle decomposes `graph`

    Raises:
        SearchLimitExceededError: If the candidate search exceeds its budget
    """
    limits = limits or SolverLimits()
    for core in _spanning_cores(graph, limits.search_budget):
        cycles = decomposing_packing(graph, core, limits)
        if cycles is not None:
            logger.debug("found decomposition with %d cycles", len(cycles))
            return Decomposition(core, cycles)
    return None
