"""Reproducible random instances.

Instances are drawn by superposing random directed simple cycles on the
receivers until the multigraph is strongly connected; every such
superposition is Eulerian and converts into a generalized cycle. The planted
cycles form a packing that covers every demand, so extra demands kept inside
a planted cycle give a demand-decomposable instance by construction.

All randomness comes from one random.Random seeded by the caller: the same
seed and parameters always produce the same instance text.
"""

import logging
import random
from dataclasses import dataclass

from uniprior_coder.exceptions import (
    ConfigurationError,
    MinorBudgetExceededError,
    RetryLimitExceededError,
)
from uniprior_coder.formats import serialize_problem
from uniprior_coder.graphs import DirectedMultigraph, strongly_connected
from uniprior_coder.minors import UndirectedGraph, has_petersen_family_minor, underlying_graph
from uniprior_coder.models import SolverLimits
from uniprior_coder.solvers import max_edge_disjoint_packing, min_feedback_edge_set
from uniprior_coder.supergraph import DemandEdge, DemandSupergraph, SupergraphCycle
from uniprior_coder.transforms import from_eulerian

logger = logging.getLogger(__name__)

DEFAULT_RETRY_LIMIT = 1_000


@dataclass(frozen=True)
class GeneratedInstance:
    """A random instance with the structure it was built from.

    Attributes:
        problem: The instance, including extra demands
        core: The generalized cycle before extra demands were added
        cycles: Planted cycles of `core`, covering all of its demands
        extras: Extra demands added inside planted cycles
        seed: Seed the instance was drawn with
    """

    problem: DemandSupergraph
    core: DemandSupergraph
    cycles: tuple[SupergraphCycle, ...]
    extras: tuple[DemandEdge, ...]
    seed: int

    def render(self) -> str:
        """Instance text with the planted packing recorded as comments."""
        header = [
            f"random instance: receivers={self.problem.m} cycles={len(self.cycles)} "
            f"extra={len(self.extras)} seed={self.seed}",
        ]
        header.extend(f"cycle C{k}: {cycle}" for k, cycle in enumerate(self.cycles, start=1))
        header.extend(f"extra {edge}" for edge in self.extras)
        return serialize_problem(self.problem, tuple(header))


def random_cycle_superposition(
    rng: random.Random,
    receivers: int,
    cycles: int,
    max_cycle_length: int | None = None,
    retry_limit: int = DEFAULT_RETRY_LIMIT,
) -> tuple[DirectedMultigraph, list[list[int]]]:
    """Draw a strongly connected superposition of random simple cycles.

    Args:
        rng: Source of randomness
        receivers: Number of vertices m (at least 2)
        cycles: Number of cycles r (at least 1)
        max_cycle_length: Longest cycle drawn (default: m)
        retry_limit: Attempts before giving up

    Returns:
        The multigraph and, per planted cycle, its edge indices in cycle order

    Raises:
        ConfigurationError: If m < 2, r < 1 or max_cycle_length < 2
        RetryLimitExceededError: If no attempt touches every vertex and is
            strongly connected
    """
    if receivers < 2:
        raise ConfigurationError(f"need at least 2 receivers, got {receivers}")
    if cycles < 1:
        raise ConfigurationError(f"need at least 1 cycle, got {cycles}")
    longest = receivers if max_cycle_length is None else min(receivers, max_cycle_length)
    if longest < 2:
        raise ConfigurationError(f"max cycle length must be at least 2, got {max_cycle_length}")

    for attempt in range(1, retry_limit + 1):
        edges: list[tuple[int, int]] = []
        planted: list[list[int]] = []
        for _ in range(cycles):
            length = rng.randint(2, longest)
            vertices = rng.sample(range(receivers), length)
            start = len(edges)
            edges.extend((vertices[k], vertices[(k + 1) % length]) for k in range(length))
            planted.append(list(range(start, len(edges))))
        graph = DirectedMultigraph(receivers, tuple(edges))
        if not graph.isolated_vertices() and strongly_connected(graph):
            logger.debug("cycle superposition connected after %d attempts", attempt)
            return graph, planted
    raise RetryLimitExceededError(retry_limit)


def generate_instance(
    receivers: int,
    cycles: int,
    extra: int = 0,
    seed: int = 0,
    max_cycle_length: int | None = None,
    retry_limit: int = DEFAULT_RETRY_LIMIT,
) -> GeneratedInstance:
    """Generate a generalized cycle, optionally extended to a demand-decomposable instance.

    Args:
        receivers: Number of receivers m (at least 2)
        cycles: Number of superposed cycles r (at least 1)
        extra: Number of extra demands k placed inside planted cycles; fewer
            are added when fewer candidates exist
        seed: Random seed
        max_cycle_length: Longest planted cycle (default: m)
        retry_limit: Attempts at drawing a connected superposition

    Returns:
        GeneratedInstance

    Raises:
        ConfigurationError: If a parameter is out of range
        RetryLimitExceededError: If no connected superposition was drawn

    Example:
        >>> instance = generate_instance(receivers=4, cycles=4, extra=2, seed=1)
        >>> is_demand_decomposable(instance.problem, instance.core, instance.cycles)
        True
    """
    if extra < 0:
        raise ConfigurationError(f"extra demand count must be non-negative, got {extra}")
    rng = random.Random(seed)
    graph, planted = random_cycle_superposition(
        rng, receivers, cycles, max_cycle_length, retry_limit
    )
    core = from_eulerian(graph)
    demand_of = [DemandEdge(f"x{k + 1}", str(head + 1)) for k, (_, head) in enumerate(graph.edges)]
    supergraph_cycles = tuple(
        SupergraphCycle(tuple(demand_of[index] for index in indices)) for indices in planted
    )

    candidates = sorted(
        {
            DemandEdge(message, receiver)
            for cycle in supergraph_cycles
            for message in cycle.messages
            for receiver in cycle.supervertices
            if receiver != core.holder[message]
            and DemandEdge(message, receiver) not in core.demands
        },
        key=DemandEdge.sort_key,
    )
    if extra > len(candidates):
        logger.warning("only %d extra demands are possible, %d requested", len(candidates), extra)
    chosen = rng.sample(candidates, min(extra, len(candidates)))
    extras = tuple(sorted(chosen, key=DemandEdge.sort_key))
    problem = DemandSupergraph(core.side_info, core.demands | frozenset(extras))
    return GeneratedInstance(problem, core, supergraph_cycles, extras, seed)


@dataclass(frozen=True)
class GapInstance:
    """An Eulerian multigraph whose packing and feedback numbers differ.

    Attributes:
        graph: The multigraph
        nu_e: Maximum number of edge-disjoint cycles
        tau_e: Minimum feedback edge set size
        minor: Petersen-family member found as a minor of its underlying
            graph, None if the minor search could not name one
    """

    graph: DirectedMultigraph
    nu_e: int
    tau_e: int
    minor: UndirectedGraph | None


def search_gap_instance(
    receivers: int,
    cycles: int,
    attempts: int,
    seed: int = 0,
    limits: SolverLimits | None = None,
) -> GapInstance | None:
    """Search random cycle superpositions for one with nu_e < tau_e.

    Only draws whose underlying graph has at least 15 edges can contain a
    Petersen-family minor, so sparser draws are skipped without solving.

    Args:
        receivers: Vertices per draw
        cycles: Superposed cycles per draw
        attempts: Number of draws
        seed: Random seed
        limits: Resource limits for the solvers and the minor test

    Returns:
        The first gap instance found, or None
    """
    limits = limits or SolverLimits()
    rng = random.Random(seed)
    for attempt in range(attempts):
        graph, _ = random_cycle_superposition(rng, receivers, cycles, None, limits.retry_limit)
        host = underlying_graph(graph)
        if host.edge_count < 15:
            continue
        packing = max_edge_disjoint_packing(
            graph, cycle_limit=limits.cycle_cap, budget=limits.solver_budget
        )
        feedback = min_feedback_edge_set(
            graph,
            cycle_limit=limits.cycle_cap,
            budget=limits.solver_budget,
            lower_bound=len(packing),
        )
        if len(packing) < len(feedback):
            logger.info("gap instance found at attempt %d", attempt + 1)
            try:
                minor = has_petersen_family_minor(host, limits)
            except MinorBudgetExceededError as error:
                logger.warning("minor search abandoned: %s", error)
                minor = None
            return GapInstance(graph, len(packing), len(feedback), minor)
    return None
