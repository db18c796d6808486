"""Demand supergraphs of uniprior index coding problems.

A uniprior problem has receivers with pairwise disjoint side-information sets.
Its demand supergraph has one supervertex per receiver, holding its
side-information messages as subvertices, and one demand edge from a message
subvertex to every receiver that demands the message.

Supergraph cycles are computed through the holder graph: a multigraph on the
receivers with one edge holder(x) -> j per demand (x, j). Supergraph cycles
and simple cycles of the holder graph correspond one to one through the edge
provenance.
"""

import logging
import re
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from uniprior_coder.exceptions import (
    DemandInOwnSideInfoError,
    EmptySideInfoError,
    InvalidCycleError,
    NonDisjointSideInfoError,
    NotGeneralizedCycleError,
    UnhousedDemandedMessageError,
    UnknownReceiverError,
)
from uniprior_coder.graphs import (
    DEFAULT_CYCLE_LIMIT,
    DirectedMultigraph,
    enumerate_simple_cycles,
    strongly_connected,
)

logger = logging.getLogger(__name__)

_DIGITS = re.compile(r"(\d+)")


def natural_key(label: str) -> tuple:
    """Sort key comparing digit runs numerically, so 'x2' < 'x10'.

    Labels equal up to leading zeros ('x1', 'x01') fall back to plain string order.
    """
    parts = tuple(
        (0, int(part), "") if part.isdigit() else (1, 0, part)
        for part in _DIGITS.split(label)
        if part
    )
    return parts, label


@dataclass(frozen=True)
class DemandEdge:
    """Demand of `message` by `receiver`.

    Attributes:
        message: The demanded message
        receiver: The demanding receiver
    """

    message: str
    receiver: str

    def sort_key(self) -> tuple:
        return (natural_key(self.message), natural_key(self.receiver))

    def __str__(self) -> str:
        return f"({self.message},{self.receiver})"


@dataclass(frozen=True)
class DemandSupergraph:
    """Uniprior index coding problem as a demand supergraph.

    The constructor checks every structural invariant: side-information sets
    are non-empty and pairwise disjoint, every demand names a known receiver,
    every demanded message is held by some receiver, and no receiver demands
    a message it already holds. Messages that are never demanded are allowed.

    Attributes:
        side_info: Side-information set S(j) of each receiver j
        demands: Demand edges (x, j)

    Raises:
        EmptySideInfoError: If a receiver holds no message
        NonDisjointSideInfoError: If two receivers hold the same message
        UnknownReceiverError: If a demand names an unknown receiver
        UnhousedDemandedMessageError: If a demanded message has no holder
        DemandInOwnSideInfoError: If a receiver demands its own message
    """

    side_info: Mapping[str, frozenset[str]]
    demands: frozenset[DemandEdge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        side_info = {receiver: frozenset(held) for receiver, held in self.side_info.items()}
        object.__setattr__(self, "side_info", side_info)
        object.__setattr__(self, "demands", frozenset(self.demands))

        owners: dict[str, str] = {}
        for receiver in sorted(side_info, key=natural_key):
            held = side_info[receiver]
            if not held:
                raise EmptySideInfoError(receiver)
            for message in sorted(held, key=natural_key):
                if message in owners:
                    raise NonDisjointSideInfoError(message, (owners[message], receiver))
                owners[message] = receiver

        for edge in sorted(self.demands, key=DemandEdge.sort_key):
            if edge.receiver not in side_info:
                raise UnknownReceiverError(edge.receiver)
            if edge.message not in owners:
                raise UnhousedDemandedMessageError(edge.message)
            if owners[edge.message] == edge.receiver:
                raise DemandInOwnSideInfoError(edge.message, edge.receiver)

    @cached_property
    def receivers(self) -> tuple[str, ...]:
        """Receivers in canonical (natural label) order."""
        return tuple(sorted(self.side_info, key=natural_key))

    @cached_property
    def messages(self) -> tuple[str, ...]:
        """Messages in canonical (natural label) order."""
        return tuple(sorted(self.holder, key=natural_key))

    @cached_property
    def holder(self) -> dict[str, str]:
        """Receiver holding each message as side information."""
        return {
            message: receiver for receiver, held in self.side_info.items() for message in held
        }

    @cached_property
    def sorted_demands(self) -> tuple[DemandEdge, ...]:
        """Demand edges ordered by message, then receiver."""
        return tuple(sorted(self.demands, key=DemandEdge.sort_key))

    @property
    def m(self) -> int:
        return len(self.side_info)

    @property
    def n(self) -> int:
        return len(self.holder)

    def s(self, receiver: str) -> int:
        return len(self.side_info[receiver])

    def demanded_by(self, receiver: str) -> tuple[str, ...]:
        """Messages demanded by a receiver, D(j), in canonical order."""
        return tuple(
            sorted(
                (edge.message for edge in self.demands if edge.receiver == receiver),
                key=natural_key,
            )
        )

    def in_degree(self, receiver: str) -> int:
        return sum(1 for edge in self.demands if edge.receiver == receiver)

    def holder_graph(
        self, demands: tuple[DemandEdge, ...] | None = None
    ) -> tuple[DirectedMultigraph, tuple[DemandEdge, ...]]:
        """Multigraph on receivers with one edge holder(x) -> j per demand (x, j).

        Args:
            demands: Demand edges to include, in edge-list order (default:
                every demand in canonical order)

        Returns:
            The multigraph (vertex i is receivers[i]) and the demand edge
            behind each multigraph edge
        """
        provenance = self.sorted_demands if demands is None else tuple(demands)
        index = {receiver: i for i, receiver in enumerate(self.receivers)}
        edges = tuple(
            (index[self.holder[edge.message]], index[edge.receiver]) for edge in provenance
        )
        return DirectedMultigraph(len(self.receivers), edges), provenance


@dataclass(frozen=True)
class SupergraphCycle:
    """Cycle of a demand supergraph.

    A cycle ((x^{i0}, i1), (x^{i1}, i2), ..., (x^{i(L-1)}, i0)) is a sequence
    of distinct demand edges where the receiver of each edge holds the message
    of the next one and the visited supervertices are distinct.

    Attributes:
        edges: Demand edges in cycle order
    """

    edges: tuple[DemandEdge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def messages(self) -> tuple[str, ...]:
        """Message subvertices on the cycle, in cycle order."""
        return tuple(edge.message for edge in self.edges)

    @property
    def supervertices(self) -> tuple[str, ...]:
        """Supervertices visited by the cycle; edge k enters supervertex k+1."""
        return tuple(edge.receiver for edge in self.edges[-1:] + self.edges[:-1])

    def validate(self, graph: DemandSupergraph) -> None:
        """Check the cycle against a supergraph.

        Raises:
            InvalidCycleError: If an edge is missing from the supergraph, edges
                repeat, consecutive edges do not chain, or a supervertex repeats
        """
        if not self.edges:
            raise InvalidCycleError("cycle has no edges")
        if len(set(self.edges)) != len(self.edges):
            raise InvalidCycleError("cycle repeats a demand edge")
        for position, edge in enumerate(self.edges):
            if edge not in graph.demands:
                raise InvalidCycleError(f"demand {edge} is not in the supergraph")
            following = self.edges[(position + 1) % len(self.edges)]
            if graph.holder[following.message] != edge.receiver:
                raise InvalidCycleError(
                    f"receiver {edge.receiver!r} of {edge} does not hold {following.message!r}"
                )
        if len(set(self.supervertices)) != len(self.edges):
            raise InvalidCycleError("cycle visits a supervertex twice")

    def __str__(self) -> str:
        return "(" + ",".join(str(edge) for edge in self.edges) + ")"


def enumerate_supergraph_cycles(
    graph: DemandSupergraph, limit: int = DEFAULT_CYCLE_LIMIT
) -> list[SupergraphCycle]:
    """Enumerate every cycle of a supergraph exactly once.

    Raises:
        CycleLimitExceededError: If there are more than `limit` cycles
    """
    multigraph, provenance = graph.holder_graph()
    return [
        SupergraphCycle(tuple(provenance[index] for index in cycle.edge_indices))
        for cycle in enumerate_simple_cycles(multigraph, limit)
    ]


class Condition(Enum):
    """Conditions a generalized cycle must satisfy, in checking order."""

    IN_DEGREE = "in-degree"
    DEMANDED_ONCE = "demanded-once"
    CONNECTED = "connected"


@dataclass(frozen=True)
class Violation:
    """A violated generalized-cycle condition.

    Attributes:
        condition: Which condition failed
        subject: Offending receiver or message, None for connectivity
        expected: Required count, when the condition is a count
        actual: Observed count, when the condition is a count
    """

    condition: Condition
    subject: str | None = None
    expected: int | None = None
    actual: int | None = None

    def __str__(self) -> str:
        if self.condition is Condition.IN_DEGREE:
            return f"in-degree({self.subject})={self.actual} != s_{self.subject}={self.expected}"
        if self.condition is Condition.DEMANDED_ONCE:
            return f"message {self.subject} demanded {self.actual} times, expected once"
        return "associated Eulerian graph is not strongly connected"


@dataclass(frozen=True)
class GeneralizedCycleVerdict:
    """Outcome of the generalized-cycle test.

    Attributes:
        violations: Every violated condition, in checking order
    """

    violations: tuple[Violation, ...] = ()

    @property
    def is_generalized_cycle(self) -> bool:
        return not self.violations

    @property
    def witness(self) -> Violation | None:
        """The first violated condition, or None for a generalized cycle."""
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.is_generalized_cycle


def is_generalized_cycle(graph: DemandSupergraph) -> GeneralizedCycleVerdict:
    """Test whether a supergraph is a generalized cycle.

    The conditions are checked in this order: the in-degree of every
    supervertex j equals s_j; every message is demanded exactly once; the
    holder graph is strongly connected with no isolated receiver.

    Args:
        graph: A valid demand supergraph

    Returns:
        Verdict listing every violation; the first one is the witness
    """
    violations: list[Violation] = []
    in_degrees = Counter(edge.receiver for edge in graph.demands)
    for receiver in graph.receivers:
        if in_degrees[receiver] != graph.s(receiver):
            violations.append(
                Violation(Condition.IN_DEGREE, receiver, graph.s(receiver), in_degrees[receiver])
            )

    demand_counts = Counter(edge.message for edge in graph.demands)
    for message in graph.messages:
        if demand_counts[message] != 1:
            violations.append(
                Violation(Condition.DEMANDED_ONCE, message, 1, demand_counts[message])
            )

    multigraph, _ = graph.holder_graph()
    if multigraph.isolated_vertices() or not strongly_connected(multigraph):
        violations.append(Violation(Condition.CONNECTED))

    return GeneralizedCycleVerdict(tuple(violations))


def require_generalized_cycle(graph: DemandSupergraph) -> None:
    """Raise NotGeneralizedCycleError unless the supergraph is a generalized cycle."""
    verdict = is_generalized_cycle(graph)
    if not verdict:
        raise NotGeneralizedCycleError(str(verdict.witness))


@dataclass(frozen=True)
class ProblemClassification:
    """Structural classes a uniprior problem belongs to.

    Attributes:
        single_unicast: Every message is demanded exactly once
        single_uniprior: Every receiver holds exactly one message
        generalized_cycle: Verdict of the generalized-cycle test
    """

    single_unicast: bool
    single_uniprior: bool
    generalized_cycle: GeneralizedCycleVerdict


def classify_problem(graph: DemandSupergraph) -> ProblemClassification:
    """Classify a uniprior problem.

    For a single uniprior problem the supergraph is the information flow graph
    and a generalized cycle is a plain directed cycle of it.
    """
    demand_counts = Counter(edge.message for edge in graph.demands)
    return ProblemClassification(
        single_unicast=all(demand_counts[message] == 1 for message in graph.messages),
        single_uniprior=all(graph.s(receiver) == 1 for receiver in graph.receivers),
        generalized_cycle=is_generalized_cycle(graph),
    )
