"""Base types for cycle packing and feedback set solvers.

This module defines the certificate types returned by the solvers and the
abstract PackingStrategy that the exact and greedy packers implement. A
strategy works on bitmasks: each cycle is an int whose set bits are the
resources it uses (edge indices for edge-disjoint packing, vertex indices
for vertex-disjoint packing), so one strategy serves both packing problems.
"""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

from uniprior_coder.exceptions import InvalidCycleError, InvalidPackingError
from uniprior_coder.graphs import DirectedMultigraph, SimpleCycle

DEFAULT_SOLVER_BUDGET = 2_000_000


class Disjointness(Enum):
    """Which resources the cycles of a packing may not share."""

    EDGE = "edge"
    VERTEX = "vertex"


def cycle_mask(graph: DirectedMultigraph, cycle: SimpleCycle, disjointness: Disjointness) -> int:
    """Bitmask of the edges or vertices a cycle uses."""
    if disjointness is Disjointness.EDGE:
        members = cycle.edge_indices
    else:
        members = cycle.vertices(graph)
    mask = 0
    for member in members:
        mask |= 1 << member
    return mask


def mask_members(mask: int) -> list[int]:
    """Positions of the set bits of a mask, ascending."""
    members = []
    while mask:
        low = mask & -mask
        members.append(low.bit_length() - 1)
        mask ^= low
    return members


@dataclass(frozen=True)
class CyclePacking:
    """Set of pairwise disjoint cycles of a multigraph.

    Attributes:
        cycles: The cycles, in the order the solver selected them
        graph: The multigraph the edge indices refer to
        disjointness: Whether cycles are edge-disjoint or vertex-disjoint

    Raises:
        InvalidPackingError: If a cycle is invalid or two cycles share a resource
    """

    cycles: tuple[SimpleCycle, ...]
    graph: DirectedMultigraph
    disjointness: Disjointness = Disjointness.EDGE

    def __post_init__(self) -> None:
        used = 0
        for cycle in self.cycles:
            try:
                cycle.validate(self.graph)
            except InvalidCycleError as error:
                raise InvalidPackingError(f"invalid cycle {cycle.edge_indices}: {error}") from error
            mask = cycle_mask(self.graph, cycle, self.disjointness)
            if used & mask:
                raise InvalidPackingError(
                    f"cycle {cycle.edge_indices} is not {self.disjointness.value}-disjoint "
                    "from the others"
                )
            used |= mask

    def __len__(self) -> int:
        return len(self.cycles)

    @property
    def edge_indices(self) -> frozenset[int]:
        """Every edge used by some cycle of the packing."""
        return frozenset(index for cycle in self.cycles for index in cycle.edge_indices)

    def covers_all_edges(self) -> bool:
        return len(self.edge_indices) == self.graph.edge_count


@dataclass(frozen=True)
class FeedbackEdgeSet:
    """Edges whose removal leaves the graph acyclic.

    Attributes:
        edge_indices: Indices into the multigraph edge list
    """

    edge_indices: frozenset[int]

    def __len__(self) -> int:
        return len(self.edge_indices)


@dataclass(frozen=True)
class FeedbackVertexSet:
    """Vertices whose removal leaves the graph acyclic.

    Attributes:
        vertex_indices: Indices of the removed vertices
    """

    vertex_indices: frozenset[int]

    def __len__(self) -> int:
        return len(self.vertex_indices)


class PackingStrategy(ABC):
    """Abstract base class for cycle packing strategies.

    Concrete strategies choose a set of pairwise disjoint bitmasks. The exact
    strategy maximizes the number chosen; the greedy strategy returns a
    maximal choice in a fixed order.
    """

    @abstractmethod
    def select(self, masks: Sequence[int]) -> tuple[int, ...]:
        """Choose pairwise disjoint masks.

        Args:
            masks: Resource bitmask of each candidate cycle, in the
                deterministic order candidates should be considered

        Returns:
            Ascending indices into `masks` of the chosen cycles
        """
        pass
