"""Directed multigraph core.

A DirectedMultigraph is an edge list over vertices 0..vertex_count-1. Parallel
edges are told apart by their position in the list, so cycle packings and
feedback sets are sets of edge indices. Strong connectivity and Johnson's
simple-cycle enumeration are delegated to networkx on a collapsed view; the
enumeration then expands every vertex cycle over the parallel edges it uses.
"""

import itertools
import logging
from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx

from uniprior_coder.exceptions import (
    CycleLimitExceededError,
    InvalidCycleError,
    InvalidGraphError,
    IsolatedVertexError,
)

logger = logging.getLogger(__name__)

DEFAULT_CYCLE_LIMIT = 100_000


@dataclass(frozen=True)
class DirectedMultigraph:
    """Directed multigraph stored as an ordered edge list.

    Attributes:
        vertex_count: Number of vertices, indexed 0..vertex_count-1
        edges: Ordered (tail, head) pairs; repeats encode parallel edges
        allow_self_loops: Whether tail == head is permitted (default: False)
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    allow_self_loops: bool = False

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidGraphError(f"vertex count must be non-negative, got {self.vertex_count}")
        object.__setattr__(self, "edges", tuple((int(t), int(h)) for t, h in self.edges))
        for index, (tail, head) in enumerate(self.edges):
            if not (0 <= tail < self.vertex_count and 0 <= head < self.vertex_count):
                raise InvalidGraphError(f"edge {index} ({tail}, {head}) has an unknown endpoint")
            if tail == head and not self.allow_self_loops:
                raise InvalidGraphError(f"edge {index} is a self-loop at vertex {tail}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def out_degree(self, vertex: int) -> int:
        return sum(1 for tail, _ in self.edges if tail == vertex)

    def in_degree(self, vertex: int) -> int:
        return sum(1 for _, head in self.edges if head == vertex)

    def isolated_vertices(self) -> list[int]:
        """Vertices with neither incoming nor outgoing edges."""
        touched = {v for edge in self.edges for v in edge}
        return [v for v in range(self.vertex_count) if v not in touched]

    def to_networkx(self, exclude_edges: Iterable[int] = ()) -> nx.MultiDiGraph:
        """Build a networkx view keyed by edge index.

        Args:
            exclude_edges: Edge indices left out of the view

        Returns:
            MultiDiGraph on all vertices with one keyed edge per kept index
        """
        excluded = set(exclude_edges)
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for index, (tail, head) in enumerate(self.edges):
            if index not in excluded:
                graph.add_edge(tail, head, key=index)
        return graph


@dataclass(frozen=True)
class SimpleCycle:
    """A simple cycle given as edge indices into a multigraph.

    Cycles produced by enumerate_simple_cycles start at their smallest vertex,
    so equal cycles compare equal.

    Attributes:
        edge_indices: Consecutive edges of the cycle
    """

    edge_indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edge_indices)

    def vertices(self, graph: DirectedMultigraph) -> tuple[int, ...]:
        """Tail vertices of the cycle's edges, in cycle order."""
        return tuple(graph.edges[index][0] for index in self.edge_indices)

    def validate(self, graph: DirectedMultigraph) -> None:
        """Check that the edges form a simple cycle of the graph.

        Raises:
            InvalidCycleError: If an index is unknown, consecutive edges do not
                meet, or a vertex repeats
        """
        if not self.edge_indices:
            raise InvalidCycleError("cycle has no edges")
        for index in self.edge_indices:
            if not 0 <= index < graph.edge_count:
                raise InvalidCycleError(f"edge index {index} is not in the graph")
        if len(set(self.edge_indices)) != len(self.edge_indices):
            raise InvalidCycleError("cycle repeats an edge")
        length = len(self.edge_indices)
        for position, index in enumerate(self.edge_indices):
            following = self.edge_indices[(position + 1) % length]
            if graph.edges[index][1] != graph.edges[following][0]:
                raise InvalidCycleError(f"edge {index} does not lead into edge {following}")
        tails = self.vertices(graph)
        if len(set(tails)) != len(tails):
            raise InvalidCycleError("cycle visits a vertex twice")
        if length == 1 and not graph.allow_self_loops:
            raise InvalidCycleError("cycle of length 1 in a graph without self-loops")


def strongly_connected(graph: DirectedMultigraph) -> bool:
    """Return True if every vertex reaches every other vertex.

    A graph with at most one vertex is strongly connected.
    """
    if graph.vertex_count <= 1:
        return True
    return nx.is_strongly_connected(graph.to_networkx())


def is_eulerian(graph: DirectedMultigraph) -> bool:
    """Return True if the graph is balanced and strongly connected.

    Args:
        graph: Multigraph with at least one edge incident on each vertex

    Raises:
        IsolatedVertexError: If some vertex has no incident edge; callers must
            prune isolated vertices first
    """
    isolated = graph.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(isolated[0])
    out_degrees = [0] * graph.vertex_count
    in_degrees = [0] * graph.vertex_count
    for tail, head in graph.edges:
        out_degrees[tail] += 1
        in_degrees[head] += 1
    if out_degrees != in_degrees:
        return False
    return strongly_connected(graph)


def enumerate_simple_cycles(
    graph: DirectedMultigraph, limit: int = DEFAULT_CYCLE_LIMIT
) -> list[SimpleCycle]:
    """Enumerate every simple cycle of a multigraph exactly once.

    Johnson's algorithm runs on the collapsed simple digraph; each vertex cycle
    then yields one SimpleCycle per choice of parallel edge on every hop.

    Args:
        graph: The multigraph to search
        limit: Maximum number of cycles to produce

    Returns:
        Cycles sorted by length, then by edge indices

    Raises:
        CycleLimitExceededError: If the graph has more than `limit` cycles
    """
    parallel: dict[tuple[int, int], list[int]] = {}
    for index, edge in enumerate(graph.edges):
        parallel.setdefault(edge, []).append(index)

    collapsed = nx.DiGraph()
    collapsed.add_nodes_from(range(graph.vertex_count))
    collapsed.add_edges_from(parallel)

    cycles: list[SimpleCycle] = []
    for vertex_cycle in nx.simple_cycles(collapsed):
        start = vertex_cycle.index(min(vertex_cycle))
        ordered = vertex_cycle[start:] + vertex_cycle[:start]
        hops = [
            parallel[(ordered[i], ordered[(i + 1) % len(ordered)])] for i in range(len(ordered))
        ]
        for choice in itertools.product(*hops):
            cycles.append(SimpleCycle(tuple(choice)))
            if len(cycles) > limit:
                raise CycleLimitExceededError(limit)

    cycles.sort(key=lambda cycle: (len(cycle), cycle.edge_indices))
    logger.debug("enumerated %d simple cycles on %d edges", len(cycles), graph.edge_count)
    return cycles


def enumerate_chordless_cycles(
    graph: DirectedMultigraph, limit: int = DEFAULT_CYCLE_LIMIT
) -> list[SimpleCycle]:
    """Enumerate the induced cycles of a multigraph, one per vertex cycle.

    A cycle is induced when the vertices it visits span no other edge of the
    collapsed simple digraph. Every simple cycle contains an induced cycle on
    a subset of its vertices, so maximum vertex packings and minimum vertex
    hitting sets have the same size over both families. Each hop uses the
    lowest-indexed parallel edge.

    Args:
        graph: The multigraph to search
        limit: Maximum number of cycles to produce

    Returns:
        Cycles sorted by length, then by edge indices

    Raises:
        CycleLimitExceededError: If the graph has more than `limit` induced cycles
    """
    first: dict[tuple[int, int], int] = {}
    for index, edge in enumerate(graph.edges):
        first.setdefault(edge, index)

    collapsed = nx.DiGraph()
    collapsed.add_nodes_from(range(graph.vertex_count))
    collapsed.add_edges_from(first)

    cycles: list[SimpleCycle] = []
    for vertex_cycle in nx.chordless_cycles(collapsed):
        start = vertex_cycle.index(min(vertex_cycle))
        ordered = vertex_cycle[start:] + vertex_cycle[:start]
        hops = len(ordered)
        cycles.append(
            SimpleCycle(tuple(first[(ordered[i], ordered[(i + 1) % hops])] for i in range(hops)))
        )
        if len(cycles) > limit:
            raise CycleLimitExceededError(limit)

    cycles.sort(key=lambda cycle: (len(cycle), cycle.edge_indices))
    logger.debug("enumerated %d induced cycles on %d edges", len(cycles), graph.edge_count)
    return cycles


def is_acyclic(
    graph: DirectedMultigraph,
    removed_edges: Iterable[int] = (),
    removed_vertices: Iterable[int] = (),
) -> bool:
    """Return True if no cycle survives the removal of the given edges and vertices."""
    view = graph.to_networkx(exclude_edges=removed_edges)
    view.remove_nodes_from(list(removed_vertices))
    return nx.is_directed_acyclic_graph(view)
