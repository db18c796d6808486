"""Conversions between supergraphs, side-information graphs and Eulerian graphs.

A generalized cycle is also a single unicast problem: receiver j can be split
into s_j copies, each demanding one message. Its side-information graph has one
vertex per message and an edge x -> y whenever the demander of x holds y. Its
associated Eulerian graph is the holder graph on the receivers, which is
balanced and strongly connected for every generalized cycle.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from uniprior_coder.exceptions import (
    InvalidFeedbackSetError,
    IsolatedVertexError,
    NotEulerianError,
)
from uniprior_coder.graphs import DirectedMultigraph, SimpleCycle, is_acyclic, is_eulerian
from uniprior_coder.solvers.base import FeedbackVertexSet
from uniprior_coder.supergraph import (
    DemandEdge,
    DemandSupergraph,
    SupergraphCycle,
    require_generalized_cycle,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SideInfoGraph:
    """Side-information graph of a generalized cycle.

    Attributes:
        graph: Simple digraph; vertex i is message vertex_labels[i]
        vertex_labels: Message of each vertex, in canonical order
    """

    graph: DirectedMultigraph
    vertex_labels: tuple[str, ...]

    def vertex_of(self, message: str) -> int:
        return self.vertex_labels.index(message)


@dataclass(frozen=True)
class EulerianView:
    """Eulerian graph associated with a generalized cycle.

    Attributes:
        graph: Multigraph; vertex i is receiver vertex_labels[i]
        vertex_labels: Receiver of each vertex, in canonical order
        edge_provenance: Demand edge behind each multigraph edge
    """

    graph: DirectedMultigraph
    vertex_labels: tuple[str, ...]
    edge_provenance: tuple[DemandEdge, ...]

    def edge_of(self, demand: DemandEdge) -> int:
        return self.edge_provenance.index(demand)

    def to_supergraph_cycle(self, cycle: SimpleCycle) -> SupergraphCycle:
        """Map a simple cycle of the view back to the supergraph."""
        return SupergraphCycle(tuple(self.edge_provenance[index] for index in cycle.edge_indices))

    def from_supergraph_cycle(self, cycle: SupergraphCycle) -> SimpleCycle:
        """Map a supergraph cycle to the view, starting at its smallest vertex."""
        indices = [self.edge_of(edge) for edge in cycle.edges]
        tails = [self.graph.edges[index][0] for index in indices]
        start = tails.index(min(tails))
        return SimpleCycle(tuple(indices[start:] + indices[:start]))


def to_side_information_graph(graph: DemandSupergraph) -> SideInfoGraph:
    """Build the side-information graph of a generalized cycle.

    For every demand (x, j) there is an edge from x to each message of S(j),
    so the graph has sum over j of s_j squared edges.

    Raises:
        NotGeneralizedCycleError: If the supergraph is not a generalized cycle
    """
    require_generalized_cycle(graph)
    labels = graph.messages
    index = {message: i for i, message in enumerate(labels)}
    edges = []
    for demand in graph.sorted_demands:
        for held in sorted(graph.side_info[demand.receiver], key=index.__getitem__):
            edges.append((index[demand.message], index[held]))
    return SideInfoGraph(DirectedMultigraph(len(labels), tuple(edges)), labels)


def to_eulerian(graph: DemandSupergraph) -> EulerianView:
    """Build the Eulerian graph associated with a generalized cycle.

    Each demand (x, j) with x held by i becomes one edge i -> j carrying the
    demand as provenance.

    Raises:
        NotGeneralizedCycleError: If the supergraph is not a generalized cycle
    """
    require_generalized_cycle(graph)
    multigraph, provenance = graph.holder_graph()
    if not is_eulerian(multigraph):
        raise NotEulerianError("holder graph of a generalized cycle is not Eulerian")
    return EulerianView(multigraph, graph.receivers, provenance)


def from_eulerian(graph: DirectedMultigraph) -> DemandSupergraph:
    """Build a generalized cycle whose Eulerian graph is the given multigraph.

    Vertex v becomes receiver str(v + 1). Edge k becomes message x{k+1}, held
    by the edge's tail and demanded by its head, so every supervertex gets one
    fresh message per outgoing edge. to_eulerian of the result reproduces the
    edge list in the same order.

    Raises:
        IsolatedVertexError: If some vertex has no incident edge
        NotEulerianError: If the graph is unbalanced or not strongly connected
    """
    isolated = graph.isolated_vertices()
    if isolated:
        raise IsolatedVertexError(isolated[0])
    if not is_eulerian(graph):
        raise NotEulerianError("multigraph is not balanced and strongly connected")

    side_info: dict[str, set[str]] = {str(v + 1): set() for v in range(graph.vertex_count)}
    demands = set()
    for k, (tail, head) in enumerate(graph.edges):
        message = f"x{k + 1}"
        side_info[str(tail + 1)].add(message)
        demands.add(DemandEdge(message, str(head + 1)))
    logger.debug("built generalized cycle with %d receivers", graph.vertex_count)
    return DemandSupergraph(
        {receiver: frozenset(held) for receiver, held in side_info.items()}, frozenset(demands)
    )


def transport_cycle(side_info: SideInfoGraph, cycle: SupergraphCycle) -> SimpleCycle:
    """Carry a supergraph cycle into the side-information graph.

    The cycle ((x0, i1), (x1, i2), ..., (x(L-1), i0)) becomes the cycle
    x0 -> x1 -> ... -> x(L-1) -> x0 through the same message subvertices.

    Raises:
        KeyError: If a required side-information edge is missing
    """
    lookup = {edge: index for index, edge in enumerate(side_info.graph.edges)}
    vertices = [side_info.vertex_of(message) for message in cycle.messages]
    indices = [
        lookup[(vertices[k], vertices[(k + 1) % len(vertices)])] for k in range(len(vertices))
    ]
    start = vertices.index(min(vertices))
    return SimpleCycle(tuple(indices[start:] + indices[:start]))


def feedback_vertices_for(
    side_info: SideInfoGraph, feedback_edges: Iterable[DemandEdge]
) -> FeedbackVertexSet:
    """Turn a supergraph feedback edge set into a side-information feedback vertex set.

    The vertex set is the set of tail messages of the edges.

    Raises:
        InvalidFeedbackSetError: If the tail messages do not break every cycle
    """
    vertices = frozenset(side_info.vertex_of(edge.message) for edge in feedback_edges)
    if not is_acyclic(side_info.graph, removed_vertices=vertices):
        raise InvalidFeedbackSetError("tail messages leave a side-information cycle")
    return FeedbackVertexSet(vertices)
