"""Petersen-family minor testing and the tightness certificate.

An Eulerian digraph whose underlying undirected graph has no minor in the
Petersen family has equally many edge-disjoint cycles as edges in a minimum
feedback edge set. The family is the closure of K6 under the Delta-Y and
Y-Delta exchanges; all seven members have 15 edges.

Minor containment is decided by a memoized search over deletions and
contractions of the host graph; networkx supplies isomorphism and subgraph
monomorphism checks.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from uniprior_coder.exceptions import InvalidGraphError, MinorBudgetExceededError
from uniprior_coder.graphs import DirectedMultigraph
from uniprior_coder.models import SolverLimits, TightnessCertificate, TightnessKind
from uniprior_coder.solvers.supergraph import SupergraphSolution, supergraph_nu_tau
from uniprior_coder.supergraph import DemandSupergraph
from uniprior_coder.transforms import to_eulerian

logger = logging.getLogger(__name__)

DEFAULT_MINOR_VERTEX_LIMIT = 16
DEFAULT_MINOR_BUDGET = 500_000


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph on vertices 0..vertex_count-1.

    Attributes:
        vertex_count: Number of vertices
        edges: Unordered pairs, stored as (smaller, larger)

    Raises:
        InvalidGraphError: If an edge is a self-loop or has an unknown endpoint
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        normalized = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidGraphError(f"edge ({u}, {v}) has an unknown endpoint")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, vertex: int) -> int:
        return sum(1 for edge in self.edges if vertex in edge)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "UndirectedGraph":
        """Relabel the nodes 0..n-1 in sorted order."""
        index = {node: i for i, node in enumerate(sorted(graph.nodes))}
        return cls(len(index), frozenset((index[u], index[v]) for u, v in graph.edges))


def complete_graph(vertex_count: int) -> UndirectedGraph:
    return UndirectedGraph(
        vertex_count, frozenset(itertools.combinations(range(vertex_count), 2))
    )


def petersen_graph() -> UndirectedGraph:
    return UndirectedGraph.from_networkx(nx.petersen_graph())


def underlying_graph(graph: DirectedMultigraph) -> UndirectedGraph:
    """Forget directions, parallel edges and antiparallel pairs.

    Raises:
        InvalidGraphError: If the multigraph has a self-loop
    """
    return UndirectedGraph(graph.vertex_count, frozenset(graph.edges))


def delta_y(graph: UndirectedGraph, triangle: tuple[int, int, int]) -> UndirectedGraph:
    """Replace the edges of a triangle by a new vertex adjacent to its corners.

    Raises:
        InvalidGraphError: If the three vertices do not form a triangle
    """
    sides = {(min(u, v), max(u, v)) for u, v in itertools.combinations(triangle, 2)}
    if len(set(triangle)) != 3 or not sides <= graph.edges:
        raise InvalidGraphError(f"{triangle} is not a triangle")
    centre = graph.vertex_count
    edges = (graph.edges - sides) | {(corner, centre) for corner in triangle}
    return UndirectedGraph(graph.vertex_count + 1, frozenset(edges))


def y_delta(graph: UndirectedGraph, vertex: int) -> UndirectedGraph:
    """Replace a degree-3 vertex by a triangle on its neighbours.

    The vertex is removed and higher vertices shift down by one.

    Raises:
        InvalidGraphError: If the vertex does not have degree 3 or two of its
            neighbours are already adjacent
    """
    neighbours = sorted(u if v == vertex else v for u, v in graph.edges if vertex in (u, v))
    if len(neighbours) != 3:
        raise InvalidGraphError(f"vertex {vertex} has degree {len(neighbours)}, expected 3")
    sides = set(itertools.combinations(neighbours, 2))
    if sides & graph.edges:
        raise InvalidGraphError(f"neighbours of vertex {vertex} are not pairwise non-adjacent")

    def shift(u: int) -> int:
        return u - 1 if u > vertex else u

    kept = {edge for edge in graph.edges if vertex not in edge} | sides
    return UndirectedGraph(
        graph.vertex_count - 1, frozenset((shift(u), shift(v)) for u, v in kept)
    )


def _triangles(graph: UndirectedGraph) -> list[tuple[int, int, int]]:
    return sorted(
        tuple(sorted(clique))
        for clique in nx.enumerate_all_cliques(graph.to_networkx())
        if len(clique) == 3
    )


class _IsomorphismClasses:
    """Graphs collected up to isomorphism, bucketed by Weisfeiler-Lehman hash."""

    def __init__(self) -> None:
        self.members: list[UndirectedGraph] = []
        self._buckets: dict[str, list[nx.Graph]] = {}

    def add(self, graph: UndirectedGraph) -> bool:
        view = graph.to_networkx()
        key = nx.weisfeiler_lehman_graph_hash(view)
        bucket = self._buckets.setdefault(key, [])
        if any(nx.is_isomorphic(view, other) for other in bucket):
            return False
        bucket.append(view)
        self.members.append(graph)
        return True


@lru_cache(maxsize=1)
def petersen_family() -> tuple[UndirectedGraph, ...]:
    """Close K6 under Delta-Y and Y-Delta exchanges, up to isomorphism.

    Returns:
        The seven family members, ordered by vertex count, then edge list
    """
    classes = _IsomorphismClasses()
    classes.add(complete_graph(6))
    frontier = [complete_graph(6)]
    while frontier:
        graph = frontier.pop(0)
        neighbours = [delta_y(graph, triangle) for triangle in _triangles(graph)]
        for vertex in range(graph.vertex_count):
            try:
                neighbours.append(y_delta(graph, vertex))
            except InvalidGraphError:
                continue
        for candidate in neighbours:
            if classes.add(candidate):
                frontier.append(candidate)
    family = sorted(classes.members, key=lambda g: (g.vertex_count, g.sorted_edges()))
    logger.debug("Petersen family closure: %d graphs", len(family))
    return tuple(family)


class _MinorSearch:
    """Deletion/contraction search for a minor model of `pattern` in a host.

    A search state is the current host minor with a set of fixed vertices,
    each of which is final as the branch set of some pattern vertex. An
    unfixed vertex is either deleted, contracted into an unfixed neighbour,
    or fixed. Once the host has as many vertices as the pattern, only a
    subgraph monomorphism can remain. States already refuted are remembered.
    """

    def __init__(self, pattern: UndirectedGraph, budget: int) -> None:
        self.pattern = pattern.to_networkx()
        self.pattern_vertices = pattern.vertex_count
        self.pattern_edges = pattern.edge_count
        self.min_degree = min((d for _, d in self.pattern.degree), default=0)
        self.budget = budget
        self.nodes = 0
        self.refuted: set[tuple[frozenset[int], frozenset[frozenset[int]], frozenset[int]]] = set()

    def _prune_leaves(self, graph: nx.Graph, fixed: frozenset[int]) -> None:
        # an unfixed vertex of degree below min(2, min degree) never helps a model
        threshold = min(self.min_degree, 2)
        changed = True
        while changed:
            changed = False
            for vertex in sorted(graph.nodes):
                if vertex not in fixed and graph.degree(vertex) < threshold:
                    graph.remove_node(vertex)
                    changed = True

    @staticmethod
    def _contract(graph: nx.Graph, keep: int, merge: int) -> nx.Graph:
        contracted = graph.copy()
        contracted.add_edges_from(
            (keep, neighbour) for neighbour in graph.neighbors(merge) if neighbour != keep
        )
        contracted.remove_node(merge)
        return contracted

    def run(self, graph: nx.Graph, fixed: frozenset[int]) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise MinorBudgetExceededError("minor search exceeded its node budget", self.budget)
        self._prune_leaves(graph, fixed)
        if (
            graph.number_of_nodes() < self.pattern_vertices
            or graph.number_of_edges() < self.pattern_edges
            or len(fixed) > self.pattern_vertices
            or any(graph.degree(vertex) < self.min_degree for vertex in fixed)
        ):
            return False
        if graph.number_of_nodes() == self.pattern_vertices:
            return GraphMatcher(graph, self.pattern).subgraph_is_monomorphic()

        key = (
            frozenset(graph.nodes),
            frozenset(frozenset(edge) for edge in graph.edges),
            fixed,
        )
        if key in self.refuted:
            return False

        unfixed = [vertex for vertex in graph.nodes if vertex not in fixed]
        if unfixed:
            vertex = min(unfixed, key=lambda v: (graph.degree(v), v))
            deleted = graph.copy()
            deleted.remove_node(vertex)
            if self.run(deleted, fixed):
                return True
            for neighbour in sorted(graph.neighbors(vertex)):
                if neighbour not in fixed and self.run(
                    self._contract(graph, neighbour, vertex), fixed
                ):
                    return True
            if self.run(graph.copy(), fixed | {vertex}):
                return True

        self.refuted.add(key)
        return False


def has_minor(
    graph: UndirectedGraph,
    pattern: UndirectedGraph,
    budget: int = DEFAULT_MINOR_BUDGET,
    vertex_limit: int = DEFAULT_MINOR_VERTEX_LIMIT,
) -> bool:
    """Decide whether `pattern` is a minor of `graph`.

    Args:
        graph: Host graph
        pattern: Candidate minor
        budget: Maximum number of search nodes
        vertex_limit: Largest host graph accepted

    Returns:
        True if `pattern` can be obtained from `graph` by deleting and
        contracting edges and deleting vertices

    Raises:
        MinorBudgetExceededError: If the host exceeds `vertex_limit` vertices
            or the search exceeds `budget` nodes

    Example:
        >>> has_minor(complete_graph(6), complete_graph(6))
        True
    """
    if graph.vertex_count < pattern.vertex_count or graph.edge_count < pattern.edge_count:
        return False
    if graph.vertex_count > vertex_limit:
        raise MinorBudgetExceededError(
            f"host graph has {graph.vertex_count} vertices, too many for minor testing",
            vertex_limit,
        )
    search = _MinorSearch(pattern, budget)
    found = search.run(graph.to_networkx(), frozenset())
    logger.debug("minor search: %s after %d nodes", found, search.nodes)
    return found


def has_petersen_family_minor(
    graph: UndirectedGraph, limits: SolverLimits | None = None
) -> UndirectedGraph | None:
    """First family member that is a minor of `graph`, or None if there is none."""
    limits = limits or SolverLimits()
    for member in petersen_family():
        if has_minor(graph, member, limits.minor_budget, limits.minor_vertex_limit):
            return member
    return None


def tightness_certificate(
    graph: DemandSupergraph,
    limits: SolverLimits | None = None,
    solution: SupergraphSolution | None = None,
) -> TightnessCertificate:
    """Certify whether nu_e and tau_e of a generalized cycle coincide.

    Petersen-freeness of the underlying graph of the Eulerian graph is tried
    first. When a family minor is present, or the minor search runs out of
    budget, the exact solver values decide.

    Args:
        graph: A generalized cycle
        limits: Resource limits
        solution: Already computed solver results, reused for the fallback

    Returns:
        TightnessCertificate

    Raises:
        NotGeneralizedCycleError: If `graph` is not a generalized cycle
    """
    limits = limits or SolverLimits()
    view = to_eulerian(graph)
    host = underlying_graph(view.graph)
    try:
        if has_petersen_family_minor(host, limits) is None:
            return TightnessCertificate(TightnessKind.PETERSEN_FREE)
    except MinorBudgetExceededError as error:
        logger.warning("minor test abandoned, falling back to solver values: %s", error)

    if solution is None:
        solution = supergraph_nu_tau(graph, limits=limits)
    if solution.nu_e == solution.tau_e:
        return TightnessCertificate(TightnessKind.EXACT_EQUALITY, solution.nu_e, solution.tau_e)
    return TightnessCertificate(TightnessKind.POSSIBLY_LOOSE, solution.nu_e, solution.tau_e)
