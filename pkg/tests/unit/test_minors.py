"""Unit tests for Petersen-family minors and the tightness certificate."""

from pathlib import Path

import networkx as nx
import pytest

from uniprior_coder import minors
from uniprior_coder.exceptions import InvalidGraphError, MinorBudgetExceededError
from uniprior_coder.formats import parse_problem
from uniprior_coder.minors import (
    UndirectedGraph,
    complete_graph,
    delta_y,
    has_minor,
    has_petersen_family_minor,
    petersen_family,
    petersen_graph,
    tightness_certificate,
    underlying_graph,
    y_delta,
)
from uniprior_coder.models import TightnessKind
from uniprior_coder.solvers import CyclePacking
from uniprior_coder.solvers.supergraph import SupergraphSolution, supergraph_nu_tau
from uniprior_coder.supergraph import DemandSupergraph
from uniprior_coder.transforms import to_eulerian

FIXTURES = Path("tests/fixtures")


@pytest.fixture
def example() -> DemandSupergraph:
    return parse_problem((FIXTURES / "example.icp").read_text())


def subdivided_petersen() -> UndirectedGraph:
    """Petersen graph with one edge replaced by a path of length two."""
    graph = petersen_graph()
    u, v = graph.sorted_edges()[0]
    edges = (graph.edges - {(u, v)}) | {(u, 10), (v, 10)}
    return UndirectedGraph(11, frozenset(edges))


class TestUndirectedGraph:
    """Tests for UndirectedGraph and its constructors."""

    def test_edges_are_normalized(self) -> None:
        """Test that both orientations of an edge collapse."""
        graph = UndirectedGraph(3, frozenset({(1, 0), (0, 1), (2, 1)}))
        assert graph.sorted_edges() == [(0, 1), (1, 2)]

    def test_self_loop(self) -> None:
        """Test that self-loops are refused."""
        with pytest.raises(InvalidGraphError, match="self-loop"):
            UndirectedGraph(2, frozenset({(1, 1)}))

    def test_unknown_endpoint(self) -> None:
        """Test that endpoints must be declared vertices."""
        with pytest.raises(InvalidGraphError, match="unknown endpoint"):
            UndirectedGraph(2, frozenset({(0, 2)}))

    def test_petersen_graph(self) -> None:
        """Test that the Petersen graph is cubic on ten vertices."""
        graph = petersen_graph()
        assert (graph.vertex_count, graph.edge_count) == (10, 15)
        assert all(graph.degree(v) == 3 for v in range(10))

    def test_underlying_graph_of_example(self, example: DemandSupergraph) -> None:
        """Test that antiparallel and parallel edges collapse into single edges."""
        host = underlying_graph(to_eulerian(example).graph)
        assert host.vertex_count == 4
        assert host.sorted_edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]


class TestExchanges:
    """Tests for delta_y and y_delta."""

    def test_delta_y_adds_a_vertex(self) -> None:
        """Test that the triangle's edges move to a new degree-3 vertex."""
        graph = delta_y(complete_graph(6), (0, 1, 2))
        assert (graph.vertex_count, graph.edge_count) == (7, 15)
        assert graph.degree(6) == 3
        assert (0, 1) not in graph.edges

    def test_y_delta_undoes_delta_y(self) -> None:
        """Test that the two exchanges are inverse to each other."""
        assert y_delta(delta_y(complete_graph(6), (0, 1, 2)), 6) == complete_graph(6)

    def test_delta_y_requires_triangle(self) -> None:
        """Test that three vertices without all sides are refused."""
        with pytest.raises(InvalidGraphError, match="not a triangle"):
            delta_y(petersen_graph(), (0, 1, 2))

    def test_y_delta_requires_degree_three(self) -> None:
        """Test that only degree-3 vertices can be exchanged."""
        with pytest.raises(InvalidGraphError, match="degree 5"):
            y_delta(complete_graph(6), 0)

    def test_y_delta_requires_independent_neighbours(self) -> None:
        """Test that adjacent neighbours would create a parallel edge."""
        with pytest.raises(InvalidGraphError, match="non-adjacent"):
            y_delta(complete_graph(4), 0)


class TestPetersenFamily:
    """Tests for petersen_family."""

    def test_seven_members(self) -> None:
        """Test the size of the family and its vertex counts."""
        family = petersen_family()
        assert len(family) == 7
        assert sorted(member.vertex_count for member in family) == [6, 7, 7, 8, 8, 9, 10]

    def test_all_have_fifteen_edges(self) -> None:
        """Test that the exchanges preserve the edge count."""
        assert all(member.edge_count == 15 for member in petersen_family())

    def test_contains_k6_and_petersen(self) -> None:
        """Test that both named members are present."""
        family = [member.to_networkx() for member in petersen_family()]
        assert any(nx.is_isomorphic(g, nx.complete_graph(6)) for g in family)
        assert any(nx.is_isomorphic(g, nx.petersen_graph()) for g in family)

    def test_members_pairwise_non_isomorphic(self) -> None:
        """Test that no member is listed twice."""
        family = [member.to_networkx() for member in petersen_family()]
        for i, first in enumerate(family):
            for second in family[i + 1:]:
                assert not nx.is_isomorphic(first, second)


class TestHasMinor:
    """Tests for has_minor."""

    def test_graph_is_its_own_minor(self) -> None:
        """Test the trivial containment."""
        assert has_minor(complete_graph(6), complete_graph(6))

    def test_vertex_deletion(self) -> None:
        """Test that K7 contains K6."""
        assert has_minor(complete_graph(7), complete_graph(6))

    def test_edge_contraction(self) -> None:
        """Test that a subdivided Petersen graph contracts back."""
        assert has_minor(subdivided_petersen(), petersen_graph())

    def test_too_few_edges(self) -> None:
        """Test that K3,3 has no K6 minor."""
        k33 = UndirectedGraph.from_networkx(nx.complete_bipartite_graph(3, 3))
        assert not has_minor(k33, complete_graph(6))

    def test_family_members_are_incomparable(self) -> None:
        """Test that the Petersen graph has no K6 minor."""
        assert not has_minor(petersen_graph(), complete_graph(6))

    def test_vertex_limit(self) -> None:
        """Test that hosts above the vertex limit are refused."""
        with pytest.raises(MinorBudgetExceededError) as exc_info:
            has_minor(complete_graph(7), complete_graph(6), vertex_limit=6)
        assert exc_info.value.limit == 6

    def test_search_budget(self) -> None:
        """Test that the node budget is enforced."""
        with pytest.raises(MinorBudgetExceededError):
            has_minor(subdivided_petersen(), petersen_graph(), budget=1)

    def test_first_family_member(self) -> None:
        """Test that K6 itself is reported for a K6 host."""
        member = has_petersen_family_minor(complete_graph(6))
        assert member == complete_graph(6)


class TestTightnessCertificate:
    """Tests for tightness_certificate."""

    def test_example_is_petersen_free(self, example: DemandSupergraph) -> None:
        """Test that a four-vertex host is certified without the solvers."""
        certificate = tightness_certificate(example)
        assert certificate.kind is TightnessKind.PETERSEN_FREE
        assert str(certificate) == "PetersenFree"

    def test_fallback_on_budget(self, example: DemandSupergraph, monkeypatch) -> None:
        """Test that an abandoned minor test falls back to the solver values."""

        def give_up(graph, limits=None):
            raise MinorBudgetExceededError("too large", 1)

        monkeypatch.setattr(minors, "has_petersen_family_minor", give_up)
        certificate = tightness_certificate(example)
        assert certificate.kind is TightnessKind.EXACT_EQUALITY
        assert (certificate.nu_e, certificate.tau_e) == (4, 4)

    def test_possibly_loose(self, example: DemandSupergraph, monkeypatch) -> None:
        """Test that a gap between the solver values is reported."""
        monkeypatch.setattr(
            minors, "has_petersen_family_minor", lambda graph, limits=None: complete_graph(6)
        )
        solution = supergraph_nu_tau(example)
        short = CyclePacking(solution.packing.cycles[:3], solution.view.graph)
        loose = SupergraphSolution(solution.view, short, solution.feedback)
        certificate = tightness_certificate(example, solution=loose)
        assert certificate.kind is TightnessKind.POSSIBLY_LOOSE
        assert str(certificate) == "PossiblyLoose(nu_e=3,tau_e=4)"
        assert not certificate.is_tight


class TestFamilyClosure:
    """Tests that the family is closed under both exchanges."""

    def test_exchanges_stay_in_family(self) -> None:
        """Test that every exchange of every member gives a member again."""
        family = [member.to_networkx() for member in petersen_family()]

        def in_family(graph: UndirectedGraph) -> bool:
            return any(nx.is_isomorphic(graph.to_networkx(), member) for member in family)

        for member in petersen_family():
            for triangle in minors._triangles(member):
                assert in_family(delta_y(member, triangle))
            for vertex in range(member.vertex_count):
                try:
                    exchanged = y_delta(member, vertex)
                except InvalidGraphError:
                    continue
                assert in_family(exchanged)

    def test_minor_monotone_under_edge_addition(self) -> None:
        """Test that adding an edge to a host keeps a found minor."""
        host = subdivided_petersen()
        assert has_minor(host, petersen_graph())
        denser = UndirectedGraph(11, host.edges | {(2, 10)})
        assert has_minor(denser, petersen_graph())
