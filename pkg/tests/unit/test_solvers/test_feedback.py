"""Unit tests for minimum feedback edge and vertex sets."""

import pytest

from uniprior_coder.exceptions import CycleLimitExceededError
from uniprior_coder.graphs import DirectedMultigraph, is_acyclic
from uniprior_coder.solvers import min_feedback_edge_set, min_feedback_vertex_set
from uniprior_coder.transforms import from_eulerian, to_side_information_graph

EXAMPLE_EDGES = ((1, 0), (2, 1), (0, 2), (2, 1), (1, 2), (2, 3), (3, 1), (1, 3), (3, 2))
TRIANGLE = DirectedMultigraph(3, ((0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)))


class TestMinFeedbackEdgeSet:
    """Tests for min_feedback_edge_set."""

    def test_example(self) -> None:
        """Test that four edges break every cycle of the example."""
        graph = DirectedMultigraph(4, EXAMPLE_EDGES)
        feedback = min_feedback_edge_set(graph)
        assert len(feedback) == 4
        assert is_acyclic(graph, removed_edges=feedback.edge_indices)

    def test_triangle(self) -> None:
        """Test that one edge per 2-cycle suffices when chosen consistently."""
        feedback = min_feedback_edge_set(TRIANGLE)
        assert len(feedback) == 3
        assert is_acyclic(TRIANGLE, removed_edges=feedback.edge_indices)

    def test_with_known_lower_bound(self) -> None:
        """Test that a supplied lower bound gives the same size."""
        assert len(min_feedback_edge_set(TRIANGLE, lower_bound=3)) == 3

    def test_acyclic_graph(self) -> None:
        """Test that a DAG needs no feedback edges."""
        graph = DirectedMultigraph(3, ((0, 1), (1, 2), (0, 2)))
        assert len(min_feedback_edge_set(graph)) == 0

    def test_cycle_cap(self) -> None:
        """Test that the cycle cap propagates."""
        with pytest.raises(CycleLimitExceededError):
            min_feedback_edge_set(TRIANGLE, cycle_limit=2)


class TestMinFeedbackVertexSet:
    """Tests for min_feedback_vertex_set."""

    def test_triangle(self) -> None:
        """Test that removing one vertex leaves a 2-cycle."""
        feedback = min_feedback_vertex_set(TRIANGLE)
        assert len(feedback) == 2
        assert is_acyclic(TRIANGLE, removed_vertices=feedback.vertex_indices)

    def test_single_cycle(self) -> None:
        """Test that a directed cycle needs one vertex."""
        graph = DirectedMultigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0)))
        assert len(min_feedback_vertex_set(graph)) == 1

    def test_dense_side_information_graph(self) -> None:
        """Test tau_v on a 72-edge side-information graph with too many simple cycles."""
        problem = from_eulerian(DirectedMultigraph(2, ((0, 1), (1, 0)) * 6))
        graph = to_side_information_graph(problem).graph
        feedback = min_feedback_vertex_set(graph)
        assert len(feedback) == 6
        assert is_acyclic(graph, removed_vertices=feedback.vertex_indices)
