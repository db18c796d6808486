"""Unit tests for the GF(2) minrank oracle."""

import itertools
from pathlib import Path

import pytest

from uniprior_coder.exceptions import OracleTooLargeError, UnsupportedFieldError
from uniprior_coder.formats import parse_problem
from uniprior_coder.graphs import DirectedMultigraph
from uniprior_coder.minrank import minrank_oracle
from uniprior_coder.transforms import SideInfoGraph, to_side_information_graph

FIXTURES = Path("tests/fixtures")


def side_info_graph(vertex_count: int, edges: list[tuple[int, int]]) -> SideInfoGraph:
    labels = tuple(f"x{k + 1}" for k in range(vertex_count))
    return SideInfoGraph(DirectedMultigraph(vertex_count, tuple(edges)), labels)


class TestMinrankOracle:
    """Tests for minrank_oracle."""

    def test_two_message_exchange(self) -> None:
        """Test that one XOR serves two receivers holding each other's message."""
        graph = parse_problem((FIXTURES / "toy2.icp").read_text())
        assert minrank_oracle(to_side_information_graph(graph)) == 1

    def test_acyclic_graph_needs_every_message(self) -> None:
        """Test that without cycles the matrix is triangular with full rank."""
        assert minrank_oracle(side_info_graph(3, [(0, 1), (1, 2), (0, 2)])) == 3

    def test_no_side_information(self) -> None:
        """Test the identity matrix case."""
        assert minrank_oracle(side_info_graph(4, [])) == 4

    def test_complete_graph(self) -> None:
        """Test that full side information allows the all-ones matrix."""
        edges = list(itertools.permutations(range(4), 2))
        assert minrank_oracle(side_info_graph(4, edges)) == 1

    def test_two_disjoint_cycles(self) -> None:
        """Test that a 2-cycle and a 3-cycle save one transmission each."""
        edges = [(0, 1), (1, 0), (2, 3), (3, 4), (4, 2)]
        assert minrank_oracle(side_info_graph(5, edges)) == 3

    def test_workers_do_not_change_result(self) -> None:
        """Test that splitting the first row across processes agrees."""
        edges = [(0, 1), (1, 0), (2, 3), (3, 4), (4, 2)]
        assert minrank_oracle(side_info_graph(5, edges), workers=2) == 3

    def test_empty_graph(self) -> None:
        """Test that a graph without vertices has minrank zero."""
        assert minrank_oracle(side_info_graph(0, [])) == 0

    def test_only_binary_field(self) -> None:
        """Test that other fields are refused."""
        with pytest.raises(UnsupportedFieldError):
            minrank_oracle(side_info_graph(2, [(0, 1), (1, 0)]), q=3)

    def test_too_many_free_entries(self) -> None:
        """Test that the edge limit is enforced before searching."""
        edges = list(itertools.permutations(range(4), 2))
        with pytest.raises(OracleTooLargeError) as exc_info:
            minrank_oracle(side_info_graph(4, edges), max_edges=11)
        assert (exc_info.value.free_entries, exc_info.value.limit) == (12, 11)

    @pytest.mark.slow
    def test_example_meets_cyclic_code(self) -> None:
        """Test that the cyclic code length 5 is optimal for the example."""
        graph = parse_problem((FIXTURES / "example.icp").read_text())
        side_info = to_side_information_graph(graph)
        assert side_info.graph.edge_count == 23
        assert minrank_oracle(side_info) == 5
