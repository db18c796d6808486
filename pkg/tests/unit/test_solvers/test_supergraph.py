"""Unit tests for nu_e and tau_e of generalized cycles."""

from pathlib import Path

import pytest

from uniprior_coder.exceptions import NotGeneralizedCycleError
from uniprior_coder.formats import parse_problem
from uniprior_coder.graphs import is_acyclic
from uniprior_coder.models import SolverLimits, SolverMode
from uniprior_coder.solvers.supergraph import supergraph_nu_tau

FIXTURES = Path("tests/fixtures")


@pytest.fixture
def example():
    return parse_problem((FIXTURES / "example.icp").read_text())


class TestSupergraphNuTau:
    """Tests for supergraph_nu_tau."""

    def test_example_values(self, example) -> None:
        """Test nu_e = tau_e = 4 on the example."""
        solution = supergraph_nu_tau(example)
        assert solution.nu_e == 4
        assert solution.tau_e == 4

    def test_certificates(self, example) -> None:
        """Test that the cycles and feedback edges are checkable on the supergraph."""
        solution = supergraph_nu_tau(example)
        for cycle in solution.cycles:
            cycle.validate(example)
        covered = [edge for cycle in solution.cycles for edge in cycle.edges]
        assert sorted(covered, key=lambda e: e.sort_key()) == list(example.sorted_demands)
        assert len(solution.feedback_edges) == 4
        removed = [solution.view.edge_of(edge) for edge in solution.feedback_edges]
        assert is_acyclic(solution.view.graph, removed_edges=removed)

    def test_greedy_mode(self, example) -> None:
        """Test that greedy mode keeps exact values and adds a code packing."""
        solution = supergraph_nu_tau(example, SolverMode.GREEDY, SolverLimits())
        assert (solution.nu_e, solution.tau_e) == (4, 4)
        assert solution.code_packing is not None
        assert len(solution.cycles) == len(solution.code_packing) <= 4

    def test_exact_mode_codes_from_maximum_packing(self, example) -> None:
        """Test that exact mode builds the code from the maximum packing."""
        solution = supergraph_nu_tau(example)
        assert solution.code_packing is None
        assert len(solution.cycles) == solution.nu_e

    def test_toy(self) -> None:
        """Test the 2-receiver exchange."""
        solution = supergraph_nu_tau(parse_problem((FIXTURES / "toy2.icp").read_text()))
        assert (solution.nu_e, solution.tau_e) == (1, 1)

    def test_requires_generalized_cycle(self) -> None:
        """Test that other supergraphs are refused."""
        graph = parse_problem((FIXTURES / "not_generalized.icp").read_text())
        with pytest.raises(NotGeneralizedCycleError):
            supergraph_nu_tau(graph)
