"""Property-based tests for packing, feedback and bounds on random instances.

Instances come from the seeded generator, so every example hypothesis finds
can be replayed from its (receivers, cycles, seed) triple.
"""

import random
from itertools import combinations

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from uniprior_coder.bounds import BoundsAnalyzer
from uniprior_coder.generator import generate_instance
from uniprior_coder.graphs import is_acyclic
from uniprior_coder.minors import tightness_certificate
from uniprior_coder.minrank import minrank_oracle
from uniprior_coder.models import TightnessKind
from uniprior_coder.solvers import (
    eulerian_decomposition,
    max_vertex_disjoint_packing,
    maximal_packing,
    min_feedback_vertex_set,
)
from uniprior_coder.solvers.supergraph import supergraph_nu_tau
from uniprior_coder.supergraph import DemandSupergraph, enumerate_supergraph_cycles
from uniprior_coder.transforms import to_eulerian, to_side_information_graph

receivers = st.integers(min_value=2, max_value=4)
cycle_counts = st.integers(min_value=1, max_value=4)
seeds = st.integers(min_value=0, max_value=10_000)


def walk_supergraph_cycles(problem: DemandSupergraph) -> list[frozenset[int]]:
    """Every supergraph cycle once, as positions in the sorted demand list.

    A cycle is a chain of distinct demand edges in which each receiver holds
    the message of the next edge, no supervertex is entered twice, and the
    last receiver holds the first message. Each cycle is walked from its
    lowest-positioned edge only.
    """
    demands = problem.sorted_demands
    holder = problem.holder
    found: list[frozenset[int]] = []

    def extend(path: list[int], visited: set[str]) -> None:
        current = demands[path[-1]].receiver
        if current == holder[demands[path[0]].message]:
            found.append(frozenset(path))
            return
        if current in visited:
            return
        for position in range(path[0] + 1, len(demands)):
            if holder[demands[position].message] == current:
                extend([*path, position], visited | {current})

    for first in range(len(demands)):
        extend([first], {holder[demands[first].message]})
    return found


def largest_disjoint_family(cycles: list[frozenset[int]]) -> int:
    """Most pairwise edge-disjoint cycles, branching on the lowest edge in use."""
    if not cycles:
        return 0
    pivot = min(min(cycle) for cycle in cycles)
    avoiding = [cycle for cycle in cycles if pivot not in cycle]
    best = largest_disjoint_family(avoiding)
    for chosen in cycles:
        if pivot in chosen:
            rest = [cycle for cycle in avoiding if not cycle & chosen]
            best = max(best, 1 + largest_disjoint_family(rest))
    return best


def smallest_hitting_set(edge_count: int, cycles: list[frozenset[int]]) -> int:
    """Fewest edges meeting every cycle, trying sizes in increasing order."""
    for size in range(edge_count + 1):
        for removed in combinations(range(edge_count), size):
            if all(cycle.intersection(removed) for cycle in cycles):
                return size
    raise AssertionError("no edge set meets every cycle")


class TestSideInformationCorrespondenceProperty:
    """Property 1: Edge and vertex numbers agree across the two graphs.

    For any generalized cycle, the largest edge-disjoint cycle packing of its
    Eulerian graph has as many cycles as the largest vertex-disjoint packing
    of its side-information graph, and likewise for minimum feedback sets.
    """

    @settings(max_examples=20, deadline=None)
    @given(receivers, cycle_counts, seeds)
    def test_nu_and_tau_transport(self, m: int, r: int, seed: int) -> None:
        """Test nu_e = nu_v and tau_e = tau_v.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
        """
        problem = generate_instance(m, r, seed=seed).problem
        solution = supergraph_nu_tau(problem)
        side_info = to_side_information_graph(problem).graph

        assert len(max_vertex_disjoint_packing(side_info)) == solution.nu_e
        assert len(min_feedback_vertex_set(side_info)) == solution.tau_e


class TestBoundOrderProperty:
    """Property 2: The bounds are ordered and the code meets the upper bound."""

    @settings(max_examples=20, deadline=None)
    @given(receivers, cycle_counts, seeds)
    def test_lower_at_most_upper(self, m: int, r: int, seed: int) -> None:
        """Test n - tau_e <= n - nu_e = code length.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
        """
        problem = generate_instance(m, r, seed=seed).problem
        report = BoundsAnalyzer().analyze(problem, with_tightness=False).report

        assert report.nu_e <= report.tau_e
        assert report.lower <= report.upper
        assert report.upper == problem.n - report.nu_e
        assert report.achieved_length == report.upper

    @settings(max_examples=20, deadline=None)
    @given(receivers, cycle_counts, seeds)
    def test_feedback_set_leaves_graph_acyclic(self, m: int, r: int, seed: int) -> None:
        """Test that the reported feedback set really breaks every cycle.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
        """
        problem = generate_instance(m, r, seed=seed).problem
        solution = supergraph_nu_tau(problem)

        assert is_acyclic(solution.view.graph, removed_edges=solution.feedback.edge_indices)


class TestMaximalPackingProperty:
    """Property 3: Maximal packings of an Eulerian graph use every edge.

    Removing edge-disjoint cycles keeps every vertex balanced, and a balanced
    graph with an edge left still has a cycle.
    """

    @settings(max_examples=25, deadline=None)
    @given(receivers, cycle_counts, seeds, st.integers(min_value=0, max_value=1_000))
    def test_random_order_covers_all_edges(self, m: int, r: int, seed: int, order: int) -> None:
        """Test greedy packing in a shuffled cycle order.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
            order: Seed of the visiting order
        """
        graph = to_eulerian(generate_instance(m, r, seed=seed).problem).graph
        packing = maximal_packing(graph, random.Random(order))

        assert packing.covers_all_edges()

    @settings(max_examples=25, deadline=None)
    @given(receivers, cycle_counts, seeds, st.randoms(use_true_random=False))
    def test_eulerian_decomposition_partitions_edges(
        self, m: int, r: int, seed: int, rng: random.Random
    ) -> None:
        """Test that any edge order gives a partition into simple cycles.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
            rng: Source of the edge order
        """
        graph = to_eulerian(generate_instance(m, r, seed=seed).problem).graph
        order = list(range(graph.edge_count))
        rng.shuffle(order)
        packing = eulerian_decomposition(graph, order)

        assert packing.covers_all_edges()
        assert sum(len(cycle.edge_indices) for cycle in packing.cycles) == graph.edge_count


class TestSupergraphCycleSpaceProperty:
    """Property 9: Supergraph cycles give the same numbers as the Eulerian view.

    Cycles are found by a depth-first walk over demand edges that follows the
    cycle definition directly, then packed and hit by exhaustive search.
    """

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=2, max_value=4), st.integers(min_value=1, max_value=3), seeds)
    def test_direct_computation_agrees(self, m: int, r: int, seed: int) -> None:
        """Test nu_e and tau_e from cycles walked on the supergraph itself.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
        """
        problem = generate_instance(m, r, seed=seed).problem
        solution = supergraph_nu_tau(problem)
        cycles = walk_supergraph_cycles(problem)
        demands = problem.sorted_demands

        assert len(set(cycles)) == len(cycles)
        assert set(cycles) == {
            frozenset(demands.index(edge) for edge in cycle.edges)
            for cycle in enumerate_supergraph_cycles(problem)
        }
        assert largest_disjoint_family(cycles) == solution.nu_e
        assert smallest_hitting_set(len(demands), cycles) == solution.tau_e


class TestMinrankSandwichProperty:
    """Property 10: The minrank lies between the two bounds.

    Only instances small enough for the exhaustive oracle are drawn.
    """

    @settings(max_examples=15, deadline=None)
    @given(st.integers(min_value=2, max_value=3), st.integers(min_value=1, max_value=2), seeds)
    def test_lower_minrank_upper(self, m: int, r: int, seed: int) -> None:
        """Test n - tau_e <= minrank <= n - nu_e.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
        """
        problem = generate_instance(m, r, seed=seed).problem
        side_info = to_side_information_graph(problem)
        assume(side_info.graph.edge_count <= 16)
        solution = supergraph_nu_tau(problem)

        minrank = minrank_oracle(side_info, max_edges=16)
        assert problem.n - solution.tau_e <= minrank <= problem.n - solution.nu_e


class TestPetersenFreeEqualityProperty:
    """Property 11: A Petersen-free certificate implies nu_e = tau_e."""

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=2, max_value=6), cycle_counts, seeds)
    def test_certificate_matches_solvers(self, m: int, r: int, seed: int) -> None:
        """Test the certificate against the exact solver values.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
        """
        problem = generate_instance(m, r, seed=seed).problem
        certificate = tightness_certificate(problem)
        solution = supergraph_nu_tau(problem)

        if certificate.kind is TightnessKind.PETERSEN_FREE:
            assert solution.nu_e == solution.tau_e
        assert certificate.is_tight == (solution.nu_e == solution.tau_e)
