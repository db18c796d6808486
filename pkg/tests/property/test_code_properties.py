"""Property-based tests for cyclic codes on random instances."""

from hypothesis import given, settings
from hypothesis import strategies as st

from uniprior_coder.codes import cyclic_code, verify_code
from uniprior_coder.fields import rank
from uniprior_coder.generator import generate_instance
from uniprior_coder.solvers.supergraph import supergraph_nu_tau

receivers = st.integers(min_value=2, max_value=4)
cycle_counts = st.integers(min_value=1, max_value=4)
seeds = st.integers(min_value=0, max_value=10_000)
field_sizes = st.sampled_from([2, 3, 4, 5, 7, 8])


class TestCyclicCodeProperty:
    """Property 4: The cyclic code of a maximum packing is valid and short.

    For any generalized cycle and supported field, the code has n - nu_e
    linearly independent rows and every receiver decodes every demand.
    """

    @settings(max_examples=20, deadline=None)
    @given(receivers, cycle_counts, seeds, field_sizes)
    def test_length_and_decodability(self, m: int, r: int, seed: int, q: int) -> None:
        """Test code length, rank and decodability.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
            q: Field size
        """
        problem = generate_instance(m, r, seed=seed).problem
        solution = supergraph_nu_tau(problem)
        code = cyclic_code(problem, solution.cycles, q=q, nu_e=solution.nu_e)

        assert code.length == problem.n - solution.nu_e
        assert rank(code.matrix) == code.length
        assert verify_code(problem, code).all_decodable


class TestDecomposableCodeProperty:
    """Property 5: Codes of a decomposing packing serve the extra demands."""

    @settings(max_examples=20, deadline=None)
    @given(receivers, cycle_counts, seeds, st.integers(min_value=0, max_value=4))
    def test_planted_packing_serves_extras(self, m: int, r: int, seed: int, k: int) -> None:
        """Test the code of the planted cycles on the extended instance.

        Args:
            m: Number of receivers
            r: Number of superposed cycles
            seed: Generator seed
            k: Number of extra demands requested
        """
        instance = generate_instance(m, r, extra=k, seed=seed)
        code = cyclic_code(instance.core, instance.cycles, q=3)

        assert code.length == instance.problem.n - len(instance.cycles)
        assert verify_code(instance.problem, code).all_decodable
