"""Main orchestrator for bounding the optimal broadcast length.

This module provides the BoundsAnalyzer class that ties the pieces together:
it recognizes the problem class, computes nu_e and tau_e on the generalized
cycle, emits the cyclic code, verifies it against every demand and, on
request, adds the tightness certificate and the side-information bounds.
"""

import logging
from dataclasses import dataclass

from uniprior_coder.codes import DecodabilityReport, IndexCode, cyclic_code, verify_code
from uniprior_coder.decomposition import Decomposition, find_spanning_generalized_cycle
from uniprior_coder.exceptions import NotApplicableError
from uniprior_coder.minors import tightness_certificate
from uniprior_coder.models import (
    BoundsReport,
    ProblemStructure,
    SolverLimits,
    SolverMode,
    TightnessCertificate,
    TightnessKind,
)
from uniprior_coder.solvers import max_vertex_disjoint_packing, min_feedback_vertex_set
from uniprior_coder.solvers.supergraph import SupergraphSolution, supergraph_nu_tau
from uniprior_coder.supergraph import DemandSupergraph, SupergraphCycle, is_generalized_cycle
from uniprior_coder.transforms import to_side_information_graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundsAnalysis:
    """A bounds report together with the certificates behind it.

    Attributes:
        report: The numbers
        core: Generalized cycle the bounds were computed on
        solution: Packing and feedback certificates of `core`
        cycles: Packing the code was built from
        code: The emitted cyclic code
        decodability: Verification of `code` against every demand of the problem
        decomposition: Spanning decomposition, for demand-decomposable problems
    """

    report: BoundsReport
    core: DemandSupergraph
    solution: SupergraphSolution
    cycles: tuple[SupergraphCycle, ...]
    code: IndexCode
    decodability: DecodabilityReport
    decomposition: Decomposition | None = None


class BoundsAnalyzer:
    """Computes bounds, certificates and the cyclic code of a uniprior problem.

    Attributes:
        _mode: Packing mode for nu_e
        _limits: Resource limits for every search
        _field_size: Field of the emitted code
    """

    def __init__(
        self,
        mode: SolverMode = SolverMode.EXACT,
        limits: SolverLimits | None = None,
        field_size: int = 2,
    ) -> None:
        """Initialize the analyzer.

        Args:
            mode: Packing the code is built from. Exact gives upper = n - nu_e;
                greedy gives a maximal packing and a possibly weaker upper
                bound. nu_e is reported from the exact solver either way
            limits: Resource limits (default: SolverLimits())
            field_size: Field size q of the emitted code

        Example:
            >>> analyzer = BoundsAnalyzer(SolverMode.EXACT, SolverLimits(), field_size=3)
        """
        self._mode = mode
        self._limits = limits or SolverLimits()
        self._field_size = field_size

    def analyze(
        self,
        graph: DemandSupergraph,
        with_tightness: bool = True,
        with_side_info: bool = False,
    ) -> BoundsAnalysis:
        """Bound the optimal scalar linear length of a problem.

        For a generalized cycle the bounds are n - tau_e <= . <= n - nu_e and
        the cyclic code of a maximum packing meets the upper bound. For a
        demand-decomposable problem they are computed on the spanning
        generalized cycle, and the code of the decomposing packing serves the
        extra demands as well.

        Args:
            graph: Any valid supergraph
            with_tightness: Whether to compute the tightness certificate
            with_side_info: Whether to add n - tau_v and n - nu_v of the
                side-information graph

        Returns:
            BoundsAnalysis with the report and its certificates

        Raises:
            NotApplicableError: If the problem is neither a generalized cycle
                nor demand-decomposable
            LimitExceededError: If a search exceeds its limit
        """
        verdict = is_generalized_cycle(graph)
        decomposition = None
        if verdict:
            core = graph
            structure = ProblemStructure.GENERALIZED_CYCLE
            solution = supergraph_nu_tau(core, self._mode, self._limits)
            cycles = solution.cycles
        else:
            decomposition = find_spanning_generalized_cycle(graph, self._limits)
            if decomposition is None:
                raise NotApplicableError(
                    f"problem is not a generalized cycle ({verdict.witness}) "
                    "and no spanning generalized cycle decomposes it"
                )
            core = decomposition.core
            structure = ProblemStructure.DEMAND_DECOMPOSABLE
            solution = supergraph_nu_tau(core, self._mode, self._limits)
            cycles = decomposition.cycles

        code = cyclic_code(core, cycles, self._field_size)
        decodability = verify_code(graph, code)
        if not decodability.all_decodable:
            logger.warning("cyclic code fails demands %s", decodability.failures())

        n = graph.n
        lower = n - solution.tau_e
        upper = n - len(cycles)
        tightness = None
        if with_tightness:
            if lower == upper:
                tightness = tightness_certificate(core, self._limits, solution)
            else:
                tightness = TightnessCertificate(
                    TightnessKind.POSSIBLY_LOOSE, solution.nu_e, solution.tau_e
                )

        side_info_lower = side_info_upper = None
        if with_side_info:
            side_info_lower, side_info_upper = self._side_info_bounds(core)

        report = BoundsReport(
            n=n,
            nu_e=solution.nu_e,
            tau_e=solution.tau_e,
            lower=lower,
            upper=upper,
            achieved_length=code.length,
            structure=structure,
            tightness=tightness,
            side_info_lower=side_info_lower,
            side_info_upper=side_info_upper,
        )
        logger.debug("bounds: %s", report.summary())
        return BoundsAnalysis(report, core, solution, cycles, code, decodability, decomposition)

    def _side_info_bounds(self, core: DemandSupergraph) -> tuple[int, int]:
        side_info = to_side_information_graph(core)
        packing = max_vertex_disjoint_packing(
            side_info.graph,
            SolverMode.EXACT,
            cycle_limit=self._limits.cycle_cap,
            budget=self._limits.solver_budget,
        )
        feedback = min_feedback_vertex_set(
            side_info.graph,
            cycle_limit=self._limits.cycle_cap,
            budget=self._limits.solver_budget,
            lower_bound=len(packing),
        )
        n = core.n
        return n - len(feedback), n - len(packing)


def bounds_report(
    graph: DemandSupergraph,
    mode: SolverMode = SolverMode.EXACT,
    limits: SolverLimits | None = None,
    with_tightness: bool = True,
) -> BoundsReport:
    """Convenience wrapper returning only the report.

    Example:
        >>> bounds_report(example).summary()
        'n=9 nu_e=4 tau_e=4 lower=5 upper=5 tight=PetersenFree'
    """
    return BoundsAnalyzer(mode, limits).analyze(graph, with_tightness=with_tightness).report
