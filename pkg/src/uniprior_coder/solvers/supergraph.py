"""nu_e and tau_e of a generalized cycle, computed on its Eulerian graph.

Cycles of a generalized cycle and simple cycles of its Eulerian graph are in
one-to-one correspondence through the edge provenance, so both quantities are
solved once on the multigraph and the certificates are mapped back to demand
edges.
"""

import logging
from dataclasses import dataclass

from uniprior_coder.graphs import enumerate_simple_cycles
from uniprior_coder.models import SolverLimits, SolverMode
from uniprior_coder.solvers.base import CyclePacking, FeedbackEdgeSet
from uniprior_coder.solvers.feedback import min_feedback_edge_set
from uniprior_coder.solvers.packing import max_edge_disjoint_packing
from uniprior_coder.supergraph import DemandEdge, DemandSupergraph, SupergraphCycle
from uniprior_coder.transforms import EulerianView, to_eulerian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SupergraphSolution:
    """Packing and feedback certificates of a generalized cycle.

    Attributes:
        view: The Eulerian graph the solvers ran on
        packing: Maximum edge-disjoint packing of the view
        feedback: Minimum feedback edge set of the view
        code_packing: Greedy maximal packing the code is built from in greedy
            mode; None when the code uses `packing`
    """

    view: EulerianView
    packing: CyclePacking
    feedback: FeedbackEdgeSet
    code_packing: CyclePacking | None = None

    @property
    def nu_e(self) -> int:
        return len(self.packing)

    @property
    def tau_e(self) -> int:
        return len(self.feedback)

    @property
    def cycles(self) -> tuple[SupergraphCycle, ...]:
        """Cycles of the packing the code is built from, as supergraph cycles."""
        packing = self.packing if self.code_packing is None else self.code_packing
        return tuple(self.view.to_supergraph_cycle(cycle) for cycle in packing.cycles)

    @property
    def feedback_edges(self) -> tuple[DemandEdge, ...]:
        """Feedback set as demand edges, in canonical order."""
        return tuple(
            sorted(
                (self.view.edge_provenance[index] for index in self.feedback.edge_indices),
                key=DemandEdge.sort_key,
            )
        )


def supergraph_nu_tau(
    graph: DemandSupergraph,
    mode: SolverMode = SolverMode.EXACT,
    limits: SolverLimits | None = None,
) -> SupergraphSolution:
    """Compute nu_e and tau_e of a generalized cycle with certificates.

    nu_e always comes from the exact packing. Greedy mode additionally builds
    a maximal packing in enumeration order for the cyclic code.

    Args:
        graph: A generalized cycle
        mode: Packing mode of the code packing
        limits: Cycle cap and solver budget (default: SolverLimits())

    Returns:
        SupergraphSolution with the packings, the feedback set and the view

    Raises:
        NotGeneralizedCycleError: If the supergraph is not a generalized cycle
        CycleLimitExceededError: If enumeration exceeds the cycle cap
        SolverBudgetExceededError: If a search exceeds the solver budget
    """
    limits = limits or SolverLimits()
    view = to_eulerian(graph)
    cycles = enumerate_simple_cycles(view.graph, limits.cycle_cap)
    packing = max_edge_disjoint_packing(
        view.graph, SolverMode.EXACT, budget=limits.solver_budget, cycles=cycles
    )
    feedback = min_feedback_edge_set(
        view.graph, budget=limits.solver_budget, lower_bound=len(packing), cycles=cycles
    )
    code_packing = None
    if mode is SolverMode.GREEDY:
        code_packing = max_edge_disjoint_packing(view.graph, mode, cycles=cycles)
        logger.debug("greedy code packing: %d cycles", len(code_packing))
    logger.debug("supergraph nu_e=%d tau_e=%d", len(packing), len(feedback))
    return SupergraphSolution(view, packing, feedback, code_packing)

