"""Exact branch-and-bound searches over cycle bitmasks.

All three searches branch on the lowest uncovered resource bit, which makes
the visiting order, and hence the returned certificate, deterministic. Each
search counts its nodes and raises SolverBudgetExceededError instead of
returning a non-optimal answer.
"""

import logging
from collections.abc import Sequence

from uniprior_coder.exceptions import SolverBudgetExceededError
from uniprior_coder.solvers.base import DEFAULT_SOLVER_BUDGET, PackingStrategy, mask_members
from uniprior_coder.solvers.greedy import GreedyPacking

logger = logging.getLogger(__name__)


class _NodeCounter:
    def __init__(self, solver: str, budget: int) -> None:
        self.solver = solver
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SolverBudgetExceededError(self.solver, self.budget)


def _packing_bound(masks: Sequence[int], available: Sequence[int]) -> int:
    """Upper bound on how many more disjoint masks fit: free resources / shortest mask."""
    union = 0
    shortest = None
    for index in available:
        union |= masks[index]
        size = masks[index].bit_count()
        if shortest is None or size < shortest:
            shortest = size
    if shortest is None:
        return 0
    return min(len(available), union.bit_count() // shortest)


class ExactPacking(PackingStrategy):
    """Maximum-cardinality packing of pairwise disjoint masks.

    The incumbent starts as the greedy packing; only strictly larger packings
    replace it, so among optimal packings the first one in search order wins.

    Attributes:
        budget: Maximum number of search nodes
    """

    def __init__(self, budget: int = DEFAULT_SOLVER_BUDGET) -> None:
        self.budget = budget

    def select(self, masks: Sequence[int]) -> tuple[int, ...]:
        counter = _NodeCounter("maximum packing", self.budget)
        best = list(GreedyPacking().select(masks))

        def search(available: list[int], chosen: list[int]) -> None:
            nonlocal best
            counter.tick()
            if len(chosen) > len(best):
                best = list(chosen)
            if not available or len(chosen) + _packing_bound(masks, available) <= len(best):
                return
            union = 0
            for index in available:
                union |= masks[index]
            low = union & -union
            for index in available:
                if masks[index] & low:
                    rest = [j for j in available if not masks[j] & masks[index]]
                    search(rest, chosen + [index])
            search([j for j in available if not masks[j] & low], chosen)

        search(list(range(len(masks))), [])
        logger.debug("maximum packing: %d cycles after %d nodes", len(best), counter.nodes)
        return tuple(sorted(best))


def max_exact_cover(
    masks: Sequence[int], universe: int, budget: int = DEFAULT_SOLVER_BUDGET
) -> tuple[int, ...] | None:
    """Largest set of disjoint masks whose union is exactly `universe`.

    Args:
        masks: Candidate bitmasks, each a subset of `universe`
        universe: Resources that must be covered exactly once
        budget: Maximum number of search nodes

    Returns:
        Ascending indices of the chosen masks, or None if no exact cover exists
    """
    counter = _NodeCounter("exact cover", budget)
    best: list[int] | None = None

    def search(uncovered: int, available: list[int], chosen: list[int]) -> None:
        nonlocal best
        counter.tick()
        if not uncovered:
            if best is None or len(chosen) > len(best):
                best = list(chosen)
            return
        if best is not None:
            shortest = min((masks[j].bit_count() for j in available), default=0)
            if not shortest or len(chosen) + uncovered.bit_count() // shortest <= len(best):
                return
        low = uncovered & -uncovered
        for index in available:
            if masks[index] & low:
                rest = [j for j in available if not masks[j] & masks[index]]
                search(uncovered & ~masks[index], rest, chosen + [index])

    search(universe, [j for j, mask in enumerate(masks) if mask and not mask & ~universe], [])
    return None if best is None else tuple(sorted(best))


def _disjoint_lower_bound(masks: Sequence[int]) -> int:
    """Number of pairwise disjoint masks picked greedily, smallest first."""
    used = 0
    count = 0
    for mask in sorted(masks, key=int.bit_count):
        if not mask & used:
            used |= mask
            count += 1
    return count


def _greedy_hitting_set(masks: Sequence[int]) -> list[int]:
    remaining = list(masks)
    chosen = []
    while remaining:
        frequency: dict[int, int] = {}
        for mask in remaining:
            for member in mask_members(mask):
                frequency[member] = frequency.get(member, 0) + 1
        element = min(frequency, key=lambda member: (-frequency[member], member))
        chosen.append(element)
        remaining = [mask for mask in remaining if not mask >> element & 1]
    return chosen


def min_hitting_set(
    masks: Sequence[int], lower_bound: int = 0, budget: int = DEFAULT_SOLVER_BUDGET
) -> tuple[int, ...]:
    """Minimum set of resources meeting every mask.

    Branches on the elements of the smallest unhit mask; elements already
    branched on are forbidden in later sibling branches. A greedy disjoint
    subfamily bounds each node from below, and the search stops as soon as
    the incumbent reaches `lower_bound`.

    Args:
        masks: Non-empty bitmasks to hit
        lower_bound: Known lower bound on the optimum, such as a packing size
        budget: Maximum number of search nodes

    Returns:
        Ascending resource positions of a minimum hitting set
    """
    counter = _NodeCounter("minimum hitting set", budget)
    best = _greedy_hitting_set(masks)

    class _Done(Exception):
        pass

    def search(remaining: list[int], chosen: list[int]) -> None:
        nonlocal best
        counter.tick()
        if not remaining:
            if len(chosen) < len(best):
                best = list(chosen)
                if len(best) <= lower_bound:
                    raise _Done
            return
        if len(chosen) + _disjoint_lower_bound(remaining) >= len(best):
            return
        target = min(remaining, key=int.bit_count)
        forbidden = 0
        for element in mask_members(target):
            bit = 1 << element
            rest = []
            for mask in remaining:
                if mask & bit:
                    continue
                mask &= ~forbidden
                if not mask:
                    break
                rest.append(mask)
            else:
                search(rest, chosen + [element])
            forbidden |= bit

    if len(best) > lower_bound:
        try:
            search(list(masks), [])
        except _Done:
            pass
    logger.debug("minimum hitting set: size %d after %d nodes", len(best), counter.nodes)
    return tuple(sorted(best))
