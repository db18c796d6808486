"""Greedy maximal cycle packing."""

from collections.abc import Sequence

from uniprior_coder.solvers.base import PackingStrategy


class GreedyPacking(PackingStrategy):
    """Take each cycle that is disjoint from those already taken.

    Candidates are visited in the given order (default: their list order,
    which for enumerated cycles is shortest first, ties by edge index). The
    result is maximal: no remaining candidate can be added.

    Attributes:
        order: Optional visiting order as a permutation of candidate indices
    """

    def __init__(self, order: Sequence[int] | None = None) -> None:
        self.order = None if order is None else tuple(order)

    def select(self, masks: Sequence[int]) -> tuple[int, ...]:
        order = range(len(masks)) if self.order is None else self.order
        used = 0
        chosen = []
        for index in order:
            if not masks[index] & used:
                chosen.append(index)
                used |= masks[index]
        return tuple(sorted(chosen))
