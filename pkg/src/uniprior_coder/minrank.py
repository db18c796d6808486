"""Exhaustive GF(2) minrank of a side-information graph.

A matrix fits the side-information graph when its diagonal is 1, entry
(i, k) is free for every edge i -> k and every other entry is 0. The smallest
rank of a fitting matrix is the optimal scalar linear code length over GF(2).

Rows are int bitsets, bit k standing for column k. The search fixes one row
at a time while an echelon basis of the rows so far is kept incrementally.
Choices for the next row are reduced modulo that basis: every choice already
in the span leads to the same subproblem, and choices with equal residue
span the same space, so each distinct residue is explored once. A branch is
cut once its rank reaches the best complete rank found.
"""

import logging
from concurrent.futures import ProcessPoolExecutor

from uniprior_coder.exceptions import OracleTooLargeError, UnsupportedFieldError
from uniprior_coder.transforms import SideInfoGraph

logger = logging.getLogger(__name__)

DEFAULT_MAX_EDGES = 24


def _reduce(basis: dict[int, int], row: int) -> int:
    """Canonical residue of `row` modulo the span of an echelon basis."""
    for pivot in sorted(basis, reverse=True):
        if row >> pivot & 1:
            row ^= basis[pivot]
    return row


def _candidate_rows(side_info: SideInfoGraph) -> list[list[int]]:
    free: dict[int, list[int]] = {v: [] for v in range(side_info.graph.vertex_count)}
    for tail, head in side_info.graph.edges:
        free[tail].append(head)
    rows = []
    for vertex in range(side_info.graph.vertex_count):
        options = []
        for subset in range(1 << len(free[vertex])):
            row = 1 << vertex
            for position, column in enumerate(free[vertex]):
                if subset >> position & 1:
                    row |= 1 << column
            options.append(row)
        rows.append(options)
    return rows


def _branches(candidates: list[int], basis: dict[int, int]) -> tuple[bool, list[int]]:
    """Whether some choice lies in the span, and the distinct non-zero residues."""
    in_span = False
    residues: list[int] = []
    seen: set[int] = set()
    for row in candidates:
        residue = _reduce(basis, row)
        if not residue:
            in_span = True
        elif residue not in seen:
            seen.add(residue)
            residues.append(residue)
    return in_span, residues


def _search(
    rows: list[list[int]], position: int, basis: dict[int, int], best: int
) -> int:
    """Smallest rank below `best` reachable from this partial matrix, else `best`."""
    rank = len(basis)
    if rank >= best:
        return best
    if position == len(rows):
        return rank
    in_span, residues = _branches(rows[position], basis)
    if in_span:
        best = _search(rows, position + 1, basis, best)
    if rank + 1 < best:
        for residue in residues:
            extended = dict(basis)
            extended[residue.bit_length() - 1] = residue
            best = _search(rows, position + 1, extended, best)
            if rank + 1 >= best:
                break
    return best


def _search_branch(rows: list[list[int]], basis: dict[int, int], best: int) -> int:
    return _search(rows, 1, basis, best)


def minrank_oracle(
    side_info: SideInfoGraph,
    q: int = 2,
    max_edges: int = DEFAULT_MAX_EDGES,
    workers: int = 1,
) -> int:
    """Compute the GF(2) minrank of a side-information graph.

    Args:
        side_info: The side-information graph
        q: Field size; only 2 is supported
        max_edges: Largest number of free entries accepted
        workers: Processes sharing the first row's branches; the result does
            not depend on this value

    Returns:
        The minimum rank, which equals the optimal scalar linear length

    Raises:
        UnsupportedFieldError: If q != 2
        OracleTooLargeError: If the graph has more than `max_edges` edges

    Example:
        >>> minrank_oracle(to_side_information_graph(example))
        5
    """
    if q != 2:
        raise UnsupportedFieldError(q, (2,))
    free_entries = side_info.graph.edge_count
    if free_entries > max_edges:
        raise OracleTooLargeError(free_entries, max_edges)
    vertex_count = side_info.graph.vertex_count
    if vertex_count == 0:
        return 0

    rows = _candidate_rows(side_info)
    if workers <= 1:
        result = _search(rows, 0, {}, vertex_count + 1)
    else:
        # the first row always has its diagonal bit, so no choice is in the empty span
        _, residues = _branches(rows[0], {})
        starts = [{residue.bit_length() - 1: residue} for residue in residues]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = pool.map(
                _search_branch,
                [rows] * len(starts),
                starts,
                [vertex_count + 1] * len(starts),
            )
            result = min(outcomes)
    logger.debug("minrank over GF(2) with %d free entries: %d", free_entries, result)
    return result
