"""Scalar linear index codes: the cyclic code construction and decodability checks.

An index code over GF(q) is an l x n coefficient matrix whose columns follow
the problem's canonical message order. The server broadcasts the l inner
products of its rows with the message vector. Receiver j recovers a demanded
message x exactly when the indicator vector of x lies in the span of the code
rows together with the indicator vectors of its side information S(j).
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

import galois
import numpy as np

from uniprior_coder import fields
from uniprior_coder.exceptions import (
    DimensionMismatchError,
    InvalidCycleError,
    InvalidPackingError,
    PackingNotMaximumError,
    UndecodableDemandError,
    UnsupportedFieldError,
)
from uniprior_coder.models import SUPPORTED_FIELD_SIZES
from uniprior_coder.supergraph import (
    DemandEdge,
    DemandSupergraph,
    SupergraphCycle,
    require_generalized_cycle,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexCode:
    """Scalar linear index code over GF(q).

    Attributes:
        q: Field size
        messages: Column labels, in the problem's canonical message order
        rows: Coefficients of each transmission, integers in [0, q)
        row_provenance: Optional label per row, such as the cycle it came from

    Raises:
        UnsupportedFieldError: If q is not an implemented field size
        DimensionMismatchError: If a row has the wrong width, there are more
            rows than messages, or the provenance does not match the rows
        ValueError: If a coefficient lies outside [0, q)
    """

    q: int
    messages: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]
    row_provenance: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.q not in SUPPORTED_FIELD_SIZES:
            raise UnsupportedFieldError(self.q, SUPPORTED_FIELD_SIZES)
        object.__setattr__(self, "messages", tuple(self.messages))
        object.__setattr__(self, "rows", tuple(tuple(int(c) for c in row) for row in self.rows))
        object.__setattr__(self, "row_provenance", tuple(self.row_provenance))
        width = len(self.messages)
        if len(self.rows) > width:
            raise DimensionMismatchError(
                f"code has {len(self.rows)} transmissions for {width} messages"
            )
        for number, row in enumerate(self.rows, start=1):
            if len(row) != width:
                raise DimensionMismatchError(
                    f"row {number} has {len(row)} coefficients, expected {width}"
                )
            for coefficient in row:
                if not 0 <= coefficient < self.q:
                    raise ValueError(
                        f"coefficient {coefficient} in row {number} is not in [0, {self.q})"
                    )
        if self.row_provenance and len(self.row_provenance) != len(self.rows):
            raise DimensionMismatchError("row provenance does not match the number of rows")

    @property
    def length(self) -> int:
        return len(self.rows)

    @property
    def matrix(self) -> galois.FieldArray:
        """The l x n coefficient matrix as a galois array."""
        return fields.matrix(self.q, [list(row) for row in self.rows], len(self.messages))

    def _message_vector(self, values: Mapping[str, int] | Sequence[int]) -> galois.FieldArray:
        if isinstance(values, Mapping):
            values = [values[message] for message in self.messages]
        if len(values) != len(self.messages):
            raise DimensionMismatchError(
                f"got {len(values)} message values, expected {len(self.messages)}"
            )
        return fields.field(self.q)(np.asarray(values, dtype=np.int64))

    def encode(self, values: Mapping[str, int] | Sequence[int]) -> tuple[int, ...]:
        """Compute the broadcast transmissions for a message vector.

        Args:
            values: Message values in [0, q), keyed by label or in column order

        Returns:
            One symbol per row

        Example:
            >>> code = IndexCode(2, ("a", "b"), ((1, 1),))
            >>> code.encode({"a": 1, "b": 0})
            (1,)
        """
        if not self.rows:
            return ()
        symbols = self.matrix @ self._message_vector(values)
        return tuple(int(symbol) for symbol in symbols)

    def decode(
        self,
        problem: DemandSupergraph,
        receiver: str,
        transmissions: Sequence[int],
        side_values: Mapping[str, int],
    ) -> dict[str, int]:
        """Recover the messages a receiver demands.

        Each demanded message is written as a combination of the code rows and
        the receiver's side-information indicators; applying the same
        combination to the received symbols and side values yields it.

        Args:
            problem: The problem the code was built for
            receiver: The decoding receiver
            transmissions: Symbols produced by encode()
            side_values: Values of the receiver's side-information messages

        Returns:
            Value of each demanded message

        Raises:
            DimensionMismatchError: If the code does not fit the problem or the
                number of transmissions is wrong
            UndecodableDemandError: If some demand cannot be recovered
        """
        _check_columns(problem, self)
        if len(transmissions) != self.length:
            raise DimensionMismatchError(
                f"got {len(transmissions)} transmissions, expected {self.length}"
            )
        gf = fields.field(self.q)
        held = sorted(problem.side_info[receiver], key=self.messages.index)
        knowledge = _knowledge(self, held)
        observed = gf(
            np.asarray(
                list(transmissions) + [side_values[message] for message in held], dtype=np.int64
            )
        )
        decoded = {}
        for message in problem.demanded_by(receiver):
            target = _indicator(gf, self.messages, message)
            try:
                coefficients = fields.solve_combination(knowledge, target)
            except ValueError as error:
                raise UndecodableDemandError(message, receiver) from error
            decoded[message] = int(coefficients @ observed)
        return decoded


def _indicator(gf: type[galois.FieldArray], messages: tuple[str, ...], message: str):
    vector = gf.Zeros(len(messages))
    vector[messages.index(message)] = 1
    return vector


def _knowledge(code: IndexCode, held: Sequence[str]) -> galois.FieldArray:
    """Code rows stacked over the indicator rows of the held messages."""
    rows = [list(row) for row in code.rows]
    for message in held:
        indicator = [0] * len(code.messages)
        indicator[code.messages.index(message)] = 1
        rows.append(indicator)
    return fields.matrix(code.q, rows, len(code.messages))


def _check_columns(problem: DemandSupergraph, code: IndexCode) -> None:
    if code.messages != problem.messages:
        raise DimensionMismatchError(
            f"code columns {list(code.messages)} do not match the problem's messages "
            f"{list(problem.messages)}"
        )


def cyclic_code(
    graph: DemandSupergraph,
    cycles: Sequence[SupergraphCycle],
    q: int = 2,
    nu_e: int | None = None,
) -> IndexCode:
    """Build the cyclic code of an edge-disjoint cycle packing.

    A cycle with messages x0, x1, ..., x(L-1) contributes the L-1
    transmissions x0 - x1, x1 - x2, ..., x(L-2) - x(L-1). When the cycles
    cover every demand the code has n - |cycles| rows.

    Args:
        graph: A generalized cycle
        cycles: Edge-disjoint cycles of `graph` covering all of its demands
        q: Field size
        nu_e: Maximum packing size; when given, a smaller packing is rejected

    Returns:
        IndexCode whose rows carry the label "C<k>" of their cycle

    Raises:
        NotGeneralizedCycleError: If `graph` is not a generalized cycle
        InvalidPackingError: If a cycle is invalid or two cycles share an edge
        PackingNotMaximumError: If the cycles miss a demand or are fewer than `nu_e`

    Example:
        >>> code = cyclic_code(example, solution.cycles)
        >>> code.length
        5
    """
    require_generalized_cycle(graph)
    used: set[DemandEdge] = set()
    for cycle in cycles:
        try:
            cycle.validate(graph)
        except InvalidCycleError as error:
            raise InvalidPackingError(f"invalid cycle {cycle}: {error}") from error
        if used & set(cycle.edges):
            raise InvalidPackingError(f"cycle {cycle} shares a demand edge with another cycle")
        used.update(cycle.edges)
    if used != graph.demands:
        raise PackingNotMaximumError(len(cycles), None)
    if nu_e is not None and len(cycles) < nu_e:
        raise PackingNotMaximumError(len(cycles), nu_e)

    gf = fields.field(q)
    minus_one = int(-gf(1))
    column = {message: index for index, message in enumerate(graph.messages)}
    rows = []
    provenance = []
    for number, cycle in enumerate(cycles, start=1):
        messages = cycle.messages
        for first, second in zip(messages, messages[1:]):
            row = [0] * len(column)
            row[column[first]] = 1
            row[column[second]] = minus_one
            rows.append(tuple(row))
            provenance.append(f"C{number}")
    logger.debug("cyclic code over GF(%d): %d rows from %d cycles", q, len(rows), len(cycles))
    return IndexCode(q, graph.messages, tuple(rows), tuple(provenance))


@dataclass(frozen=True)
class DecodabilityReport:
    """Per-demand decodability of a code.

    Attributes:
        verdicts: Whether each demand is decodable, in canonical demand order
    """

    verdicts: tuple[tuple[DemandEdge, bool], ...]

    @property
    def decodable(self) -> int:
        return sum(1 for _, ok in self.verdicts if ok)

    @property
    def total(self) -> int:
        return len(self.verdicts)

    @property
    def all_decodable(self) -> bool:
        return self.decodable == self.total

    def failures(self) -> list[DemandEdge]:
        return [demand for demand, ok in self.verdicts if not ok]

    def summary(self) -> str:
        return f"{self.decodable}/{self.total} demands decodable"


def verify_code(problem: DemandSupergraph, code: IndexCode) -> DecodabilityReport:
    """Check every demand of a problem against a code.

    Args:
        problem: Any valid supergraph
        code: A code whose columns follow the problem's message order

    Returns:
        DecodabilityReport with one verdict per demand

    Raises:
        DimensionMismatchError: If the code columns do not match the problem
    """
    _check_columns(problem, code)
    gf = fields.field(code.q)
    knowledge_by_receiver = {
        receiver: _knowledge(code, sorted(problem.side_info[receiver], key=code.messages.index))
        for receiver in problem.receivers
    }
    verdicts = []
    for demand in problem.sorted_demands:
        target = _indicator(gf, code.messages, demand.message)
        verdicts.append(
            (demand, fields.in_row_span(knowledge_by_receiver[demand.receiver], target))
        )
    report = DecodabilityReport(tuple(verdicts))
    logger.debug("verified code: %s", report.summary())
    return report
