"""Custom exceptions for the uniprior index coder.

This module defines the exception hierarchy used across the package. Every
exception derives from IndexCodingError. Problems with the input (malformed
files, instances outside the modeled class, invalid certificates) derive from
ValidationError; exhausted search or enumeration budgets derive from
LimitExceededError. The CLI maps the two subtrees to distinct exit codes.
"""


class IndexCodingError(Exception):
    """Base exception for all index-coding errors.

    It can be used to catch any package-specific error.
    """

    pass


class ValidationError(IndexCodingError):
    """An input, instance or certificate failed validation."""

    pass


class LimitExceededError(IndexCodingError):
    """A configured enumeration or search budget was exhausted.

    Attributes:
        limit: The configured limit that was exceeded
    """

    def __init__(self, message: str, limit: int) -> None:
        """Initialize LimitExceededError.

        Args:
            message: Error message describing which search ran out
            limit: The configured limit that was exceeded
        """
        self.limit = limit
        super().__init__(f"{message} (limit {limit})")


class ProblemParseError(ValidationError):
    """Exception raised when a text file cannot be parsed.

    It includes the line number where parsing failed to help locate the
    problem in the input file.

    Attributes:
        line: Line number where the error occurred (1-indexed)
    """

    def __init__(self, message: str, line: int) -> None:
        """Initialize ProblemParseError with position information.

        Args:
            message: Error message describing the syntax issue
            line: Line number where the error occurred (1-indexed)
        """
        self.line = line
        super().__init__(f"{message} at line {line}")


class NonDisjointSideInfoError(ValidationError):
    """Two receivers list the same message as side information.

    Attributes:
        message_id: The shared message
        receivers: The receivers that both hold it
    """

    def __init__(self, message_id: str, receivers: tuple[str, str]) -> None:
        self.message_id = message_id
        self.receivers = receivers
        super().__init__(
            f"message {message_id!r} is side information of both receiver "
            f"{receivers[0]!r} and receiver {receivers[1]!r}"
        )


class DemandInOwnSideInfoError(ValidationError):
    """A receiver demands a message it already holds.

    Attributes:
        message_id: The demanded message
        receiver: The receiver holding and demanding it
    """

    def __init__(self, message_id: str, receiver: str) -> None:
        self.message_id = message_id
        self.receiver = receiver
        super().__init__(
            f"receiver {receiver!r} demands message {message_id!r} from its own side information"
        )


class UnhousedDemandedMessageError(ValidationError):
    """A demanded message is nobody's side information.

    Attributes:
        message_id: The message without a holder
    """

    def __init__(self, message_id: str) -> None:
        self.message_id = message_id
        super().__init__(f"demanded message {message_id!r} is not held by any receiver")


class EmptySideInfoError(ValidationError):
    """A receiver has no side information.

    Attributes:
        receiver: The receiver with an empty side-information set
    """

    def __init__(self, receiver: str) -> None:
        self.receiver = receiver
        super().__init__(f"receiver {receiver!r} has empty side information")


class UnknownReceiverError(ValidationError):
    """A demand edge points at a receiver that does not exist.

    Attributes:
        receiver: The unknown receiver label
    """

    def __init__(self, receiver: str) -> None:
        self.receiver = receiver
        super().__init__(f"unknown receiver {receiver!r}")


class InvalidGraphError(ValidationError):
    """A multigraph or undirected graph violates its structural invariants."""

    pass


class IsolatedVertexError(ValidationError):
    """A vertex has no incident edge where every vertex needs one.

    Attributes:
        vertex: Index of the isolated vertex
    """

    def __init__(self, vertex: int) -> None:
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has no incident edge")


class NotEulerianError(ValidationError):
    """An operation requiring an Eulerian multigraph received another graph."""

    pass


class NotGeneralizedCycleError(ValidationError):
    """An operation requiring a generalized cycle received another supergraph.

    Attributes:
        violation: Description of the first violated condition
    """

    def __init__(self, violation: str) -> None:
        self.violation = violation
        super().__init__(f"supergraph is not a generalized cycle: {violation}")


class InvalidCycleError(ValidationError):
    """A supergraph or multigraph cycle is malformed."""

    pass


class InvalidSubgraphError(ValidationError):
    """A claimed spanning generalized-cycle subgraph is not one."""

    pass


class InvalidPackingError(ValidationError):
    """A cycle packing is not edge-disjoint, not valid, or not maximal."""

    pass


class InvalidFeedbackSetError(ValidationError):
    """Removing a claimed feedback set leaves a cycle behind."""

    pass


class PackingNotMaximumError(ValidationError):
    """A cyclic code was requested from a packing that is too small.

    Attributes:
        size: Number of cycles in the supplied packing
        required: Number of cycles needed (nu_e), or None when the packing does
            not even cover every demand
    """

    def __init__(self, size: int, required: int | None) -> None:
        self.size = size
        self.required = required
        if required is None:
            message = f"packing of {size} cycles does not cover every demand edge"
        else:
            message = f"packing has {size} cycles but the maximum is {required}"
        super().__init__(message)


class DimensionMismatchError(ValidationError):
    """A code's columns do not match the problem's canonical message order."""

    pass


class UndecodableDemandError(ValidationError):
    """A receiver cannot recover a demanded message from a code.

    Attributes:
        message_id: The demanded message
        receiver: The receiver that cannot decode it
    """

    def __init__(self, message_id: str, receiver: str) -> None:
        self.message_id = message_id
        self.receiver = receiver
        super().__init__(f"receiver {receiver!r} cannot decode message {message_id!r}")


class UnsupportedFieldError(ValidationError):
    """The requested field size is not implemented for this operation.

    Attributes:
        q: The requested field size
    """

    def __init__(self, q: int, supported: tuple[int, ...]) -> None:
        self.q = q
        self.supported = supported
        super().__init__(f"field size {q} is not supported (supported: {supported})")


class NotApplicableError(ValidationError):
    """The supergraph is neither a generalized cycle nor demand-decomposable."""

    pass


class ConfigurationError(ValidationError):
    """A run configuration value is out of range."""

    pass


class InputFileError(ValidationError):
    """Exception raised when an input file cannot be read.

    Attributes:
        file_path: Path to the file that could not be read
    """

    def __init__(self, message: str, file_path: str | None = None) -> None:
        """Initialize InputFileError.

        Args:
            message: Error message describing the issue
            file_path: Optional path to the unreadable file
        """
        self.file_path = file_path
        super().__init__(message)


class InvalidOutputPathError(ValidationError):
    """Exception raised when an output path cannot be written.

    Attributes:
        output_path: Path that was invalid
    """

    def __init__(self, message: str, output_path: str | None = None) -> None:
        """Initialize InvalidOutputPathError.

        Args:
            message: Error message describing the issue
            output_path: Optional path that was invalid
        """
        self.output_path = output_path
        super().__init__(message)


class CycleLimitExceededError(LimitExceededError):
    """Simple-cycle enumeration produced more cycles than allowed."""

    def __init__(self, limit: int) -> None:
        super().__init__("cycle enumeration exceeded the cycle cap", limit)


class SolverBudgetExceededError(LimitExceededError):
    """A branch-and-bound solver visited more nodes than allowed."""

    def __init__(self, solver: str, limit: int) -> None:
        self.solver = solver
        super().__init__(f"{solver} exceeded its search-node budget", limit)


class SearchLimitExceededError(LimitExceededError):
    """The spanning generalized-cycle search examined too many candidates."""

    def __init__(self, limit: int) -> None:
        super().__init__("spanning generalized-cycle search exceeded its budget", limit)


class OracleTooLargeError(LimitExceededError):
    """The minrank oracle was asked to search too many free entries.

    Attributes:
        free_entries: Number of free matrix entries requested
    """

    def __init__(self, free_entries: int, limit: int) -> None:
        self.free_entries = free_entries
        super().__init__(f"minrank oracle needs {free_entries} free entries", limit)


class MinorBudgetExceededError(LimitExceededError):
    """The minor-containment search ran out of budget or vertex allowance."""

    def __init__(self, message: str, limit: int) -> None:
        super().__init__(message, limit)


class RetryLimitExceededError(LimitExceededError):
    """The instance generator could not produce a connected instance."""

    def __init__(self, limit: int) -> None:
        super().__init__("could not draw a strongly connected cycle superposition", limit)
