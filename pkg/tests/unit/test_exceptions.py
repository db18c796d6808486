"""Unit tests for custom exceptions."""

import pytest

from uniprior_coder.exceptions import (
    CycleLimitExceededError,
    DemandInOwnSideInfoError,
    IndexCodingError,
    InputFileError,
    InvalidOutputPathError,
    LimitExceededError,
    NonDisjointSideInfoError,
    NotGeneralizedCycleError,
    OracleTooLargeError,
    PackingNotMaximumError,
    ProblemParseError,
    SolverBudgetExceededError,
    UnsupportedFieldError,
    ValidationError,
)


class TestIndexCodingError:
    """Tests for the base IndexCodingError exception."""

    def test_index_coding_error_initialization(self) -> None:
        """Test that IndexCodingError can be initialized with a message."""
        error = IndexCodingError("Test error message")
        assert str(error) == "Test error message"

    def test_subtrees_are_index_coding_errors(self) -> None:
        """Test that both subtrees derive from the base exception."""
        assert issubclass(ValidationError, IndexCodingError)
        assert issubclass(LimitExceededError, IndexCodingError)
        assert not issubclass(LimitExceededError, ValidationError)


class TestProblemParseError:
    """Tests for the ProblemParseError exception."""

    def test_message_format(self) -> None:
        """Test that the line number is appended to the message."""
        error = ProblemParseError("unknown directive 'wants'", line=3)
        assert str(error) == "unknown directive 'wants' at line 3"
        assert error.line == 3

    def test_is_validation_error(self) -> None:
        """Test that ProblemParseError is a ValidationError."""
        assert isinstance(ProblemParseError("bad", 1), ValidationError)


class TestInstanceErrors:
    """Tests for errors naming the offending entity."""

    def test_non_disjoint_side_info_names_message_and_receivers(self) -> None:
        """Test that the shared message and both holders are kept."""
        error = NonDisjointSideInfoError("x2", ("1", "2"))
        assert error.message_id == "x2"
        assert error.receivers == ("1", "2")
        assert "'x2'" in str(error)
        assert "'1'" in str(error) and "'2'" in str(error)

    def test_demand_in_own_side_info(self) -> None:
        """Test that the receiver and the message are named."""
        error = DemandInOwnSideInfoError("x1", "1")
        assert error.receiver == "1"
        assert "demands message 'x1'" in str(error)

    def test_not_generalized_cycle_keeps_violation(self) -> None:
        """Test that the violated condition text is kept."""
        error = NotGeneralizedCycleError("in-degree(1)=1 != s_1=2")
        assert error.violation == "in-degree(1)=1 != s_1=2"
        assert str(error).endswith("in-degree(1)=1 != s_1=2")

    def test_packing_not_maximum_messages(self) -> None:
        """Test both forms of the packing-size message."""
        assert "maximum is 4" in str(PackingNotMaximumError(3, 4))
        assert "does not cover" in str(PackingNotMaximumError(2, None))

    def test_unsupported_field(self) -> None:
        """Test that the requested size is stored."""
        error = UnsupportedFieldError(6, (2, 3))
        assert error.q == 6
        assert "6" in str(error)


class TestFileErrors:
    """Tests for file access errors."""

    def test_input_file_error_with_path(self) -> None:
        """Test InputFileError initialization with file path."""
        error = InputFileError("Input file not found", file_path="/path/to/file.icp")
        assert str(error) == "Input file not found"
        assert error.file_path == "/path/to/file.icp"

    def test_invalid_output_path_error_defaults(self) -> None:
        """Test InvalidOutputPathError without a path."""
        error = InvalidOutputPathError("Cannot write")
        assert error.output_path is None
        assert isinstance(error, ValidationError)


class TestLimitExceededErrors:
    """Tests for exhausted budgets."""

    @pytest.mark.parametrize(
        "error",
        [
            CycleLimitExceededError(10),
            SolverBudgetExceededError("exact packing", 10),
            OracleTooLargeError(30, 10),
        ],
    )
    def test_limit_is_reported(self, error: LimitExceededError) -> None:
        """Test that every limit error stores and prints its limit."""
        assert error.limit == 10
        assert "(limit 10)" in str(error)
        assert isinstance(error, LimitExceededError)

    def test_oracle_too_large_keeps_entries(self) -> None:
        """Test that the requested number of free entries is stored."""
        assert OracleTooLargeError(30, 24).free_entries == 30
