"""Text file formats: instances, multigraphs, undirected graphs, codes and reports.

All formats are line oriented UTF-8 text. Everything after a '#' is a
comment and blank lines are ignored. Parse errors carry the 1-indexed line
number of the offending line.
"""

from collections.abc import Iterator, Mapping
from pathlib import Path

from uniprior_coder.codes import IndexCode
from uniprior_coder.exceptions import (
    InputFileError,
    InvalidOutputPathError,
    ProblemParseError,
)
from uniprior_coder.graphs import DirectedMultigraph
from uniprior_coder.minors import UndirectedGraph
from uniprior_coder.supergraph import DemandEdge, DemandSupergraph


def _directives(text: str) -> Iterator[tuple[int, str, list[str]]]:
    """Yield (line number, keyword, arguments) for every non-empty line."""
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens[0], tokens[1:]


def _integer(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ProblemParseError(f"{what} must be an integer, got {token!r}", line) from None


def parse_problem(text: str) -> DemandSupergraph:
    """Parse an instance file into a demand supergraph.

    The format repeats, per receiver:

        receiver <id>
        side <msg> [<msg> ...]
        demand <msg> [<msg> ...]

    `side` and `demand` lines may repeat and accumulate. The message universe
    is the union of the side lines.

    Args:
        text: Instance file content

    Returns:
        The validated supergraph

    Raises:
        ProblemParseError: If a line is malformed
        NonDisjointSideInfoError: If two receivers hold the same message
        DemandInOwnSideInfoError: If a receiver demands a message it holds
        UnhousedDemandedMessageError: If a demanded message has no holder
        EmptySideInfoError: If a receiver has no side line

    Example:
        >>> text = Path("tests/fixtures/example.icp").read_text()
        >>> graph = parse_problem(text)
        >>> graph.m, graph.n
        (4, 9)
    """
    side_info: dict[str, set[str]] = {}
    demands: set[DemandEdge] = set()
    current: str | None = None
    for line, keyword, arguments in _directives(text):
        if keyword == "receiver":
            if len(arguments) != 1:
                raise ProblemParseError("receiver takes exactly one id", line)
            current = arguments[0]
            if current in side_info:
                raise ProblemParseError(f"receiver {current!r} is declared twice", line)
            side_info[current] = set()
        elif keyword in ("side", "demand"):
            if current is None:
                raise ProblemParseError(f"{keyword} line before any receiver", line)
            if not arguments:
                raise ProblemParseError(f"{keyword} line lists no message", line)
            if keyword == "side":
                side_info[current].update(arguments)
            else:
                demands.update(DemandEdge(message, current) for message in arguments)
        else:
            raise ProblemParseError(f"unknown directive {keyword!r}", line)
    if not side_info:
        raise ProblemParseError("instance declares no receiver", 1)
    return DemandSupergraph(
        {receiver: frozenset(held) for receiver, held in side_info.items()}, frozenset(demands)
    )


def serialize_problem(graph: DemandSupergraph, header: tuple[str, ...] = ()) -> str:
    """Render a supergraph in canonical instance format.

    Args:
        graph: The supergraph
        header: Comment lines written first, without the leading '#'

    Returns:
        Text that parse_problem turns back into an equal supergraph
    """
    lines = [f"# {comment}" if comment else "#" for comment in header]
    for receiver in graph.receivers:
        if lines:
            lines.append("")
        lines.append(f"receiver {receiver}")
        held = sorted(graph.side_info[receiver], key=graph.messages.index)
        lines.append("side " + " ".join(held))
        demanded = graph.demanded_by(receiver)
        if demanded:
            lines.append("demand " + " ".join(demanded))
    return "\n".join(lines) + "\n"


def _parse_edge_list(text: str, kind: str) -> tuple[int, list[tuple[int, int]]]:
    vertex_count: int | None = None
    edges: list[tuple[int, int]] = []
    for line, keyword, arguments in _directives(text):
        if keyword == "vertices":
            if vertex_count is not None:
                raise ProblemParseError("vertices is declared twice", line)
            if edges:
                raise ProblemParseError("vertices must come before the first edge", line)
            if len(arguments) != 1:
                raise ProblemParseError("vertices takes exactly one count", line)
            vertex_count = _integer(arguments[0], "vertex count", line)
            if vertex_count < 0:
                raise ProblemParseError("vertex count must be non-negative", line)
        elif keyword == "edge":
            if vertex_count is None:
                raise ProblemParseError(f"{kind} file must start with a vertices line", line)
            if len(arguments) != 2:
                raise ProblemParseError("edge takes exactly two vertices", line)
            tail, head = (_integer(token, "vertex", line) for token in arguments)
            if not (0 <= tail < vertex_count and 0 <= head < vertex_count):
                raise ProblemParseError(f"edge ({tail}, {head}) has an unknown endpoint", line)
            if tail == head:
                raise ProblemParseError(f"self-loop at vertex {tail}", line)
            edges.append((tail, head))
        else:
            raise ProblemParseError(f"unknown directive {keyword!r}", line)
    if vertex_count is None:
        raise ProblemParseError(f"{kind} file has no vertices line", 1)
    return vertex_count, edges


def parse_multigraph(text: str) -> DirectedMultigraph:
    """Parse "vertices <n>" followed by "edge <tail> <head>" lines (0-based).

    Raises:
        ProblemParseError: If a line is malformed or an endpoint is unknown
    """
    vertex_count, edges = _parse_edge_list(text, "multigraph")
    return DirectedMultigraph(vertex_count, tuple(edges))


def serialize_multigraph(graph: DirectedMultigraph) -> str:
    lines = [f"vertices {graph.vertex_count}"]
    lines.extend(f"edge {tail} {head}" for tail, head in graph.edges)
    return "\n".join(lines) + "\n"


def parse_undirected(text: str) -> UndirectedGraph:
    """Parse an undirected graph; repeated edges collapse into one.

    Raises:
        ProblemParseError: If a line is malformed or an endpoint is unknown
    """
    vertex_count, edges = _parse_edge_list(text, "graph")
    return UndirectedGraph(vertex_count, frozenset(edges))


def serialize_undirected(graph: UndirectedGraph) -> str:
    lines = [f"vertices {graph.vertex_count}"]
    lines.extend(f"edge {u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> IndexCode:
    """Parse a code file.

    Line 1 is "field <q>", line 2 "length <l>", line 3 "messages <x_a> ..."
    giving the column order, followed by l rows of coefficients in [0, q).

    Raises:
        ProblemParseError: If a header is missing or a row is malformed
        UnsupportedFieldError: If q is not an implemented field size
    """
    directives = list(_directives(text))
    expected = ("field", "length", "messages")
    if len(directives) < 3 or tuple(d[1] for d in directives[:3]) != expected:
        line = directives[0][0] if directives else 1
        raise ProblemParseError("code file must start with field, length and messages lines", line)

    line, _, arguments = directives[0]
    if len(arguments) != 1:
        raise ProblemParseError("field takes exactly one size", line)
    q = _integer(arguments[0], "field size", line)
    line, _, arguments = directives[1]
    if len(arguments) != 1:
        raise ProblemParseError("length takes exactly one count", line)
    length = _integer(arguments[0], "length", line)
    line, _, messages = directives[2]
    if not messages:
        raise ProblemParseError("messages line lists no message", line)

    rows = []
    for line, keyword, arguments in directives[3:]:
        row = [_integer(token, "coefficient", line) for token in [keyword, *arguments]]
        if len(row) != len(messages):
            raise ProblemParseError(
                f"row has {len(row)} coefficients, expected {len(messages)}", line
            )
        if any(not 0 <= coefficient < q for coefficient in row):
            raise ProblemParseError(f"coefficient outside [0, {q})", line)
        rows.append(tuple(row))
    if len(rows) != length:
        last = directives[-1][0]
        raise ProblemParseError(f"code declares {length} rows but has {len(rows)}", last)
    return IndexCode(q, tuple(messages), tuple(rows))


def serialize_code(code: IndexCode) -> str:
    """Render a code file; row provenance is appended as comments."""
    lines = [f"field {code.q}", f"length {code.length}", "messages " + " ".join(code.messages)]
    for number, row in enumerate(code.rows):
        text = " ".join(str(coefficient) for coefficient in row)
        if code.row_provenance:
            text += f"  # {code.row_provenance[number]}"
        lines.append(text)
    return "\n".join(lines) + "\n"


def serialize_report(fields: Mapping[str, str]) -> str:
    """Machine-readable report: one key=value line per field."""
    return "".join(f"{key}={value}\n" for key, value in fields.items())


def read_text(path: Path) -> str:
    """Read a UTF-8 input file.

    Raises:
        InputFileError: If the file is missing, not a file or unreadable
    """
    if not path.exists():
        raise InputFileError(f"Input file not found: {path}", str(path))
    if not path.is_file():
        raise InputFileError(f"Input path is not a file: {path}", str(path))
    try:
        return path.read_text(encoding="utf-8")
    except PermissionError:
        raise InputFileError(f"Permission denied reading file: {path}", str(path)) from None
    except (OSError, UnicodeDecodeError) as e:
        raise InputFileError(f"Error reading file: {e}", str(path)) from None


def write_text(path: Path, text: str) -> None:
    """Write a UTF-8 output file, creating parent directories.

    Raises:
        InvalidOutputPathError: If the path cannot be written
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except PermissionError:
        raise InvalidOutputPathError(f"Permission denied writing to: {path}", str(path)) from None
    except OSError as e:
        raise InvalidOutputPathError(f"Error writing output file: {e}", str(path)) from None
