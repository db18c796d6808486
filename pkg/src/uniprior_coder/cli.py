"""Command-line interface for the uniprior index coder.

This module provides the CLI entry point. Each subcommand reads its input
files, delegates to the library and prints a human-readable report; `--out`
additionally writes the produced file or a key=value report. Exit status is
0 on success, 1 on validation errors and 2 when a search limit is exceeded.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from uniprior_coder import formats
from uniprior_coder.bounds import BoundsAnalyzer
from uniprior_coder.codes import verify_code
from uniprior_coder.decomposition import find_spanning_generalized_cycle
from uniprior_coder.exceptions import (
    IndexCodingError,
    LimitExceededError,
    NotApplicableError,
)
from uniprior_coder.generator import generate_instance
from uniprior_coder.graphs import DirectedMultigraph, SimpleCycle
from uniprior_coder.minors import has_minor, petersen_family
from uniprior_coder.minrank import minrank_oracle
from uniprior_coder.models import RunConfig, SolverLimits, SolverMode
from uniprior_coder.solvers import max_edge_disjoint_packing, min_feedback_edge_set
from uniprior_coder.supergraph import (
    DemandEdge,
    DemandSupergraph,
    SupergraphCycle,
    classify_problem,
    is_generalized_cycle,
)
from uniprior_coder.transforms import EulerianView, to_eulerian, to_side_information_graph

logger = logging.getLogger(__name__)

DEFAULT_LIMITS = SolverLimits()


def _shared_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--field", type=int, default=2, help="Field size q of codes (default: 2)")
    parent.add_argument(
        "--mode",
        choices=[mode.value for mode in SolverMode],
        default=SolverMode.EXACT.value,
        help="Maximum (exact) or maximal (greedy) cycle packing (default: exact)",
    )
    parent.add_argument(
        "--cycle-cap",
        type=int,
        default=DEFAULT_LIMITS.cycle_cap,
        help=f"Maximum simple cycles to enumerate (default: {DEFAULT_LIMITS.cycle_cap})",
    )
    parent.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_LIMITS.solver_budget,
        help=f"Maximum branch-and-bound search nodes (default: {DEFAULT_LIMITS.solver_budget})",
    )
    parent.add_argument(
        "--search-budget",
        type=int,
        default=DEFAULT_LIMITS.search_budget,
        help="Maximum nodes of the spanning generalized-cycle search "
        f"(default: {DEFAULT_LIMITS.search_budget})",
    )
    parent.add_argument(
        "--oracle-max-edges",
        type=int,
        default=DEFAULT_LIMITS.oracle_max_edges,
        help="Largest graph the minrank oracle accepts "
        f"(default: {DEFAULT_LIMITS.oracle_max_edges})",
    )
    parent.add_argument(
        "--minor-vertex-limit",
        type=int,
        default=DEFAULT_LIMITS.minor_vertex_limit,
        help=f"Largest host graph for minor tests (default: {DEFAULT_LIMITS.minor_vertex_limit})",
    )
    parent.add_argument(
        "--minor-budget",
        type=int,
        default=DEFAULT_LIMITS.minor_budget,
        help=f"Maximum nodes per minor test (default: {DEFAULT_LIMITS.minor_budget})",
    )
    parent.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    parent.add_argument("--out", type=str, default=None, help="Write the result to this path")
    parent.add_argument(
        "--verbose",
        action="store_true",
        help="Enable verbose output with detailed processing information",
    )
    return parent


def parse_arguments(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Parsed arguments with the subcommand in `command`

    Example:
        >>> args = parse_arguments(["bounds", "example.icp"])
        >>> args.command, args.files
        ('bounds', ['example.icp'])
    """
    parser = argparse.ArgumentParser(
        prog="uniprior-coder",
        description=(
            "Bound the optimal broadcast length of uniprior index coding problems "
            "and build the matching cyclic codes"
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  uniprior-coder bounds example.icp
  uniprior-coder code example.icp --field 3 --out code.icx
  uniprior-coder verify example.icp code.icx
  uniprior-coder gen --receivers 4 --cycles 4 --extra 2 --seed 1
        """,
    )
    parent = _shared_flags()
    subparsers = parser.add_subparsers(dest="command", required=True)

    single_file = {
        "validate": "Parse and validate an instance file",
        "classify": "Report the structural classes of an instance",
        "bounds": "Compute lower and upper bounds with certificates",
        "pack": "Pack edge-disjoint cycles of an instance or multigraph",
        "fes": "Find a minimum feedback edge set of an instance or multigraph",
        "code": "Build the cyclic code of an instance",
    }
    commands = {}
    for name, help_text in single_file.items():
        commands[name] = subparsers.add_parser(name, parents=[parent], help=help_text)
        commands[name].add_argument("files", nargs=1, metavar="FILE", help="Input file")
    commands["bounds"].add_argument(
        "--side-info",
        action="store_true",
        help="Also report n - tau_v and n - nu_v of the side-information graph",
    )

    verify = subparsers.add_parser(
        "verify", parents=[parent], help="Check every demand against a code file"
    )
    verify.add_argument("files", nargs=2, metavar=("INSTANCE", "CODE"), help="Input files")

    oracle = subparsers.add_parser(
        "oracle", parents=[parent], help="Exhaustive GF(2) minrank of the side-information graph"
    )
    oracle.add_argument("files", nargs=1, metavar="FILE", help="Instance file")
    oracle.add_argument("--workers", type=int, default=1, help="Worker processes (default: 1)")

    petersen = subparsers.add_parser(
        "petersen", parents=[parent], help="List the Petersen family or test a graph against it"
    )
    petersen.add_argument("files", nargs="*", metavar="GRAPH", help="Undirected graph file")

    gen = subparsers.add_parser("gen", parents=[parent], help="Generate a random instance")
    gen.set_defaults(files=[])
    gen.add_argument("--receivers", type=int, default=4, help="Number of receivers (default: 4)")
    gen.add_argument("--cycles", type=int, default=4, help="Superposed cycles (default: 4)")
    gen.add_argument("--extra", type=int, default=0, help="Extra intra-cycle demands (default: 0)")
    gen.add_argument(
        "--max-cycle-length", type=int, default=None, help="Longest planted cycle (default: m)"
    )
    gen.add_argument(
        "--retry-limit",
        type=int,
        default=DEFAULT_LIMITS.retry_limit,
        help="Attempts at drawing a connected superposition "
        f"(default: {DEFAULT_LIMITS.retry_limit})",
    )

    return parser.parse_args(argv)


def build_config(args: argparse.Namespace) -> RunConfig:
    """Turn parsed arguments into a validated RunConfig.

    Raises:
        ConfigurationError: If a limit is not positive or the seed is negative
        UnsupportedFieldError: If the field size is not implemented
    """
    limits = SolverLimits(
        cycle_cap=args.cycle_cap,
        solver_budget=args.budget,
        search_budget=args.search_budget,
        oracle_max_edges=args.oracle_max_edges,
        minor_vertex_limit=args.minor_vertex_limit,
        minor_budget=args.minor_budget,
        retry_limit=getattr(args, "retry_limit", DEFAULT_LIMITS.retry_limit),
    )
    return RunConfig(
        command=args.command,
        inputs=tuple(Path(name) for name in args.files),
        field_size=args.field,
        mode=SolverMode(args.mode),
        limits=limits,
        seed=args.seed,
        output=Path(args.out) if args.out else None,
        verbose=args.verbose,
    )


def _read_problem(path: Path) -> DemandSupergraph:
    return formats.parse_problem(formats.read_text(path))


def _emit_report(config: RunConfig, fields: dict[str, str]) -> None:
    if config.output is not None:
        formats.write_text(config.output, formats.serialize_report(fields))


def _format_cycles(cycles: Sequence[SupergraphCycle]) -> list[str]:
    return [f"  C{k}: {cycle}" for k, cycle in enumerate(cycles, start=1)]


def _core_of(graph: DemandSupergraph, config: RunConfig) -> DemandSupergraph:
    """The problem itself if it is a generalized cycle, else its spanning decomposition core."""
    verdict = is_generalized_cycle(graph)
    if verdict:
        return graph
    decomposition = find_spanning_generalized_cycle(graph, config.limits)
    if decomposition is None:
        raise NotApplicableError(
            f"problem is not a generalized cycle ({verdict.witness}) "
            "and no spanning generalized cycle decomposes it"
        )
    return decomposition.core


def cmd_validate(config: RunConfig, args: argparse.Namespace) -> int:
    graph = _read_problem(config.inputs[0])
    print(f"valid: m={graph.m} n={graph.n} demands={len(graph.demands)}")
    _emit_report(
        config, {"m": str(graph.m), "n": str(graph.n), "demands": str(len(graph.demands))}
    )
    return 0


def cmd_classify(config: RunConfig, args: argparse.Namespace) -> int:
    graph = _read_problem(config.inputs[0])
    classification = classify_problem(graph)
    verdict = classification.generalized_cycle

    def yes_no(flag: bool) -> str:
        return "yes" if flag else "no"

    fields = {
        "single-unicast": yes_no(classification.single_unicast),
        "single-uniprior": yes_no(classification.single_uniprior),
        "generalized-cycle": yes_no(verdict.is_generalized_cycle),
    }
    if verdict:
        fields["demand-decomposable"] = "yes"
    else:
        decomposition = find_spanning_generalized_cycle(graph, config.limits)
        fields["demand-decomposable"] = yes_no(decomposition is not None)

    for key, value in fields.items():
        line = f"{key}: {value}"
        if key == "generalized-cycle" and not verdict:
            line += f" (witness: {verdict.witness})"
        print(line)
    _emit_report(config, fields)
    return 0


def cmd_bounds(config: RunConfig, args: argparse.Namespace) -> int:
    graph = _read_problem(config.inputs[0])
    analyzer = BoundsAnalyzer(config.mode, config.limits, config.field_size)
    analysis = analyzer.analyze(graph, with_tightness=True, with_side_info=args.side_info)
    report = analysis.report

    print(report.summary())
    print(f"structure: {report.structure.value}")
    print(f"achieved length: {report.achieved_length} over GF({config.field_size})")
    print(f"cycles ({len(analysis.cycles)}):")
    for line in _format_cycles(analysis.cycles):
        print(line)
    feedback = ",".join(str(edge) for edge in analysis.solution.feedback_edges)
    print(f"feedback edges ({report.tau_e}): {feedback}")
    print(analysis.decodability.summary())
    if report.side_info_lower is not None:
        print(
            f"side-information bounds: lower={report.side_info_lower} "
            f"upper={report.side_info_upper}"
        )
    _emit_report(config, report.as_fields())
    return 0


def _load_graph(path: Path, config: RunConfig) -> tuple[DirectedMultigraph, EulerianView | None]:
    """Load a multigraph file, or the Eulerian graph of an instance's generalized cycle.

    Files whose first directive is `vertices` are multigraphs; anything else
    is parsed as an instance.
    """
    text = formats.read_text(path)
    tokens = (line.split("#", 1)[0].split() for line in text.splitlines())
    first = next((words[0] for words in tokens if words), "")
    if first == "vertices":
        return formats.parse_multigraph(text), None
    view = to_eulerian(_core_of(formats.parse_problem(text), config))
    return view.graph, view


def _cycle_text(graph: DirectedMultigraph, view: EulerianView | None, cycle: SimpleCycle) -> str:
    if view is not None:
        return str(view.to_supergraph_cycle(cycle))
    vertices = cycle.vertices(graph)
    return "->".join(str(vertex) for vertex in (*vertices, vertices[0]))


def _edge_texts(
    graph: DirectedMultigraph, view: EulerianView | None, indices: frozenset[int]
) -> list[str]:
    if view is not None:
        edges = sorted((view.edge_provenance[i] for i in indices), key=DemandEdge.sort_key)
        return [str(edge) for edge in edges]
    return [f"{i}:{graph.edges[i][0]}->{graph.edges[i][1]}" for i in sorted(indices)]


def cmd_pack(config: RunConfig, args: argparse.Namespace) -> int:
    graph, view = _load_graph(config.inputs[0], config)
    packing = max_edge_disjoint_packing(
        graph, config.mode, cycle_limit=config.limits.cycle_cap, budget=config.limits.solver_budget
    )
    label = "nu_e" if config.mode is SolverMode.EXACT else "maximal packing"
    print(f"{label}={len(packing)}")
    for k, cycle in enumerate(packing.cycles, start=1):
        print(f"  C{k}: {_cycle_text(graph, view, cycle)}")
    _emit_report(config, {"mode": config.mode.value, "packing": str(len(packing))})
    return 0


def cmd_fes(config: RunConfig, args: argparse.Namespace) -> int:
    graph, view = _load_graph(config.inputs[0], config)
    feedback = min_feedback_edge_set(
        graph, cycle_limit=config.limits.cycle_cap, budget=config.limits.solver_budget
    )
    edges = _edge_texts(graph, view, feedback.edge_indices)
    print(f"tau_e={len(feedback)}")
    for edge in edges:
        print(f"  {edge}")
    _emit_report(config, {"tau_e": str(len(feedback)), "edges": " ".join(edges)})
    return 0


def cmd_code(config: RunConfig, args: argparse.Namespace) -> int:
    graph = _read_problem(config.inputs[0])
    analyzer = BoundsAnalyzer(config.mode, config.limits, config.field_size)
    analysis = analyzer.analyze(graph, with_tightness=False)
    text = formats.serialize_code(analysis.code)
    if config.output is None:
        print(text, end="")
    else:
        formats.write_text(config.output, text)
        print(
            f"code of length {analysis.code.length} over GF({config.field_size}) "
            f"written to: {config.output}"
        )
    if not analysis.decodability.all_decodable:
        logger.warning("emitted code fails %s", analysis.decodability.summary())
    return 0


def cmd_verify(config: RunConfig, args: argparse.Namespace) -> int:
    problem = _read_problem(config.inputs[0])
    code = formats.parse_code(formats.read_text(config.inputs[1]))
    report = verify_code(problem, code)
    print(report.summary())
    for edge in report.failures():
        print(f"  undecodable: {edge}")
    _emit_report(config, {"decodable": str(report.decodable), "total": str(report.total)})
    return 0 if report.all_decodable else 1


def cmd_oracle(config: RunConfig, args: argparse.Namespace) -> int:
    side_info = to_side_information_graph(_read_problem(config.inputs[0]))
    result = minrank_oracle(
        side_info, config.field_size, config.limits.oracle_max_edges, workers=args.workers
    )
    print(f"minrank={result} free_entries={side_info.graph.edge_count}")
    _emit_report(config, {"minrank": str(result), "free_entries": str(side_info.graph.edge_count)})
    return 0


def cmd_petersen(config: RunConfig, args: argparse.Namespace) -> int:
    family = petersen_family()
    if not config.inputs:
        for k, member in enumerate(family, start=1):
            print(f"member {k}: vertices={member.vertex_count} edges={member.edge_count}")
        print(f"{len(family)} graphs in the Petersen family")
        return 0

    host = formats.parse_undirected(formats.read_text(config.inputs[0]))
    fields = {}
    for k, member in enumerate(family, start=1):
        found = has_minor(
            host, member, config.limits.minor_budget, config.limits.minor_vertex_limit
        )
        fields[f"member{k}"] = "minor" if found else "no-minor"
        print(f"member {k} ({member.vertex_count} vertices): {'minor' if found else 'no minor'}")
    free = all(value == "no-minor" for value in fields.values())
    fields["petersen-free"] = "yes" if free else "no"
    print(f"petersen-free: {fields['petersen-free']}")
    _emit_report(config, fields)
    return 0


def cmd_gen(config: RunConfig, args: argparse.Namespace) -> int:
    instance = generate_instance(
        args.receivers,
        args.cycles,
        extra=args.extra,
        seed=config.seed,
        max_cycle_length=args.max_cycle_length,
        retry_limit=config.limits.retry_limit,
    )
    text = instance.render()
    if config.output is None:
        print(text, end="")
    else:
        formats.write_text(config.output, text)
        print(f"instance with {instance.problem.n} messages written to: {config.output}")
    return 0


HANDLERS: dict[str, Callable[[RunConfig, argparse.Namespace], int]] = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "bounds": cmd_bounds,
    "pack": cmd_pack,
    "fes": cmd_fes,
    "code": cmd_code,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "petersen": cmd_petersen,
    "gen": cmd_gen,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point for the CLI application.

    Parses the arguments, validates them into a RunConfig and runs the
    subcommand handler.

    Returns:
        Exit code: 0 for success, 1 for validation errors, 2 when a search
        limit was exceeded

    Example:
        >>> sys.exit(main())
    """
    try:
        args = parse_arguments(argv)

        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )

        config = build_config(args)

        if config.verbose:
            print("Uniprior Index Coder")
            print("=" * 50)
            print(f"Command: {config.command}")
            for path in config.inputs:
                print(f"Input file: {path}")
            print(f"Field: GF({config.field_size})  Mode: {config.mode.value}")
            if config.output is not None:
                print(f"Output file: {config.output}")
            print()

        return HANDLERS[config.command](config, args)

    except LimitExceededError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2

    except IndexCodingError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1

    except KeyboardInterrupt:
        print("\nOperation cancelled by user", file=sys.stderr)
        return 1

    except Exception as e:
        # Catch any unexpected errors
        print(f"Unexpected error: {str(e)}", file=sys.stderr)
        if args.verbose if "args" in locals() else False:
            import traceback

            traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
