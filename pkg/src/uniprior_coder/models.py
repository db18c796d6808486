"""Data models for the uniprior index coder.

This module defines the configuration and report structures shared by the
solvers, the code constructions and the CLI: solver modes, resource limits,
run configuration, tightness certificates and the bounds report.
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from uniprior_coder.exceptions import ConfigurationError, UnsupportedFieldError

SUPPORTED_FIELD_SIZES: tuple[int, ...] = (2, 3, 4, 5, 7, 8)


class SolverMode(Enum):
    """How cycle packings are computed.

    Attributes:
        EXACT: Branch and bound over the enumerated cycle list (maximum packing)
        GREEDY: Shortest-cycle-first selection (maximal packing)
    """

    EXACT = "exact"
    GREEDY = "greedy"


class ProblemStructure(Enum):
    """Which bounded class a supergraph was recognized as.

    Attributes:
        GENERALIZED_CYCLE: The supergraph itself is a generalized cycle
        DEMAND_DECOMPOSABLE: The supergraph extends a spanning generalized cycle
            whose packing keeps every extra demand inside one cycle
    """

    GENERALIZED_CYCLE = "generalized-cycle"
    DEMAND_DECOMPOSABLE = "demand-decomposable"


class TightnessKind(Enum):
    """Reason the bounds were (or were not) certified equal.

    Attributes:
        PETERSEN_FREE: The underlying undirected graph has no Petersen-family minor
        EXACT_EQUALITY: Exact solvers returned nu_e == tau_e
        POSSIBLY_LOOSE: Neither certificate applies; nu_e < tau_e
    """

    PETERSEN_FREE = "PetersenFree"
    EXACT_EQUALITY = "ExactEquality"
    POSSIBLY_LOOSE = "PossiblyLoose"


@dataclass(frozen=True)
class TightnessCertificate:
    """Certificate that lower and upper bounds coincide, or why they may not.

    Attributes:
        kind: The certificate kind
        nu_e: Maximum edge-disjoint cycle count, when it was computed
        tau_e: Minimum feedback edge set size, when it was computed
    """

    kind: TightnessKind
    nu_e: int | None = None
    tau_e: int | None = None

    @property
    def is_tight(self) -> bool:
        return self.kind is not TightnessKind.POSSIBLY_LOOSE

    def __str__(self) -> str:
        if self.kind is TightnessKind.POSSIBLY_LOOSE:
            return f"PossiblyLoose(nu_e={self.nu_e},tau_e={self.tau_e})"
        return self.kind.value


@dataclass(frozen=True)
class SolverLimits:
    """Resource limits for the exponential-cost searches.

    Attributes:
        cycle_cap: Maximum number of simple cycles enumerated per graph
        solver_budget: Maximum branch-and-bound nodes per solver call
        search_budget: Maximum candidate subgraphs examined by the spanning
            generalized-cycle search
        oracle_max_edges: Maximum free entries the minrank oracle accepts
        minor_vertex_limit: Maximum host-graph vertices for minor testing
        minor_budget: Maximum minor-search nodes per containment test
        retry_limit: Maximum attempts of the random instance generator
    """

    cycle_cap: int = 100_000
    solver_budget: int = 2_000_000
    search_budget: int = 50_000
    oracle_max_edges: int = 24
    minor_vertex_limit: int = 16
    minor_budget: int = 500_000
    retry_limit: int = 1_000

    def __post_init__(self) -> None:
        for name in (
            "cycle_cap",
            "solver_budget",
            "search_budget",
            "oracle_max_edges",
            "minor_vertex_limit",
            "minor_budget",
            "retry_limit",
        ):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"{name} must be positive, got {getattr(self, name)}")


@dataclass(frozen=True)
class RunConfig:
    """Configuration for one CLI run.

    Attributes:
        command: Subcommand name
        inputs: Input file paths, in the order the subcommand expects them
        field_size: Field size q for codes
        mode: Packing mode used by the pack and bounds subcommands
        limits: Resource limits for the searches
        seed: Seed for the random instance generator (default: 0)
        output: Optional path for the machine-readable report or produced file
        verbose: Whether to print progress and enable debug logging (default: False)
    """

    command: str
    inputs: tuple[Path, ...] = ()
    field_size: int = 2
    mode: SolverMode = SolverMode.EXACT
    limits: SolverLimits = field(default_factory=SolverLimits)
    seed: int = 0
    output: Path | None = None
    verbose: bool = False

    def __post_init__(self) -> None:
        if self.field_size not in SUPPORTED_FIELD_SIZES:
            raise UnsupportedFieldError(self.field_size, SUPPORTED_FIELD_SIZES)
        if self.seed < 0:
            raise ConfigurationError(f"seed must be non-negative, got {self.seed}")


@dataclass(frozen=True)
class BoundsReport:
    """Bounds on the optimal broadcast length of a uniprior problem.

    lower = n - tau_e and upper = n - |packing| are computed on the
    generalized cycle (the problem itself, or the spanning generalized cycle of
    a demand-decomposable problem). With a maximum packing upper = n - nu_e.

    Attributes:
        n: Number of messages
        nu_e: Maximum number of edge-disjoint cycles of the generalized cycle
        tau_e: Minimum feedback edge set size of the generalized cycle
        lower: Lower bound n - tau_e
        upper: Upper bound achieved by the emitted cyclic code
        achieved_length: Length of the emitted cyclic code
        structure: Class the problem was recognized as
        tightness: Tightness certificate, when requested
        side_info_lower: n - tau_v of the side-information graph, when computed
        side_info_upper: n - nu_v of the side-information graph, when computed
    """

    n: int
    nu_e: int
    tau_e: int
    lower: int
    upper: int
    achieved_length: int
    structure: ProblemStructure
    tightness: TightnessCertificate | None = None
    side_info_lower: int | None = None
    side_info_upper: int | None = None

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def is_tight(self) -> bool:
        return self.lower == self.upper

    def summary(self) -> str:
        """One-line summary in the CLI's report style."""
        parts = [
            f"n={self.n}",
            f"nu_e={self.nu_e}",
            f"tau_e={self.tau_e}",
            f"lower={self.lower}",
            f"upper={self.upper}",
        ]
        if self.tightness is not None:
            parts.append(f"tight={self.tightness}")
        return " ".join(parts)

    def as_fields(self) -> dict[str, str]:
        """Key-value view used for the machine-readable report."""
        fields = {
            "structure": self.structure.value,
            "n": str(self.n),
            "nu_e": str(self.nu_e),
            "tau_e": str(self.tau_e),
            "lower": str(self.lower),
            "upper": str(self.upper),
            "achieved_length": str(self.achieved_length),
        }
        if self.tightness is not None:
            fields["tightness"] = str(self.tightness)
        if self.side_info_lower is not None:
            fields["side_info_lower"] = str(self.side_info_lower)
        if self.side_info_upper is not None:
            fields["side_info_upper"] = str(self.side_info_upper)
        return fields
