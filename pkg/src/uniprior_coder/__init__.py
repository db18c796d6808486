"""Uniprior Index Coder - Bounds and explicit codes for uniprior index coding.

This package models uniprior index coding problems, where every message is
held by exactly one receiver, as demand supergraphs. For generalized cycles
and demand-decomposable problems it sandwiches the optimal scalar linear
broadcast length between n - tau_e and n - nu_e, emits the cyclic code that
meets the upper bound and certifies tightness through Petersen-family minors.

Main Components:
    - BoundsAnalyzer: Main orchestrator computing bounds and certificates
    - DemandSupergraph: The problem model and its generalized-cycle test
    - IndexCode: Scalar linear codes over GF(q) with encoding and decoding

Example:
    >>> from pathlib import Path
    >>> from uniprior_coder import BoundsAnalyzer
    >>> from uniprior_coder.formats import parse_problem
    >>>
    >>> graph = parse_problem(Path("tests/fixtures/example.icp").read_text())
    >>> BoundsAnalyzer().analyze(graph).report.summary()
    'n=9 nu_e=4 tau_e=4 lower=5 upper=5 tight=PetersenFree'
"""

__version__ = "0.1.0"

from uniprior_coder.bounds import BoundsAnalyzer, bounds_report
from uniprior_coder.codes import IndexCode, cyclic_code, verify_code
from uniprior_coder.models import BoundsReport, SolverLimits, SolverMode
from uniprior_coder.supergraph import DemandEdge, DemandSupergraph, is_generalized_cycle

__all__ = [
    "BoundsAnalyzer",
    "BoundsReport",
    "DemandEdge",
    "DemandSupergraph",
    "IndexCode",
    "SolverLimits",
    "SolverMode",
    "bounds_report",
    "cyclic_code",
    "is_generalized_cycle",
    "verify_code",
    "__version__",
]
