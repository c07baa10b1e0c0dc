"""Certified d-coloring with a maximum-size color class.

For any graph of maximum degree at most d (d >= 3) containing no
complete subgraph on d + 1 vertices, :func:`catlin_color` builds a
proper d-coloring in which one color class is a maximum independent
set, re-checking every step of the construction at runtime.  In
particular the chromatic number of such a graph is at most d.
"""

from .engine import (
    AlternatingPath,
    AugmentationRecord,
    CatlinResult,
    CliqueWitness,
    ColoringInstance,
    ReducedInstance,
    TraceStep,
    augment,
    base_case_color,
    build_clique_witness,
    catlin_color,
    extend_coloring,
    max_alternating_path,
    mis_removal_step,
    reduce_clique_case,
    trace_summary,
    validate_instance,
)
from .errors import (
    CapacityError,
    CatlinError,
    FormatError,
    FormatWarning,
    InternalInvariantViolation,
    PreconditionViolation,
)
from .formats import decode_graph6, encode_graph6, parse_dimacs, write_dimacs
from .generate import (
    NAMED_GRAPHS,
    SplitMix64,
    derive_seed,
    gnp,
    named,
    random_triangle_free_subcubic,
)
from .graph import (
    Coloring,
    Decomposition,
    Graph,
    RelabelMap,
    TwoColorResult,
    build_graph,
    path_cycle_decomposition,
    two_color_bipartite,
)
from .solvers import (
    MatchingProblem,
    MisResult,
    OddCycleMis,
    PerfectMatching,
    alpha_and_witness,
    brute_chromatic,
    exists_mis_avoiding,
    find_clique_of_size,
    min_odd_cycle_mis,
    perfect_color_matching,
)
from .suite import RunRecord, SuiteSummary, run_base_case_suite, run_theorem_suite
from .verify import VerificationReport, verify_brooks, verify_catlin, verify_proper

__version__ = "0.1.0"

__all__ = [
    "AlternatingPath",
    "AugmentationRecord",
    "CapacityError",
    "CatlinError",
    "CatlinResult",
    "CliqueWitness",
    "Coloring",
    "ColoringInstance",
    "Decomposition",
    "FormatError",
    "FormatWarning",
    "Graph",
    "InternalInvariantViolation",
    "MatchingProblem",
    "MisResult",
    "NAMED_GRAPHS",
    "OddCycleMis",
    "PerfectMatching",
    "PreconditionViolation",
    "ReducedInstance",
    "RelabelMap",
    "RunRecord",
    "SplitMix64",
    "SuiteSummary",
    "TraceStep",
    "TwoColorResult",
    "VerificationReport",
    "alpha_and_witness",
    "augment",
    "base_case_color",
    "brute_chromatic",
    "build_clique_witness",
    "build_graph",
    "catlin_color",
    "decode_graph6",
    "derive_seed",
    "encode_graph6",
    "exists_mis_avoiding",
    "extend_coloring",
    "find_clique_of_size",
    "gnp",
    "max_alternating_path",
    "min_odd_cycle_mis",
    "mis_removal_step",
    "named",
    "parse_dimacs",
    "path_cycle_decomposition",
    "perfect_color_matching",
    "random_triangle_free_subcubic",
    "reduce_clique_case",
    "run_base_case_suite",
    "run_theorem_suite",
    "trace_summary",
    "two_color_bipartite",
    "validate_instance",
    "verify_brooks",
    "verify_catlin",
    "verify_proper",
    "write_dimacs",
]
