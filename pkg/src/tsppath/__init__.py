"""Exact solver for the fixed-endpoint traveling salesman path problem.

Find the shortest route that starts at city 1, ends at city n, and visits
every other city exactly once.  The package pairs a Held-Karp subset
dynamic program with a brute-force oracle, counts the solver's memoized
states exactly, and ships a benchmark harness for measuring the 2^n
runtime growth.
"""

from .bench import (
    ScalingRecord,
    ScalingReport,
    doubling_ratios,
    emit_csv,
    run_scaling,
)
from .errors import (
    AsymmetryError,
    DomainError,
    Error,
    InsufficientDataError,
    InvalidPathError,
    ParseError,
    SizeError,
)
from .heldkarp import (
    DEFAULT_SIZE_CAP,
    Solution,
    StateTable,
    compute_table,
    expected_state_count,
    interior_mask,
    reconstruct_path,
    solve,
)
from .instance import (
    MAX_DISTANCE,
    Instance,
    Permutation,
    SplitMix64,
    generate_random,
    parse_instance,
    relabel,
    serialize_instance,
)
from .oracle import BRUTE_FORCE_MAX_N, path_length, solve_brute_force

__version__ = "0.1.0"

__all__ = [
    "AsymmetryError",
    "BRUTE_FORCE_MAX_N",
    "DEFAULT_SIZE_CAP",
    "DomainError",
    "Error",
    "InsufficientDataError",
    "InvalidPathError",
    "Instance",
    "MAX_DISTANCE",
    "ParseError",
    "Permutation",
    "ScalingRecord",
    "ScalingReport",
    "SizeError",
    "Solution",
    "SplitMix64",
    "StateTable",
    "compute_table",
    "doubling_ratios",
    "emit_csv",
    "expected_state_count",
    "generate_random",
    "interior_mask",
    "parse_instance",
    "path_length",
    "reconstruct_path",
    "relabel",
    "run_scaling",
    "serialize_instance",
    "solve",
    "solve_brute_force",
]
