"""Sums of consecutive squares, their Pell families, and arithmetic polygons."""
from .core import (
    GapPair,
    InvariantError,
    SolutionTriple,
    balance_ratio,
    check_invariants,
    classify_parameterized,
    compute_A,
    compute_B,
    integer_sqrt,
    is_perfect_square,
    is_socs_solution,
    parameterized_solution,
    pyramidal,
)
from .search import enumerate_up_to, solve_fixed_length, solve_split, FixedLengthQuery
from .pell import cf_sqrt, fundamental_unit, generate, pell_context, solution_plane, unit_power
from .geometry import (
    PolygonPath,
    PolygonReport,
    construct_chainsaw,
    construct_generic,
    convexity_side_cap,
    mu_lower_bound,
    tangent_step,
    validate,
)
from .census import convex_candidates, inward_turning_polygon, run_census

__version__ = "0.1.0"
