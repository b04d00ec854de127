"""foxabf: exact Fox coloring groups and Alexander-Burau-Fox modules of
braid closures, with closed-form Fibonacci/Chebyshev cross-checks for the
wheel-graph link family."""

from .alexander import (
    InternalConsistencyError,
    ModulePresentation,
    alexander_polynomial,
    general_presentation,
    reduced_abf_matrix,
    wheel_abf_matrix_closed,
    wheel_abf_matrix_recursive,
    wheel_euclidean_reduction,
    wheel_g,
    wheel_module,
    wheel_reduced_burau_matrix,
)
from .braid import (
    BraidParseError,
    BraidWord,
    burau,
    burau_at_minus_one,
    closure_components,
    cycle_count,
    exponent_sum,
    parse_braid,
    permutation,
    wheel_braid,
)
from .coloring import (
    ColoringResult,
    EnumerationLimitError,
    brute_force_coloring_count,
    coloring_count_from_group,
    coloring_group,
    reduced_relation_matrix_int,
)
from .ring import (
    AbelianGroup,
    InexactDivisionError,
    LaurentPoly,
    Matrix,
    divide_exact,
    laurent_gcd,
    normalize_unit,
    smith_invariant_factors,
    snf,
)
from .sequences import (
    IdentityCheck,
    IdentityReport,
    cheb_S,
    cheb_S_at,
    cheb_S_subst,
    cheb_T,
    fib,
    identity_suite,
    iterate_chebyshev_recurrence,
    lucas,
    recurrence_solver_check,
    solve_chebyshev_recurrence,
)
from .wheel import (
    BruteForceCheck,
    WheelReport,
    cross_verify,
    fibonacci_relation_matrix,
    fox_closed_form,
    goeritz_equivalence_check,
    reduction_trace,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "BraidParseError",
    "BraidWord",
    "BruteForceCheck",
    "ColoringResult",
    "EnumerationLimitError",
    "IdentityCheck",
    "IdentityReport",
    "InexactDivisionError",
    "InternalConsistencyError",
    "LaurentPoly",
    "Matrix",
    "ModulePresentation",
    "WheelReport",
    "alexander_polynomial",
    "brute_force_coloring_count",
    "burau",
    "burau_at_minus_one",
    "cheb_S",
    "cheb_S_at",
    "cheb_S_subst",
    "cheb_T",
    "closure_components",
    "coloring_count_from_group",
    "coloring_group",
    "cross_verify",
    "cycle_count",
    "divide_exact",
    "exponent_sum",
    "fib",
    "fibonacci_relation_matrix",
    "fox_closed_form",
    "general_presentation",
    "goeritz_equivalence_check",
    "identity_suite",
    "iterate_chebyshev_recurrence",
    "laurent_gcd",
    "lucas",
    "normalize_unit",
    "parse_braid",
    "permutation",
    "recurrence_solver_check",
    "reduced_abf_matrix",
    "reduced_relation_matrix_int",
    "reduction_trace",
    "smith_invariant_factors",
    "snf",
    "solve_chebyshev_recurrence",
    "wheel_abf_matrix_closed",
    "wheel_abf_matrix_recursive",
    "wheel_braid",
    "wheel_euclidean_reduction",
    "wheel_g",
    "wheel_module",
    "wheel_reduced_burau_matrix",
]
