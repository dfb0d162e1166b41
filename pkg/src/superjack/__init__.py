"""Exact Jack, super-Jack and super-Hermite polynomials over Q(theta).

The deformed Calogero-Moser-Sutherland integrals act on polynomials in
x_1..x_n, y_1..y_m; the bilinear form (p, q) = (L_p q)(0) and its Gram
matrices are computed exactly.
"""
from .coeffs import (
    ONE,
    THETA,
    ZERO,
    ExcludedParameterError,
    PoleError,
    ThetaFunction,
    ThetaGuard,
    parse_rational,
)
from .deformed import (
    SuperElement,
    bound_check,
    eval_ones_check,
    evaluate,
    in_deformed_ring,
    phi,
    quasi_invariance_check,
    super_C,
    super_jack,
)
from .forms import (
    GramReport,
    KernelComponent,
    bilinear_form,
    gram_matrix,
    hermite_generating_check,
    hermite_gram,
    representative_independence_check,
    reproducing_check,
    sf_component,
)
from .mpoly import MPoly
from .operators import (
    AsymmetricInputError,
    NotDivisibleError,
    NotEigenfunctionError,
    deformed_integral_apply,
    deformed_partial_apply,
    divided_difference,
    dunkl_apply,
    exp_half_L,
    harmonic_integral_apply,
    quantum_integral_apply,
    super_hermite,
    symmetric_integral_apply,
    trig_eigenvalue,
    trig_integral_apply,
)
from .partitions import (
    Dominance,
    Partition,
    arm_leg,
    b_lambda,
    conjugate,
    dominance_compare,
    east_south,
    enumerate_partitions,
    in_fat_hook,
    pochhammer_gen,
    z_lambda,
)
from .symfunc import (
    MONOMIAL,
    POWERSUM,
    SymFunc,
    convert,
    eps_X,
    jack,
    kaneko_C,
    multiply,
    scalar_product,
    spec_formula,
)

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "THETA",
    "ZERO",
    "ExcludedParameterError",
    "PoleError",
    "ThetaFunction",
    "ThetaGuard",
    "parse_rational",
    "MPoly",
    "SuperElement",
    "bound_check",
    "eval_ones_check",
    "evaluate",
    "in_deformed_ring",
    "phi",
    "quasi_invariance_check",
    "super_C",
    "super_jack",
    "GramReport",
    "KernelComponent",
    "bilinear_form",
    "gram_matrix",
    "hermite_generating_check",
    "hermite_gram",
    "representative_independence_check",
    "reproducing_check",
    "sf_component",
    "AsymmetricInputError",
    "NotDivisibleError",
    "NotEigenfunctionError",
    "deformed_integral_apply",
    "deformed_partial_apply",
    "divided_difference",
    "dunkl_apply",
    "exp_half_L",
    "harmonic_integral_apply",
    "quantum_integral_apply",
    "super_hermite",
    "symmetric_integral_apply",
    "trig_eigenvalue",
    "trig_integral_apply",
    "Dominance",
    "Partition",
    "arm_leg",
    "b_lambda",
    "conjugate",
    "dominance_compare",
    "east_south",
    "enumerate_partitions",
    "in_fat_hook",
    "pochhammer_gen",
    "z_lambda",
    "MONOMIAL",
    "POWERSUM",
    "SymFunc",
    "convert",
    "eps_X",
    "jack",
    "kaneko_C",
    "multiply",
    "scalar_product",
    "spec_formula",
]
