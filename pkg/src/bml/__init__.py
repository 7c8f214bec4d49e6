"""Barnes-Mittag-Leffler special functions, the induced coefficientwise
convolution operator on meromorphic Laurent series, and verifiers for
spirallike/convex subordination classes."""

from .errors import (
    ConstructionError,
    DegenerateDirectionError,
    InconclusiveError,
    LogObstructionError,
    PoleError,
    SingularPointError,
)
from .integral_repr import (
    SchwarzSpec,
    bml_from_schwarz,
    closed_form_janowski,
    integrand,
    reconstruct_f,
)
from .laurent import (
    SigmaSeries,
    alexander,
    binomial_series,
    evaluate,
    evaluate_grid,
    hadamard,
    hadamard_identity,
    z_fprime,
)
from .membership import (
    ClassSpec,
    GridSpec,
    JanowskiTheta,
    MembershipReport,
    PolynomialTheta,
    check_alexander,
    check_convolution,
    check_direct,
    construct_nonmember,
    convolution_value,
    epsilon_t1,
    extremal_function,
    kernel_series,
    phase_ratio,
    target_region_contains,
    target_value,
)
from .operator import (
    OperatorKernel,
    apply_operator,
    build_kernel,
    coefficient_h,
    invert_operator,
    max_kernel_order,
)
from .special_fn import BMLParams, barnes_ml, gamma_pos, mittag_leffler_2p, truncation_order

__all__ = [
    "BMLParams",
    "ClassSpec",
    "ConstructionError",
    "DegenerateDirectionError",
    "GridSpec",
    "InconclusiveError",
    "JanowskiTheta",
    "LogObstructionError",
    "MembershipReport",
    "OperatorKernel",
    "PoleError",
    "PolynomialTheta",
    "SchwarzSpec",
    "SigmaSeries",
    "SingularPointError",
    "alexander",
    "apply_operator",
    "barnes_ml",
    "binomial_series",
    "bml_from_schwarz",
    "build_kernel",
    "check_alexander",
    "check_convolution",
    "check_direct",
    "closed_form_janowski",
    "coefficient_h",
    "construct_nonmember",
    "convolution_value",
    "epsilon_t1",
    "evaluate",
    "evaluate_grid",
    "extremal_function",
    "gamma_pos",
    "hadamard",
    "hadamard_identity",
    "integrand",
    "invert_operator",
    "kernel_series",
    "max_kernel_order",
    "mittag_leffler_2p",
    "phase_ratio",
    "reconstruct_f",
    "target_region_contains",
    "target_value",
    "truncation_order",
    "z_fprime",
]
