"""The normalized weight series and the induced coefficientwise operator.

The operator multiplies the n-th tail coefficient of a series by a
positive weight h_n built from Gamma ratios; its inverse divides by the
same weights.  Realizing it coefficientwise (instead of convolving
sampled function values) keeps the algebra exact up to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .laurent import SigmaSeries, hadamard
from .special_fn import BMLParams, GAMMA_MAX_ARG, gamma_pos


@dataclass(frozen=True)
class OperatorKernel:
    """Weights h_1..h_N plus the same data packaged as a series (principal 1)."""

    params: BMLParams
    h: np.ndarray
    series: SigmaSeries

    def __post_init__(self):
        h = np.asarray(self.h, dtype=float).reshape(-1).copy()
        if len(h) < 1 or not np.all(h > 0):
            raise ValueError("kernel weights must be a nonempty positive sequence")
        h.setflags(write=False)
        object.__setattr__(self, "h", h)


def coefficient_h(n: int, params: BMLParams) -> float:
    """Weight of the n-th tail coefficient.

    h_n = a^s Gamma(theta) / (Gamma(K (n-1) + theta) (n - 1 + a)^s),
    strictly positive, with h_1 = 1 exactly.
    """
    if n < 1:
        raise ValueError(f"weights are indexed from 1, got {n}")
    scale = params.a ** params.s * gamma_pos(params.theta)
    den = gamma_pos(params.K * (n - 1) + params.theta)
    if params.s != 0.0:
        den = den * (params.a + (n - 1.0)) ** params.s
    return scale / den


def max_kernel_order(params: BMLParams) -> int:
    """Largest order whose weight formula stays inside the Gamma range."""
    return int((GAMMA_MAX_ARG - params.theta) / params.K) + 1


def build_kernel(params: BMLParams, order: int) -> OperatorKernel:
    """Kernel with weights h_1..h_order."""
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    h = np.array([coefficient_h(n, params) for n in range(1, order + 1)])
    return OperatorKernel(params, h, SigmaSeries(1.0, h))


def apply_operator(f: SigmaSeries, kernel: OperatorKernel) -> SigmaSeries:
    """Coefficientwise image: tail_n -> h_n c_n, principal preserved."""
    return hadamard(kernel.series, f)


def invert_operator(g: SigmaSeries, kernel: OperatorKernel) -> SigmaSeries:
    """Preimage under the operator: tail_n -> c_n / h_n.

    Round-trips with `apply_operator` exactly up to one rounding per
    coefficient; the weights are positive, so the division always exists.
    """
    n = min(len(g.tail), len(kernel.h))
    return SigmaSeries(g.principal, g.tail[:n] / kernel.h[:n])
