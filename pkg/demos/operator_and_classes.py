"""Tour of the series operator and the class-membership verifiers.

Builds the weight kernel, pushes series through it, and decides
membership of the boundary-hugging extremal function three independent
ways: direct range containment, and the two direction-indexed
convolution scans.

Run:  python demos/operator_and_classes.py
"""

import math

import numpy as np

from bml import (
    BMLParams,
    ClassSpec,
    GridSpec,
    JanowskiTheta,
    SigmaSeries,
    apply_operator,
    build_kernel,
    check_convolution,
    check_direct,
    construct_nonmember,
    extremal_function,
    invert_operator,
    phase_ratio,
)

# ---------------------------------------------------------------------------
# the weight kernel
# ---------------------------------------------------------------------------
unit = BMLParams(K=1.0, theta=1.0, a=1.0, s=0.0)
kernel = build_kernel(unit, 8)
print("Weights for (K, theta, a, s) = (1, 1, 1, 0) are inverse factorials:")
print(" ", np.array2string(kernel.h, precision=6))

f = SigmaSeries(1.0, [0.0, 1.0, 1.0, 1.0])
g = apply_operator(f, kernel)
back = invert_operator(g, kernel)
print("\napply then invert round-trips the series:")
print("  original tail:", np.array2string(f.tail.real, precision=6))
print("  image tail   :", np.array2string(g.tail.real, precision=6))
print("  recovered    :", np.array2string(back.tail.real, precision=6))

# ---------------------------------------------------------------------------
# phase ratios and the extremal member
# ---------------------------------------------------------------------------
# the extremal series for the half-plane class of order alpha: its phase
# ratio IS the boundary target, so the margin shrinks like (1-r)/(1+r)
alpha, lam = 0.25, math.pi / 4
near_identity = BMLParams(1e-8, 1.0, 1.0, 0.0)
spec = ClassSpec(lam, JanowskiTheta(1 - 2 * alpha, -1.0), "spirallike", near_identity)
extremal = extremal_function(alpha, lam, 512)
print(f"\nExtremal function for alpha={alpha}, lam={lam:.3f}: tail starts")
print(" ", np.array2string(extremal.tail[:4], precision=4))
print("  phase ratio at 0.5:", f"{phase_ratio(extremal, spec, 0.5):.6f}")

grid = GridSpec()
report = check_direct(extremal, spec, grid)
print("\nDirect subordination check:")
print(f"  verdict={report.verdict}  margin={report.margin:.6f}  witness={report.witness_z:.4f}")
print(f"  theory margin (1-alpha)cos(lam)(1-r)/(1+r) = "
      f"{(1 - alpha) * math.cos(lam) * (1 - grid.r_max) / (1 + grid.r_max):.6f}")

for which in ("t1", "t2"):
    rep = check_convolution(extremal, spec, grid, which)
    print(f"  convolution {which}: verdict={rep.verdict}  min modulus={rep.margin:.3e}")

# ---------------------------------------------------------------------------
# certified non-members
# ---------------------------------------------------------------------------
bad = construct_nonmember(extremal, spec, grid)
print("\nScaling one coefficient until the check just fails:")
print(f"  scaled c_1: {extremal.tail[0]:.4f} -> {bad.tail[0]:.4f}")
d = check_direct(bad, spec, grid)
print(f"  direct: verdict={d.verdict}  margin={d.margin:.3e}")
for which in ("t1", "t2"):
    rep = check_convolution(bad, spec, grid, which)
    print(f"  convolution {which}: verdict={rep.verdict}  min modulus={rep.margin:.3e} "
          f"at z={rep.witness_z:.4f}, x={rep.witness_x:.4f}")
