"""Tour of the special-function layer: Gamma, the Mittag-Leffler family,
and the adaptive truncation machinery.

Run:  python demos/special_functions.py
"""

import math

import numpy as np

from bml import BMLParams, barnes_ml, gamma_pos, mittag_leffler_2p, truncation_order

# ---------------------------------------------------------------------------
# Gamma on the positive reals
# ---------------------------------------------------------------------------
print("Gamma at small integers and the half-integer classic:")
for x in (1.0, 2.0, 5.0, 0.5):
    print(f"  Gamma({x}) = {gamma_pos(x):.15g}")
print(f"  sqrt(pi)   = {math.sqrt(math.pi):.15g}")

print("\nRecurrence defect |Gamma(x+1) - x Gamma(x)| / Gamma(x+1):")
for x in (0.1, 1.7, 12.0, 49.0):
    defect = abs(gamma_pos(x + 1) - x * gamma_pos(x)) / gamma_pos(x + 1)
    print(f"  x = {x:5}: {defect:.2e}")

# ---------------------------------------------------------------------------
# The Mittag-Leffler family and its reductions
# ---------------------------------------------------------------------------
print("\nOne-parameter case collapses to exp:")
for z in (1.0, -0.5, 0.3 + 0.7j):
    print(f"  E(z={z}): {mittag_leffler_2p(1.0, 1.0, z):.15g}  exp: {np.exp(z):.15g}")

print("\nOrder 2 gives cosh(sqrt(z)):")
print(f"  E_2(1) = {mittag_leffler_2p(2.0, 1.0, 1.0).real:.15f}")
print(f"  cosh 1 = {math.cosh(1.0):.15f}")

print("\nThe four-parameter series with s = 0 is the two-parameter one:")
params = BMLParams(K=1.4, theta=0.9, a=3.0, s=0.0)
z = 1.2 - 0.4j
print(f"  four-param: {barnes_ml(params, z):.15g}")
print(f"  two-param : {mittag_leffler_2p(1.4, 0.9, z):.15g}")

print("\nA value with a pencil-and-paper answer: sum of 1/(n! (n+2)) telescopes to 1:")
print(f"  {barnes_ml(BMLParams(1.0, 1.0, 2.0, 1.0), 1.0).real:.15f}")

# ---------------------------------------------------------------------------
# Truncation orders
# ---------------------------------------------------------------------------
print("\nTerms needed before the tail bound clears the tolerance:")
unit = BMLParams(1.0, 1.0, 1.0, 0.0)
for radius, tol in [(1.0, 1e-16), (2.0, 1e-12), (4.0, 1e-14), (1e-9, 1e-8)]:
    print(f"  radius {radius:<6} tol {tol:7.0e}: N = {truncation_order(unit, radius, tol)}")
