"""Independent reference computations used by the tests.

Nothing here shares code with the library: Gamma comes from a shifted
Stirling-Bernoulli series (and the C library), series values from brute
partial summation over libm's gamma, and derivatives from central
differences.
"""

import math

# B_2, B_4, ..., B_16
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)


def gamma_stirling(x: float) -> float:
    """Gamma by argument shifting plus the Stirling-Bernoulli series.

    Shift until the argument reaches 40, expand log-Gamma there, and
    divide the shift product back out in log space.  Good to ~1e-13
    relative on (0, 170].
    """
    shift = 0
    y = x
    while y < 40.0:
        y += 1.0
        shift += 1
    lg = (y - 0.5) * math.log(y) - y + 0.5 * math.log(2.0 * math.pi)
    for k, b in enumerate(_BERNOULLI, start=1):
        lg += b / ((2 * k) * (2 * k - 1) * y ** (2 * k - 1))
    for j in range(shift):
        lg -= math.log(x + j)
    return math.exp(lg)


def brute_series_sum(K, theta, a, s, z, max_terms=400):
    """Brute-force partial summation of z^n/(Gamma(K n + theta)(n + a)^s).

    Sums with libm's gamma until the partial sums stagnate at machine
    precision.
    """
    total = 0j
    zp = 1.0 + 0j
    for n in range(max_terms):
        den = math.gamma(K * n + theta)
        if s != 0.0:
            den *= (n + a) ** s
        term = zp / den
        new = total + term
        if n > 2 and abs(term) <= 1e-18 * max(abs(new), 1e-30):
            return new
        total = new
        zp *= z
    return total


def brute_tail(K, theta, a, s, radius, start, count=60):
    """Sum of the absolute series terms for n = start .. start+count."""
    acc = 0.0
    for n in range(start, start + count):
        den = math.gamma(K * n + theta)
        if s != 0.0:
            den *= (n + a) ** s
        acc += radius**n / den
    return acc


def central_derivative(fn, z, h=1e-6, order=1):
    """Central-difference derivative of an analytic callable."""
    if order == 1:
        return (fn(z + h) - fn(z - h)) / (2.0 * h)
    if order == 2:
        return (fn(z + h) - 2.0 * fn(z) + fn(z - h)) / (h * h)
    raise ValueError(order)
