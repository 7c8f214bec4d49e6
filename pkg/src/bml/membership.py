"""Membership verdicts for the spirallike and convex subordination classes.

A class is described by a spiral angle, a boundary target (Möbius or
polynomial), the operator parameters, and a kind.  Membership of a
series f is decided three independent ways:

* ``check_direct`` samples the phase ratio of the operator image over a
  polar grid and tests containment in the target region (subordination
  reduces to range containment because the target is univalent and both
  sides agree at the origin);
* ``check_convolution`` scans the modulus of a direction-indexed
  convolution over (interior point, boundary direction) pairs and looks
  for a vanishing value, with a deterministic local refinement around
  the coarse minimum (a fixed grid alone cannot resolve an analytic
  zero down to the decision threshold);
* ``check_alexander`` reroutes a convex query through the spirallike
  check of -z f'.

All reports carry the margin, the witness point(s) and a skip count, so
callers can re-evaluate and tighten.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from .errors import (
    ConstructionError,
    DegenerateDirectionError,
    InconclusiveError,
    PoleError,
    SingularPointError,
)
from .laurent import SigmaSeries, alexander, binomial_series, evaluate, evaluate_grid, z_fprime
from .operator import apply_operator, build_kernel, max_kernel_order
from .special_fn import BMLParams

DEFAULT_MIN_MODULUS = 1e-9
_DEGENERATE_TOL = 1e-12
_POLYGON_SAMPLES = 4096


# ---------------------------------------------------------------------------
# boundary targets


@dataclass(frozen=True)
class JanowskiTheta:
    """Möbius target (1 + A z)/(1 + B z) with -1 <= B < A <= 1."""

    A: float
    B: float

    def __post_init__(self):
        if not -1.0 <= self.B < self.A <= 1.0:
            raise ValueError(f"need -1 <= B < A <= 1, got A={self.A}, B={self.B}")

    def value(self, z: complex) -> complex:
        den = 1.0 + self.B * z
        if abs(den) < 1e-14:
            raise PoleError(f"Möbius target has a pole at z = {z!r}")
        return (1.0 + self.A * z) / den

    def deriv0(self) -> complex:
        return self.A - self.B


@dataclass(frozen=True)
class PolynomialTheta:
    """Polynomial target t_0 + t_1 z + ... + t_M z^M with t_0 = 1."""

    coefficients: tuple

    def __post_init__(self):
        co = tuple(complex(c) for c in self.coefficients)
        if len(co) < 1 or co[0] != 1:
            raise ValueError("polynomial target needs t_0 = 1")
        if not all(cmath.isfinite(c) for c in co):
            raise ValueError("polynomial target coefficients must be finite")
        object.__setattr__(self, "coefficients", co)

    def value(self, z: complex):
        acc = 0.0
        for c in self.coefficients[::-1]:
            acc = acc * z + c
        return acc

    def deriv0(self) -> complex:
        return self.coefficients[1] if len(self.coefficients) > 1 else 0j


ThetaSpec = Union[JanowskiTheta, PolynomialTheta]


def _theta_grid(theta: ThetaSpec, zs: np.ndarray):
    """Vectorized target values plus a mask of points too close to a pole."""
    zs = np.asarray(zs, dtype=complex)
    if isinstance(theta, JanowskiTheta):
        den = 1.0 + theta.B * zs
        bad = np.abs(den) < 1e-14
        safe = np.where(bad, 1.0, den)
        return (1.0 + theta.A * zs) / safe, bad
    acc = np.zeros_like(zs)
    for c in theta.coefficients[::-1]:
        acc = acc * zs + c
    return acc, np.zeros(zs.shape, dtype=bool)


# ---------------------------------------------------------------------------
# class / grid / report containers


@dataclass(frozen=True)
class ClassSpec:
    """One subordination class: angle, target, kind, operator parameters."""

    lam: float
    theta: ThetaSpec
    kind: str
    params: BMLParams

    def __post_init__(self):
        if not abs(self.lam) < math.pi / 2:
            raise ValueError(f"|lam| must be < pi/2, got {self.lam}")
        if self.kind not in ("spirallike", "convex"):
            raise ValueError(f"kind must be 'spirallike' or 'convex', got {self.kind!r}")


@dataclass(frozen=True)
class GridSpec:
    """Sampling plan over the punctured disc and the unit circle."""

    radii: tuple = ()
    r_max: float = 0.99
    angles: int = 256
    boundary_x: int = 512
    min_modulus: float = DEFAULT_MIN_MODULUS

    def __post_init__(self):
        if not 0.0 < self.r_max < 1.0:
            raise ValueError(f"r_max must lie in (0, 1), got {self.r_max}")
        radii = tuple(float(r) for r in self.radii)
        if not radii:
            radii = tuple(self.r_max * k / 12 for k in range(1, 13))
        if not all(0.0 < r <= self.r_max for r in radii):
            raise ValueError("all radii must lie in (0, r_max]")
        if self.angles < 8 or self.boundary_x < 8:
            raise ValueError("angle and boundary sample counts must be at least 8")
        if not self.min_modulus > 0:
            raise ValueError("min_modulus must be positive")
        object.__setattr__(self, "radii", radii)

    def z_points(self) -> np.ndarray:
        """Interior samples, radius-major then angle, deterministic order."""
        ang = np.exp(2j * np.pi * np.arange(self.angles) / self.angles)
        return (np.asarray(self.radii)[:, None] * ang[None, :]).ravel()

    def x_points(self) -> np.ndarray:
        """Unit-circle samples, offset half a step so x = 1 is never hit exactly."""
        return np.exp(2j * np.pi * (np.arange(self.boundary_x) + 0.5) / self.boundary_x)


@dataclass(frozen=True)
class MembershipReport:
    """Verdict plus the evidence needed to reproduce it."""

    verdict: str
    margin: float
    witness_z: complex
    witness_x: Optional[complex]
    method: str
    skipped: int

    @property
    def is_member(self) -> bool:
        return self.verdict == "member"


# ---------------------------------------------------------------------------
# target geometry


def target_value(spec: ClassSpec, z: complex) -> complex:
    """Boundary target Phi(z) = -e^{-i lam} (cos(lam) Theta(z) + i sin(lam)).

    Phi(0) = -1 for every spec, which is what anchors the subordination
    checks: the phase ratio of any class-Sigma image also tends to -1 at
    the puncture.
    """
    th = spec.theta.value(z)
    return -cmath.exp(-1j * spec.lam) * (math.cos(spec.lam) * th + 1j * math.sin(spec.lam))


def _direction_value(spec: ClassSpec, x: complex) -> complex:
    """E(x) = e^{-i lam}(cos(lam) Theta(x) + i sin(lam)) = -Phi(x)."""
    return -target_value(spec, x)


def _disc_parameters(spec: ClassSpec):
    """Centre and radius of the open target disc (Janowski, |B| < 1)."""
    A, B = spec.theta.A, spec.theta.B
    c_theta = (1.0 - A * B) / (1.0 - B * B)
    r_theta = (A - B) / (1.0 - B * B)
    center = -cmath.exp(-1j * spec.lam) * (
        math.cos(spec.lam) * c_theta + 1j * math.sin(spec.lam)
    )
    return center, math.cos(spec.lam) * r_theta


def _region_margins(spec: ClassSpec, ws: np.ndarray) -> np.ndarray:
    """Signed distances from each w to the target-region boundary (+ inside)."""
    ws = np.asarray(ws, dtype=complex)
    if isinstance(spec.theta, JanowskiTheta):
        if spec.theta.B == -1.0:
            bound = -(1.0 - spec.theta.A) * math.cos(spec.lam) / 2.0
            return bound - (np.exp(1j * spec.lam) * ws).real
        center, radius = _disc_parameters(spec)
        return radius - np.abs(ws - center)
    poly = _target_polygon(spec.theta, spec.lam)
    return _polygon_margins(poly, ws)


def target_region_contains(spec: ClassSpec, w: complex):
    """(contains, margin) for a single point; containment means margin > 0.

    The region is the image of the open disc under `target_value`:
    an open disc for Janowski targets with |B| < 1, a half-plane for
    B = -1, and a sampled-boundary polygon for polynomial targets.
    Boundary contact counts as outside (the classes are open).
    """
    margin = float(_region_margins(spec, np.array([w]))[0])
    return margin > 0.0, margin


@lru_cache(maxsize=16)
def _target_polygon(theta: ThetaSpec, lam: float) -> np.ndarray:
    t = 2.0 * np.pi * (np.arange(_POLYGON_SAMPLES) + 0.5) / _POLYGON_SAMPLES
    xs = np.exp(1j * t)
    th, bad = _theta_grid(theta, xs)
    if bad.any():
        raise PoleError("target has poles on the unit circle; no polygon fallback")
    return -np.exp(-1j * lam) * (math.cos(lam) * th + 1j * math.sin(lam))


def _polygon_margins(poly: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Signed point-to-polygon distances, positive inside (crossing parity)."""
    a = poly
    b = np.roll(poly, -1)
    ab = b - a
    ab2 = np.maximum(np.abs(ab) ** 2, 1e-300)
    out = np.empty(len(pts))
    for lo in range(0, len(pts), 256):
        p = pts[lo : lo + 256, None]
        d = p - a[None, :]
        t = np.clip((d * ab.conj()[None, :]).real / ab2[None, :], 0.0, 1.0)
        dist = np.abs(d - t * ab[None, :]).min(axis=1)
        cond = (a.imag[None, :] > p.imag) != (b.imag[None, :] > p.imag)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_int = a.real[None, :] + (p.imag - a.imag[None, :]) * ab.real[None, :] / np.where(
                ab.imag[None, :] == 0.0, 1e-300, ab.imag[None, :]
            )
        crossings = (cond & (p.real < x_int)).sum(axis=1)
        inside = crossings % 2 == 1
        out[lo : lo + 256] = np.where(inside, dist, -dist)
    return out


# ---------------------------------------------------------------------------
# phase ratios


@lru_cache(maxsize=64)
def _cached_kernel(params: BMLParams, order: int):
    return build_kernel(params, order)


def _bml_image(f: SigmaSeries, params: BMLParams) -> SigmaSeries:
    """Operator image of f, truncated where the weights leave the Gamma range.

    Weights past that point underflow to zero anyway, so the truncation
    is the numerically exact image.
    """
    order = min(f.order, max_kernel_order(params))
    if order < 1:
        return SigmaSeries(f.principal, np.zeros(0, dtype=complex))
    return apply_operator(f, _cached_kernel(params, order))


def phase_ratio(
    f: SigmaSeries,
    spec: ClassSpec,
    z: complex,
    min_modulus: float = DEFAULT_MIN_MODULUS,
) -> complex:
    """Quantity whose subordination to `target_value` defines membership.

    Spirallike kind: z G'(z)/G(z); convex kind: 1 + z G''(z)/G'(z), where
    G is the operator image of f.  Derivatives are taken exactly on the
    truncated series.
    """
    g = _bml_image(f, spec.params)
    d1 = z_fprime(g)
    if spec.kind == "spirallike":
        den = evaluate(g, z)
        if abs(den) < min_modulus:
            raise SingularPointError(f"operator image vanishes near z = {z!r}")
        return evaluate(d1, z) / den
    den = evaluate(d1, z)
    if abs(den) < min_modulus:
        raise SingularPointError(f"image derivative vanishes near z = {z!r}")
    num = evaluate(z_fprime(d1), z) - den
    return 1.0 + num / den


def _phase_grid(f: SigmaSeries, spec: ClassSpec, zs: np.ndarray, min_modulus: float):
    """Vectorized phase ratios plus the mask of singular sample points."""
    g = _bml_image(f, spec.params)
    d1 = z_fprime(g)
    if spec.kind == "spirallike":
        den = evaluate_grid(g, zs)
        num = evaluate_grid(d1, zs)
        skip = np.abs(den) < min_modulus
        q = num / np.where(skip, 1.0, den)
    else:
        den = evaluate_grid(d1, zs)
        num = evaluate_grid(z_fprime(d1), zs) - den
        skip = np.abs(den) < min_modulus
        q = 1.0 + num / np.where(skip, 1.0, den)
    return q, skip


# ---------------------------------------------------------------------------
# the direct (range containment) check


def _require_sigma(f: SigmaSeries):
    if abs(f.principal - 1.0) > 1e-12:
        raise ValueError("class checks expect a series with principal coefficient 1")


def check_direct(f: SigmaSeries, spec: ClassSpec, grid: GridSpec) -> MembershipReport:
    """Sampled subordination test: every phase ratio must sit in the target region.

    Singular sample points are skipped and counted; more than 1% of them
    makes the verdict untrustworthy and raises `InconclusiveError`.
    """
    _require_sigma(f)
    zs = grid.z_points()
    q, skip = _phase_grid(f, spec, zs, grid.min_modulus)
    skipped = int(skip.sum())
    if skipped > 0.01 * len(zs):
        raise InconclusiveError(
            f"{skipped} of {len(zs)} sample points were singular; verdict withheld"
        )
    margins = _region_margins(spec, q)
    margins = np.where(skip, np.inf, margins)
    idx = int(np.argmin(margins))
    margin = float(margins[idx])
    return MembershipReport(
        verdict="member" if margin > 0.0 else "non-member",
        margin=margin,
        witness_z=complex(zs[idx]),
        witness_x=None,
        method="direct",
        skipped=skipped,
    )


def check_alexander(f: SigmaSeries, spec: ClassSpec, grid: GridSpec) -> MembershipReport:
    """Convex membership via the transform route: run the spirallike check on -z f'."""
    if spec.kind != "convex":
        raise ValueError("the transform route only answers convex-kind queries")
    spiral = replace(spec, kind="spirallike")
    rep = check_direct(alexander(f), spiral, grid)
    return replace(rep, method="alexander")


# ---------------------------------------------------------------------------
# convolution criteria


def epsilon_t1(x: complex, spec: ClassSpec) -> complex:
    """Direction coefficient (2 - E)/(1 - E) with E(x) = -Phi(x), |x| = 1."""
    if abs(abs(x) - 1.0) > 1e-6:
        raise ValueError(f"direction point must sit on the unit circle, got {x!r}")
    e = _direction_value(spec, x)
    if abs(1.0 - e) < _DEGENERATE_TOL:
        raise DegenerateDirectionError(f"direction x = {x!r} makes the kernel singular")
    return (2.0 - e) / (1.0 - e)


def kernel_series(x: complex, spec: ClassSpec, order: int, which: str) -> SigmaSeries:
    """Direction-indexed convolution kernel in the 1/z-basis.

    which="t1": principal 1, tail (n+1) - eps n  (acts on the operator image);
    which="t2": principal E - 1, tail (n - 1 + E) h_n  (acts on f itself, the
    operator weights folded in), so hadamard(f, kernel) reproduces
    z G'(z) + E G(z) coefficientwise.
    """
    n = np.arange(1, order + 1)
    if which == "t1":
        eps = epsilon_t1(x, spec)
        return SigmaSeries(1.0, (n + 1) - eps * n)
    if which == "t2":
        e = _direction_value(spec, x)
        if abs(1.0 - e) < _DEGENERATE_TOL:
            raise DegenerateDirectionError(f"direction x = {x!r} makes the kernel singular")
        h = _cached_kernel(spec.params, order).h
        return SigmaSeries(e - 1.0, (n - 1 + e) * h)
    raise ValueError(f"which must be 't1' or 't2', got {which!r}")


def _direction_weights(spec: ClassSpec, xs: np.ndarray, which: str):
    """Per-direction scan weight plus the skip mask of degenerate directions.

    The scanned value is base(z) + weight(x) * dir(z); for t1 the weight is
    -eps(x), for t2 it is E(x).
    """
    th, bad = _theta_grid(spec.theta, xs)
    e = np.exp(-1j * spec.lam) * (math.cos(spec.lam) * th + 1j * math.sin(spec.lam))
    skip = bad | (np.abs(1.0 - e) < _DEGENERATE_TOL)
    if which == "t1":
        den = np.where(skip, 1.0, 1.0 - e)
        return -(2.0 - e) / den, skip
    return e, skip


def _scan_series(f: SigmaSeries, spec: ClassSpec, which: str):
    """The (base, direction) series pair whose combination the scan evaluates."""
    target = alexander(f) if spec.kind == "convex" else f
    g = _bml_image(target, spec.params)
    n = np.arange(1, g.order + 1)
    if which == "t1":
        return SigmaSeries(1.0, (n + 1) * g.tail), SigmaSeries(0.0, n * g.tail)
    return z_fprime(g), g


def _eval_pair(s_base: SigmaSeries, s_dir: SigmaSeries, zs: np.ndarray):
    """Fast simultaneous evaluation of the scan pair at a batch of points."""
    zs = np.asarray(zs, dtype=complex)
    order = max(len(s_base.tail), len(s_dir.tail))
    inv = 1.0 / zs
    if order == 0:
        return s_base.principal * inv, s_dir.principal * inv
    powers = np.vander(zs, order, increasing=True)
    base = powers[:, : len(s_base.tail)] @ s_base.tail + s_base.principal * inv
    dirv = powers[:, : len(s_dir.tail)] @ s_dir.tail + s_dir.principal * inv
    return base, dirv


# offsets of the 27-point refinement stencil over (Re z, Im z, direction angle)
_STENCIL = np.array(
    [(i, j, k) for i in (-1, 0, 1) for j in (-1, 0, 1) for k in (-1, 0, 1)], dtype=float
)


def _refine_minimum(s_base, s_dir, spec, which, z0, t0, step_z, step_t, r_max, delta):
    """Deterministic pattern search polishing the scan modulus near a minimum.

    Starting from a coarse-grid argmin, recenter on any improvement and
    halve the steps otherwise; the interior point is clamped to the
    annulus 1e-9 <= |z| <= r_max and the direction stays on the circle.
    """
    z, t = complex(z0), float(t0)
    w0, skip0 = _direction_weights(spec, np.array([cmath.exp(1j * t)]), which)
    b0, d0 = _eval_pair(s_base, s_dir, np.array([z]))
    val = math.inf if skip0[0] else float(np.abs(b0 + w0 * d0)[0])
    hz, ht = float(step_z), float(step_t)
    for _ in range(250):
        if val < 0.05 * delta or (hz < 1e-15 and ht < 1e-14):
            break
        cz = z + (_STENCIL[:, 0] + 1j * _STENCIL[:, 1]) * hz
        ct = t + _STENCIL[:, 2] * ht
        m = np.abs(cz)
        cz = np.where(m > r_max, cz * (r_max / np.maximum(m, 1e-300)), cz)
        cz = np.where(m < 1e-9, 1e-9, cz)
        ws, skip = _direction_weights(spec, np.exp(1j * ct), which)
        bv, dv = _eval_pair(s_base, s_dir, cz)
        v = np.abs(bv + ws * dv)
        v = np.where(skip, np.inf, v)
        k = int(np.argmin(v))
        if v[k] < val:
            val, z, t = float(v[k]), complex(cz[k]), float(ct[k])
        else:
            hz *= 0.5
            ht *= 0.5
    return val, z, cmath.exp(1j * t)


def _annulling_direction(spec: ClassSpec, base: np.ndarray, dirv: np.ndarray, which: str):
    """The unique point x (not restricted to the circle) annulling the scan value.

    For a Möbius target, solving base(z) + weight(x) dir(z) = 0 for the
    direction is a Möbius inversion; the scan value vanishes on the unit
    circle exactly when |x(z)| = 1.  Only Möbius targets admit this
    closed form.
    """
    lam = spec.lam
    a, b = spec.theta.A, spec.theta.B
    el = cmath.exp(1j * lam)
    c = a * math.cos(lam) + 1j * b * math.sin(lam)
    with np.errstate(divide="ignore", invalid="ignore"):
        if which == "t1":
            num = el * dirv
            den = c * (dirv - base) - b * el * (2.0 * dirv - base)
        else:
            num = -el * (base + dirv)
            den = c * dirv + b * el * base
        return num / den


def _inside_indicator(spec: ClassSpec, base: np.ndarray, dirv: np.ndarray, which: str):
    """Signed indicator: negative where the annulling direction lies inside
    the unit circle (the sampled value sits inside the target region),
    positive outside; a sign change along a grid edge brackets a zero of
    the convolution on the circle."""
    if isinstance(spec.theta, JanowskiTheta):
        x = _annulling_direction(spec, base, dirv, which)
        return np.abs(x) - 1.0
    # polynomial target: solve Theta(x) = theta_need per point and track the
    # root closest to the circle
    lam = spec.lam
    el = cmath.exp(1j * lam)
    with np.errstate(divide="ignore", invalid="ignore"):
        if which == "t1":
            e_need = (2.0 * dirv - base) / (dirv - base)
        else:
            e_need = -base / dirv
        theta_need = (el * e_need - 1j * math.sin(lam)) / math.cos(lam)
    co = np.asarray(spec.theta.coefficients, dtype=complex)
    out = np.empty(len(base))
    for i, t_need in enumerate(theta_need):
        if not np.isfinite(t_need):
            out[i] = np.inf
            continue
        poly = co.copy()
        poly[0] -= t_need
        poly = np.trim_zeros(poly, "b")
        if len(poly) < 2:
            out[i] = np.inf
            continue
        roots = np.roots(poly[::-1])
        out[i] = float(np.min(np.abs(roots))) - 1.0
    return out


def _nearest_circle_direction(spec: ClassSpec, base: complex, dirv: complex, which: str):
    """Direction candidate on the circle annulling the value at one point."""
    if isinstance(spec.theta, JanowskiTheta):
        x = complex(_annulling_direction(spec, np.array([base]), np.array([dirv]), which)[0])
        return x / abs(x) if x != 0 and cmath.isfinite(x) else None
    lam = spec.lam
    el = cmath.exp(1j * lam)
    if which == "t1":
        if dirv == base:
            return None
        e_need = (2.0 * dirv - base) / (dirv - base)
    else:
        if dirv == 0:
            return None
        e_need = -base / dirv
    theta_need = (el * e_need - 1j * math.sin(lam)) / math.cos(lam)
    if not cmath.isfinite(theta_need):
        return None
    poly = np.asarray(spec.theta.coefficients, dtype=complex).copy()
    poly[0] -= theta_need
    poly = np.trim_zeros(poly, "b")
    if len(poly) < 2:
        return None
    roots = np.roots(poly[::-1])
    x = complex(roots[np.argmin(np.abs(np.abs(roots) - 1.0))])
    return x / abs(x) if x != 0 else None


def _crossing_edges(indicator: np.ndarray, n_radii: int, n_angles: int):
    """Grid edges whose endpoints disagree on the inside indicator.

    Angular neighbours within each circle first (wrapping), then radial
    neighbours at fixed angle; deterministic order.
    """
    s = np.sign(indicator.reshape(n_radii, n_angles))
    edges = []
    finite = np.isfinite(indicator.reshape(n_radii, n_angles))
    for r in range(n_radii):
        for k in range(n_angles):
            k2 = (k + 1) % n_angles
            if finite[r, k] and finite[r, k2] and s[r, k] * s[r, k2] < 0:
                edges.append((r * n_angles + k, r * n_angles + k2))
    for r in range(n_radii - 1):
        for k in range(n_angles):
            if finite[r, k] and finite[r + 1, k] and s[r, k] * s[r + 1, k] < 0:
                edges.append((r * n_angles + k, (r + 1) * n_angles + k))
    return edges


def _bisect_zero_batch(s_base, s_dir, spec, which, za, zb, sa):
    """Parallel sign bisection along grid segments bracketing zero contours."""
    za = np.array(za, dtype=complex)
    zb = np.array(zb, dtype=complex)
    sa = np.array(sa, dtype=float)
    for _ in range(80):
        mid = 0.5 * (za + zb)
        b, d = _eval_pair(s_base, s_dir, mid)
        sm = _inside_indicator(spec, b, d, which)
        sm = np.where(np.isfinite(sm), sm, 1.0)
        take_left = sa * sm < 0
        zb = np.where(take_left, mid, zb)
        za = np.where(take_left, za, mid)
    return 0.5 * (za + zb)


def check_convolution(
    f: SigmaSeries, spec: ClassSpec, grid: GridSpec, which: str = "t1"
) -> MembershipReport:
    """Non-vanishing scan of the direction-indexed convolution.

    Member verdict iff the smallest modulus found over all (interior
    point, boundary direction) pairs stays at or above grid.min_modulus.
    Beyond the raw (z, x) scan, each interior sample is paired with the
    unique direction that would annul the value there; a sign change of
    that direction's distance to the unit circle between neighbouring
    samples brackets an actual zero, which bisection then resolves below
    the threshold.  For the convex kind the same scan is applied to
    -z f'.
    """
    _require_sigma(f)
    if which not in ("t1", "t2"):
        raise ValueError(f"which must be 't1' or 't2', got {which!r}")
    s_base, s_dir = _scan_series(f, spec, which)
    zs = grid.z_points()
    xs = grid.x_points()
    ws, skip = _direction_weights(spec, xs, which)
    skipped = int(skip.sum())
    if skipped == len(xs):
        raise InconclusiveError("every boundary direction is degenerate")
    base = evaluate_grid(s_base, zs)
    dirv = evaluate_grid(s_dir, zs)
    vals = np.abs(base[:, None] + dirv[:, None] * ws[None, :])
    if skipped:
        vals[:, skip] = np.inf
    fi = int(np.argmin(vals.ravel()))
    i0, j0 = divmod(fi, len(xs))
    best_val = float(vals.ravel()[fi])
    best_z, best_x = complex(zs[i0]), complex(xs[j0])

    # locate actual zeros bracketed by the sampled annulling directions
    indicator = _inside_indicator(spec, base, dirv, which)
    edges = _crossing_edges(indicator, len(grid.radii), grid.angles)[:24]
    hits = []
    if edges:
        ia = np.array([e[0] for e in edges])
        ib = np.array([e[1] for e in edges])
        hits.extend(
            _bisect_zero_batch(s_base, s_dir, spec, which, zs[ia], zs[ib], indicator[ia])
        )
    # a sample can sit exactly on the zero contour, flagging no edge
    hits.extend(zs[np.nonzero(indicator == 0.0)[0][:8]])
    if hits:
        z_hits = np.array(hits, dtype=complex)
        bh, dh = _eval_pair(s_base, s_dir, z_hits)
        for k in range(len(z_hits)):
            x_cand = _nearest_circle_direction(spec, complex(bh[k]), complex(dh[k]), which)
            if x_cand is None:
                continue
            w_cand, skip_cand = _direction_weights(spec, np.array([x_cand]), which)
            if skip_cand[0]:
                continue
            val = float(np.abs(bh[k] + w_cand[0] * dh[k]))
            if val < best_val:
                best_val = val
                best_z, best_x = complex(z_hits[k]), x_cand

    if best_val >= grid.min_modulus:
        # polish the reported minimum for the member case
        step_r = max(np.diff(np.asarray(grid.radii)).max(initial=grid.r_max / 12), 1e-3)
        step_z = max(step_r, abs(best_z) * 2.0 * np.pi / grid.angles)
        t0 = math.atan2(best_x.imag, best_x.real)
        val, z_ref, x_ref = _refine_minimum(
            s_base, s_dir, spec, which, best_z, t0,
            step_z, 2.0 * np.pi / grid.boundary_x, grid.r_max, grid.min_modulus,
        )
        if val < best_val:
            best_val, best_z, best_x = val, z_ref, x_ref

    return MembershipReport(
        verdict="member" if best_val >= grid.min_modulus else "non-member",
        margin=best_val,
        witness_z=best_z,
        witness_x=best_x,
        method=f"conv_{which}",
        skipped=skipped,
    )


def convolution_value(f: SigmaSeries, spec: ClassSpec, z: complex, x: complex, which: str):
    """Scan value at one (z, x) pair, for report re-evaluation."""
    s_base, s_dir = _scan_series(f, spec, which)
    ws, skip = _direction_weights(spec, np.array([complex(x)]), which)
    if skip[0]:
        raise DegenerateDirectionError(f"direction x = {x!r} makes the kernel singular")
    bv, dv = _eval_pair(s_base, s_dir, np.array([complex(z)]))
    return complex((bv + ws * dv)[0])


# ---------------------------------------------------------------------------
# witnesses


def extremal_function(alpha: float, lam: float, order: int) -> SigmaSeries:
    """Series of (1 - z)^(2 tau) / z with tau = (1 - alpha) e^{-i lam} cos(lam).

    The boundary-hugging member of the half-plane class with A = 1 - 2 alpha,
    B = -1: its phase ratio coincides with the target map itself, so the
    margin at radius r is (1 - alpha) cos(lam) (1 - r)/(1 + r) > 0.
    """
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    if not abs(lam) < math.pi / 2:
        raise ValueError(f"|lam| must be < pi/2, got {lam}")
    tau = (1.0 - alpha) * cmath.exp(-1j * lam) * math.cos(lam)
    d = binomial_series(2.0 * tau, -1.0, order)
    return SigmaSeries(1.0, d[1:])


def construct_nonmember(f: SigmaSeries, spec: ClassSpec, grid: GridSpec) -> SigmaSeries:
    """Scale one tail coefficient of a member until the direct check just fails.

    The factor is bracketed by doubling and then bisected to 1e-3 relative
    width; the returned series is re-checked, so it is a certified
    non-member.  Convex-kind checks never see c_1 (both routes ignore it),
    so scaling starts at c_2 there.
    """
    base = check_direct(f, spec, grid)
    if not base.is_member:
        raise ValueError("construct_nonmember needs a member to start from")
    start = 2 if spec.kind == "convex" else 1
    index = next(
        (n for n in range(start, f.order + 1) if f.coefficient(n) != 0),
        None,
    )
    if index is None:
        raise ConstructionError("no scalable tail coefficient available")

    def fails(factor: float) -> bool:
        cand = f.with_coefficient(index, f.coefficient(index) * factor)
        try:
            return not check_direct(cand, spec, grid).is_member
        except InconclusiveError:
            return True

    t_lo, t_hi = 1.0, 2.0
    while not fails(t_hi):
        t_lo = t_hi
        t_hi *= 2.0
        if t_hi > 1e6:
            raise ConstructionError(
                f"scaling c_{index} by up to 1e6 never left the class"
            )
    while t_hi - t_lo > 1e-3 * t_lo:
        mid = 0.5 * (t_lo + t_hi)
        if fails(mid):
            t_hi = mid
        else:
            t_lo = mid
    out = f.with_coefficient(index, f.coefficient(index) * t_hi)
    try:
        certified = not check_direct(out, spec, grid).is_member
    except InconclusiveError:
        certified = False
    if not certified:
        raise ConstructionError("bisection endpoint failed to certify a non-member")
    return out
