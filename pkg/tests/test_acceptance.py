"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import cmath
import contextlib
import math

import numpy as np
import pytest

from bml import (
    BMLParams,
    ClassSpec,
    GridSpec,
    JanowskiTheta,
    SchwarzSpec,
    SigmaSeries,
    alexander,
    apply_operator,
    barnes_ml,
    bml_from_schwarz,
    build_kernel,
    check_alexander,
    check_convolution,
    check_direct,
    closed_form_janowski,
    coefficient_h,
    construct_nonmember,
    evaluate,
    extremal_function,
    hadamard,
    hadamard_identity,
    invert_operator,
    kernel_series,
    mittag_leffler_2p,
    reconstruct_f,
    target_value,
    z_fprime,
)

_PARAMS = [
    BMLParams(1.0, 1.0, 1.0, 0.0),
    BMLParams(1.2, 0.8, 2.0, 1.0),
    BMLParams(0.7, 2.0, 1.5, 0.5),
    BMLParams(0.5, 1.5, 3.0, 2.0),
    BMLParams(1.0, 3.0, 1.0, 1.0),
]
_NEAR_IDENTITY = BMLParams(1e-8, 1.0, 1.0, 0.0)
_GRID = GridSpec()


@contextlib.contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"{name}: FAIL")
        raise
    print(f"{name}: PASS")


def _scaled_schwarz(rng, degree, bound):
    co = rng.normal(size=degree) + 1j * rng.normal(size=degree)
    t = 2.0 * np.pi * np.arange(1024) / 1024
    zb = 0.999 * np.exp(1j * t)
    acc = np.zeros_like(zb)
    for c in co[::-1]:
        acc = acc * zb + c
    return SchwarzSpec(tuple(bound * co / np.abs(acc * zb).max()))


def _random_janowski(rng, force_halfplane=False):
    lam = float(rng.uniform(-1.2, 1.2))
    if force_halfplane:
        b = -1.0
    else:
        b = float(rng.uniform(-1.0, 0.85))
    a = float(rng.uniform(b + 0.1, 1.0))
    return lam, a, b


@pytest.fixture(scope="module")
def battery():
    """30 functions with known verdicts across 6 parameter tuples."""
    rng = np.random.default_rng(515253)
    entries = []
    for i, params in enumerate(_PARAMS):
        kern = build_kernel(params, 96)
        for j in range(2):
            lam, a, b = _random_janowski(rng, force_halfplane=(j == 0 and i % 2 == 0))
            spec = ClassSpec(lam, JanowskiTheta(a, b), "spirallike", params)
            omega = _scaled_schwarz(rng, int(rng.integers(1, 4)), 0.7)
            f = reconstruct_f(spec, omega, kern, 96, "spirallike")
            entries.append((f, spec, "member"))
    for alpha, lam in [(0.0, 0.0), (0.25, 0.6), (0.5, -0.6), (0.25, -1.0), (0.5, 1.0)]:
        spec = ClassSpec(lam, JanowskiTheta(1 - 2 * alpha, -1.0), "spirallike", _NEAR_IDENTITY)
        entries.append((extremal_function(alpha, lam, 1024), spec, "member"))
    for f, spec, _ in list(entries):
        entries.append((construct_nonmember(f, spec, _GRID), spec, "non-member"))
    return entries


def test_ac1_reduction_identities():
    with criterion("AC-1 reduction identities"):
        axis = np.linspace(-2.0, 2.0, 10)
        for x in axis:
            for y in axis:
                z = complex(x, y)
                assert abs(mittag_leffler_2p(1.0, 1.0, z) - cmath.exp(z)) <= 1e-12
        rng = np.random.default_rng(101)
        for _ in range(20):
            K = float(rng.uniform(0.5, 3.0))
            theta = float(rng.uniform(0.3, 4.0))
            a = float(rng.uniform(0.3, 5.0))
            params = BMLParams(K, theta, a, 0.0)
            for x in axis:
                for y in axis:
                    z = complex(x, y)
                    assert abs(barnes_ml(params, z) - mittag_leffler_2p(K, theta, z)) <= 1e-12


def test_ac2_weight_coefficients():
    with criterion("AC-2 weight coefficients"):
        rng = np.random.default_rng(202)
        for _ in range(100):
            params = BMLParams(
                float(rng.uniform(0.3, 3.0)),
                float(rng.uniform(0.3, 4.0)),
                float(rng.uniform(0.3, 5.0)),
                float(rng.uniform(0.0, 3.0)),
            )
            assert abs(coefficient_h(1, params) - 1.0) <= 1e-14
        unit = BMLParams(1.0, 1.0, 1.0, 0.0)
        for n in range(1, 11):
            expected = 1.0 / math.factorial(n - 1)
            assert abs(coefficient_h(n, unit) - expected) <= 1e-12 * expected


def test_ac3_convolution_algebra():
    with criterion("AC-3 convolution algebra"):
        rng = np.random.default_rng(303)

        def dyadic_series(order):
            re = rng.integers(-32, 33, size=order + 1) / 16.0
            im = rng.integers(-32, 33, size=order + 1) / 16.0
            return SigmaSeries(complex(re[0], im[0]), re[1:] + 1j * im[1:])

        for _ in range(100):
            order = int(rng.integers(1, 9))
            f, g, h = (dyadic_series(order) for _ in range(3))
            fg = hadamard(f, g)
            gf = hadamard(g, f)
            assert fg.principal == gf.principal and np.array_equal(fg.tail, gf.tail)
            lhs = hadamard(hadamard(f, g), h)
            rhs = hadamard(f, hadamard(g, h))
            assert lhs.principal == rhs.principal and np.array_equal(lhs.tail, rhs.tail)
            ident = hadamard_identity(order)
            fi = hadamard(f, ident)
            assert fi.principal == f.principal and np.array_equal(fi.tail, f.tail)
        for params in _PARAMS:
            kern = build_kernel(params, 24)
            tail = rng.normal(size=24) + 1j * rng.normal(size=24)
            f = SigmaSeries(1.0, tail)
            back = invert_operator(apply_operator(f, kern), kern)
            assert np.allclose(back.tail, tail, rtol=5e-16, atol=0)
            fwd = apply_operator(invert_operator(f, kern), kern)
            assert np.allclose(fwd.tail, tail, rtol=5e-16, atol=0)


def test_ac4_extremal_membership():
    with criterion("AC-4 extremal membership"):
        for alpha in (0.0, 0.25, 0.5):
            for lam in (0.0, math.pi / 4, -math.pi / 4, math.pi / 3, -math.pi / 3):
                spec = ClassSpec(
                    lam, JanowskiTheta(1 - 2 * alpha, -1.0), "spirallike", _NEAR_IDENTITY
                )
                rep = check_direct(extremal_function(alpha, lam, 1024), spec, _GRID)
                assert rep.is_member and rep.margin > 0.0


def test_ac5_method_equivalence(battery):
    with criterion("AC-5 direct/convolution equivalence"):
        assert len(battery) >= 30
        for f, spec, expected in battery:
            d = check_direct(f, spec, _GRID)
            t1 = check_convolution(f, spec, _GRID, "t1")
            t2 = check_convolution(f, spec, _GRID, "t2")
            assert d.verdict == expected
            assert t1.verdict == expected
            assert t2.verdict == expected
        rng = np.random.default_rng(505)
        params = _PARAMS[1]
        spec = ClassSpec(0.35, JanowskiTheta(0.7, -0.4), "spirallike", params)
        f = SigmaSeries(1.0, rng.uniform(-1, 1, 24) + 1j * rng.uniform(-1, 1, 24))
        g = apply_operator(f, build_kernel(params, 24))
        for _ in range(20):
            z = complex(rng.uniform(0.05, 0.99) * np.exp(2j * np.pi * rng.uniform()))
            x = cmath.exp(2j * np.pi * rng.uniform())
            e = -target_value(spec, x)
            k1 = kernel_series(x, spec, 24, "t1")
            lhs = (e - 1.0) * evaluate(hadamard(g, k1), z)
            rhs = evaluate(z_fprime(g), z) + e * evaluate(g, z)
            assert abs(lhs - rhs) <= 1e-10
            conv = hadamard(f, kernel_series(x, spec, 24, "t2"))
            expected_series = z_fprime(g) + e * g
            bound = 4e-16 * (np.arange(1, 25) + abs(e)) * np.abs(g.tail) + 1e-30
            assert np.all(np.abs(conv.tail - expected_series.tail) <= bound)
            assert abs(conv.principal - expected_series.principal) <= 4e-16 * abs(e - 1.0)


def test_ac6_quadrature_vs_closed_form():
    with criterion("AC-6 quadrature vs closed form"):
        rng = np.random.default_rng(606)
        omega = SchwarzSpec((1.0,))
        specs = []
        for _ in range(10):
            lam = float(rng.uniform(-1.2, 1.2))
            b = float(rng.uniform(-1.0, 0.9))
            if b == 0.0:
                b = -0.5
            a = float(rng.uniform(b + 0.05, 1.0))
            specs.append(ClassSpec(lam, JanowskiTheta(a, b), "spirallike", _PARAMS[0]))
        for _ in range(5):
            lam = float(rng.uniform(-1.2, 1.2))
            a = float(rng.uniform(0.05, 1.0))
            specs.append(ClassSpec(lam, JanowskiTheta(a, 0.0), "spirallike", _PARAMS[0]))
        for spec in specs:
            for _ in range(200 // len(specs) + 1):
                z = complex(rng.uniform(0.02, 0.9) * np.exp(2j * np.pi * rng.uniform()))
                quad = bml_from_schwarz(spec, omega, z)
                assert abs(quad - closed_form_janowski(spec, z)) <= 1e-10


def test_ac7_reconstruction_roundtrip():
    with criterion("AC-7 reconstruction roundtrip"):
        rng = np.random.default_rng(707)
        omegas = [_scaled_schwarz(rng, int(rng.integers(1, 4)), 0.8) for _ in range(10)]
        for params in _PARAMS:
            kern = build_kernel(params, 128)
            for omega in omegas:
                lam, a, b = _random_janowski(rng)
                spec = ClassSpec(lam, JanowskiTheta(a, b), "spirallike", params)
                f = reconstruct_f(spec, omega, kern, 128, "spirallike")
                g = apply_operator(f, kern)
                for _ in range(20):
                    z = complex(rng.uniform(0.05, 0.85) * np.exp(2j * np.pi * rng.uniform()))
                    assert abs(evaluate(g, z) - bml_from_schwarz(spec, omega, z)) <= 1e-8


def test_ac8_convex_routes():
    with criterion("AC-8 convex route agreement"):
        rng = np.random.default_rng(808)
        for params in _PARAMS:
            kern = build_kernel(params, 96)
            lam, a, b = _random_janowski(rng)
            spec = ClassSpec(lam, JanowskiTheta(a, b), "convex", params)
            omega = _scaled_schwarz(rng, 2, 0.6)
            omega = SchwarzSpec((0.0,) + omega.coefficients)  # zero linear coefficient
            f = reconstruct_f(spec, omega, kern, 96, "convex")
            assert f.coefficient(1) == 0.0
            direct = check_direct(f, spec, _GRID)
            routed = check_alexander(f, spec, _GRID)
            assert direct.is_member and routed.is_member
            assert direct.verdict == routed.verdict
            bad = construct_nonmember(f, spec, _GRID)
            assert check_direct(bad, spec, _GRID).verdict == check_alexander(bad, spec, _GRID).verdict == "non-member"
        # the quadratic Schwarz function passes the obstruction gate and the
        # transform cross-check
        params = _PARAMS[0]
        kern = build_kernel(params, 64)
        spec = ClassSpec(0.0, JanowskiTheta(1.0, 0.0), "convex", params)
        omega = SchwarzSpec((0.0, 1.0))
        f_c = reconstruct_f(spec, omega, kern, 64, "convex")
        f_s = reconstruct_f(spec, omega, kern, 64, "spirallike")
        lhs = alexander(apply_operator(f_c, kern))
        rhs = apply_operator(f_s, kern)
        assert abs(lhs.principal - rhs.principal) <= 1e-8
        assert np.max(np.abs(lhs.tail - rhs.tail)) <= 1e-8
