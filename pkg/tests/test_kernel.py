"""Kernel operations against independent oracles and closed-form identities."""

import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spiralmap import (
    ConstructionParams,
    DomainError,
    ParameterError,
    S_map,
    S_map_c,
    arg_log,
    hg_derivatives,
    hg_eval,
    log_spiral,
    log_spiral_deriv,
    model_spiral,
    omega_eval,
    perturbed_spiral,
    principal_power,
    uv_decompose,
)

from conftest import central_diff, disk_points, strip_points


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

def test_params_derived_quantities():
    p = ConstructionParams(alpha=0.3, eps=0.1, k=0.5, A=10.0)
    assert p.A0 == 10.0 - math.log(2.0)
    assert p.beta == pytest.approx((1 - 0.3) / 0.3, rel=1e-15)
    assert p.beta > 1.0
    assert p.K == pytest.approx(3.0, rel=1e-15)


@pytest.mark.parametrize("bad", [
    dict(alpha=0.6), dict(alpha=0.0), dict(eps=0.0), dict(eps=-1.0),
    dict(k=0.0), dict(k=1.0), dict(A=2.0), dict(A=-5.0), dict(b=0.0),
])
def test_params_validation(bad):
    good = dict(alpha=0.3, eps=0.1, k=0.5, A=10.0, b=math.pi / 2)
    good.update(bad)
    with pytest.raises(ParameterError):
        ConstructionParams(**good)


# ---------------------------------------------------------------------------
# principal_power
# ---------------------------------------------------------------------------

def test_principal_power_trivial():
    assert principal_power(1.0, 0.3) == pytest.approx(1.0)
    assert principal_power(4.0, 0.5) == pytest.approx(2.0)
    root_i = principal_power(1j, 0.5)
    assert root_i == pytest.approx(cmath.exp(1j * math.pi / 4), rel=1e-15)


def test_principal_power_branch_cut():
    for bad in (0.0, -1.0, -2.0 + 0.0j):
        with pytest.raises(DomainError):
            principal_power(bad, 0.3)
    # Just off the cut is fine and uses Arg in (-pi, pi].
    assert np.isfinite(principal_power(-1.0 + 1e-12j, 0.5)).all()


# ---------------------------------------------------------------------------
# S_map
# ---------------------------------------------------------------------------

def test_S_map_values():
    assert S_map(0.0, 10.0) == pytest.approx(10.0)
    # 1 - z computed from the exact complement has no cancellation.
    assert S_map_c(1e-3, 10.0) == pytest.approx(10.0 + 3.0 * math.log(10.0), abs=1e-13)
    assert S_map(1.0 - 1e-3, 10.0) == pytest.approx(10.0 + 3.0 * math.log(10.0), abs=1e-11)
    expected = 10.0 - 0.5 * math.log(2.0) + 1j * math.pi / 4.0
    assert S_map(1j, 10.0) == pytest.approx(expected, rel=1e-15)


def test_S_map_image_in_strip():
    rng = np.random.default_rng(3)
    z = disk_points(rng, 5000)
    s = S_map(z, 10.0)
    assert np.all(s.real > 10.0 - math.log(2.0) - 1e-12)
    assert np.all(np.abs(s.imag) < math.pi / 2.0)


def test_S_map_domain():
    with pytest.raises(DomainError):
        S_map(1.0, 10.0)
    with pytest.raises(DomainError):
        S_map(1.5, 10.0)  # 1 - z on the negative real axis


# ---------------------------------------------------------------------------
# arg_log
# ---------------------------------------------------------------------------

def test_arg_log_values():
    assert arg_log(7.0) == 0.0
    s = math.e * cmath.exp(1j)  # Log s = 1 + i
    assert arg_log(s) == pytest.approx(math.pi / 4.0, rel=1e-14)


def test_arg_log_extended_precision_oracle():
    # Independent high-precision evaluation of Arg Log (100 + i).
    mp.mp.dps = 50
    expected = float(mp.arg(mp.log(mp.mpc(100, 1))))
    assert arg_log(100.0 + 1j) == pytest.approx(expected, rel=1e-14)


def test_arg_log_domain():
    for bad in (0.5, 1.0, -3.0 + 2.0j):
        with pytest.raises(DomainError):
            arg_log(bad)


# ---------------------------------------------------------------------------
# uv_decompose / log_spiral
# ---------------------------------------------------------------------------

def test_uv_real_axis():
    u, v = uv_decompose(1.0, 0.4)
    assert u == pytest.approx(1.0) and v == pytest.approx(0.0, abs=1e-16)
    x = 37.5
    u, v = uv_decompose(x, 0.3)
    assert u == pytest.approx(x ** 0.3, rel=1e-15)
    assert v == pytest.approx(0.3 * math.log(x), rel=1e-15)


def test_uv_spiral_identity_spot():
    s = 50.0 + 1j
    u, v = uv_decompose(s, 0.3)
    psi = log_spiral(s, 0.3)
    assert abs(psi - cmath.exp(-v - 1j * u)) <= 1e-12 * abs(psi)


def test_uv_spiral_identity_bulk():
    # 1e4 random strip points, left edge A0 = 10, half-height pi/2.
    rng = np.random.default_rng(11)
    s = strip_points(rng, 10_000, x_lo=10.0, x_hi=1e4)
    u, v = uv_decompose(s, 0.3)
    psi = log_spiral(s, 0.3)
    err = np.abs(psi - np.exp(-v - 1j * u))
    assert np.all(err <= 1e-12 * np.abs(psi))


def test_log_spiral_values():
    assert log_spiral(1.0, 0.45) == pytest.approx(cmath.exp(-1j), rel=1e-15)
    x = np.array([2.0, 10.0, 123.0, 1e6])
    assert np.abs(log_spiral(x, 0.3)) == pytest.approx(x ** -0.3, rel=1e-14)
    s = 30.0 + 0.5j
    u, v = uv_decompose(s, 0.25)
    psi = log_spiral(s, 0.25)
    assert abs(psi - cmath.exp(-v - 1j * u)) <= 1e-12 * abs(psi)


def test_log_spiral_domain():
    with pytest.raises(DomainError):
        log_spiral(-1.0 + 0.5j, 0.3)


# ---------------------------------------------------------------------------
# log_spiral_deriv
# ---------------------------------------------------------------------------

def test_spiral_deriv_finite_difference():
    s0 = 20.0 + 0.3j
    fd = central_diff(lambda s: log_spiral(s, 0.3), s0)
    cf = log_spiral_deriv(s0, 0.3)
    assert abs(fd - cf) <= 1e-7 * abs(cf)


def test_spiral_deriv_asymptotic_rate():
    # |Psi'(x)| ~ alpha/x for large real x.
    ratio = abs(log_spiral_deriv(1e6, 0.3)) * 1e6 / 0.3
    assert 0.99 < ratio < 1.01


def test_spiral_deriv_two_term_expansion():
    rng = np.random.default_rng(5)
    s = strip_points(rng, 100, x_lo=10.0, x_hi=1e4)
    alpha = 0.3
    product = log_spiral_deriv(s, alpha)
    la = np.log(s)
    expanded = (-alpha * np.exp(-(alpha + 1) * la) * np.exp(-1j * np.exp(alpha * la))
                - 1j * alpha / s * np.exp(-1j * np.exp(alpha * la)))
    assert np.all(np.abs(product - expanded) <= 1e-13 * np.abs(product))


# ---------------------------------------------------------------------------
# model_spiral
# ---------------------------------------------------------------------------

def test_model_spiral_values():
    assert model_spiral(math.pi) == pytest.approx(-1.0 / math.pi, rel=1e-15)
    assert model_spiral(2 * math.pi) == pytest.approx(1.0 / (2 * math.pi), rel=1e-14)
    assert model_spiral(math.pi / 2) == pytest.approx(-2j / math.pi, rel=1e-15)
    with pytest.raises(DomainError):
        model_spiral(0.0)
    with pytest.raises(DomainError):
        model_spiral(-1.0)


# ---------------------------------------------------------------------------
# perturbed_spiral
# ---------------------------------------------------------------------------

def test_perturbed_spiral_real_axis_collapse():
    p = ConstructionParams(0.3, 0.1, 0.5, 10.0)
    for x in (1.5, 7.0, 120.0):
        assert perturbed_spiral(x, p) == log_spiral(x, p.alpha)  # Q(x) = 0 exactly


def test_perturbed_spiral_imaginary_part():
    p = ConstructionParams(0.3, 0.1, 0.5, 10.0)
    rng = np.random.default_rng(9)
    s = strip_points(rng, 1000)
    t = perturbed_spiral(s, p)
    assert np.array_equal(t.imag, log_spiral(s, p.alpha).imag)


def test_perturbed_spiral_componentwise():
    p = ConstructionParams(0.3, 0.1, 0.5, 10.0)
    s = 40.0 + 1j
    expected = log_spiral(s, 0.3) - 0.2 * arg_log(s)
    assert perturbed_spiral(s, p) == expected


# ---------------------------------------------------------------------------
# hg_eval
# ---------------------------------------------------------------------------

def test_hg_eval_nested_log_collapse():
    p = ConstructionParams(0.3, 0.1, 0.5, math.e ** math.e)
    rec = hg_eval(0.0, p)
    assert rec.g == pytest.approx(0.1j, rel=1e-14)


def test_hg_eval_center_real_axis():
    p = ConstructionParams(0.3, 0.1, 0.5, 10.0)
    rec = hg_eval(0.0, p)
    # g(0) = i eps loglog A is purely imaginary, so conjugation cancels it.
    assert rec.f == pytest.approx(log_spiral(10.0, 0.3), rel=1e-14)


def test_hg_eval_composition(default_params):
    z = 0.5 + 0.2j
    rec = hg_eval(z, default_params)
    t = perturbed_spiral(S_map(z, default_params.A), default_params)
    assert abs(rec.f - t) <= 1e-12


def test_hg_eval_composition_bulk(default_params):
    rng = np.random.default_rng(17)
    z = disk_points(rng, 10_000)
    rec = hg_eval(z, default_params)
    t = perturbed_spiral(S_map(z, default_params.A), default_params)
    assert np.all(np.abs(rec.f - t) <= 1e-12)


def test_hg_eval_bundle_consistency(default_params):
    rng = np.random.default_rng(23)
    z = disk_points(rng, 500)
    rec = hg_eval(z, default_params)
    assert np.array_equal(rec.f, rec.h + np.conj(rec.g))
    assert np.array_equal(rec.jacobian,
                          np.abs(rec.h_prime) ** 2 - np.abs(rec.g_prime) ** 2)


def test_hg_eval_domain():
    p = ConstructionParams(0.3, 0.1, 0.5, 10.0)
    with pytest.raises(DomainError):
        hg_eval(1.0 + 0.5j, p)
    with pytest.raises(DomainError):
        hg_eval(np.array([0.1, 1.2 + 0.1j]), p)


def test_real_axis_collapse():
    p = ConstructionParams(0.3, 0.1, 0.5, 10.0)
    for z in (0.1, 0.5, 0.9, 0.999):
        s = S_map(z, p.A)
        assert arg_log(s) == 0.0
        rec = hg_eval(z, p)
        assert abs(rec.f.imag - log_spiral(s, p.alpha).imag) <= 5e-16


# ---------------------------------------------------------------------------
# hg_derivatives
# ---------------------------------------------------------------------------

def test_hg_derivatives_center():
    p = ConstructionParams(0.3, 0.1, 0.5, 10.0)
    _, gp = hg_derivatives(0.0, p)
    assert gp == pytest.approx(1j * 0.1 / (10.0 * math.log(10.0)), rel=1e-14)


def test_hg_derivatives_finite_difference(default_params):
    rng = np.random.default_rng(7)
    z = disk_points(rng, 100, rmax=0.9)
    hp, gp = hg_derivatives(z, default_params)
    hp_fd = (hg_eval(z + 1e-6, default_params).h
             - hg_eval(z - 1e-6, default_params).h) / 2e-6
    gp_fd = (hg_eval(z + 1e-6, default_params).g
             - hg_eval(z - 1e-6, default_params).g) / 2e-6
    assert np.all(np.abs(hp - hp_fd) <= 1e-7 * np.abs(hp))
    assert np.all(np.abs(gp - gp_fd) <= 1e-7 * np.abs(gp))


def test_hg_derivatives_difference_identity(default_params):
    rng = np.random.default_rng(13)
    z = disk_points(rng, 200, rmax=0.95)
    hp, gp = hg_derivatives(z, default_params)
    s = S_map(z, default_params.A)
    rhs = log_spiral_deriv(s, default_params.alpha) / (1.0 - z)
    assert np.all(np.abs((hp - gp) - rhs) <= 1e-13 * np.abs(hp - gp))


def test_nonvanishing_h_prime(default_params):
    rng = np.random.default_rng(29)
    z = disk_points(rng, 5000)
    hp, _ = hg_derivatives(z, default_params)
    assert np.all(np.abs(hp) > 0.0)


# ---------------------------------------------------------------------------
# omega_eval
# ---------------------------------------------------------------------------

def test_omega_closed_form_vs_quotient(default_params):
    rng = np.random.default_rng(31)
    z = disk_points(rng, 100, rmax=0.95)
    omega, _ = omega_eval(z, default_params)
    hp, gp = hg_derivatives(z, default_params)
    assert np.all(np.abs(omega - gp / hp) <= 1e-10 * np.abs(omega))


def test_omega_real_axis_oracle():
    # All ingredients real-axis values assembled independently of hg_eval.
    p = ConstructionParams(0.3, 0.1, 0.5, 10.0)
    r = 0.4
    s = complex(S_map(r, p.A))
    oracle = 1j * p.eps / (s * cmath.log(s) * complex(log_spiral_deriv(s, p.alpha))
                           + 1j * p.eps)
    omega, _ = omega_eval(r, p)
    assert omega == pytest.approx(oracle, rel=1e-13)


def test_jacobian_identity(default_params):
    rng = np.random.default_rng(37)
    z = disk_points(rng, 1000)
    omega, jac = omega_eval(z, default_params)
    hp, _ = hg_derivatives(z, default_params)
    rhs = np.abs(hp) ** 2 * (1.0 - np.abs(omega) ** 2)
    assert np.all(np.abs(jac - rhs) <= 1e-12 * np.abs(hp) ** 2)


def test_bounded_envelope(default_params):
    rng = np.random.default_rng(41)
    z = disk_points(rng, 2000)
    rec = hg_eval(z, default_params)
    s = rec.S
    envelope = (np.abs(log_spiral(s, default_params.alpha))
                + 2.0 * default_params.eps * np.abs(arg_log(s)))
    assert np.all(np.abs(rec.f) <= envelope + 1e-15)


def test_no_nan_escapes(default_params):
    rng = np.random.default_rng(43)
    z = disk_points(rng, 2000)
    rec = hg_eval(z, default_params)
    for arr in (rec.S, rec.h, rec.g, rec.f, rec.h_prime, rec.g_prime,
                rec.omega, rec.jacobian):
        assert np.all(np.isfinite(arr))


# ---------------------------------------------------------------------------
# property tests
# ---------------------------------------------------------------------------

@settings(max_examples=200, deadline=None)
@given(x=st.floats(10.0, 1e6), y=st.floats(-1.5707, 1.5707))
def test_branch_correctness_property(x, y):
    s = complex(x, y)
    ls = cmath.log(s)
    assert -math.pi < cmath.phase(ls) <= math.pi
    q = arg_log(s)
    assert isinstance(q, float) and -math.pi / 2 < q < math.pi / 2


@settings(max_examples=200, deadline=None)
@given(x=st.floats(10.0, 1e6), y=st.floats(-1.5707, 1.5707),
       alpha=st.floats(0.05, 0.45))
def test_spiral_decomposition_property(x, y, alpha):
    s = complex(x, y)
    u, v = uv_decompose(s, alpha)
    psi = log_spiral(s, alpha)
    assert abs(psi - cmath.exp(complex(-v, -u))) <= 1e-12 * abs(psi)


@settings(max_examples=100, deadline=None)
@given(r=st.floats(0.0, 0.999), theta=st.floats(0.0, 6.283185307179586))
def test_composition_property(r, theta):
    p = ConstructionParams(0.3, 0.1, 0.5, 10.0)
    z = r * cmath.exp(1j * theta)
    rec = hg_eval(z, p)
    t = perturbed_spiral(S_map(z, p.A), p)
    assert abs(rec.f - t) <= 1e-12
