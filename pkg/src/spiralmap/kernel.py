"""Closed-form evaluation of the spiral construction on principal branches.

The construction composes a conformal map of the unit disk onto a far-right
horizontal strip with a bounded logarithmic spiral map and a small
logarithmic perturbation:

    S(z)     = A - Log(1 - z)                 (disk -> strip, x > A - log 2, |y| < pi/2)
    Psi(s)   = s^(-alpha) exp(-i s^alpha)     (bounded logarithmic spiral)
    Q(s)     = Arg Log s                      (perturbation angle)
    T_eps(s) = Psi(s) - 2 eps Q(s)

    h(z) = Psi(S(z)) + i eps Log Log S(z)     (analytic part, unbounded)
    g(z) = i eps Log Log S(z)
    f(z) = h(z) + conj(g(z)) = T_eps(S(z))    (bounded harmonic map)

All logarithms and powers use the principal branch, Arg in (-pi, pi].
Every function here is pure, accepts scalars or numpy arrays of complex
values, and raises DomainError off its domain instead of emitting NaN.
Results are bitwise deterministic for identical inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateDenominatorError, DomainError, ParameterError

__all__ = [
    "ConstructionParams",
    "UVPair",
    "EvalRecord",
    "principal_power",
    "S_map",
    "S_map_c",
    "arg_log",
    "uv_decompose",
    "log_spiral",
    "log_spiral_deriv",
    "model_spiral",
    "perturbed_spiral",
    "hg_eval",
    "hg_eval_c",
    "hg_derivatives",
    "omega_eval",
]

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class ConstructionParams:
    """One admissible instance (alpha, eps, k, A) of the construction.

    b is the half-height of the target strip: pi/2 for the disk mapping,
    configurable for strip-level experiments.
    """

    alpha: float
    eps: float
    k: float
    A: float
    b: float = HALF_PI

    def __post_init__(self):
        if not (0.0 < self.alpha < 0.5):
            raise ParameterError(f"alpha must lie in (0, 1/2), got {self.alpha}")
        if not self.eps > 0.0:
            raise ParameterError(f"eps must be positive, got {self.eps}")
        if not (0.0 < self.k < 1.0):
            raise ParameterError(f"k must lie in (0, 1), got {self.k}")
        if not self.A > 2.0:
            raise ParameterError(f"A must exceed 2, got {self.A}")
        if not self.b > 0.0:
            raise ParameterError(f"b must be positive, got {self.b}")

    @property
    def A0(self) -> float:
        """Left edge A - log 2 of the strip containing S(D)."""
        return self.A - math.log(2.0)

    @property
    def beta(self) -> float:
        """(1 - alpha)/alpha; exceeds 1 because alpha < 1/2."""
        return (1.0 - self.alpha) / self.alpha

    @property
    def K(self) -> float:
        """Maximal conformal distortion (1 + k)/(1 - k)."""
        return (1.0 + self.k) / (1.0 - self.k)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "eps": self.eps,
            "k": self.k,
            "A": self.A,
            "b": self.b,
            "A0": self.A0,
            "beta": self.beta,
            "K": self.K,
        }


class UVPair(NamedTuple):
    """Coordinates (U, V) with Psi = exp(-V - iU)."""

    u: float | np.ndarray
    v: float | np.ndarray


@dataclass(frozen=True)
class EvalRecord:
    """Mutually consistent per-point values from a single evaluation.

    f = h + conj(g) componentwise and jacobian = |h'|^2 - |g'|^2 by
    construction; keeping the bundle together prevents branch or rounding
    drift between components.
    """

    z: complex | np.ndarray
    S: complex | np.ndarray
    h: complex | np.ndarray
    g: complex | np.ndarray
    f: complex | np.ndarray
    h_prime: complex | np.ndarray
    g_prime: complex | np.ndarray
    omega: complex | np.ndarray
    jacobian: float | np.ndarray


def _carray(s) -> np.ndarray:
    return np.asarray(s, dtype=np.complex128)


def _ret(arr: np.ndarray, like):
    # Unwrap 0-d arrays so scalar inputs give scalar outputs.
    if np.ndim(like) == 0 and arr.ndim == 0:
        return arr[()]
    return arr


def _check(ok: np.ndarray, what: str, values: np.ndarray) -> None:
    if not np.all(ok):
        bad = _carray(values).ravel()[np.argmin(np.asarray(ok).ravel())]
        raise DomainError(f"{what} (offending value {bad})")


def principal_power(s, alpha: float):
    """s^alpha = exp(alpha * Log s) on the principal branch.

    Defined away from the closed negative real axis.
    """
    a = _carray(s)
    _check(~((a.imag == 0.0) & (a.real <= 0.0)),
           "principal_power requires s off the closed negative real axis", a)
    return _ret(np.exp(alpha * np.log(a)), s)


def S_map_c(one_minus_z, A: float):
    """Strip coordinate A - Log(w) for w = 1 - z, computed from w directly.

    Passing w avoids cancellation for points near z = 1: a radial probe at
    z = 1 - 10^-m should supply w = 10^-m exactly.
    """
    w = _carray(one_minus_z)
    _check(~((w.imag == 0.0) & (w.real <= 0.0)),
           "S_map requires z off the real ray [1, inf)", 1.0 - w)
    return _ret(A - np.log(w), one_minus_z)


def S_map(z, A: float):
    """Strip coordinate S(z) = A - Log(1 - z).

    The formula is single-valued wherever 1 - z avoids the closed negative
    real axis; the construction itself only uses |z| < 1, where the image
    lies in the strip {x > A - log 2, |y| < pi/2}.
    """
    zz = _carray(z)
    return _ret(_carray(S_map_c(1.0 - zz, A)), z)


def arg_log(s):
    """Q(s) = Arg Log s, real-valued for Re s > 0 and |s| > 1.

    Under those constraints Log s lies in the open right half-plane, so the
    result lies in (-pi/2, pi/2) and vanishes on the real axis.
    """
    a = _carray(s)
    _check((a.real > 0.0) & (np.abs(a) > 1.0),
           "arg_log requires Re s > 0 and |s| > 1", a)
    return _ret(np.angle(np.log(a)), s)


def uv_decompose(s, alpha: float) -> UVPair:
    """Coordinates U = Re(s^alpha) + alpha Arg s, V = alpha log|s| - Im(s^alpha).

    They satisfy Psi(s) = exp(-V - iU); for real s = x > 1 this reduces to
    (x^alpha, alpha log x).
    """
    a = _carray(s)
    _check(a.real > 0.0, "uv_decompose requires Re s > 0", a)
    sa = np.exp(alpha * np.log(a))
    u = sa.real + alpha * np.angle(a)
    v = alpha * np.log(np.abs(a)) - sa.imag
    return UVPair(_ret(u, s), _ret(v, s))


def log_spiral(s, alpha: float):
    """Psi(s) = s^(-alpha) exp(-i s^alpha) on the right half-plane.

    |Psi(s)| = |s|^(-alpha) exp(Im(s^alpha)), so for real s = x > 0 the
    modulus is exactly x^(-alpha).
    """
    a = _carray(s)
    _check(a.real > 0.0, "log_spiral requires Re s > 0", a)
    la = np.log(a)
    return _ret(np.exp(-alpha * la - 1j * np.exp(alpha * la)), s)


def log_spiral_deriv(s, alpha: float):
    """Psi'(s) = -(i alpha exp(-i s^alpha)/s) (1 - i s^(-alpha)).

    Nonvanishing on the right half-plane: |alpha Arg s| < pi/2 keeps
    1 - i s^(-alpha) away from zero.
    """
    a = _carray(s)
    _check(a.real > 0.0, "log_spiral_deriv requires Re s > 0", a)
    la = np.log(a)
    sa = np.exp(alpha * la)
    return _ret(-(1j * alpha * np.exp(-1j * sa) / a) * (1.0 - 1j * np.exp(-alpha * la)), s)


def model_spiral(u):
    """gamma(u) = exp(-iu)/u, the limiting spiral traced by Psi; u > 0 real."""
    uu = np.asarray(u, dtype=np.float64)
    _check(uu > 0.0, "model_spiral requires u > 0", uu.astype(np.complex128))
    return _ret(np.exp(-1j * uu) / uu, u)


def perturbed_spiral(s, params: ConstructionParams):
    """T_eps(s) = Psi(s) - 2 eps Q(s), a real translate of the spiral map."""
    return log_spiral(s, params.alpha) - 2.0 * params.eps * arg_log(s)


def hg_eval_c(one_minus_z, params: ConstructionParams) -> EvalRecord:
    """Full evaluation bundle from the complement w = 1 - z.

    This is the accuracy-preserving entry point for probes near the unit
    circle, where w is known exactly but 1 - (1 - w) would cancel.
    """
    w = _carray(one_minus_z)
    _check(np.abs(1.0 - w) < 1.0, "hg_eval requires |z| < 1", 1.0 - w)
    S = params.A - np.log(w)
    logS = np.log(S)
    _check(logS.real > 0.0,
           "Log S must lie in the right half-plane (A too small)", S)
    loglogS = np.log(logS)

    alpha, eps = params.alpha, params.eps
    sa = np.exp(alpha * logS)
    psiS = np.exp(-alpha * logS - 1j * sa)
    psipS = -(1j * alpha * np.exp(-1j * sa) / S) * (1.0 - 1j * np.exp(-alpha * logS))

    ig = 1j * eps * loglogS
    h = psiS + ig
    g = ig
    f = h + np.conj(g)

    S_prime = 1.0 / w
    inner = 1j * eps / (S * logS)
    g_prime = inner * S_prime
    h_prime = (psipS + inner) * S_prime

    denom = S * logS * psipS + 1j * eps
    if np.any(denom == 0.0) or not np.all(np.isfinite(denom)):
        raise DegenerateDenominatorError(
            "dilatation denominator degenerate; A was chosen too small")
    omega = 1j * eps / denom
    jacobian = np.abs(h_prime) ** 2 - np.abs(g_prime) ** 2

    r = _ret
    return EvalRecord(
        z=r(1.0 - w, one_minus_z), S=r(S, one_minus_z),
        h=r(h, one_minus_z), g=r(g, one_minus_z), f=r(f, one_minus_z),
        h_prime=r(h_prime, one_minus_z), g_prime=r(g_prime, one_minus_z),
        omega=r(omega, one_minus_z), jacobian=r(jacobian, one_minus_z),
    )


def hg_eval(z, params: ConstructionParams) -> EvalRecord:
    """h, g, f = h + conj(g), dilatation and Jacobian at disk points z."""
    zz = _carray(z)
    _check(np.abs(zz) < 1.0, "hg_eval requires |z| < 1", zz)
    rec = hg_eval_c(1.0 - zz, params)
    if np.ndim(z) == 0:
        return rec
    # Report the caller's z rather than the 1 - (1 - z) round trip.
    return EvalRecord(z=_ret(zz, z), S=rec.S, h=rec.h, g=rec.g, f=rec.f,
                      h_prime=rec.h_prime, g_prime=rec.g_prime,
                      omega=rec.omega, jacobian=rec.jacobian)


def hg_derivatives(z, params: ConstructionParams):
    """Closed-form derivatives (h', g'); h' - g' = Psi'(S(z)) / (1 - z)."""
    rec = hg_eval(z, params)
    return rec.h_prime, rec.g_prime


def omega_eval(z, params: ConstructionParams):
    """Dilatation omega = i eps / (S Log S Psi'(S) + i eps) and Jacobian.

    omega also equals g'/h'; the Jacobian is |h'|^2 - |g'|^2, which stays
    at or above (1 - k^2)|h'|^2 once A passed certification.
    """
    rec = hg_eval(z, params)
    return rec.omega, rec.jacobian
