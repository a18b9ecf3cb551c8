"""Dimensionless radial model, ansatz wavefunctions, and Gaussian moments.

The eigenvalue problem treated throughout this package is the radial equation

    u'' + u'/x - (gamma^2/x^2) u - (a/x) u - b x u - x^2 u + W u = 0,  x > 0,

with square-integrable solutions under the measure x dx. Bound states behave
as x^s near the origin with s = |gamma|, and all matrix elements reduce to
moments of exp(-x^2) on the half line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate
from scipy.special import gammaln

__all__ = [
    "ModelParams",
    "RadialWavefunction",
    "effective_potential",
    "moment_integral",
    "norm_squared",
    "wavefunction_value",
]


@dataclass(frozen=True)
class ModelParams:
    """Couplings of the dimensionless radial problem.

    s is derived, never passed: s = |gamma| is the indicial exponent of the
    regular solution at the origin.
    """

    gamma: float = 0.0
    a: float = 0.0
    b: float = 0.0
    s: float = field(init=False)

    def __post_init__(self):
        for name in ("gamma", "a", "b"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        object.__setattr__(self, "s", abs(self.gamma))

    @classmethod
    def from_s(cls, s: float, a: float = 0.0, b: float = 0.0) -> "ModelParams":
        """Build from the indicial exponent directly (gamma = s >= 0)."""
        if s < 0:
            raise ValueError("s must be nonnegative")
        return cls(gamma=s, a=a, b=b)


@dataclass(frozen=True)
class RadialWavefunction:
    """Ansatz state u(x) = x^s exp(-b x/2 - x^2/2) P(x), P given by coeffs."""

    s: float
    b: float
    coeffs: tuple[float, ...]

    def __post_init__(self):
        if self.s < 0:
            raise ValueError("s must be nonnegative")
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs or coeffs[0] != 1.0:
            raise ValueError("coeffs[0] must be 1 (series normalization)")
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)


def effective_potential(p: ModelParams, x: float) -> float:
    """Potential gamma^2/x^2 + a/x + b x + x^2 at a point x > 0."""
    if x <= 0:
        raise ValueError("x must be positive")
    return p.gamma**2 / x**2 + p.a / x + p.b * x + x * x


def moment_integral(p) -> float:
    """Half-line Gaussian moment: integral of x^p exp(-x^2), p > -1.

    Equals Gamma((p+1)/2)/2; evaluated through gammaln so large p stays
    accurate and overflow surfaces as inf rather than an exception.
    """
    p = np.asarray(p, dtype=float)
    if np.any(p <= -1):
        raise ValueError("moment requires p > -1")
    out = 0.5 * np.exp(gammaln((p + 1.0) / 2.0))
    return out if out.ndim else float(out)


def wavefunction_value(w: RadialWavefunction, x: float) -> float:
    """Evaluate the ansatz; at x = 0 this is 0 for s > 0 and P(0) for s = 0."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0.0:
        return 0.0 if w.s > 0 else w.coeffs[0]
    poly = np.polynomial.polynomial.polyval(x, w.coeffs)
    return float(x**w.s * math.exp(-w.b * x / 2.0 - x * x / 2.0) * poly)


def _norm_closed_form(w: RadialWavefunction) -> float:
    # |u|^2 x dx expands into pure Gaussian moments when b = 0
    c = np.asarray(w.coeffs)
    n = len(c) - 1
    total = 0.0
    for i in range(n + 1):
        for j in range(n + 1):
            total += c[i] * c[j] * moment_integral(2 * w.s + i + j + 1)
    return total


def norm_squared(w: RadialWavefunction) -> float:
    """Weighted norm integral of u(x)^2 x dx over the half line.

    Closed form via Gaussian moments when b = 0; adaptive quadrature on a
    finite window otherwise, with the window grown until the integrand tail
    is below 1e-14 of its peak.
    """
    if w.b == 0.0:
        return float(_norm_closed_form(w))

    def integrand(x):
        return wavefunction_value(w, x) ** 2 * x

    # find a cut where the tail is negligible relative to the peak
    xs = np.linspace(0.0, 8.0, 2001)[1:]
    vals = np.array([integrand(x) for x in xs])
    peak = vals.max()
    x_cut = 8.0
    while integrand(x_cut) > 1e-14 * peak:
        x_cut *= 1.5
        if x_cut > 1e3:
            raise RuntimeError("integrand does not decay; invalid state")
    val, err = integrate.quad(integrand, 0.0, x_cut, epsabs=1e-12, epsrel=1e-12, limit=200)
    if err > 1e-9 * max(1.0, abs(val)):
        raise RuntimeError(f"norm quadrature did not converge (err={err:g})")
    return float(val)
