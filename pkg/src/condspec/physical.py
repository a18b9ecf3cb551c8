"""Physical potentials that reduce to the dimensionless radial model.

Three families on a background parametrized by alpha in (0, 1]:

    CoulombHO:        V = k/r + m omega^2 r^2 / 2
    LinearHO:         V = eta r + m omega^2 r^2 / 2
    CoulombLinearHO:  V = k/r + eta r + m omega^2 r^2 / 2

After separation the radial problem maps onto the dimensionless model with

    s = |iota|,  iota^2 = (4 l (l+1) + alpha^2) / alpha^2,
    a = 2 k sqrt(m/omega) / (alpha hbar)^{3/2},
    b = 2 eta / sqrt(alpha hbar m omega^3),
    E = (alpha hbar omega / 2) W.

Series truncation at order n then holds only on isolated parameter roots.
Reading those roots as "allowed oscillator frequencies" mistakes a solvable-
parameter condition for a quantization rule; the sweep utilities here show
the spectrum is defined and continuous at every omega.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq

from .core import ModelParams
from .truncation import (FreeParam, series_coefficients, truncation_energy,
                         truncation_solutions)
from .variational import DEFAULT_BASIS_SIZE, DEFAULT_CUTOFF, scan_curve

__all__ = [
    "AllowedFrequencies",
    "CoulombHO",
    "CoulombLinearHO",
    "LinearHO",
    "PhysicalModel",
    "claimed_allowed_frequency",
    "claimed_energy",
    "continuity_demo",
    "to_dimensionless",
]

CoulombHO = "CoulombHO"
LinearHO = "LinearHO"
CoulombLinearHO = "CoulombLinearHO"
_KINDS = (CoulombHO, LinearHO, CoulombLinearHO)


@dataclass(frozen=True)
class PhysicalModel:
    """One concrete physical Hamiltonian (all couplings in SI-free units)."""

    kind: str
    m: float = 1.0
    omega: float = 1.0
    k: float = 0.0
    eta: float = 0.0
    alpha: float = 1.0
    hbar: float = 1.0
    l: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        for name in ("m", "omega", "hbar"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must lie in (0, 1]")
        if self.l < 0:
            raise ValueError("l must be >= 0")

    @property
    def iota(self) -> float:
        return math.sqrt((4.0 * self.l * (self.l + 1) + self.alpha**2)) / self.alpha

    @property
    def s(self) -> float:
        return abs(self.iota)


def _couplings(pm: PhysicalModel) -> tuple[float, float]:
    k = pm.k if pm.kind in (CoulombHO, CoulombLinearHO) else 0.0
    eta = pm.eta if pm.kind in (LinearHO, CoulombLinearHO) else 0.0
    a = 2.0 * k * math.sqrt(pm.m / pm.omega) / (pm.alpha * pm.hbar) ** 1.5
    b = 2.0 * eta / math.sqrt(pm.alpha * pm.hbar * pm.m * pm.omega**3)
    return a, b


def to_dimensionless(pm: PhysicalModel) -> tuple[ModelParams, float]:
    """Map to ModelParams plus the energy scale: E = scale * W."""
    a, b = _couplings(pm)
    scale = pm.alpha * pm.hbar * pm.omega / 2.0
    return ModelParams(gamma=pm.iota, a=a, b=b), scale


def claimed_energy(pm: PhysicalModel, n: int) -> float:
    """Energy the truncation condition attaches to order n at pm's couplings.

    CoulombHO: alpha hbar omega (1 + n + |iota|); the linear families
    subtract eta^2/(2 m omega^2). Identical to the dimensionless truncation
    eigenvalue rescaled by alpha hbar omega / 2.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    base = pm.alpha * pm.hbar * pm.omega * (1.0 + n + abs(pm.iota))
    if pm.kind == CoulombHO:
        return base
    return base - pm.eta**2 / (2.0 * pm.m * pm.omega**2)


@dataclass(frozen=True)
class AllowedFrequencies:
    """Result of inverting the truncation condition for omega.

    unconstrained=True marks the degenerate root (zero coupling) for which
    every omega satisfies the condition, so no frequency restriction exists.
    """

    omegas: tuple[float, ...]
    unconstrained: bool = False


def _omega_from_root_coulomb(pm: PhysicalModel, root: float) -> float | None:
    # a(omega) = 2 k sqrt(m/omega) / (alpha hbar)^1.5 has the sign of k
    if root == 0.0:
        return None
    if math.copysign(1.0, root) != math.copysign(1.0, pm.k):
        return None
    return 4.0 * pm.k**2 * pm.m / ((pm.alpha * pm.hbar) ** 3 * root**2)


def _omega_from_root_linear(pm: PhysicalModel, root: float) -> float | None:
    # b(omega) has the sign of eta
    if root == 0.0:
        return None
    if math.copysign(1.0, root) != math.copysign(1.0, pm.eta):
        return None
    omega_cubed = 4.0 * pm.eta**2 / (pm.alpha * pm.hbar * pm.m * root**2)
    return omega_cubed ** (1.0 / 3.0)


def _allowed_combined(pm: PhysicalModel, n: int) -> AllowedFrequencies:
    # both couplings move with omega; scan the truncation closure for sign
    # changes over a wide log bracket and refine each
    if pm.k == 0.0 and pm.eta == 0.0:
        return _allowed_single(replace(pm, kind=CoulombHO), n)

    def closure(omega: float) -> float:
        pmo = replace(pm, omega=omega)
        mp, _ = to_dimensionless(pmo)
        W = truncation_energy(n, mp.s, mp.b)
        c = series_coefficients(mp, W, n + 1)
        scale = np.abs(c[:n + 1]).max()
        return float(c[n + 1] / scale)

    grid = np.logspace(-3, 3, 1200)
    vals = np.array([closure(w) for w in grid])
    omegas = []
    for i in range(len(grid) - 1):
        if vals[i] == 0.0:
            omegas.append(float(grid[i]))
        elif vals[i] * vals[i + 1] < 0.0:
            omegas.append(float(brentq(closure, grid[i], grid[i + 1],
                                       xtol=1e-14, rtol=1e-14)))
    if vals[-1] == 0.0:
        omegas.append(float(grid[-1]))
    if not omegas:
        raise ArithmeticError("no positive omega satisfies the truncation condition")
    return AllowedFrequencies(omegas=tuple(sorted(omegas)))


def _allowed_single(pm: PhysicalModel, n: int) -> AllowedFrequencies:
    free = FreeParam.A if pm.kind == CoulombHO else FreeParam.B
    coupling = pm.k if pm.kind == CoulombHO else pm.eta
    sols = truncation_solutions(n, pm.s, free, fixed_value=0.0)
    if coupling == 0.0:
        # only the zero root survives, and it holds at every omega
        if any(abs(s.root) < 1e-9 for s in sols):
            return AllowedFrequencies(omegas=(), unconstrained=True)
        raise ArithmeticError("no positive omega satisfies the truncation condition")
    invert = (_omega_from_root_coulomb if pm.kind == CoulombHO
              else _omega_from_root_linear)
    omegas = []
    for sol in sols:
        omega = invert(pm, sol.root)
        if omega is not None and omega > 0.0:
            omegas.append(omega)
    if not omegas:
        raise ArithmeticError("no positive omega satisfies the truncation condition")
    return AllowedFrequencies(omegas=tuple(sorted(omegas)))


def claimed_allowed_frequency(pm: PhysicalModel, n: int) -> AllowedFrequencies:
    """Every omega > 0 at which the order-n truncation closes for pm.

    These are the values advertised as quantized frequencies; each belongs
    to a different Hamiltonian, which is the point the sweep in
    continuity_demo makes against the quantization reading. pm.omega is
    ignored, the couplings k, eta, alpha, l, m, hbar define the family.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if pm.kind == CoulombLinearHO:
        return _allowed_combined(pm, n)
    return _allowed_single(pm, n)


def continuity_demo(pm: PhysicalModel, omega_grid, nu_max: int = 2,
                    basis_size: int = DEFAULT_BASIS_SIZE,
                    cutoff: float = DEFAULT_CUTOFF):
    """Dimensionless spectrum delta_nu = W_nu across an omega sweep.

    Returns (omegas, table) with table[nu][k] the band value at omega_k.
    Every grid point yields a defined spectrum; adjacent values move by
    O(delta omega), demonstrating no omega is forbidden.
    """
    omegas = np.asarray(omega_grid, dtype=float)
    if omegas.ndim != 1 or omegas.size < 2:
        raise ValueError("omega grid must be 1-d with at least 2 points")
    if np.any(omegas <= 0):
        raise ValueError("omega must be positive")
    table = np.full((nu_max + 1, omegas.size), np.nan)
    for j, omega in enumerate(omegas):
        mp, _ = to_dimensionless(replace(pm, omega=float(omega)))
        # one-point scan reuses the solver plumbing and error handling
        curve = scan_curve(mp, "a", np.array([mp.a]), nu_max,
                           basis_size=basis_size, cutoff=cutoff)
        if curve.errors:
            raise ArithmeticError(f"solver failed at omega={omega}: {curve.errors[0][1]}")
        table[:, j] = curve.bands[:, 0]
    return omegas, table
