"""Conditionally solvable radial spectra.

The radial eigenvalue problem

    u'' + u'/x - (gamma^2/x^2) u - (a/x) u - b x u - x^2 u + W u = 0

admits exact polynomial eigenstates only on isolated parameter roots (series
truncation), while its full spectrum is a family of continuous eigenvalue
curves (variational calculation). This package computes both, checks them
against each other and against a finite-difference oracle, and maps three
physical oscillator models onto the dimensionless problem to show that
"allowed frequencies" derived from truncation are solvability conditions,
not quantization rules.
"""

from .core import (ModelParams, RadialWavefunction, effective_potential,
                   moment_integral, norm_squared, wavefunction_value)
from .oracle import OracleGrid, oracle_eigenvalues, richardson_refine
from .physical import (AllowedFrequencies, CoulombHO, CoulombLinearHO,
                       LinearHO, PhysicalModel, claimed_allowed_frequency,
                       claimed_energy, continuity_demo, to_dimensionless)
from .truncation import (FreeParam, Polynomial, TruncationSolution,
                         find_real_roots, parity_structure, recur_A, recur_B,
                         series_coefficients, truncation_energy,
                         truncation_polynomial, truncation_solutions)
from .variational import (BasisSpec, SpectralCurve, VariationalResult,
                          expectation_inv_x, expectation_x,
                          hamiltonian_matrix, hft_residuals, overlap_matrix,
                          scan_curve, solve_generalized, solve_model)

__version__ = "0.1.0"

__all__ = [
    "AllowedFrequencies", "BasisSpec", "CoulombHO", "CoulombLinearHO",
    "FreeParam", "LinearHO", "ModelParams", "OracleGrid", "PhysicalModel",
    "Polynomial", "RadialWavefunction", "SpectralCurve", "TruncationSolution",
    "VariationalResult", "claimed_allowed_frequency", "claimed_energy",
    "continuity_demo", "effective_potential", "expectation_inv_x",
    "expectation_x", "find_real_roots", "hamiltonian_matrix", "hft_residuals",
    "moment_integral", "norm_squared", "oracle_eigenvalues", "overlap_matrix",
    "parity_structure", "recur_A", "recur_B", "richardson_refine",
    "scan_curve", "series_coefficients", "solve_generalized", "solve_model",
    "to_dimensionless", "truncation_energy", "truncation_polynomial",
    "truncation_solutions", "wavefunction_value",
]
