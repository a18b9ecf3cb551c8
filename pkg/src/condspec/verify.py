"""Self-check suites: each one validates an identity the model guarantees.

Every suite returns a CheckReport with per-case residuals so callers (CLI,
tests) can render them or gate on the worst case. Suites never weaken their
thresholds: a red report is information, not an error to be patched over.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import ModelParams
from .oracle import OracleGrid, richardson_refine
from .truncation import (FreeParam, parity_structure, truncation_energy,
                         truncation_polynomial, truncation_solutions)
from .variational import (DEFAULT_BASIS_SIZE, DEFAULT_CUTOFF, BasisSpec,
                          expectation_inv_x, expectation_x, hamiltonian_matrix,
                          hft_residuals, overlap_matrix, solve_generalized)

__all__ = [
    "CheckReport",
    "check_hft",
    "check_oracle",
    "check_parity",
    "check_point_on_curve",
    "check_rootcount",
]


@dataclass
class CheckReport:
    """Outcome of one suite: named scalar residuals plus a verdict."""

    name: str
    passed: bool
    worst: float
    threshold: float
    cases: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "worst": self.worst,
                "threshold": self.threshold, "cases": self.cases}


def check_hft(s: float = 0.0, a: float = 0.0, b: float = 0.0, nu: int = 0,
              basis_size: int = 20, threshold: float = 1e-3) -> CheckReport:
    """First-order parameter derivatives of W match <1/x> and <x>."""
    p = ModelParams(gamma=s, a=a, b=b)
    res_a, res_b = hft_residuals(p, nu, basis_size=basis_size)
    basis = BasisSpec(s=p.s, size=basis_size)
    r = solve_generalized(hamiltonian_matrix(basis, p), overlap_matrix(basis))
    inv_x = expectation_inv_x(r, basis, nu)
    mean_x = expectation_x(r, basis, nu)
    rel_a = res_a / abs(inv_x)
    rel_b = res_b / abs(mean_x)
    worst = max(rel_a, rel_b)
    cases = [{"s": s, "a": a, "b": b, "nu": nu,
              "dW_da": inv_x, "dW_db": mean_x,
              "res_a_rel": rel_a, "res_b_rel": rel_b,
              "positive": inv_x > 0 and mean_x > 0}]
    passed = worst <= threshold and inv_x > 0 and mean_x > 0
    return CheckReport("hft", passed, worst, threshold, cases)


def check_point_on_curve(nmax: int = 10, s: float = 0.0,
                         basis_size: int = DEFAULT_BASIS_SIZE,
                         cutoff: float = DEFAULT_CUTOFF,
                         threshold: float = 1e-4) -> CheckReport:
    """Each truncation root of rank i sits on variational band i-1.

    For every order n <= nmax with b = 0, the variational eigenvalue of band
    i-1 evaluated exactly at root i must reproduce the shared truncation
    eigenvalue to the relative threshold.
    """
    basis = BasisSpec(s=s, size=basis_size)
    S = overlap_matrix(basis)
    cases = []
    worst = 0.0
    for n in range(nmax + 1):
        W = truncation_energy(n, s, 0.0)
        for sol in truncation_solutions(n, s, FreeParam.A, fixed_value=0.0):
            p = ModelParams(gamma=s, a=sol.root, b=0.0)
            r = solve_generalized(hamiltonian_matrix(basis, p), S, cutoff=cutoff)
            got = float(r.eigenvalues[sol.index - 1])
            rel = abs(got - W) / W
            worst = max(worst, rel)
            cases.append({"n": n, "i": sol.index, "root": sol.root,
                          "W": W, "W_variational": got, "rel": rel})
    return CheckReport("point-on-curve", worst <= threshold, worst, threshold, cases)


def check_oracle(threshold: float = 1e-2, grid: OracleGrid = OracleGrid()) -> CheckReport:
    """Variational and finite-difference answers agree on reference cases."""
    targets = [
        (ModelParams(gamma=0.0, a=0.0, b=0.0), [2.0, 6.0]),
        (ModelParams(gamma=0.0, a=2.0**0.5, b=0.0), [4.0]),
        (ModelParams(gamma=0.0, a=0.0, b=(8.0 / 3.0) ** 0.5), [10.0 / 3.0]),
    ]
    cases = []
    worst = 0.0
    for p, known in targets:
        vals = richardson_refine(p, grid, count=len(known))
        for nu, target in enumerate(known):
            err = abs(float(vals[nu]) - target)
            worst = max(worst, err)
            cases.append({"a": p.a, "b": p.b, "nu": nu,
                          "oracle": float(vals[nu]), "target": target, "abs": err})
    return CheckReport("oracle", worst <= threshold, worst, threshold, cases)


def check_parity(nmax: int = 15, s: float = 0.0,
                 threshold: float = 1e-9) -> CheckReport:
    """Sign symmetry of the symmetric-case truncation roots.

    With the other coupling at zero the polynomial has parity x^{j_n} Q(x^2),
    j_n = 1 for n even; root sets must be symmetric under sign flip and a
    zero root must appear exactly when n is even.
    """
    cases = []
    worst = 0.0
    ok = True
    for free in (FreeParam.A, FreeParam.B):
        for n in range(nmax + 1):
            q = truncation_polynomial(n, s, free, fixed_value=0.0)
            j_n, _ = parity_structure(n, s, q)
            sols = truncation_solutions(n, s, free, fixed_value=0.0)
            roots = np.array([sol.root for sol in sols])
            sym = float(np.abs(roots + roots[::-1]).max())
            has_zero = bool(np.any(np.abs(roots) <= 1e-9))
            zero_ok = has_zero == (n % 2 == 0) == (j_n == 1)
            worst = max(worst, sym)
            ok = ok and zero_ok
            cases.append({"free": free, "n": n, "j_n": j_n, "symmetry": sym,
                          "zero_root_correct": zero_ok})
    return CheckReport("parity", ok and worst <= threshold, worst, threshold, cases)


def check_rootcount(nmax: int = 15, s_values=(0.0, 0.5, 1.0, 33.0**0.5),
                    threshold: float = 1e-9) -> CheckReport:
    """Exactly n+1 real roots for every truncation polynomial tried."""
    fixed_specs = [(FreeParam.A, 0.0), (FreeParam.B, 0.0), (FreeParam.A, 1.0)]
    cases = []
    ok = True
    for s in s_values:
        for free, fixed in fixed_specs:
            for n in range(nmax + 1):
                try:
                    sols = truncation_solutions(n, s, free, fixed_value=fixed,
                                                tol=threshold)
                    count = len(sols)
                except ArithmeticError:
                    count = -1
                good = count == n + 1
                ok = ok and good
                cases.append({"s": s, "free": free, "fixed": fixed, "n": n,
                              "count": count, "expected": n + 1})
    return CheckReport("rootcount", ok, 0.0 if ok else 1.0, 0.5, cases)
