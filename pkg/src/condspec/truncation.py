"""Series truncation: the exact polynomial eigenstates of the radial model.

Substituting u(x) = x^s exp(-b x/2 - x^2/2) P(x) into the radial equation
turns it into the three-term recurrence

    c_{j+2} = A_j c_{j+1} + B_j c_j,      c_{-1} = 0, c_0 = 1,
    A_j = [2a + b(2j + 2s + 3)] / [2(j + 2)(j + 2(s + 1))],
    B_j = [4(2j + 2s - W + 2) - b^2] / [4(j + 2)(j + 2(s + 1))].

The series terminates at degree n exactly when

    W = 2(n + s + 1) - b^2/4   and   c_{n+1} = 0,

and the second condition, read as a polynomial equation in whichever of a, b
is left free, pins that parameter to one of n+1 isolated real roots. Each
root yields an exact polynomial eigenstate; the machinery below builds the
polynomial, extracts and orders its real roots, and packages the solutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .core import ModelParams

__all__ = [
    "FreeParam",
    "Polynomial",
    "TruncationSolution",
    "find_real_roots",
    "parity_structure",
    "recur_A",
    "recur_B",
    "series_coefficients",
    "truncation_energy",
    "truncation_polynomial",
    "truncation_solutions",
]

# coefficient magnitude treated as unrepresentable during series evaluation
_OVERFLOW = 1e300


@dataclass(frozen=True)
class Polynomial:
    """Univariate real polynomial, ascending coefficients, trailing zeros trimmed."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        c = npoly.polytrim(c, tol=0.0)
        object.__setattr__(self, "coeffs", tuple(float(v) for v in c))

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0.0:
            return -1  # zero polynomial
        return len(self.coeffs) - 1

    def __call__(self, x):
        return npoly.polyval(x, self.coeffs)


class FreeParam:
    """Which coupling the truncation condition is solved for."""

    A = "a"
    B = "b"


@dataclass(frozen=True)
class TruncationSolution:
    """One exact polynomial eigenstate at a single truncation root.

    i ranks the roots in strictly descending order, starting at 1.
    """

    n: int
    s: float
    free_param: str
    root: float
    index: int
    W: float
    poly_coeffs: tuple[float, ...]
    fixed_value: float = 0.0

    def __post_init__(self):
        if self.free_param not in (FreeParam.A, FreeParam.B):
            raise ValueError("free_param must be 'a' or 'b'")

    @property
    def params(self) -> ModelParams:
        a, b = ((self.root, self.fixed_value) if self.free_param == FreeParam.A
                else (self.fixed_value, self.root))
        return ModelParams(gamma=self.s, a=a, b=b)


def recur_A(j: int, s: float, a: float, b: float) -> float:
    """Recurrence weight multiplying c_{j+1}; defined for j >= -1."""
    if j < -1:
        raise ValueError("j must be >= -1")
    return (2.0 * a + b * (2 * j + 2 * s + 3)) / (2.0 * (j + 2) * (j + 2 * (s + 1)))


def recur_B(j: int, s: float, b: float, W: float) -> float:
    """Recurrence weight multiplying c_j; defined for j >= 0."""
    if j < 0:
        raise ValueError("j must be >= 0")
    return (4.0 * (2 * j + 2 * s - W + 2) - b * b) / (4.0 * (j + 2) * (j + 2 * (s + 1)))


def series_coefficients(p: ModelParams, W: float, jmax: int) -> np.ndarray:
    """Run the recurrence and return c_0..c_jmax for the given couplings."""
    if jmax < 0:
        raise ValueError("jmax must be >= 0")
    c = np.zeros(jmax + 1)
    c[0] = 1.0
    prev, cur = 0.0, 1.0  # c_{j}, c_{j+1} rolling pair
    for j in range(-1, jmax - 1):
        A = recur_A(j, p.s, p.a, p.b)
        B = recur_B(j, p.s, p.b, W) if j >= 0 else 0.0
        nxt = A * cur + B * prev
        if not math.isfinite(nxt) or abs(nxt) > _OVERFLOW:
            raise OverflowError(f"series coefficient c_{j+2} overflowed")
        c[j + 2] = nxt
        prev, cur = cur, nxt
    return c


def truncation_energy(n: int, s: float, b: float) -> float:
    """Eigenvalue forced by termination at degree n: 2(n+s+1) - b^2/4."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if s < 0:
        raise ValueError("s must be >= 0")
    return 2.0 * (n + s + 1) - b * b / 4.0


def truncation_polynomial(n: int, s: float, free: str, fixed_value: float = 0.0) -> Polynomial:
    """c_{n+1} as a degree-(n+1) polynomial in the free coupling.

    The recurrence is run with polynomial-valued coefficients at the
    terminating W. With free == 'a' the fixed value is b, and vice versa.
    W depends on b, so in the free-b case W itself is polynomial in the free
    parameter; conveniently the combination entering B_j at the terminating W,
    4(2j + 2s - W + 2) - b^2 = 8(j - n), does not involve b at all, which is
    what keeps c_{n+1} a polynomial of degree exactly n+1 either way.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if free not in (FreeParam.A, FreeParam.B):
        raise ValueError("free must be 'a' or 'b'")
    cj = np.zeros(1)   # c_{-1}
    cj1 = np.ones(1)   # c_0
    for j in range(-1, n):
        den = 2.0 * (j + 2) * (j + 2 * (s + 1))
        if free == FreeParam.A:
            # A_j = [b(2j+2s+3) + 2a] / den, linear in a
            A = np.array([fixed_value * (2 * j + 2 * s + 3) / den, 2.0 / den])
        else:
            # A_j = [2a + (2j+2s+3) b] / den, linear in b
            A = np.array([2.0 * fixed_value / den, (2 * j + 2 * s + 3) / den])
        B = 2.0 * (j - n) / ((j + 2) * (j + 2 * (s + 1)))
        cj, cj1 = cj1, npoly.polyadd(npoly.polymul(A, cj1), B * cj)
        # rescale the pair together; roots are unchanged and growth stays tame
        m = np.abs(cj1).max()
        if m > 1e50:
            cj = cj / m
            cj1 = cj1 / m
    return Polynomial(tuple(cj1))


def find_real_roots(q: Polynomial, tol: float = 1e-9, expect_degree: bool = False) -> list[float]:
    """All real roots of q, strictly descending.

    Roots come from the balanced companion matrix. A candidate is accepted
    when |Im| <= tol*(1 + |Re|); near-coincident accepted roots are merged
    within the same tolerance. With expect_degree=True a mismatch between the
    accepted count and the degree raises, since the truncation polynomials
    are guaranteed all-real and a shortfall signals a numerical defect.
    """
    if q.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    roots = npoly.polyroots(np.asarray(q.coeffs))
    real = [float(r.real) for r in roots if abs(r.imag) <= tol * (1.0 + abs(r.real))]
    real.sort(reverse=True)
    merged: list[float] = []
    for r in real:
        if merged and abs(merged[-1] - r) <= tol * (1.0 + abs(r)):
            continue
        merged.append(r)
    if expect_degree and len(merged) != q.degree:
        raise ArithmeticError(
            f"expected {q.degree} real roots, accepted {len(merged)}")
    return merged


def truncation_solutions(n: int, s: float, free: str, fixed_value: float = 0.0,
                         tol: float = 1e-9) -> list[TruncationSolution]:
    """All exact polynomial eigenstates of order n with one coupling free.

    With free = 'a' every solution shares W = 2(n+s+1) - fixed_b^2/4; with
    free = 'b' each root carries its own W = 2(n+s+1) - root^2/4.
    """
    q = truncation_polynomial(n, s, free, fixed_value)
    roots = find_real_roots(q, tol=tol, expect_degree=True)
    out = []
    for i, root in enumerate(roots, start=1):
        if free == FreeParam.A:
            a, b = root, fixed_value
        else:
            a, b = fixed_value, root
        W = truncation_energy(n, s, b)
        coeffs = series_coefficients(ModelParams(gamma=s, a=a, b=b), W, n)
        sol = TruncationSolution(n=n, s=s, free_param=free, root=root,
                                 index=i, W=W, poly_coeffs=tuple(coeffs),
                                 fixed_value=fixed_value)
        out.append(sol)
    return out


def parity_structure(n: int, s: float, q: Polynomial,
                     tol: float = 1e-10) -> tuple[int, Polynomial]:
    """Factor q(x) = x^{j_n} Q(x^2) for the symmetric (other coupling 0) case.

    j_n is 1 for n even and 0 for n odd. Raises when coefficients of the
    wrong parity exceed tol relative to the largest one, which would mean the
    recurrence lost the sign symmetry.
    """
    c = np.asarray(q.coeffs)
    scale = np.abs(c).max()
    j_n = 1 if n % 2 == 0 else 0
    # surviving parity: degrees congruent to j_n mod 2
    bad = c[(np.arange(len(c)) - j_n) % 2 == 1]
    if np.any(np.abs(bad) > tol * scale):
        raise ArithmeticError("parity violation in truncation polynomial")
    even_part = c[j_n::2]
    return j_n, Polynomial(tuple(even_part))
