"""A truncation root is one point of a continuous eigenvalue curve.

Order n = 1 with b = 0 closes the series only at a = +sqrt(2) and
a = -sqrt(2), both with W = 4. Sweeping a through either root shows nothing
special happens to the spectrum there: the bands W_nu(a) pass smoothly
through, and the exact value 4 is simply the curve sample at the root.
The rank-i root (descending order) lies on band nu = i - 1: the positive
root is the ground band, the negative one the first excited band.
"""

import numpy as np

from condspec import (FreeParam, ModelParams, scan_curve,
                      truncation_solutions)

sols = truncation_solutions(1, 0.0, FreeParam.A, fixed_value=0.0)
for sol in sols:
    print(f"root i={sol.index}: a={sol.root:+.6f}  W={sol.W}")

template = ModelParams(gamma=0.0, a=0.0, b=0.0)
root = sols[0].root
grid = np.linspace(root - 0.5, root + 0.5, 10)
grid = np.sort(np.append(grid, root))
curve = scan_curve(template, "a", grid, nu_max=1)

print("\nband nu=0 around the positive root:")
for x, W0 in zip(curve.grid, curve.bands[0]):
    marker = "  <-- truncation point" if abs(x - root) < 1e-12 else ""
    print(f"  a={x:+.6f}  W_0={W0:.8f}{marker}")

print("\nnothing diverges, nothing is forbidden; the root just sits on the curve")
