"""Harmonic limit sanity walk.

With a = b = 0 the radial model is a plain two-dimensional-style oscillator
in disguise: the exact spectrum is W = 2(2 nu + s + 1). Two independent
routes must land on it. The variational solver reproduces it to machine
precision because the exact eigenfunctions are inside the basis span, and
the truncation machinery recovers the same ladder through its even orders,
whose polynomial condition admits the root a = 0.
"""

import numpy as np

from condspec import (FreeParam, ModelParams, solve_model,
                      truncation_solutions)

s = 0.0
params = ModelParams(gamma=s, a=0.0, b=0.0)

result = solve_model(params, basis_size=20)
exact = [2.0 * (2 * nu + s + 1) for nu in range(4)]
print("variational vs exact:")
for nu, target in enumerate(exact):
    W = result.eigenvalues[nu]
    print(f"  nu={nu}:  W={W:.12f}  exact={target:.1f}  err={abs(W-target):.2e}")

print("\ntruncation orders with a root at a=0 (even n):")
for n in range(0, 7):
    sols = truncation_solutions(n, s, FreeParam.A, fixed_value=0.0)
    zero = [sol for sol in sols if abs(sol.root) < 1e-9]
    if zero:
        print(f"  n={n}: W={zero[0].W:.1f}  (oscillator level nu={n//2})")
    else:
        print(f"  n={n}: no a=0 root (odd order)")
