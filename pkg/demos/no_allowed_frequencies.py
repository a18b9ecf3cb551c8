"""Why "allowed oscillator frequencies" are not quantization.

For the Coulomb-plus-oscillator model the series truncation at order n = 1
closes only when omega = 2/3 (with k = m = hbar = alpha = 1, l = 0). It is
tempting to read that as "the oscillator may only vibrate at omega = 2/3".
The sweep below computes the true ground band at a hundred frequencies
around that value: the spectrum exists and moves smoothly at every omega.
The special frequency only marks where one eigenvalue happens to have a
closed polynomial eigenfunction; each omega is a different Hamiltonian with
a complete spectrum of its own.
"""

import numpy as np

from condspec import (CoulombHO, PhysicalModel, claimed_allowed_frequency,
                      claimed_energy, continuity_demo)

pm = PhysicalModel(kind=CoulombHO, k=1.0, m=1.0, alpha=1.0, hbar=1.0, l=0)

allowed = claimed_allowed_frequency(pm, n=1)
omega_star = allowed.omegas[0]
pm_star = PhysicalModel(kind=CoulombHO, k=1.0, omega=omega_star)
print(f"truncation closes at omega = {omega_star:.9f}; "
      f"claimed energy = {claimed_energy(pm_star, 1):.9f}")

omegas, table = continuity_demo(pm, np.linspace(0.1, 2.0, 100), nu_max=0)
delta0 = table[0]
jumps = np.abs(np.diff(delta0))
print(f"\nground band delta_0(omega) over [0.1, 2]: "
      f"min={delta0.min():.6f} max={delta0.max():.6f}")
print(f"largest adjacent jump: {jumps.max():.3e} "
      f"(grid spacing {omegas[1]-omegas[0]:.3e})")
print("defined at every omega; no gap, no forbidden band")
