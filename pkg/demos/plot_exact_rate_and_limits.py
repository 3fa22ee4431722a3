"""
Exact rate and its two limits
=============================

A 0.4 um sphere held in a 10 um superposition in a dilute air-like gas.
Sweep the temperature and watch the exact rate move from the
long-wavelength curve onto the short-wavelength plateau.
"""

import numpy as np

from airdecoherence import GasEnvironment, Scatterer, SuperpositionGeometry
from airdecoherence.rates import breakdown

sphere = Scatterer(4e-7)
width = SuperpositionGeometry(1e-5)

# The Dawson argument y grows with sqrt(T); y << 1 is the long-wavelength side.
print(f"{'T (K)':>10} {'y':>10} {'regime':>10} {'exact':>11} {'LWL':>11} {'SWL':>11} {'tanh':>11}")
for t in np.logspace(-18, -4, 8):
    b = breakdown(width, GasEnvironment.air(t, 1e8), sphere)
    print(f"{t:10.1e} {b.dawson_argument:10.3g} {b.regime.value:>10} "
          f"{b.gamma_exact:11.4e} {b.gamma_lwl:11.4e} {b.gamma_swl:11.4e} {b.gamma_int_tanh:11.4e}")

# The modified long-wavelength limit sits a fixed factor 8 pi / 3 above SWL.
b = breakdown(width, GasEnvironment.air(1.0, 1e8), sphere)
print(f"\nM-LWL / SWL = {b.gamma_mlwl / b.gamma_swl:.6f}  (8 pi / 3 = {8 * np.pi / 3:.6f})")

# At fixed temperature, widening the superposition saturates the rate.
env = GasEnvironment.air(1e-3, 1e8)
print(f"\n{'dx (m)':>10} {'exact / SWL':>12}")
for dx in np.logspace(-14, -5, 10):
    b = breakdown(SuperpositionGeometry(dx), env, sphere)
    print(f"{dx:10.1e} {b.gamma_exact / b.gamma_swl:12.4e}")
