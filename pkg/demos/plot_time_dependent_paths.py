"""
Decoherence along a Stern-Gerlach path
======================================

A superposition that opens and closes as A sin(pi t / tau) spends part of
its time narrow, so it decoheres less than one held at width A throughout.
"""

import numpy as np

from airdecoherence import GasEnvironment, Scatterer
from airdecoherence.dynamics import compare_paths, density_matrix_at
from airdecoherence.rates import SuperpositionGeometry, dawson_argument

sphere = Scatterer(4e-7)
amplitude, tau = 1e-8, 1.0
envs = [GasEnvironment.air(t, 1e8) for t in (1.0, 1e-2, 1e-4)]

for comp, env in zip(compare_paths(amplitude, tau, envs, sphere), envs):
    y = dawson_argument(SuperpositionGeometry(amplitude), env)
    g_sine = comp.sine.accumulated_exponent[-1]
    g_const = comp.constant.accumulated_exponent[-1]
    print(f"T = {comp.temperature:7.0e} K  y(A) = {y:8.3f}  "
          f"Gamma_sine = {g_sine:.4e}  Gamma_const = {g_const:.4e}  ratio = {g_sine / g_const:.4f}")

# Fully in the long-wavelength regime the rate follows dx^2 and the ratio is
# the mean of sin^2, one half.
cold = GasEnvironment.air(1e-9, 1e8)
(comp,) = compare_paths(amplitude, tau, [cold], sphere)
print(f"\nT = 1e-9 K ratio = {comp.sine.accumulated_exponent[-1] / comp.constant.accumulated_exponent[-1]:.5f}")

# The spin-position density matrix at the end of the 1 K run.
(hot,) = compare_paths(amplitude, tau, [envs[0]], sphere)
print("\nfinal state, sine path at 1 K:")
print(np.array2string(density_matrix_at(hot.sine, -1).as_matrix(), precision=6))
