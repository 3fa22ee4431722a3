"""
Gas densities for a target coherence time
=========================================

The rate is linear in the gas density, so a target rate fixes the density
by one division. This reproduces the design table for a 400 nm sphere.
"""

from airdecoherence.design import generate_table, solve_number_density
from airdecoherence import GasEnvironment, Scatterer, SuperpositionGeometry

rows = generate_table()
print(f"{'Gamma (Hz)':>10} {'T (K)':>8} {'dx (m)':>8} {'n_v (m^-3)':>12} {'P (Pa)':>11}")
for r in rows:
    print(f"{r.gamma_target:10.2f} {r.temperature:8.0e} {r.delta_x:8.0e} {r.number_density:12.3e} {r.pressure:11.3e}")

# Once the superposition is wider than the gas wavelength the density stops
# depending on dx; at 1 K the 10 nm and 10 um rows already agree.
env = GasEnvironment.air(1.0, 1.0)
a = solve_number_density(0.05, SuperpositionGeometry(1e-8), env, Scatterer(4e-7))
b = solve_number_density(0.05, SuperpositionGeometry(1e-5), env, Scatterer(4e-7))
print(f"\n1 K, 0.05 Hz: 10 nm -> {a:.4e}, 10 um -> {b:.4e}, ratio {a / b:.5f}")
