"""
Closed form against brute-force quadrature
==========================================

The Dawson closed form is checked by integrating the Maxwell-Boltzmann flux
over momentum directly, with the angular factor written out in full.
"""

import numpy as np

from airdecoherence import CODATA2018, GasEnvironment, Scatterer, SuperpositionGeometry
from airdecoherence.oracle import QuadratureSpec, gamma_numeric, solid_angle_closed_form, solid_angle_numeric
from airdecoherence.rates import dawson_argument, gamma_exact

sphere = Scatterer(4e-7)
spec = QuadratureSpec(rel_tol=1e-10)

print(f"{'T (K)':>8} {'dx (m)':>9} {'y':>9} {'closed form':>13} {'quadrature':>13} {'rel err':>9}")
for t in np.logspace(-4, 0, 3):
    for dx in (1e-11, 1e-9, 1e-7):
        env = GasEnvironment.air(t, 1e8)
        g = SuperpositionGeometry(dx)
        a = gamma_exact(g, env, sphere)
        res = gamma_numeric(g, env, sphere, spec=spec, full_output=True)
        print(f"{t:8.0e} {dx:9.0e} {dawson_argument(g, env):9.3g} {a:13.6e} {res.value:13.6e} "
              f"{abs(res.value - a) / a:9.1e}")

# The angular integral on its own, against pi R^2 sin^2(u) / u^2.
g = SuperpositionGeometry(1e-9)
print(f"\n{'u':>6} {'numeric / pi R^2':>17} {'closed / pi R^2':>16}")
for u in (0.01, 1.0, np.pi, 7.5):
    q = u * CODATA2018.hbar / g.delta_x
    scale = np.pi * sphere.radius**2
    print(f"{u:6.3f} {solid_angle_numeric(q, g, sphere) / scale:17.12f} "
          f"{solid_angle_closed_form(q, g, sphere) / scale:16.12f}")
