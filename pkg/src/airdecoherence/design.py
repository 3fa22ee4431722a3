"""Inverse design: the gas density and pressure that give a target decoherence rate.

Every rate model is linear in the number density, so the inversion is a
single division by the rate at unit density.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from .constants import AIR_MASS_AMU, CODATA2018
from .errors import DomainError, InfeasibleError
from .rates import GasEnvironment, Scatterer, SuperpositionGeometry, gamma_exact

TABLE_GAMMAS = (0.01, 0.05, 0.1)  # Hz
TABLE_TEMPERATURES = (1e-3, 1.0, 4.0)  # K
TABLE_DELTA_X = (1e-14, 1e-11, 1e-8, 1e-5)  # m
TABLE_RADIUS = 4e-7  # m


@dataclass(frozen=True)
class DesignRow:
    gamma_target: float
    temperature: float
    delta_x: float
    number_density: float
    pressure: float


def solve_number_density(gamma_target, geom, env_template, scatterer, c=CODATA2018) -> float:
    """Number density (m^-3) at which the exact rate equals ``gamma_target``.

    Only the temperature and molecular mass of ``env_template`` are used.
    """
    if not gamma_target > 0:
        raise DomainError(f"gamma_target must be > 0, got {gamma_target!r}")
    if geom.delta_x == 0:
        raise InfeasibleError("a zero-width superposition does not decohere; no density reaches the target")
    unit = gamma_exact(geom, replace(env_template, number_density=1.0), scatterer, c)
    if unit <= 0:
        raise InfeasibleError("rate at unit density underflows to zero")
    return gamma_target / unit


def pressure_from_density(number_density, temperature, c=CODATA2018) -> float:
    if number_density < 0:
        raise DomainError(f"number_density must be >= 0, got {number_density!r}")
    return number_density * c.k_B * temperature


def generate_table(
    gamma_list=TABLE_GAMMAS,
    temperature_list=TABLE_TEMPERATURES,
    delta_x_list=TABLE_DELTA_X,
    scatterer=Scatterer(TABLE_RADIUS),
    c=CODATA2018,
    mass_amu=AIR_MASS_AMU,
):
    """Design rows for the Cartesian product, ordered by (gamma, T, dx)."""
    lists = (list(gamma_list), list(temperature_list), list(delta_x_list))
    if not all(lists):
        raise DomainError("gamma, temperature and delta_x lists must be nonempty")
    rows = []
    for gamma, temp, dx in itertools.product(*lists):
        env = GasEnvironment.air(temp, 1.0, c, mass_amu)
        n = solve_number_density(gamma, SuperpositionGeometry(dx), env, scatterer, c)
        rows.append(DesignRow(gamma, temp, dx, n, pressure_from_density(n, temp, c)))
    return rows
