"""Collisional decoherence rates for a sphere in a thermal gas.

All rates are in Hz and use SI inputs. The exact rate is

    gamma_exact = gamma_swl * (1 - D(y) / y),   y = dx * sqrt(2 m k_B T) / hbar,

with D the Dawson integral. It tends to ``gamma_lwl`` (proportional to dx**2)
for y -> 0 and saturates at ``gamma_swl`` (independent of dx) for y -> inf.
The interpolations ``gamma_int_min`` and ``gamma_int_tanh`` and the modified
long-wavelength rate ``gamma_mlwl`` are provided for comparison.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .constants import AIR_MASS_AMU, CODATA2018, PhysicalConstants
from .dawson import one_minus_dawson_ratio
from .errors import DomainError


def _check(name, value, *, positive=False):
    if not isinstance(value, (int, float, np.floating, np.integer)) or not math.isfinite(value):
        raise DomainError(f"{name} must be a finite number, got {value!r}")
    if positive and value <= 0:
        raise DomainError(f"{name} must be > 0, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be >= 0, got {value!r}")


@dataclass(frozen=True)
class GasEnvironment:
    temperature: float  # K
    number_density: float  # m^-3
    molecular_mass: float  # kg

    def __post_init__(self):
        _check("temperature", self.temperature, positive=True)
        _check("number_density", self.number_density)
        _check("molecular_mass", self.molecular_mass, positive=True)

    @classmethod
    def air(cls, temperature, number_density, constants=CODATA2018, mass_amu=AIR_MASS_AMU):
        return cls(temperature, number_density, mass_amu * constants.amu)

    @classmethod
    def from_pressure(cls, temperature, pressure, molecular_mass, constants=CODATA2018):
        """Ideal-gas construction: n = P / (k_B T)."""
        _check("pressure", pressure)
        _check("temperature", temperature, positive=True)
        return cls(temperature, pressure / (constants.k_B * temperature), molecular_mass)

    def pressure(self, constants=CODATA2018) -> float:
        return self.number_density * constants.k_B * self.temperature


@dataclass(frozen=True)
class Scatterer:
    radius: float  # m

    def __post_init__(self):
        _check("radius", self.radius, positive=True)


@dataclass(frozen=True)
class SuperpositionGeometry:
    delta_x: float  # m

    def __post_init__(self):
        _check("delta_x", self.delta_x)


class Regime(str, enum.Enum):
    LWL = "LWL"
    CROSSOVER = "crossover"
    SWL = "SWL"


@dataclass(frozen=True)
class RateBreakdown:
    gamma_exact: float
    gamma_lwl: float
    gamma_swl: float
    gamma_int_min: float
    gamma_int_tanh: float
    gamma_mlwl: float
    dawson_argument: float
    regime: Regime
    lambda_thermal: float


def lambda_thermal(env: GasEnvironment, c: PhysicalConstants = CODATA2018) -> float:
    """Thermal de Broglie wavelength 2 pi hbar / sqrt(2 pi m k_B T), in m."""
    return 2.0 * math.pi * c.hbar / math.sqrt(2.0 * math.pi * env.molecular_mass * c.k_B * env.temperature)


def _y_scale(env, c):
    # dawson argument per metre of separation
    return math.sqrt(2.0 * env.molecular_mass * c.k_B * env.temperature) / c.hbar


def dawson_argument(geom: SuperpositionGeometry, env: GasEnvironment, c: PhysicalConstants = CODATA2018) -> float:
    return geom.delta_x * _y_scale(env, c)


def _swl_unit(env, scatterer, c):
    # SWL rate per unit number density
    r = scatterer.radius
    return 2.0 * r * r * math.sqrt(2.0 * math.pi * c.k_B * env.temperature / env.molecular_mass)


def _lwl_unit(delta_x, env, scatterer, c):
    r = scatterer.radius
    kt = c.k_B * env.temperature
    pref = 8.0 * r * r / (3.0 * c.hbar**2) * math.sqrt(2.0 * math.pi * env.molecular_mass) * kt**1.5
    return pref * np.square(delta_x)


def gamma_swl(env: GasEnvironment, scatterer: Scatterer, c: PhysicalConstants = CODATA2018) -> float:
    return env.number_density * _swl_unit(env, scatterer, c)


def gamma_lwl(geom, env, scatterer, c=CODATA2018) -> float:
    return env.number_density * float(_lwl_unit(geom.delta_x, env, scatterer, c))


def gamma_mlwl(env: GasEnvironment, scatterer: Scatterer, c: PhysicalConstants = CODATA2018) -> float:
    """Long-wavelength rate with dx replaced by the thermal wavelength.

    Algebraically (8 pi / 3) * gamma_swl.
    """
    r = scatterer.radius
    unit = 16.0 * math.pi / 3.0 * r * r * math.sqrt(2.0 * math.pi * c.k_B * env.temperature / env.molecular_mass)
    return env.number_density * unit


def gamma_exact_profile(delta_x, env, scatterer, c=CODATA2018):
    """Exact rate for a scalar or array of separations (no dataclass wrapping)."""
    dx = np.asarray(delta_x, dtype=float)
    y = dx * _y_scale(env, c)
    out = env.number_density * _swl_unit(env, scatterer, c) * np.asarray(one_minus_dawson_ratio(y))
    if dx.ndim == 0:
        return float(out)
    return out


def gamma_exact(geom, env, scatterer, c=CODATA2018) -> float:
    """Exact rate, evaluated as gamma_swl * (1 - D(y)/y); exactly 0 at dx = 0."""
    return gamma_exact_profile(geom.delta_x, env, scatterer, c)


def gamma_int_min(geom, env, scatterer, c=CODATA2018) -> float:
    return min(gamma_swl(env, scatterer, c), gamma_lwl(geom, env, scatterer, c))


def gamma_int_tanh(geom, env, scatterer, c=CODATA2018) -> float:
    # ratio taken per unit density so that n_v = 0 is not 0/0
    ratio = float(_lwl_unit(geom.delta_x, env, scatterer, c)) / _swl_unit(env, scatterer, c)
    return gamma_swl(env, scatterer, c) * math.tanh(ratio)


def regime_classify(y: float) -> Regime:
    """Advisory label: LWL below y = 0.1, SWL above y = 10, crossover between."""
    if y < 0:
        raise DomainError(f"dawson argument must be >= 0, got {y!r}")
    if y < 0.1:
        return Regime.LWL
    if y > 10:
        return Regime.SWL
    return Regime.CROSSOVER


def breakdown(geom, env, scatterer, c=CODATA2018) -> RateBreakdown:
    """All rate models at one parameter point."""
    y = dawson_argument(geom, env, c)
    swl = gamma_swl(env, scatterer, c)
    lwl = gamma_lwl(geom, env, scatterer, c)
    exact = min(gamma_exact(geom, env, scatterer, c), swl)
    return RateBreakdown(
        gamma_exact=exact,
        gamma_lwl=lwl,
        gamma_swl=swl,
        gamma_int_min=min(swl, lwl),
        gamma_int_tanh=gamma_int_tanh(geom, env, scatterer, c),
        gamma_mlwl=gamma_mlwl(env, scatterer, c),
        dawson_argument=y,
        regime=regime_classify(y),
        lambda_thermal=lambda_thermal(env, c),
    )
