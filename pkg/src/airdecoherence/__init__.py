"""Collisional decoherence of spatial superpositions by air-molecule scattering.

The exact Maxwell-Boltzmann-averaged rate is expressed through the Dawson
integral; see :mod:`airdecoherence.rates`. An independent brute-force
quadrature lives in :mod:`airdecoherence.oracle`, time-dependent paths in
:mod:`airdecoherence.dynamics` and inverse design in :mod:`airdecoherence.design`.
"""

from .constants import AIR_MASS_AMU, CODATA2018, PhysicalConstants, load_constants
from .dawson import Branch, DawsonEval, dawson, dawson_eval, dawson_quadrature_oracle
from .design import DesignRow, generate_table, pressure_from_density, solve_number_density
from .dynamics import (
    DecoherenceHistory,
    SpinPositionState,
    Trajectory,
    accumulated_gamma,
    compare_paths,
    delta_x_at,
    density_matrix_at,
)
from .errors import DomainError, InfeasibleError, NumericalError
from .oracle import QuadratureSpec, gamma_numeric, solid_angle_closed_form, solid_angle_numeric
from .rates import (
    GasEnvironment,
    RateBreakdown,
    Regime,
    Scatterer,
    SuperpositionGeometry,
    breakdown,
    dawson_argument,
    gamma_exact,
    gamma_int_min,
    gamma_int_tanh,
    gamma_lwl,
    gamma_mlwl,
    gamma_swl,
    lambda_thermal,
    regime_classify,
)

__version__ = "0.1.0"
