"""Decoherence along a time-dependent superposition.

With the separation dx(t) changing in time, the off-diagonal element of the
spin-position density matrix decays as exp(-Gamma(t)) with

    Gamma(t) = int_0^t F(dx(s)) ds,

F being the instantaneous (exact) decoherence rate. ``instantaneous_rate``
is in Hz, ``accumulated_exponent`` is dimensionless.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .constants import CODATA2018
from .errors import DomainError
from .rates import GasEnvironment, Scatterer, gamma_exact_profile


class PathKind(str, enum.Enum):
    SINE = "sine"
    CONSTANT = "constant"
    SAMPLED = "sampled"


@dataclass(frozen=True)
class Trajectory:
    kind: PathKind
    amplitude: float  # maximal separation A, m
    tau: float  # total time, s
    samples: tuple = field(default=(), repr=False)  # ((t, dx), ...) for SAMPLED

    def __post_init__(self):
        object.__setattr__(self, "kind", PathKind(self.kind))
        if not (math.isfinite(self.amplitude) and self.amplitude >= 0):
            raise DomainError(f"amplitude must be >= 0, got {self.amplitude!r}")
        if not (math.isfinite(self.tau) and self.tau > 0):
            raise DomainError(f"tau must be > 0, got {self.tau!r}")
        if self.kind is PathKind.SAMPLED:
            t, dx = self._sample_arrays()
            if t.size < 2 or np.any(np.diff(t) <= 0):
                raise DomainError("sampled times must be strictly increasing (at least two samples)")
            if t[0] != 0.0 or t[-1] != self.tau:
                raise DomainError("sampled times must span [0, tau]")
            if np.any(dx < 0) or not np.all(np.isfinite(dx)):
                raise DomainError("sampled separations must be finite and >= 0")

    def _sample_arrays(self):
        arr = np.asarray(self.samples, dtype=float).reshape(-1, 2)
        return arr[:, 0], arr[:, 1]

    @classmethod
    def sine(cls, amplitude, tau):
        return cls(PathKind.SINE, amplitude, tau)

    @classmethod
    def constant(cls, amplitude, tau):
        return cls(PathKind.CONSTANT, amplitude, tau)

    @classmethod
    def sampled(cls, samples):
        """Piecewise-linear path through ``(t, dx)`` pairs starting at t = 0."""
        samples = tuple((float(t), float(d)) for t, d in samples)
        if not samples:
            raise DomainError("sampled trajectory needs samples")
        return cls(PathKind.SAMPLED, max(d for _, d in samples), samples[-1][0], samples)


def delta_x_at(traj: Trajectory, t):
    """Separation at time(s) ``t`` in [0, tau]."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(~np.isfinite(t_arr)) or np.any(t_arr < 0) or np.any(t_arr > traj.tau):
        raise DomainError(f"t must lie in [0, {traj.tau!r}]")
    if traj.kind is PathKind.SINE:
        s = t_arr / traj.tau
        # symmetric form: exactly 0 at both ends, exactly A at s = 1/2
        out = traj.amplitude * np.sin(math.pi * np.minimum(s, 1.0 - s))
    elif traj.kind is PathKind.CONSTANT:
        out = np.full_like(t_arr, traj.amplitude)
    else:
        ts, dxs = traj._sample_arrays()
        out = np.interp(t_arr, ts, dxs)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class DecoherenceHistory:
    times: np.ndarray
    delta_x: np.ndarray
    instantaneous_rate: np.ndarray
    accumulated_exponent: np.ndarray
    coherence: np.ndarray


@dataclass(frozen=True)
class SpinPositionState:
    population_up: float
    population_down: float
    offdiag_magnitude: float

    def as_matrix(self) -> np.ndarray:
        """2x2 density matrix in the basis (|up, x>, |down, x'>)."""
        return np.array(
            [[self.population_up, self.offdiag_magnitude], [self.offdiag_magnitude, self.population_down]]
        )


def accumulated_gamma(
    traj: Trajectory, env: GasEnvironment, scatterer: Scatterer, c=CODATA2018, steps: int = 4096
) -> DecoherenceHistory:
    """Rate and accumulated exponent on a uniform grid of ``steps`` intervals.

    Each interval is one Simpson panel using its midpoint, so every reported
    node is a panel boundary and the running sum only adds non-negative
    panel weights.
    """
    steps = int(steps)
    if steps < 16:
        raise DomainError(f"steps must be >= 16, got {steps}")
    fine = np.linspace(0.0, traj.tau, 2 * steps + 1)
    fine[-1] = traj.tau
    rate = gamma_exact_profile(delta_x_at(traj, fine), env, scatterer, c)
    h = traj.tau / steps
    panels = h / 6.0 * (rate[0:-1:2] + 4.0 * rate[1::2] + rate[2::2])
    gamma = np.concatenate([[0.0], np.cumsum(panels)])
    nodes = slice(0, None, 2)
    return DecoherenceHistory(
        times=fine[nodes],
        delta_x=delta_x_at(traj, fine[nodes]),
        instantaneous_rate=rate[nodes],
        accumulated_exponent=gamma,
        coherence=np.exp(-gamma),
    )


def density_matrix_at(history: DecoherenceHistory, index: int) -> SpinPositionState:
    """Spin-position state for an equal superposition after ``history.times[index]``."""
    g = float(history.accumulated_exponent[index])
    return SpinPositionState(0.5, 0.5, 0.5 * math.exp(-g))


@dataclass(frozen=True)
class PathComparison:
    temperature: float
    sine: DecoherenceHistory
    constant: DecoherenceHistory


def compare_paths(amplitude, tau, env_list, scatterer, c=CODATA2018, steps: int = 4096):
    """Sine path against the constant-separation path, one pair per environment."""
    env_list = list(env_list)
    if not env_list:
        raise DomainError("env_list must not be empty")
    out = []
    for env in env_list:
        out.append(
            PathComparison(
                env.temperature,
                accumulated_gamma(Trajectory.sine(amplitude, tau), env, scatterer, c, steps),
                accumulated_gamma(Trajectory.constant(amplitude, tau), env, scatterer, c, steps),
            )
        )
    return out
