"""Brute-force evaluation of the localization rate by explicit quadrature.

This path never touches the Dawson function. It integrates the
Maxwell-Boltzmann flux over momentum magnitude,

    F = int_0^cutoff dq rho(q) (q/m) [pi R^2 - A(q)],

where A(q) is the solid-angle integral of the phase factor for an isotropic
hard-sphere cross section |f|^2 = R^2/4. ``solid_angle_numeric`` integrates
A(q) over all four angles directly; ``solid_angle_closed_form`` is the
analytic result, pi R^2 sin^2(u)/u^2 with u = q dx / hbar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CODATA2018, PhysicalConstants
from .errors import DomainError, NumericalError
from .quadrature import QuadResult, integrate
from .rates import GasEnvironment, Scatterer, SuperpositionGeometry


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-10
    abs_tol: float = 0.0  # Hz
    max_subdivisions: int = 20000
    momentum_cutoff_sigmas: float = 12.0  # in units of sqrt(m k_B T)

    def __post_init__(self):
        if not 0.0 < self.rel_tol <= 1e-2:
            raise DomainError(f"rel_tol must lie in (0, 1e-2], got {self.rel_tol!r}")
        if not self.abs_tol >= 0.0:
            raise DomainError(f"abs_tol must be >= 0, got {self.abs_tol!r}")
        if self.max_subdivisions < 10:
            raise DomainError(f"max_subdivisions must be >= 10, got {self.max_subdivisions!r}")
        if not self.momentum_cutoff_sigmas >= 8:
            raise DomainError(f"momentum_cutoff_sigmas must be >= 8, got {self.momentum_cutoff_sigmas!r}")


@dataclass(frozen=True)
class MomentumDistribution:
    env: GasEnvironment

    def sigma(self, c: PhysicalConstants = CODATA2018) -> float:
        """Momentum scale sqrt(m k_B T)."""
        return math.sqrt(self.env.molecular_mass * c.k_B * self.env.temperature)


def rho_q(q, dist: MomentumDistribution, c: PhysicalConstants = CODATA2018):
    """Maxwell-Boltzmann density in momentum magnitude, normalised to n_v."""
    q = np.asarray(q, dtype=float)
    s2 = dist.sigma(c) ** 2
    out = dist.env.number_density * 4.0 * math.pi * q * q * (2.0 * math.pi * s2) ** -1.5 * np.exp(-q * q / (2.0 * s2))
    return float(out) if out.ndim == 0 else out


def solid_angle_closed_form(q, geom: SuperpositionGeometry, scatterer: Scatterer, c: PhysicalConstants = CODATA2018):
    """pi R^2 sin^2(u) / u^2 with u = q dx / hbar (m^2)."""
    u = np.asarray(q, dtype=float) * geom.delta_x / c.hbar
    r2 = scatterer.radius**2
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(u == 0.0, math.pi * r2, math.pi * r2 * np.square(np.sin(u) / u))
    return float(out) if out.ndim == 0 else out


def _one_minus_sinc2(u):
    # 1 - sin^2(u)/u^2 = (u - sin u)(u + sin u) / u^2, with u - sin u from its
    # Taylor series where direct subtraction would cancel.
    u = np.asarray(u, dtype=float)
    out = np.empty_like(u)
    small = np.abs(u) < 0.5
    us = u[small]
    u2 = us * us
    # u - sin u = u^3/6 - u^5/120 + ...; 10 terms reach 1e-30 relative at u = 0.5
    term = us * u2 / 6.0
    diff = term.copy()
    for k in range(2, 12):
        term = -term * u2 / ((2 * k) * (2 * k + 1))
        diff = diff + term
    with np.errstate(invalid="ignore", divide="ignore"):
        out[small] = np.where(us == 0.0, 0.0, diff * (us + np.sin(us)) / u2)
    ub = u[~small]
    out[~small] = 1.0 - np.square(np.sin(ub) / ub)
    return out


def solid_angle_numeric(
    q,
    geom: SuperpositionGeometry,
    scatterer: Scatterer,
    c: PhysicalConstants = CODATA2018,
    spec: QuadratureSpec = QuadratureSpec(),
    axis: str = "x",
    full_output: bool = False,
    max_order: int = 96,
):
    """Four-angle integral (1/4pi) int dOmega dOmega' |f|^2 exp(i q (n - n').dx / hbar).

    A Gauss-Legendre rule in theta, theta' (on [0, pi]) times the periodic
    trapezoid rule in phi, phi' is applied to the full four-dimensional
    integrand. The order grows in steps of 8 from 16 until two successive
    estimates agree to ``spec.rel_tol`` (or to a round-off floor of ~1e-14
    pi R^2 where the integral itself vanishes); the imaginary part must vanish
    to that tolerance relative to pi R^2. ``axis`` picks the separation
    direction.

    Returns the real part in m^2, or ``(value, info)`` with ``full_output``.
    """
    if axis not in ("x", "y", "z"):
        raise DomainError(f"axis must be 'x', 'y' or 'z', got {axis!r}")
    u = float(q) * geom.delta_x / c.hbar
    f2 = scatterer.radius**2 / 4.0
    scale = math.pi * scatterer.radius**2

    def estimate(order):
        t, wt = np.polynomial.legendre.leggauss(order)
        theta = 0.5 * math.pi * (t + 1.0)
        w_theta = 0.5 * math.pi * wt
        phi = 2.0 * math.pi * np.arange(order) / order
        w_phi = np.full(order, 2.0 * math.pi / order)
        th, ph = np.meshgrid(theta, phi, indexing="ij")
        w = (np.outer(w_theta, w_phi) * np.sin(th)).ravel()
        if axis == "x":
            proj = (np.sin(th) * np.cos(ph)).ravel()
        elif axis == "y":
            proj = (np.sin(th) * np.sin(ph)).ravel()
        else:
            proj = np.cos(th).ravel()
        total = 0.0 + 0.0j
        chunk = max(1, 2**20 // proj.size)
        for start in range(0, proj.size, chunk):
            p = proj[start : start + chunk]
            phase = np.exp(1j * u * (p[:, None] - proj[None, :]))
            total += w[start : start + chunk] @ (phase @ w)
        return f2 * total / (4.0 * math.pi)

    order = 16
    prev = estimate(order)
    while True:
        order += 8
        cur = estimate(order)
        diff = abs(cur.real - prev.real)
        # round-off floor relative to pi R^2 for q near a zero of sin(u)
        floor = 64.0 * np.finfo(float).eps * scale
        converged = diff <= max(spec.rel_tol * abs(cur.real), floor) and abs(cur.imag) <= spec.rel_tol * scale
        if converged:
            break
        if order >= max_order:
            raise NumericalError(
                f"angular quadrature not converged at order {order} (difference {diff:.3e})",
                estimate=cur.real,
                error_bound=diff,
            )
        prev = cur
    if full_output:
        return cur.real, {"imag": cur.imag, "order": order, "error": diff}
    return cur.real


def gamma_numeric(
    geom: SuperpositionGeometry,
    env: GasEnvironment,
    scatterer: Scatterer,
    c: PhysicalConstants = CODATA2018,
    spec: QuadratureSpec = QuadratureSpec(),
    full_output: bool = False,
):
    """Decoherence rate (Hz) from adaptive quadrature over momentum magnitude.

    The bracket pi R^2 - A(q) is coded as pi R^2 (1 - sin^2 u / u^2) with a
    cancellation-free small-u branch. With ``full_output`` a
    :class:`~airdecoherence.quadrature.QuadResult` is returned instead.
    """
    if geom.delta_x == 0.0 or env.number_density == 0.0:
        res = QuadResult(0.0, 0.0, 0, 0)
        return res if full_output else 0.0
    dist = MomentumDistribution(env)
    m = env.molecular_mass
    area = math.pi * scatterer.radius**2
    u_per_q = geom.delta_x / c.hbar

    def integrand(q):
        return rho_q(q, dist, c) * (q / m) * area * _one_minus_sinc2(q * u_per_q)

    upper = spec.momentum_cutoff_sigmas * dist.sigma(c)
    res = integrate(integrand, 0.0, upper, rel_tol=spec.rel_tol, abs_tol=spec.abs_tol,
                    max_subdivisions=spec.max_subdivisions)
    return res if full_output else res.value
