"""Globally adaptive Gauss-Legendre quadrature with an interval-halving error estimate.

Every subinterval carries a Gauss-Legendre estimate over the whole interval
and over its two halves. The difference between the two is the (very
conservative) error estimate, and the halved value is what gets summed.
Subintervals whose error exceeds their share of the tolerance are split
until the global error bound meets ``max(abs_tol, rel_tol * |value|)``.

The integrand must be vectorised: it receives a 1-d float array of nodes and
returns an array of the same shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NumericalError

_ORDER = 10
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(_ORDER)


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float
    subdivisions: int
    evaluations: int


def _gauss(f, a, b):
    """Gauss-Legendre estimates over the rows of ``[a, b]`` (arrays of equal length)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    x = mid[:, None] + half[:, None] * _NODES[None, :]
    fx = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
    return half * (fx @ _WEIGHTS)


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    max_subdivisions: int = 20000,
) -> QuadResult:
    """Integrate ``f`` over ``[a, b]``.

    Raises :class:`NumericalError` (carrying the last estimate and bound) if the
    tolerance is not met before ``max_subdivisions`` subintervals are in use.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("integration limits must be finite")
    if a == b:
        return QuadResult(0.0, 0.0, 0, 0)
    if b < a:
        res = integrate(f, b, a, rel_tol, abs_tol, max_subdivisions)
        return QuadResult(-res.value, res.error, res.subdivisions, res.evaluations)

    lo = np.array([a], dtype=float)
    hi = np.array([b], dtype=float)
    whole = _gauss(f, lo, hi)
    mid = 0.5 * (lo + hi)
    left = _gauss(f, lo, mid)
    right = _gauss(f, mid, hi)
    evaluations = 3 * _ORDER

    while True:
        value = math.fsum(left) + math.fsum(right)
        err = np.abs(whole - (left + right))
        total_err = math.fsum(err)
        target = max(abs_tol, rel_tol * abs(value))
        if total_err <= target:
            return QuadResult(value, total_err, lo.size, evaluations)
        if lo.size >= max_subdivisions:
            raise NumericalError(
                f"adaptive quadrature did not converge within {max_subdivisions} "
                f"subintervals (estimate {value!r}, error bound {total_err:.3e})",
                estimate=value,
                error_bound=total_err,
            )

        # Split every interval holding more than its proportional share.
        share = target / lo.size
        split = err > share
        width = hi - lo
        # Intervals that can no longer be halved in floating point stay put.
        split &= 0.5 * width > 4.0 * np.spacing(np.maximum(np.abs(lo), np.abs(hi)))
        if not split.any():
            raise NumericalError(
                "adaptive quadrature stalled at floating-point resolution "
                f"(estimate {value!r}, error bound {total_err:.3e})",
                estimate=value,
                error_bound=total_err,
            )
        budget = max_subdivisions - lo.size
        idx = np.flatnonzero(split)
        if idx.size > budget:
            idx = idx[np.argsort(-err[idx], kind="stable")[:budget]]
            idx.sort()
            split = np.zeros_like(split)
            split[idx] = True

        s_lo, s_hi = lo[split], hi[split]
        s_mid = 0.5 * (s_lo + s_hi)
        # Children: [s_lo, s_mid] and [s_mid, s_hi]; each needs its own halves.
        c_lo = np.concatenate([s_lo, s_mid])
        c_hi = np.concatenate([s_mid, s_hi])
        c_whole = np.concatenate([left[split], right[split]])
        c_mid = 0.5 * (c_lo + c_hi)
        c_left = _gauss(f, c_lo, c_mid)
        c_right = _gauss(f, c_mid, c_hi)
        evaluations += 2 * _ORDER * c_lo.size

        keep = ~split
        lo = np.concatenate([lo[keep], c_lo])
        hi = np.concatenate([hi[keep], c_hi])
        whole = np.concatenate([whole[keep], c_whole])
        left = np.concatenate([left[keep], c_left])
        right = np.concatenate([right[keep], c_right])
        order = np.argsort(lo, kind="stable")
        lo, hi, whole, left, right = lo[order], hi[order], whole[order], left[order], right[order]
