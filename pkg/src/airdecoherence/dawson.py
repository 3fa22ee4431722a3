"""Dawson integral D(x) = exp(-x**2) * integral_0^x exp(t**2) dt for real x.

Three evaluation paths, picked by |x| alone:

* ``series`` (|x| <= 0.1): alternating Maclaurin series
  x - 2x^3/3 + 4x^5/15 - ..., truncated once the next term is below 1e-17
  relative at the branch edge.
* ``core`` (0.1 < |x| < 8): the integral of exp(t**2) expanded term by term,
  sum_n x^(2n+1) / (n! (2n+1)), which has only positive terms and therefore
  no cancellation, then scaled by exp(-x**2).
* ``asymptotic`` (|x| >= 8): 1/(2x) * sum_k (2k-1)!! / (2x^2)^k, summed until
  the terms fall below 1e-17 relative.

Negative arguments are evaluated at |x| and negated, so the result is odd
bit for bit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import integrate

SERIES_MAX = 0.1
ASYMPTOTIC_MIN = 8.0

# Maclaurin coefficients (-2)^n / (2n+1)!!, n = 0..8; the n = 8 term is
# ~1e-20 relative at |x| = 0.1.
_SERIES_COEFFS = []
_c = 1.0
for _n in range(9):
    _SERIES_COEFFS.append(_c)
    _c *= -2.0 / (2 * _n + 3)
del _c, _n


class Branch(str, enum.Enum):
    SERIES = "series"
    CORE = "core"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class DawsonEval:
    x: float
    value: float
    branch: Branch


def branch_for(x: float) -> Branch:
    ax = abs(x)
    if ax <= SERIES_MAX:
        return Branch.SERIES
    if ax < ASYMPTOTIC_MIN:
        return Branch.CORE
    return Branch.ASYMPTOTIC


def _series(ax):
    x2 = ax * ax
    acc = np.full_like(ax, _SERIES_COEFFS[-1])
    for c in reversed(_SERIES_COEFFS[:-1]):
        acc = acc * x2 + c
    return ax * acc


def _core(ax):
    x2 = ax * ax
    term = ax.copy()  # x^(2n+1) / n!
    total = ax.copy()
    n = 0
    while True:
        n += 1
        term = term * x2 / n
        contrib = term / (2 * n + 1)
        total = total + contrib
        if np.all(contrib <= 1e-17 * total):
            break
    return total * np.exp(-x2)


def _asymptotic(ax):
    inv = 1.0 / ax
    inv2 = 0.5 * inv * inv  # 1 / (2x^2)
    term = np.ones_like(ax)
    total = np.ones_like(ax)
    k = 0
    while True:
        k += 1
        term = term * (2 * k - 1) * inv2
        total = total + term
        if np.all(term <= 1e-17 * total):
            break
    return total * 0.5 / ax


def _dawson_abs(ax):
    out = np.empty_like(ax)
    s = ax <= SERIES_MAX
    a = ax >= ASYMPTOTIC_MIN
    c = ~(s | a)
    if s.any():
        out[s] = _series(ax[s])
    if c.any():
        out[c] = _core(ax[c])
    if a.any():
        out[a] = _asymptotic(ax[a])
    return out


def dawson(x):
    """Dawson integral of a real scalar or array.

    Scalars come back as ``float``, arrays as ``ndarray`` of the same shape.
    Non-finite input raises :class:`DomainError`.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("dawson requires finite arguments")
    flat = arr.ravel()
    val = _dawson_abs(np.abs(flat))
    val = np.where(np.signbit(flat), -val, val).reshape(arr.shape)
    if arr.ndim == 0:
        return float(val)
    return val


def dawson_eval(x: float) -> DawsonEval:
    """Evaluate D(x) and report which branch produced the value."""
    return DawsonEval(float(x), dawson(float(x)), branch_for(float(x)))


def dawson_quadrature_oracle(x: float, tol: float = 1e-12) -> float:
    """Reference value of D(x) by direct adaptive quadrature of its definition.

    The integrand is rewritten as exp(-s (2|x| - s)) on s in [0, |x|], which is
    the defining integral with t = |x| - s and never overflows. Used for
    verification only; it is orders of magnitude slower than :func:`dawson`.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("dawson_quadrature_oracle requires a finite argument")
    if not 0.0 < tol < 1e-3:
        raise DomainError("tol must lie in (0, 1e-3)")
    ax = abs(x)
    if ax == 0.0:
        return 0.0
    two_x = 2.0 * ax
    res = integrate(lambda s: np.exp(-s * (two_x - s)), 0.0, ax, rel_tol=tol)
    return -res.value if x < 0 else res.value


def one_minus_dawson_ratio(y):
    """1 - D(y)/y for y >= 0, accurate also where it is tiny.

    Below y = 0.5 the difference is summed directly from the Maclaurin series
    (2/3) y^2 - (4/15) y^4 + (8/105) y^6 - ..., which avoids the cancellation
    of subtracting D(y)/y from 1. At y = 0 the value is exactly 0.
    """
    arr = np.asarray(y, dtype=float)
    flat = arr.ravel()
    out = np.empty_like(flat)
    small = flat < 0.5
    if small.any():
        y2 = flat[small] ** 2
        term = np.ones_like(y2)
        total = np.zeros_like(y2)
        n = 0
        while True:
            n += 1
            term = term * (-2.0 * y2) / (2 * n + 1)
            total = total - term
            if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
                break
        out[small] = total
    big = ~small
    if big.any():
        yb = flat[big]
        out[big] = 1.0 - dawson(yb) / yb
    out = out.reshape(arr.shape)
    if arr.ndim == 0:
        return float(out)
    return out
