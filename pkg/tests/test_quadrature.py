import math

import numpy as np
import pytest
from scipy import integrate as sp_integrate

from airdecoherence.errors import NumericalError
from airdecoherence.quadrature import integrate


@pytest.mark.parametrize(
    "f, a, b, exact",
    [
        (lambda x: x**2, 0.0, 2.0, 8.0 / 3.0),
        (np.exp, -1.0, 1.0, math.e - 1.0 / math.e),
        (lambda x: 1.0 / (1.0 + x * x), 0.0, 1.0, math.pi / 4.0),
        (np.sqrt, 0.0, 1.0, 2.0 / 3.0),  # endpoint singularity in the derivative
        (lambda x: np.sin(50.0 * x) ** 2, 0.0, math.pi, math.pi / 2.0),
    ],
)
def test_known_integrals(f, a, b, exact):
    res = integrate(f, a, b, rel_tol=1e-12)
    assert res.value == pytest.approx(exact, rel=1e-12)
    assert res.error <= 1e-12 * abs(res.value)


def test_matches_quadpack_on_peaked_integrand():
    f = lambda x: np.exp(-((x - 0.3) ** 2) / 1e-4) * np.cos(3 * x)
    ours = integrate(f, -1.0, 2.0, rel_tol=1e-12).value
    ref, _ = sp_integrate.quad(f, -1.0, 2.0, points=[0.3], epsabs=0, epsrel=1e-13, limit=200)
    assert ours == pytest.approx(ref, rel=1e-11)


def test_reversed_and_empty_intervals():
    assert integrate(np.cos, 1.0, 1.0).value == 0.0
    fwd = integrate(np.cos, 0.0, 1.0).value
    assert integrate(np.cos, 1.0, 0.0).value == -fwd


def test_failure_reports_estimate_and_bound():
    with pytest.raises(NumericalError) as info:
        integrate(lambda x: np.sin(1e4 * x), 0.0, 10.0, rel_tol=1e-14, max_subdivisions=10)
    assert math.isfinite(info.value.estimate)
    assert info.value.error_bound > 0


def test_deterministic():
    f = lambda x: np.exp(-x) * np.sin(40 * x) ** 2
    a = integrate(f, 0.0, 20.0, rel_tol=1e-11)
    b = integrate(f, 0.0, 20.0, rel_tol=1e-11)
    assert a == b
