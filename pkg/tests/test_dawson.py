import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from airdecoherence.dawson import (
    ASYMPTOTIC_MIN,
    SERIES_MAX,
    Branch,
    branch_for,
    dawson,
    dawson_eval,
    dawson_quadrature_oracle,
    one_minus_dawson_ratio,
)
from airdecoherence.errors import DomainError

# Reference values from dawson_quadrature_oracle(x, 1e-12), cross-checked
# against 30-digit mpmath sqrt(pi)/2 exp(-x^2) erfi(x).
D_1 = 0.538079506912768
D_10 = 0.0502538471875985
X_MAX = 0.924138873004592
D_MAX = 0.541044224635182


def mp_dawson(x):
    with mpmath.workdps(40):
        return float(mpmath.sqrt(mpmath.pi) / 2 * mpmath.exp(-mpmath.mpf(x) ** 2) * mpmath.erfi(x))


def test_fixed_points():
    assert dawson(0.0) == 0.0
    assert dawson(1.0) == pytest.approx(D_1, rel=1e-14)
    assert dawson(10.0) == pytest.approx(D_10, rel=1e-14)


def test_oracle_reproduces_reference_values():
    assert dawson_quadrature_oracle(0.0, 1e-12) == 0.0
    assert dawson_quadrature_oracle(1.0, 1e-12) == pytest.approx(D_1, rel=1e-13)
    assert dawson_quadrature_oracle(10.0, 1e-12) == pytest.approx(D_10, rel=1e-13)
    assert dawson_quadrature_oracle(0.92414, 1e-10) == pytest.approx(0.541044, abs=1e-6)


def test_asymptotic_cross_check_at_ten():
    # correctly signed three-term expansion 1/(2x) + 1/(4x^3) + 3/(8x^5);
    # the first omitted term is 15/(16 x^7)
    x = 10.0
    approx = 1 / (2 * x) + 1 / (4 * x**3) + 3 / (8 * x**5)
    assert abs(dawson(x) - approx) <= 15 / (16 * x**7) * 1.1


def test_against_mpmath_all_branches():
    xs = np.concatenate([np.logspace(-8, 4, 400), [SERIES_MAX, np.nextafter(SERIES_MAX, 1), ASYMPTOTIC_MIN,
                                                   np.nextafter(ASYMPTOTIC_MIN, 0)]])
    got = dawson(xs)
    ref = np.array([mp_dawson(x) for x in xs])
    rel = np.abs(got - ref) / ref
    series = xs <= SERIES_MAX
    asym = xs >= ASYMPTOTIC_MIN
    assert rel[series].max() <= 1e-12
    assert rel[asym].max() <= 1e-12
    assert rel[~series & ~asym].max() <= 1e-10


def test_branches_agree_at_thresholds():
    from airdecoherence.dawson import _asymptotic, _core, _series

    for x, lo, hi in [(SERIES_MAX, _series, _core), (ASYMPTOTIC_MIN, _core, _asymptotic)]:
        a = lo(np.array([x]))[0]
        b = hi(np.array([x]))[0]
        assert abs(a - b) <= 1e-11 * abs(b)


def test_branch_labels():
    assert dawson_eval(0.05).branch is Branch.SERIES
    assert dawson_eval(-0.1).branch is Branch.SERIES
    assert dawson_eval(3.0).branch is Branch.CORE
    assert dawson_eval(-8.0).branch is Branch.ASYMPTOTIC
    assert branch_for(1e300) is Branch.ASYMPTOTIC


def test_huge_arguments_stay_finite():
    assert dawson(1e200) == pytest.approx(0.5e-200, rel=1e-15)
    assert dawson(-1e308) == pytest.approx(-0.5e-308, rel=1e-15)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_non_finite_rejected(bad):
    with pytest.raises(DomainError):
        dawson(bad)
    with pytest.raises(DomainError):
        dawson_quadrature_oracle(bad, 1e-10)


def test_oracle_tolerance_range():
    with pytest.raises(DomainError):
        dawson_quadrature_oracle(1.0, 1e-2)


def test_array_shape_preserved():
    x = np.linspace(-3, 3, 12).reshape(3, 4)
    out = dawson(x)
    assert out.shape == (3, 4)
    assert out[1, 2] == dawson(float(x[1, 2]))


def test_oddness_bitwise():
    rng = np.random.default_rng(7)
    x = rng.uniform(-20, 20, 1000)
    assert np.array_equal(dawson(-x), -dawson(x))


@given(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False).filter(lambda v: v != 0))
@settings(max_examples=300, deadline=None)
def test_ratio_bounds(x):
    v = dawson(x)
    assert abs(v) <= 0.5410443 + 1e-7
    assert 0.0 <= v / x <= 1.0


def test_ratio_tends_to_one():
    assert dawson(1e-10) / 1e-10 == 1.0


def test_one_minus_ratio_small_argument_series():
    for y in [1e-9, 1e-5, 1e-3, 0.2, 0.49]:
        with mpmath.workdps(50):
            ref = float(1 - mpmath.sqrt(mpmath.pi) / 2 * mpmath.exp(-mpmath.mpf(y) ** 2) * mpmath.erfi(y) / y)
        assert one_minus_dawson_ratio(y) == pytest.approx(ref, rel=1e-14)
    assert one_minus_dawson_ratio(0.0) == 0.0
    # leading terms (2/3) y^2 - (4/15) y^4
    y = 1e-4
    assert one_minus_dawson_ratio(y) == pytest.approx(2 / 3 * y**2 - 4 / 15 * y**4, rel=1e-15)


def test_one_minus_ratio_continuous_at_switch():
    a = one_minus_dawson_ratio(np.nextafter(0.5, 0))
    b = one_minus_dawson_ratio(0.5)
    assert abs(a - b) <= 1e-14 * b


def test_global_maximum_from_oracle():
    # bisection on the sign of the oracle's central difference
    h = 1e-5
    slope = lambda x: dawson_quadrature_oracle(x + h, 1e-13) - dawson_quadrature_oracle(x - h, 1e-13)
    lo, hi = 0.8, 1.1
    assert slope(lo) > 0 > slope(hi)
    for _ in range(30):
        mid = 0.5 * (lo + hi)
        if slope(mid) > 0:
            lo = mid
        else:
            hi = mid
    x_star = 0.5 * (lo + hi)
    assert x_star == pytest.approx(X_MAX, abs=1e-6)
    assert dawson_quadrature_oracle(x_star, 1e-13) == pytest.approx(D_MAX, abs=1e-10)
    assert dawson(x_star) == pytest.approx(D_MAX, abs=1e-10)


def test_three_term_series_within_truncation_bound():
    # alternating series: error below the first omitted term (8/105) x^7
    x = np.concatenate([np.linspace(-0.05, -1e-6, 200), np.linspace(1e-6, 0.05, 200)])
    three = x - 2 / 3 * x**3 + 4 / 15 * x**5
    bound = 8 / 105 * np.abs(x) ** 7 + 4e-16 * np.abs(x)
    assert np.all(np.abs(dawson(x) - three) <= bound)


def test_three_term_asymptotic_within_truncation_bound():
    x = np.concatenate([-np.logspace(np.log10(20), 6, 200), np.logspace(np.log10(20), 6, 200)])
    three = 1 / (2 * x) + 1 / (4 * x**3) + 3 / (8 * x**5)
    bound = 1.05 * 15 / (16 * np.abs(x) ** 7) + 1e-15 * np.abs(three)
    assert np.all(np.abs(dawson(x) - three) <= bound)
