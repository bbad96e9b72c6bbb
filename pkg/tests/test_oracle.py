import cmath
import math

import numpy as np
import pytest

from pathamp.core_num import PreconditionError
from pathamp.oracle import (
    OracleResult,
    gaussian_ratio_integral,
    mc_ordered_volume,
    quad_nested,
    quad_oscillatory,
    series_sum_highprec,
)
from pathamp.refraction import scattering_order_kernel


class TestQuadOscillatory:
    def test_full_period_vanishes(self):
        res = quad_oscillatory(lambda x: np.exp(1j * x), 0.0, 2 * math.pi, 1.0)
        assert abs(res.value) < 1e-12

    def test_half_period_zone(self):
        kappa, x1 = 3.0e6, 0.75
        res = quad_oscillatory(lambda r: np.exp(1j * kappa * r),
                               x1, x1 + math.pi / kappa, kappa)
        expected = 2j * cmath.exp(1j * kappa * x1) / kappa
        assert abs(res.value - expected) <= 1e-10 * abs(expected)

    def test_infinite_limit_requires_envelope(self):
        with pytest.raises(PreconditionError):
            quad_oscillatory(lambda x: np.exp(1j * x), 0.0, math.inf, 1.0)

    def test_damped_tail_accelerated(self):
        kappa, x1 = 1.0e7, 0.5
        rho = 1e-7 * kappa

        def f(r):
            return np.exp(1j * kappa * r - rho * (r - x1))

        res = quad_oscillatory(f, x1, math.inf, kappa, damping_scale=1 / rho)
        exact = cmath.exp(1j * kappa * x1) / (rho - 1j * kappa)
        assert abs(res.value - exact) <= 1e-8 * abs(exact)
        assert abs(res.value - exact) <= 5 * max(res.error_estimate, 1e-16 * abs(exact))

    def test_error_estimate_validated_by_refinement(self):
        kappa = 2000.0
        f = lambda x: np.exp(1j * kappa * x) / (1.0 + x)
        coarse = quad_oscillatory(f, 0.0, 1.0, kappa, nodes=6)
        fine = quad_oscillatory(f, 0.0, 1.0, kappa, nodes=12)
        assert abs(coarse.value - fine.value) \
            <= 2.0 * max(coarse.error_estimate, 1e-15 * abs(fine.value))


class TestQuadNested:
    def test_single_level_closed_form(self):
        kappa, ds, x3 = 1.0, 2.0, 0.1
        res = quad_nested(1, kappa, ds, x=(x3,))
        expected = (cmath.exp(1j * kappa * ds) - 1) \
            * cmath.exp(1j * kappa * x3) / (1j * kappa)
        assert abs(res.value - expected) <= 1e-12 * abs(expected)

    def test_zero_budget_vanishes(self):
        res = quad_nested(3, 1.0, 0.0)
        assert abs(res.value) < 1e-14

    @pytest.mark.parametrize("order,dphi", [(1, 2.0), (2, 2.0), (3, 2.0),
                                            (3, 7.5), (4, 5.0)])
    def test_matches_order_kernel(self, order, dphi):
        kappa = 1.0
        x = tuple(0.4 - 0.1 * k for k in range(order))
        res = quad_nested(order, kappa, dphi / kappa, x=x)
        closed = cmath.exp(1j * kappa * x[0]) * (1j / kappa) ** order \
            * scattering_order_kernel(order, dphi)
        assert abs(res.value - closed) <= 1e-6 * abs(closed)

    def test_cost_bound_enforced(self):
        with pytest.raises(PreconditionError):
            quad_nested(3, 1.0, 51.0)
        with pytest.raises(PreconditionError):
            quad_nested(5, 1.0, 1.0)


class TestMonteCarlo:
    def test_degenerate_first_order(self):
        res = mc_ordered_volume(1, 2.0, 10)
        assert res.value == 2.0 and res.error_estimate == 0.0

    def test_low_orders_within_three_sigma(self):
        for n in (2, 3, 4, 5):
            res = mc_ordered_volume(n, 1.0, 200_000, seed=11)
            target = 1.0 / math.factorial(n)
            assert abs(res.value.real - target) <= 3.0 * res.error_estimate

    def test_deterministic_for_fixed_seed(self):
        a = mc_ordered_volume(4, 1.0, 50_000, seed=123)
        b = mc_ordered_volume(4, 1.0, 50_000, seed=123)
        assert a.value == b.value and a.error_estimate == b.error_estimate

    def test_error_bar_validated_by_doubling(self):
        a = mc_ordered_volume(3, 1.0, 100_000, seed=7)
        b = mc_ordered_volume(3, 1.0, 200_000, seed=7)
        assert abs(a.value.real - b.value.real) <= 2.0 * a.error_estimate

    def test_order_cap(self):
        with pytest.raises(PreconditionError):
            mc_ordered_volume(9, 1.0, 100)


class TestGaussianRatio:
    def test_zero_phase_is_unity(self):
        res = gaussian_ratio_integral(
            lambda p: np.exp(-(p - 5.0) ** 2 / 2.0),
            lambda p: np.zeros_like(p), -3.0, 13.0)
        assert abs(res.value - 1.0) < 1e-12

    def test_linear_phase_gaussian_damping(self):
        # <e^{i a p}> over a unit Gaussian = e^{i a mu - a^2/2}
        a, mu = 0.7, 2.0
        res = gaussian_ratio_integral(
            lambda p: np.exp(-(p - mu) ** 2 / 2.0),
            lambda p: a * p, mu - 10, mu + 10)
        expected = cmath.exp(1j * a * mu - a * a / 2.0)
        assert abs(res.value - expected) <= 1e-10 * abs(expected)


class TestHighPrecisionSeries:
    def test_agrees_with_float_summation_in_easy_regime(self):
        from pathamp.refraction import time_budget_factor
        for dphi, bl in ((0.5, 1.0), (2.0, 5.0), (10.0, 10.0), (15.0, 30.0)):
            hp = series_sum_highprec(dphi, bl)
            lp = time_budget_factor(dphi, bl).value
            hp_c = complex(float(hp.real), float(hp.imag))
            assert abs(hp_c - lp) <= 1e-10 * abs(hp_c)

    def test_extreme_strength_regression_pins(self):
        # frozen values from this deterministic arbitrary-precision sum;
        # magnitudes exceed float range, so compare phase and log-magnitude
        from mpmath import arg as mp_arg, fabs as mp_fabs, log10 as mp_log10
        pins = {
            (10.0, 1000.0): (-2.665801087488, 85.307435),
            (20.0, 2000.0): (1.050894401101, 172.015664),
        }
        for (dphi, bl), (phase_pin, logmag_pin) in pins.items():
            val = series_sum_highprec(dphi, bl)
            assert float(mp_arg(val)) == pytest.approx(phase_pin, abs=1e-9)
            assert float(mp_log10(mp_fabs(val))) \
                == pytest.approx(logmag_pin, abs=1e-4)
