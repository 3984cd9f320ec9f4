import math

import numpy as np
import pytest
from scipy import integrate

from pwmix.errors import InvalidParameterError
from pwmix.mechanisms import (
    Geometric,
    GeometricMixture,
    Laplace,
    MixtureParams,
    TruncatedLaplace,
    geometric_pmf,
    geomix_cdf,
    geomix_constants,
    geomix_pmf,
    laplace_pdf,
    lapmix_cdf,
    lapmix_constants,
    lapmix_pdf,
)

from conftest import INT_PARAM_GRID, PARAM_GRID, PRESET_A


class TestLaplacePdf:
    def test_peak_values(self):
        assert laplace_pdf(0.0, 1.0) == pytest.approx(0.5)
        assert laplace_pdf(0.0, 10.0) == pytest.approx(0.05)

    def test_off_peak(self):
        # 0.05 * exp(-0.45), evaluated independently
        assert laplace_pdf(4.5, 10.0) == pytest.approx(0.03188140758108867, abs=1e-12)

    def test_invalid_scale(self):
        with pytest.raises(InvalidParameterError):
            laplace_pdf(0.0, 0.0)
        with pytest.raises(InvalidParameterError):
            laplace_pdf(0.0, -1.0)


class TestLapMixtureConstants:
    def test_preset_values(self):
        c = lapmix_constants(PRESET_A)
        assert c.a1 == pytest.approx(15.473551060200245, rel=1e-12)
        assert c.a2 == pytest.approx(1.4170398677250882, rel=1e-12)
        assert c.k_c == pytest.approx(-0.208519933862544, rel=1e-12)

    def test_equal_scales_collapse(self):
        c = lapmix_constants(MixtureParams(epsilon=0.3, ratio=1.0, break_point=7.0))
        assert c.a1 == pytest.approx(1.0, abs=1e-14)
        assert c.a2 == pytest.approx(1.0, abs=1e-14)
        assert c.k_c == pytest.approx(0.0, abs=1e-14)

    @pytest.mark.parametrize("params", PARAM_GRID)
    def test_identities(self, params):
        c = lapmix_constants(params)
        b1, b2, ct = params.outer_scale, params.inner_scale, params.break_point
        assert c.p1 + c.p2 == pytest.approx(2.0, abs=1e-12)
        mass = c.a1 * math.exp(-ct / b1) + c.a2 * (1 - math.exp(-ct / b2))
        assert mass == pytest.approx(1.0, abs=1e-12)
        left = c.a1 / (2 * b1) * math.exp(-ct / b1)
        right = c.a2 / (2 * b2) * math.exp(-ct / b2)
        assert left == pytest.approx(right, rel=1e-12)
        # CDF offset identity: 2 k_c == 1 - a2
        assert 2 * c.k_c == pytest.approx(1 - c.a2, abs=1e-12)


class TestLapMixturePdfCdf:
    def test_collapse_to_laplace(self):
        params = MixtureParams(epsilon=0.1, ratio=1.0, break_point=4.5)
        xs = np.linspace(-30, 30, 401)
        assert np.allclose(lapmix_pdf(xs, params), laplace_pdf(xs, 10.0), atol=1e-14)

    def test_preset_point_values(self):
        assert lapmix_pdf(0.0, PRESET_A) == pytest.approx(0.1417039867725088, rel=1e-12)
        # both one-sided limits at the break-point agree
        inner = lapmix_pdf(5.0, PRESET_A)
        outer = lapmix_pdf(np.nextafter(5.0, 6.0), PRESET_A)
        assert inner == pytest.approx(0.05212998346563599, rel=1e-12)
        assert outer == pytest.approx(inner, rel=1e-9)

    @pytest.mark.parametrize("params", PARAM_GRID)
    def test_pdf_integrates_to_one(self, params):
        ct = params.break_point
        inner, _ = integrate.quad(lambda x: lapmix_pdf(x, params), 0, ct)
        outer, _ = integrate.quad(lambda x: lapmix_pdf(x, params), ct, np.inf)
        assert 2 * (inner + outer) == pytest.approx(1.0, abs=1e-8)

    def test_cdf_limits_and_symmetry(self):
        for params in (PRESET_A, PARAM_GRID[3]):
            assert lapmix_cdf(0.0, params) == pytest.approx(0.5, abs=1e-14)
            assert lapmix_cdf(-1e6, params) == pytest.approx(0.0, abs=1e-200)
            assert lapmix_cdf(1e6, params) == pytest.approx(1.0, abs=1e-12)

    def test_cdf_preset_value(self):
        assert lapmix_cdf(-5.0, PRESET_A) == pytest.approx(0.05212998346563599, rel=1e-12)

    @pytest.mark.parametrize("params", PARAM_GRID)
    def test_cdf_monotone_and_continuous(self, params):
        ct = params.break_point
        xs = np.sort(np.concatenate([
            np.linspace(-4 * ct - 30, 4 * ct + 30, 10_000),
            [-ct - 1e-9, -ct, -ct + 1e-9, ct - 1e-9, ct, ct + 1e-9],
        ]))
        vals = lapmix_cdf(xs, params)
        assert np.all(np.diff(vals) >= -1e-15)
        # no step at the break-point
        for x0 in (-ct, ct):
            lo = lapmix_cdf(x0 - 1e-9, params)
            hi = lapmix_cdf(x0 + 1e-9, params)
            assert hi - lo < 1e-6

    @pytest.mark.parametrize("params", PARAM_GRID)
    def test_cdf_is_antiderivative_of_pdf(self, params):
        # away from the density kinks at 0 and +-c_t, where central
        # differences lose an order of accuracy
        ct = params.break_point
        xs = [
            x
            for x in np.linspace(-2 * ct, 2 * ct, 41)
            if min(abs(x - ct), abs(x + ct), abs(x)) > 0.05
        ]
        h = 1e-5
        for x in xs:
            deriv = (lapmix_cdf(x + h, params) - lapmix_cdf(x - h, params)) / (2 * h)
            assert deriv == pytest.approx(lapmix_pdf(x, params), abs=1e-6)


class TestGeometricPmf:
    def test_point_values(self):
        assert geometric_pmf(0, math.e) == pytest.approx(0.46211715726000974, rel=1e-12)
        assert geometric_pmf(5, math.exp(0.2)) == pytest.approx(0.03666580616530707, rel=1e-12)

    def test_symmetry(self):
        for k in range(0, 15):
            assert geometric_pmf(k, 1.7) == geometric_pmf(-k, 1.7)

    def test_invalid_alpha(self):
        with pytest.raises(InvalidParameterError):
            geometric_pmf(0, 1.0)
        with pytest.raises(InvalidParameterError):
            geometric_pmf(0, 0.5)


class TestGeoMixtureConstants:
    def test_preset_values(self):
        c = geomix_constants(PRESET_A)
        assert c.a1g == pytest.approx(16.551175180428622, rel=1e-12)
        assert c.a2g == pytest.approx(1.4055531756603794, rel=1e-12)
        assert c.g1 + c.g2 == pytest.approx(2.0, abs=1e-12)

    def test_collapse(self):
        c = geomix_constants(MixtureParams(epsilon=0.4, ratio=1.0, break_point=3.0))
        assert c.a1g == pytest.approx(1.0, abs=1e-14)
        assert c.a2g == pytest.approx(1.0, abs=1e-14)

    def test_non_integer_break_point_rejected(self):
        with pytest.raises(InvalidParameterError):
            geomix_constants(MixtureParams(epsilon=0.2, ratio=5.0, break_point=4.5))
        with pytest.raises(InvalidParameterError):
            GeometricMixture(MixtureParams(epsilon=0.2, ratio=5.0, break_point=4.5))

    @pytest.mark.parametrize("params", INT_PARAM_GRID)
    def test_mass_and_boundary_identities(self, params):
        c = geomix_constants(params)
        ct = params.integer_break_point()
        q1, q2 = 1 / params.outer_alpha, 1 / params.inner_alpha
        assert c.a1g * q1**ct + c.a2g * (1 - q2**ct) == pytest.approx(1.0, abs=1e-12)
        # break-point step heights agree between the two pieces
        lhs = c.a1g * (1 - q1) / (1 + q1) * q1**ct
        rhs = c.a2g * (1 - q2) / (1 + q2) * q2**ct
        assert lhs == pytest.approx(rhs, rel=1e-12)
        # the printed k_c equals the CDF-offset form
        alt = c.a1g * q1 ** (ct + 1) / (1 + q1) - c.a2g * q2 ** (ct + 1) / (1 + q2)
        assert c.k_c == pytest.approx(alt, rel=1e-10, abs=1e-14)


class TestGeoMixturePmfCdf:
    def test_preset_point_values(self):
        assert geomix_pmf(0, PRESET_A) == pytest.approx(0.14008866635680833, rel=1e-12)
        assert geomix_pmf(5, PRESET_A) == pytest.approx(0.05153574029379527, rel=1e-12)
        assert geomix_pmf(6, PRESET_A) == pytest.approx(0.018958939339637985, rel=1e-12)
        # decay across the break-point happens at the outer rate
        ratio = geomix_pmf(5, PRESET_A) / geomix_pmf(6, PRESET_A)
        assert math.log(ratio) == pytest.approx(PRESET_A.eps_r, abs=2e-4)

    def test_collapse(self):
        params = MixtureParams(epsilon=0.3, ratio=1.0, break_point=4.0)
        ks = np.arange(-30, 31)
        assert np.allclose(
            geomix_pmf(ks, params), geometric_pmf(ks, math.exp(0.3)), atol=1e-15
        )

    @pytest.mark.parametrize("params", INT_PARAM_GRID)
    def test_pmf_sums_to_one(self, params):
        # window chosen from the outer decay so the untouched tail is < 1e-12
        reach = params.integer_break_point() + int(40 / min(params.epsilon, params.eps_r)) + 40
        ks = np.arange(-reach, reach + 1)
        assert geomix_pmf(ks, params).sum() == pytest.approx(1.0, abs=1e-10)

    def test_cdf_preset_value(self):
        assert geomix_cdf(-6, PRESET_A) == pytest.approx(0.029992600422255825, rel=1e-12)

    def test_cdf_symmetry_at_half(self):
        p0 = geomix_pmf(0, PRESET_A)
        assert geomix_cdf(-0.5, PRESET_A) == pytest.approx((1 - p0) / 2, rel=1e-12)
        assert geomix_cdf(math.inf, PRESET_A) == pytest.approx(1.0)

    def test_three_way_split(self):
        below = geomix_cdf(-1, PRESET_A)
        at = geomix_pmf(0, PRESET_A)
        above = 1 - geomix_cdf(0, PRESET_A)
        assert below + at + above == pytest.approx(1.0, abs=1e-14)

    @pytest.mark.parametrize("params", INT_PARAM_GRID)
    def test_cdf_matches_running_pmf_sum(self, params):
        reach = params.integer_break_point() + int(40 / min(params.epsilon, params.eps_r)) + 40
        ks = np.arange(-reach, reach + 1)
        running = np.cumsum(geomix_pmf(ks, params))
        cdf_vals = geomix_cdf(ks, params)
        lower = float(geomix_cdf(-reach - 1, params))
        assert np.allclose(cdf_vals, running + lower, atol=1e-10)

    def test_cdf_right_continuous_step(self):
        # constant between integers, jumps at them
        assert geomix_cdf(2.0, PRESET_A) == geomix_cdf(2.7, PRESET_A)
        assert geomix_cdf(3.0, PRESET_A) > geomix_cdf(2.99, PRESET_A)

    @pytest.mark.parametrize("params", INT_PARAM_GRID)
    def test_cdf_monotone(self, params):
        xs = np.linspace(-60, 60, 10_000)
        vals = geomix_cdf(xs, params)
        assert np.all(np.diff(vals) >= -1e-15)


class TestSpecValidation:
    def test_params_validation(self):
        with pytest.raises(InvalidParameterError):
            MixtureParams(epsilon=0.0, ratio=1.0, break_point=1.0)
        with pytest.raises(InvalidParameterError):
            MixtureParams(epsilon=0.1, ratio=-2.0, break_point=1.0)
        with pytest.raises(InvalidParameterError):
            MixtureParams(epsilon=0.1, ratio=1.0, break_point=0.0)

    def test_spec_validation(self):
        with pytest.raises(InvalidParameterError):
            Laplace(scale=0.0)
        with pytest.raises(InvalidParameterError):
            Geometric(alpha=1.0)
        with pytest.raises(InvalidParameterError):
            TruncatedLaplace(scale=1.0, bound=0.0)
