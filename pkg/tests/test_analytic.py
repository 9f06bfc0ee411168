import math

import mpmath
import numpy as np
import pytest

from stable_tails.analytic import (
    CharFn,
    DensityModel,
    asymptotic_left_rate,
    density_inversion,
    inversion_mass,
    kappa_alpha,
    laplace_envelope,
    mgf_S,
    residual_exponent,
    residual_summary,
    unit_integrals,
    x1_laplace_exponent,
    x1_log_laplace,
    x1_tail_probability,
)
from stable_tails.analytic.envelopes import (
    ASYM_LEFT_LARGE,
    ASYM_LEFT_SMALL,
    ASYM_RIGHT,
    SYMMETRIC_REGIME,
    symmetric_correction,
)
from stable_tails.core import LevyCanonical, StableParams, constants, from_levy, gamma_neg
from stable_tails.errors import DomainError, SeriesDomainError


class TestCharacteristicFunction:
    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8, 1.2, 1.5, 1.9])
    def test_unit_integrals_against_gamma(self, alpha):
        jc, js = unit_integrals(alpha)
        g = gamma_neg(alpha)
        assert jc == pytest.approx(-g * math.cos(0.5 * math.pi * alpha), rel=1e-8)
        assert js == pytest.approx(-g * math.sin(0.5 * math.pi * alpha), rel=1e-8)

    @pytest.mark.parametrize("sym", [True, False])
    @pytest.mark.parametrize("alpha", [0.5, 1.5])
    def test_basic_properties(self, alpha, sym):
        canon = LevyCanonical.symmetric(alpha) if sym else LevyCanonical.asymmetric(alpha)
        cf = CharFn.stable(canon)
        t = np.linspace(0.1, 4.0, 12)
        v = cf(t)
        assert cf(0.0) == pytest.approx(1.0)
        assert np.all(np.abs(v) <= 1.0 + 1e-14)
        assert np.allclose(cf(-t), np.conj(v), atol=1e-13)
        assert np.allclose(v, CharFn.stable(canon, method="closed")(t), rtol=1e-8)

    def test_symmetric_is_real(self):
        v = CharFn.stable(LevyCanonical.symmetric(1.5))(np.linspace(-3, 3, 13))
        assert np.max(np.abs(np.imag(v))) < 1e-12

    def test_symmetric_exponent(self):
        alpha = 1.5
        mpmath.mp.dps = 25
        g = lambda z: z ** (-alpha - 1)
        # (1 - cos) on [1, inf) splits into 1/alpha minus an oscillatory part
        jc = float(mpmath.quad(lambda z: 2 * mpmath.sin(z / 2) ** 2 * g(z), [0, 1]) + 1 / mpmath.mpf(alpha)
                   - mpmath.quadosc(lambda z: mpmath.cos(z) * g(z), [1, mpmath.inf], omega=1))
        assert CharFn.stable(LevyCanonical.symmetric(alpha))(1.0).real == pytest.approx(math.exp(-2 * jc), rel=1e-8)

    def test_split_needs_high_alpha(self):
        with pytest.raises(DomainError):
            CharFn.inner(0.5)


class TestResidual:
    def test_summary_examples(self):
        s = residual_summary(0.5, 2.0)
        assert (s.mean, s.variance) == (pytest.approx(2.0), pytest.approx(2.0 / 3.0))
        s = residual_summary(0.5, 8.0)
        assert (s.mean, s.variance) == (pytest.approx(0.5), pytest.approx(1.0 / 96.0))

    @pytest.mark.parametrize("alpha,x", [(0.3, 0.5), (0.5, 2.0), (0.8, 8.0)])
    def test_moments_from_exponent(self, alpha, x):
        s = residual_summary(alpha, x)
        h = 1e-3 * min(1.0, 1.0 / s.mean)
        f1, f2 = residual_exponent(alpha, x, -h), residual_exponent(alpha, x, -2 * h)
        # f(l) = -l m - l^2 v / 2 + O(l^3)
        assert (4 * f1 - f2) / (2 * h) == pytest.approx(s.mean, rel=1e-5)
        assert (2 * f1 - f2) / h**2 == pytest.approx(s.variance, rel=1e-2)

    @pytest.mark.parametrize("lam", [-0.5, -1.0, -2.0])
    def test_mgf_jensen(self, lam):
        s = residual_summary(0.5, 2.0)
        m = mgf_S(0.5, 2.0, lam)
        assert math.exp(lam * s.mean) <= m <= 1.0
        assert s.mgf(lam) == pytest.approx(m)

    def test_exponent_domain(self):
        assert residual_exponent(0.5, 1.0, 0.0) == 0.0
        with pytest.raises(DomainError):
            residual_exponent(0.5, 1.0, 0.1)
        with pytest.raises(DomainError):
            residual_summary(1.5, 1.0)


class TestEnvelopes:
    def test_examples(self):
        assert laplace_envelope(1.5, SYMMETRIC_REGIME).lower(1.0) == pytest.approx(math.e**2)
        left = laplace_envelope(1.5, ASYM_LEFT_LARGE)
        assert left.upper(-2.0) == pytest.approx(math.exp(4 * 2**1.5 - 4))
        assert left.lower(-2.0) == pytest.approx(math.exp(4 * 2**1.5 - 4) ** (1 / math.e))

    def test_symmetric_correction(self):
        assert symmetric_correction(0.0) == 0.0
        assert symmetric_correction(1.0) == pytest.approx((14 / 15 + math.cosh(1) / 15) / 24)

    @pytest.mark.parametrize("alpha", [1.2, 1.5, 1.8])
    def test_left_large_brackets(self, alpha):
        env = laplace_envelope(alpha, ASYM_LEFT_LARGE)
        for t in (-1.0, -2.0, -5.0):
            ex = env.log_exact(t)
            assert env.log_lower(t) <= ex <= env.log_upper(t)

    def test_domains(self):
        with pytest.raises(DomainError):
            laplace_envelope(1.5, ASYM_RIGHT).log_upper(-0.1)
        with pytest.raises(DomainError):
            laplace_envelope(1.5, ASYM_LEFT_SMALL).log_upper(-1.5)
        with pytest.raises(DomainError):
            laplace_envelope(1.5, "bogus")
        assert laplace_envelope(1.5, SYMMETRIC_REGIME).contains([-10.0, 10.0])

    @pytest.mark.parametrize("sym", [False, True])
    def test_exact_exponent_two_ways(self, sym):
        for t in (-2.0, -0.5, 0.7, 2.0):
            a = x1_laplace_exponent(1.5, t, sym)
            b = float(x1_log_laplace(1.5, t, sym)[0].real)
            assert a == pytest.approx(b, rel=1e-10)


class TestX1Tail:
    @pytest.mark.parametrize("sym", [False, True])
    @pytest.mark.parametrize("x", [-0.5, 0.3, 1.0])
    def test_sides_sum_to_one(self, x, sym):
        r = x1_tail_probability(1.5, x, "right", sym).probability
        l = x1_tail_probability(1.5, x, "left", sym).probability
        assert r + l == pytest.approx(1.0, abs=1e-9)

    def test_below_chernoff(self):
        for x in (1.0, 3.0, 6.0):
            t = x1_tail_probability(1.5, x)
            assert 0 < t.probability <= t.chernoff
        t = x1_tail_probability(1.5, -3.0, "left")
        assert 0 < t.probability <= t.chernoff

    def test_symmetric_tails_match(self):
        r = x1_tail_probability(1.5, 2.0, "right", True).probability
        l = x1_tail_probability(1.5, -2.0, "left", True).probability
        assert r == pytest.approx(l, rel=1e-8)

    def test_bad_side(self):
        with pytest.raises(DomainError):
            x1_tail_probability(1.5, 1.0, "up")


class TestDensity:
    @pytest.mark.parametrize("x", [0.0, 0.5, 1.0, 3.0])
    def test_gaussian_limit(self, x):
        v = DensityModel(2.0).series(x)
        assert v.converged
        assert v.value == pytest.approx(math.exp(-x * x / 4) / (2 * math.sqrt(math.pi)), rel=1e-10)

    def test_half_at_three(self):
        # unit symmetric alpha = 1/2 through the Fresnel-type closed form
        # f(x) = x^(-3/2) / sqrt(2 pi) * [sin(k)(1/2 - S(z)) + cos(k)(1/2 - C(z))], k = 1/(4x), z = sqrt(2k/pi)
        x = 3.0
        k = 1.0 / (4.0 * x)
        z = math.sqrt(2 * k / math.pi)
        S, C = float(mpmath.fresnels(z)), float(mpmath.fresnelc(z))
        ref = x**-1.5 / math.sqrt(2 * math.pi) * (math.sin(k) * (0.5 - S) + math.cos(k) * (0.5 - C))
        m = DensityModel(0.5)
        assert m.series(x).value == pytest.approx(ref, rel=1e-9)
        assert m.inversion(x) == pytest.approx(ref, rel=1e-6)

    @pytest.mark.parametrize("alpha", [0.5, 1.5])
    def test_symmetry(self, alpha):
        p = StableParams(alpha, 0.0, 1.0)
        for x in (0.5, 2.0):
            assert density_inversion(p, -x) == pytest.approx(density_inversion(p, x), rel=1e-9)
            assert DensityModel(alpha).series(-x).value == DensityModel(alpha).series(x).value

    def test_low_alpha_origin(self):
        with pytest.raises(SeriesDomainError):
            DensityModel(0.5).series(0.0)

    def test_printed_sin_convention_is_not_a_density(self):
        good = DensityModel(0.5).series(2.0).value
        bad = DensityModel(0.5, sin_convention="printed").series(2.0).value
        assert abs(bad - good) / good > 0.1

    def test_domain(self):
        with pytest.raises(DomainError):
            DensityModel(1.0)
        with pytest.raises(DomainError):
            DensityModel(0.5, sin_convention="other")

    def test_mass(self):
        mass, core, tail = inversion_mass(1.5)
        assert core + tail == mass and abs(mass - 1.0) < 1e-4


class TestAsymptotics:
    def test_kappa_matches_constants(self):
        p = from_levy(LevyCanonical.asymmetric(1.5))
        assert constants(p).kappa_alpha == pytest.approx(kappa_alpha(1.5, p.sigma))

    def test_rate_decreases(self):
        ys = [1.0, 2.0, 5.0, 10.0, 20.0]
        r = [asymptotic_left_rate(1.5, 1.0, y) for y in ys]
        assert all(a > b for a, b in zip(r, r[1:]))
        # the printed exponent leaves only the polynomial prefactor asymptotically
        k = kappa_alpha(1.5, 1.0)
        y = 1e4
        lead = (y / k) ** -1.5 / math.sqrt(2 * 1.5 * math.pi * 0.5)
        assert asymptotic_left_rate(1.5, 1.0, y, printed_exponent=True) == pytest.approx(lead, rel=1e-5)

    def test_near_gaussian_exponent(self):
        # log of the rate grows like |y|^(alpha/(alpha-1)), about |y|^2 near alpha = 2
        f = lambda y: -math.log(asymptotic_left_rate(1.95, 1.0, y))
        slope = (math.log(f(40.0)) - math.log(f(20.0))) / math.log(2.0)
        assert slope == pytest.approx(1.95 / 0.95, rel=0.02)
        assert abs(slope - 2.0) < 0.1

    def test_domain(self):
        with pytest.raises(DomainError):
            asymptotic_left_rate(1.5, 1.0, 0.0)
        with pytest.raises(DomainError):
            asymptotic_left_rate(1.5, -1.0, 1.0)
