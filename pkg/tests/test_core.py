import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stable_tails.core import (
    LevyCanonical,
    StableParams,
    c_alpha,
    c_alpha_regime,
    check_alpha,
    constants,
    from_levy,
    gamma_neg,
    levy_scale_factor,
    to_levy,
)
from stable_tails.errors import DomainError

ALPHA_GRID = [round(0.1 * k, 1) for k in range(1, 20) if k != 10]

alphas = st.floats(0.05, 1.95).filter(lambda a: abs(a - 1.0) > 1e-3)


def _sin_integral(alpha):
    """``int_0^inf x^(-alpha) sin x dx`` summed between consecutive zeros."""
    mpmath.mp.dps = 25
    f = lambda x: x ** (-alpha) * mpmath.sin(x)
    head = mpmath.quad(f, [0, mpmath.pi])
    return float(head + mpmath.quadosc(f, [mpmath.pi, mpmath.inf], zeros=lambda n: n * mpmath.pi))


class TestCheckAlpha:
    def test_one_is_excluded_with_reason(self):
        with pytest.raises(DomainError, match="excluded"):
            check_alpha(1.0)

    @pytest.mark.parametrize("bad", [0.0, 2.0, -0.5, 2.5, math.nan, math.inf])
    def test_outside_open_interval(self, bad):
        with pytest.raises(DomainError):
            check_alpha(bad)

    def test_range_restrictions(self):
        assert check_alpha(0.5, allow="low") == 0.5
        with pytest.raises(DomainError):
            check_alpha(1.5, allow="low")
        with pytest.raises(DomainError):
            check_alpha(0.5, allow="high")


class TestLevyCanonical:
    def test_normalizations(self):
        s, a = LevyCanonical.symmetric(0.7), LevyCanonical.asymmetric(0.7)
        assert (s.c1, s.c2) == (1.0, 1.0) and s.is_symmetric
        assert (a.c1, a.c2) == (1.0, 0.0) and a.is_totally_asymmetric

    def test_rejects_zero_mass(self):
        with pytest.raises(DomainError):
            LevyCanonical(0.5, 0.0, 0.0)


class TestConversion:
    def test_symmetric_half(self):
        p = from_levy(LevyCanonical.symmetric(0.5))
        expected = float(mpmath.gamma(-0.5) * mpmath.cos(3 * mpmath.pi / 4) * 2)
        assert p.beta == 0.0
        assert p.sigma**0.5 == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(5.0133, abs=1e-4)

    def test_asymmetric_beta(self):
        assert from_levy(LevyCanonical.asymmetric(0.5)).beta == 1.0

    def test_symmetric_three_halves(self):
        p = from_levy(LevyCanonical.symmetric(1.5))
        g = 4.0 * math.sqrt(math.pi) / 3.0
        assert gamma_neg(1.5) == pytest.approx(g, rel=1e-13)
        assert p.sigma**1.5 == pytest.approx(g * math.cos(math.pi / 4) * 2, rel=1e-12)

    @pytest.mark.parametrize("alpha", ALPHA_GRID)
    def test_scale_positive(self, alpha):
        assert levy_scale_factor(alpha) > 0
        assert from_levy(LevyCanonical.symmetric(alpha)).sigma > 0

    @pytest.mark.parametrize("alpha", ALPHA_GRID)
    def test_gamma_against_mpmath(self, alpha):
        assert gamma_neg(alpha) == pytest.approx(float(mpmath.gamma(-alpha)), rel=1e-12)

    @given(alphas, st.floats(0.01, 10.0), st.floats(0.0, 10.0))
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, alpha, c1, c2):
        back = to_levy(from_levy(LevyCanonical(alpha, c1, c2)))
        assert back.c1 == pytest.approx(c1, rel=1e-12)
        assert back.c2 == pytest.approx(c2, rel=1e-12, abs=1e-12 * c1)


class TestConstants:
    def test_half(self):
        assert c_alpha(0.5) == pytest.approx(math.sqrt(2.0 / math.pi), rel=1e-14)

    @pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75, 1.25, 1.5, 1.75])
    def test_sin_integral_oracle(self, alpha):
        assert abs(c_alpha(alpha) * _sin_integral(alpha) - 1.0) < 1e-6

    @pytest.mark.parametrize("alpha", ALPHA_GRID)
    def test_symmetric_tail_constant(self, alpha):
        k = constants(from_levy(LevyCanonical.symmetric(alpha)))
        assert k.tail_const_right == pytest.approx(1.0 / alpha, rel=1e-12)
        assert k.tail_const_left == pytest.approx(1.0 / alpha, rel=1e-12)

    def test_negative_skew_has_no_right_tail(self):
        k = constants(StableParams(0.7, -1.0, 1.0))
        assert k.tail_const_right == 0.0 and k.tail_const_left > 0

    def test_kappa_only_above_one(self):
        assert constants(StableParams(0.5, 1.0, 1.0)).kappa_alpha is None
        assert constants(StableParams(1.5, 1.0, 1.0)).kappa_alpha > 0

    @pytest.mark.parametrize("alpha,target,tol", [(0.01, 1.0, 0.05), (0.999, 2.0 / math.pi, 0.05),
                                                  (1.99, 0.01, 0.10)])
    def test_regimes(self, alpha, target, tol):
        label, exact, approx = c_alpha_regime(alpha)
        assert exact == pytest.approx(c_alpha(alpha))
        assert approx == pytest.approx(target)
        assert abs(exact - target) / target < tol

    def test_params_validation(self):
        with pytest.raises(DomainError):
            StableParams(0.5, 1.5, 1.0)
        with pytest.raises(DomainError):
            StableParams(0.5, 0.0, -1.0)
        with pytest.raises(DomainError):
            StableParams(0.5, 0.0, 1.0, mu=1.0)
