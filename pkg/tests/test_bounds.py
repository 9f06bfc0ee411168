import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stable_tails.analytic import CharFn
from stable_tails.bounds import (
    ASYM12_LEFT_IDS,
    ASYM12_RIGHT_IDS,
    LEMMA_GROUPS,
    SYM12_IDS,
    UPPER,
    ExponentialTilt,
    asym01_lower,
    asym01_upper,
    asym12_left,
    asym12_right,
    asym_jump_constant,
    crossover,
    evaluate,
    evaluate_or_refuse,
    get_spec,
    kallenberg_bound,
    kallenberg_chain,
    lemma_bounds,
    list_specs,
    reduced_bracket,
    reduced_root,
    sym12,
    sym_bounds_01,
    sym_jump_constant,
    t_tilde_y,
    t_y,
    t_y_residual,
)
from stable_tails.core import LevyCanonical, constants, from_levy
from stable_tails.errors import DomainError, RegimeError, RootNotFoundError
from stable_tails.sampler import TruncationSplit, xupper_batch

SQRT_E = math.sqrt(math.e)


def _by_id(evals):
    return {e.spec_id: e for e in evals}


class TestAsymBelowOne:
    def test_upper_example(self):
        e = asym01_upper(0.5, 100.0)
        assert e.threshold == pytest.approx(302.0)
        assert e.bound_value == pytest.approx(0.4)

    def test_upper_boundary(self):
        e = asym01_upper(0.5, 4.0)
        assert e.valid and e.bound_value == 1.0 and e.raw_value == pytest.approx(2.0) and e.vacuous
        with pytest.raises(RegimeError, match=r"\(1/alpha\)\^\(1/alpha\)"):
            asym01_upper(0.5, 3.9)

    def test_lower_examples(self):
        assert asym01_lower(0.5, 100.0).bound_value == pytest.approx((2 / 3) * 0.25 / 6)
        assert asym01_lower(0.5, 1.0).bound_value == pytest.approx(1 / 9)
        assert asym01_lower(0.5, 100.0, theta=1 - 1e-6).bound_value < 1e-12
        assert asym01_lower(0.5, 100.0, theta=0.25).threshold == pytest.approx(100.5)

    def test_lower_domain(self):
        with pytest.raises(RegimeError):
            asym01_lower(0.5, 0.5)
        with pytest.raises(RegimeError):
            asym01_lower(0.5, 2.0, theta=1.0)


class TestSymmetricBelowOne:
    def test_example(self):
        up, lo = sym_bounds_01(0.5, 1e4)
        assert up.bound_value == pytest.approx(0.08)
        assert lo.bound_value == pytest.approx(1 / 104)

    def test_small_y(self):
        up, lo = sym_bounds_01(0.5, 1e-12)
        assert up.bound_value == 1.0
        assert lo.bound_value == pytest.approx(0.25, rel=1e-5)

    @pytest.mark.parametrize("alpha", [0.2, 0.5, 0.9])
    def test_sandwich(self, alpha):
        for y in np.geomspace(1e-3, 1e6, 40):
            up, lo = sym_bounds_01(alpha, y)
            assert up.bound_value >= lo.bound_value


class TestAsymAboveOne:
    def test_entry_lower_is_small_but_positive(self):
        y = 2 / math.sqrt(0.1)
        e = _by_id(asym12_right(1.9, y))["asym12.right.mid.lower"]
        ref = (math.exp(-1) * y**-1.9 + math.exp(-0.1 * y * y)) / (400 * SQRT_E)
        assert e.bound_value == pytest.approx(ref)
        assert 0 < e.bound_value < 1e-3

    def test_big_regime_examples(self):
        e = _by_id(asym12_right(1.5, 4.0))
        assert (e["asym12.right.big.upper"].bound_value, e["asym12.right.big.upper"].raw_value) == (1.0, 1.0)
        e = _by_id(asym12_right(1.5, 10.0))
        assert e["asym12.right.big.upper"].bound_value == pytest.approx(0.2530, abs=1e-4)
        assert e["asym12.right.big.lower"].bound_value == pytest.approx(3.162e-5, rel=1e-3)
        assert e["asym12.right.big.upper"].threshold == pytest.approx(18.0)
        assert e["asym12.right.big.lower"].threshold == pytest.approx(8.0)

    def test_both_regimes_at_switch(self):
        # alpha = 1.9: entry 2/sqrt(0.1) < 1/(2-alpha) = 10, so both regimes hold there
        e = asym12_right(1.9, 1 / (2 - 1.9))
        assert {x.regime for x in e} == {"mid", "big"} and len(e) == 4

    def test_big_regime_waits_for_entry(self):
        # at alpha = 1.5, 1/(2-alpha) = 2 lies below the entry 2/sqrt(1/2)
        assert not get_spec("asym12.right.big.upper").applies(1.5, 2.5)
        assert get_spec("asym12.right.big.upper").applies(1.5, 2.0 * math.sqrt(2.0))

    def test_below_entry_refused(self):
        with pytest.raises(RegimeError, match="2/sqrt"):
            asym12_right(1.5, 2.0)
        with pytest.raises(RegimeError):
            asym12_left(1.5, 2.0)

    def test_left_examples(self):
        e = _by_id(asym12_left(1.5, 4.0))
        assert e["asym12.left.large.upper"].bound_value == pytest.approx(math.exp(-27 / 16))
        assert e["asym12.left.large.upper"].threshold == pytest.approx(-6.0)
        e = _by_id(asym12_left(1.5, 3.0))
        assert e["asym12.left.mid.upper"].bound_value == pytest.approx(math.exp(4 / 3 - 2.25))
        assert e["asym12.left.mid.lower"].threshold == pytest.approx(-3 / 24 - 2)

    @pytest.mark.parametrize("alpha", [1.2, 1.5, 1.8])
    def test_left_mid_sweep(self, alpha):
        d = 2 - alpha
        for y in np.linspace(2 / math.sqrt(d), 2 / d, 15):
            e = _by_id(asym12_left(alpha, y))
            assert e["asym12.left.mid.lower"].bound_value <= e["asym12.left.mid.upper"].bound_value


class TestSymmetricAboveOne:
    def test_large_regime_example(self):
        e = _by_id(sym12(1.5, 10.0))
        assert e["sym12.large.upper"].bound_value == pytest.approx(0.1687, abs=1e-4)
        assert e["sym12.large.lower"].bound_value == pytest.approx(0.010114, abs=1e-6)
        assert e["sym12.large.upper"].threshold == 20.0

    def test_entry(self):
        y = 2 / math.sqrt(0.1)
        e = _by_id(sym12(1.9, y))
        assert e["sym12.mid.upper"].threshold == pytest.approx(2 * y)
        assert 0 < e["sym12.mid.lower"].bound_value <= e["sym12.mid.upper"].bound_value

    def test_sweep(self):
        d = 2 - 1.9
        for y in np.linspace(2 / math.sqrt(d), 2 / d, 10):
            e = _by_id(sym12(1.9, y))
            assert 0 < e["sym12.mid.lower"].bound_value <= e["sym12.mid.upper"].bound_value


ALPHAS = {"low": [0.1, 0.3, 0.5, 0.7, 0.9, 0.99], "high": [1.01, 1.2, 1.5, 1.8, 1.9, 1.99]}


def _grid(alpha):
    d = abs(2 - alpha)
    pts = [-5.0, 0.0, 0.5, 1.0, 2.0, (1 / alpha) ** (1 / alpha), 2 / math.sqrt(d), 1 / d, 2 / d, 10.0, 1e3, 1e8]
    return sorted(set(pts + [p * (1 + 1e-12) for p in pts] + [p * (1 - 1e-12) for p in pts]))


class TestRegistry:
    def test_ids_unique_and_complete(self):
        ids = [s.id for s in list_specs()]
        assert len(ids) == len(set(ids))
        for i in ASYM12_RIGHT_IDS + ASYM12_LEFT_IDS + SYM12_IDS:
            assert i in ids
        for g in LEMMA_GROUPS:
            assert list_specs(g + ".")

    def test_unknown_id(self):
        with pytest.raises(DomainError):
            get_spec("nope")

    @pytest.mark.parametrize("spec", list_specs(), ids=lambda s: s.id)
    def test_refusal_grid(self, spec):
        for alpha in ALPHAS["low"] + ALPHAS["high"]:
            for y in _grid(alpha):
                why = spec.refusal(alpha, y)
                r = evaluate_or_refuse(spec, alpha, y)
                if why is None:
                    e = evaluate(spec, alpha, y)
                    assert 0.0 <= e.bound_value <= 1.0
                    assert r.valid and r.bound_value == e.bound_value
                else:
                    with pytest.raises(RegimeError):
                        evaluate(spec, alpha, y)
                    assert not r.valid and math.isnan(r.bound_value) and r.message

    def test_wrong_range_refused(self):
        with pytest.raises(RegimeError):
            evaluate("asym01.upper", 1.5, 100.0)
        with pytest.raises(RegimeError):
            evaluate("sym12.large.upper", 0.5, 100.0)

    def test_aux_validation(self):
        with pytest.raises(DomainError):
            evaluate("asym01.upper", 0.5, 100.0, {"theta": 0.3})

    @given(st.floats(0.5, 1.95).filter(lambda a: abs(a - 1) > 1e-3), st.floats(1e-3, 1e9))
    @settings(max_examples=300, deadline=None)
    def test_clamped(self, alpha, y):
        for spec in list_specs():
            e = evaluate_or_refuse(spec, alpha, y)
            if e.valid:
                assert 0.0 <= e.bound_value <= 1.0
                assert e.vacuous == (e.raw_value >= 1.0 if e.direction == UPPER else e.bound_value <= 0.0)

    def test_scale(self):
        a = evaluate("asym01.upper", 0.5, 100.0, scale=0.5)
        assert a.bound_value == pytest.approx(0.2)

    @pytest.mark.parametrize("spec_id,law,alpha", [
        ("asym01.upper", "asymmetric", 0.5), ("sym01.upper", "symmetric", 0.5),
        ("asym12.right.big.upper", "asymmetric", 1.5), ("sym12.large.upper", "symmetric", 1.5),
        ("asym01.lower", "asymmetric", 0.5), ("sym01.lower", "symmetric", 0.5),
        ("asym12.right.big.lower", "asymmetric", 1.5), ("sym12.large.lower", "symmetric", 1.5),
    ])
    def test_consistent_with_tail_constant(self, spec_id, law, alpha):
        # P(X >= t) ~ C t^-alpha: upper bounds sit above it, lower bounds below
        canon = LevyCanonical.symmetric(alpha) if law == "symmetric" else LevyCanonical.asymmetric(alpha)
        C = constants(from_levy(canon)).tail_const_right
        spec = get_spec(spec_id)
        for y in (1e4, 1e5, 1e6):
            e = evaluate(spec, alpha, y)
            scaled = e.raw_value * e.threshold**alpha
            assert scaled >= C if spec.direction == UPPER else scaled <= C


class TestLemmas:
    def test_asym_big_jump_lower(self):
        e = _by_id(lemma_bounds(1.5, 2.0, "asym12.xupper"))
        assert e["asym12.xupper.lower"].bound_value == pytest.approx(0.12102, abs=1e-5)
        assert e["asym12.xupper.lower_simple"].bound_value == pytest.approx(0.10722, abs=1e-5)
        assert e["asym12.xupper.lower"].threshold == pytest.approx(0.0)

    def test_jump_constant(self):
        # sum k^2/k! = 2e, so the alpha -> 1 limit of the constant is 2, not 2/e
        assert asym_jump_constant(1.0 + 1e-9) == pytest.approx(2.0, rel=1e-6)
        assert asym_jump_constant(1.5) > 2 / math.e
        assert sym_jump_constant(1.5) > 0

    def test_small_jump_symmetric(self):
        e = _by_id(lemma_bounds(1.5, 2.0, "sym12.xlower"))
        assert e["sym12.xlower.upper"].bound_value == pytest.approx(math.exp(2 / 45 - 0.5))

    def test_known_invalid_flags(self):
        bad = {s.id for s in list_specs() if s.known_invalid}
        assert bad == {"asym12.xupper.upper_simple", "sym12.xupper.lower"}

    def test_simple_ceiling_is_exceeded(self):
        # the (2/e) y^-alpha ceiling on P(X^1 >= y - b) fails at alpha = 1.5, y = 4
        x = xupper_batch(TruncationSplit(1.5), 1_000_000, seed=1)
        e = evaluate("asym12.xupper.upper_simple", 1.5, 4.0)
        p = (x >= e.threshold).mean()
        se = math.sqrt(p * (1 - p) / x.size)
        assert p - 5 * se > e.bound_value
        assert p <= evaluate("asym12.xupper.upper", 1.5, 4.0).bound_value

    def test_symmetric_floor_fails_at_one(self):
        x = xupper_batch(TruncationSplit(1.5, "symmetric"), 1_000_000, seed=2)
        e = evaluate("sym12.xupper.lower", 1.5, 1.0)
        p = (x >= 1.0).mean()
        assert p + 5 * math.sqrt(p * (1 - p) / x.size) < e.bound_value
        e = evaluate("sym12.xupper.lower", 1.5, 2.0)
        assert (x >= 2.0).mean() > e.bound_value

    def test_unknown_group(self):
        with pytest.raises(DomainError):
            lemma_bounds(1.5, 2.0, "asym12.nothing")

    def test_group_refusal(self):
        with pytest.raises(RegimeError):
            lemma_bounds(1.5, 0.5, "asym12.xupper")


class TestTilt:
    @pytest.mark.parametrize("alpha", [1.2, 1.5, 1.8])
    def test_root_at_regime_entry(self, alpha):
        y = 2 / (2 - alpha)
        assert t_y(alpha, y) == pytest.approx(-1.0, rel=1e-12)
        for yy in (y, 2 * y, 100.0 * y):
            t = t_y(alpha, yy)
            assert abs(t) >= 1.0 - 1e-12
            assert t_y_residual(alpha, yy, t) < 1e-10
            assert abs(t_tilde_y(alpha, yy)) > abs(t)

    def test_guard(self):
        with pytest.raises(RegimeError):
            t_y(1.5, 3.9)

    def test_tilts(self):
        assert ExponentialTilt.asym_right(1.5, 4.0).t == pytest.approx(2.0)
        assert ExponentialTilt.asym_left_mid(1.5, 4.0).pz_factor == pytest.approx((1 - 1 / SQRT_E) ** 2)
        assert ExponentialTilt.symmetric(1.5, 4.0).t == pytest.approx(2 / math.sqrt(2))
        with pytest.raises(DomainError):
            ExponentialTilt(1.0, 1.0, "x", 1.5, 1.0)


class TestKallenberg:
    def test_degenerate(self):
        assert kallenberg_bound(lambda t: 1.0, 5.0) == 0.0

    def test_decays(self):
        cf = CharFn.stable(LevyCanonical.symmetric(0.5), method="closed")
        vals = [kallenberg_bound(cf, y) for y in (1e2, 1e4, 1e6, 1e8, 1e10)]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert vals[-1] < 1e-3

    @pytest.mark.parametrize("y", [10.0, 100.0])
    def test_chain(self, y):
        cf = CharFn.stable(LevyCanonical.symmetric(0.5), method="closed")
        ch = kallenberg_chain(0.5, y)
        assert ch.ordered()
        assert kallenberg_bound(cf, y) <= ch.integral

    def test_domain(self):
        with pytest.raises(DomainError):
            kallenberg_bound(lambda t: 1.0, 0.0)


class TestCrossover:
    def test_reduced_example(self):
        lo, hi = reduced_bracket(0.1)
        assert (lo, hi) == (pytest.approx(23.03, abs=0.01), pytest.approx(46.05, abs=0.01))
        r = reduced_root(0.1)
        assert r == pytest.approx(35.77, abs=0.01) and lo < r < hi
        assert abs(0.1 * r - math.log(r)) < 1e-9

    def test_reduced_domain(self):
        with pytest.raises(DomainError):
            reduced_root(0.5)

    def test_root_condition(self):
        with pytest.warns(RuntimeWarning):
            res = crossover(1.5, 1.0, 10.0, 2.0)
        y = res.y_star
        assert abs(math.log(y**-1.5) - math.log(10.0 * math.exp(-2.0 * 0.5 * y * y))) < 1e-9
        assert res.reduced_root is None and not res.two_root_guarantee

    def test_no_root(self):
        # equal coefficients with kappa delta = 1: y^-a - e^-y^2 stays positive
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            with pytest.raises(RootNotFoundError):
                crossover(1.5, 1.0, 1.0, 2.0)

    def test_near_two(self):
        res = crossover(1.9)
        assert res.y_star == pytest.approx(9.915, abs=1e-3)
        assert res.reduced_root == pytest.approx(35.7715, abs=1e-4)
        assert 1 / 3 <= res.ratio <= 3

    def test_bad_coefficients(self):
        with pytest.raises(DomainError):
            crossover(1.9, -1.0, 1.0, 0.5)
