"""The twelve acceptance criteria, each at its stated tolerance.

Every test carries a ``criterion`` marker; the conftest prints one
PASS/FAIL line per criterion in the terminal summary.
"""

import math
import time

import mpmath
import numpy as np
import pytest

from stable_tails.analytic import CharFn, DensityModel, inversion_mass, laplace_envelope
from stable_tails.analytic.envelopes import ASYM_LEFT_SMALL, ASYM_RIGHT, SYMMETRIC_REGIME
from stable_tails.bounds import UPPER_PRESET, crossover, kallenberg_bound, kallenberg_chain, reduced_bracket, \
    reduced_root, t_y, t_y_residual
from stable_tails.core import LevyCanonical
from stable_tails.verify import (
    CAMPAIGNS,
    FAIL,
    PASS,
    VACUOUS,
    SamplerSource,
    ks_test,
    levy_cdf,
    run_campaign,
    verify_cf,
    verify_mgf,
    verify_residual_moments,
)

SEED = 1


def _detail(request, text):
    request.node.user_properties.append(("detail", text))


def _levy_scale_from_cf():
    """Scale ``c`` of the Lévy law matching the alpha = 1/2 Lévy measure ``x^{-3/2} dx``.

    The log-CF at ``t = 1`` is ``E = int_0^inf (e^{ix} - 1) x^{-3/2} dx``; the
    Lévy law has log-CF ``-sqrt(-2ic)``, so ``c = i E^2 / 2``.
    """
    mpmath.mp.dps = 30
    h = mpmath.mpf(-1.5)
    inf = mpmath.inf
    # the non-oscillating -x^{-3/2} part integrates to -2 over [1, inf)
    re = (mpmath.quad(lambda x: (mpmath.cos(x) - 1) * x**h, [0, 1])
          + mpmath.quadosc(lambda x: mpmath.cos(x) * x**h, [1, inf], omega=1) - 2)
    im = (mpmath.quad(lambda x: mpmath.sin(x) * x**h, [0, 1])
          + mpmath.quadosc(lambda x: mpmath.sin(x) * x**h, [1, inf], omega=1))
    c = 1j * complex(re, im) ** 2 / 2.0
    return c


@pytest.mark.criterion(1, "residual series moments")
def test_c01_residual_moments(request):
    t0 = time.perf_counter()
    worst = 0.0
    for alpha in (0.3, 0.5, 0.8):
        for x in (0.5, 2.0, 8.0):
            r = verify_residual_moments(alpha, x, n=1_000_000, seed=SEED)
            assert r.passed, f"alpha={alpha} x={x}: mean z={r.mean_z:.2f}, var z={r.var_z:.2f}"
            worst = max(worst, abs(r.mean_z), abs(r.var_z))
    elapsed = time.perf_counter() - t0
    _detail(request, f"max |z| = {worst:.2f}, {elapsed:.1f} s")
    assert elapsed < 60.0


@pytest.mark.criterion(2, "residual MGF vs quadrature")
def test_c02_mgf(request):
    r = verify_mgf(0.5, 2.0, [-0.5, -1.0, -2.0], n=1_000_000, seed=SEED)
    _detail(request, "rel err " + ", ".join(f"{e:.2e}" for e in r.rel_err))
    assert r.passed(0.015)


@pytest.mark.criterion(3, "alpha = 1/2 Levy closed form")
def test_c03_levy_closed_form(request):
    c = _levy_scale_from_cf()
    assert abs(c.imag) < 1e-12 and c.real == pytest.approx(2 * math.pi, rel=1e-12)
    c = c.real
    stats = {}
    for method in ("series", "cms"):
        x = SamplerSource("asymmetric", 0.5, method=method).draw(100_000, SEED)
        stats[method] = ks_test(x, lambda v: levy_cdf(v, c)).statistic
    _detail(request, f"c = {c:.12g}; KS series {stats['series']:.4f}, cms {stats['cms']:.4f}")
    assert stats["series"] < 0.005
    assert stats["cms"] < 0.005


def _campaign(name, request):
    res = run_campaign(CAMPAIGNS[name], n=1_000_000, seed=SEED)
    c = res.counts()
    _detail(request, " ".join(f"{k}={v}" for k, v in c.items()))
    return res


@pytest.mark.criterion(4, "alpha < 1 theorem campaign")
def test_c04_theorem01_campaign(request):
    res = _campaign("theorem01", request)
    alphas = {a for _, a, _ in CAMPAIGNS["theorem01"].entries}
    assert alphas == {0.3, 0.5, 0.7}
    assert all(len(g) == 5 for _, _, g in CAMPAIGNS["theorem01"].entries)
    assert res.failures() == []
    assert res.counts()[PASS] > 0


@pytest.mark.criterion(5, "asymmetric alpha in (1,2) campaign")
def test_c05_asym12_campaign(request):
    res = _campaign("asym12", request)
    assert res.failures() == []
    ids = {r.spec_id for r in res.reports}
    for part in ("right.mid", "right.big", "left.mid", "left.large"):
        assert any(part in i for i in ids)
    for r in res.reports:
        for p in r.results:
            if p.vacuous:
                assert p.verdict == VACUOUS
    assert max(p.estimate.n for r in res.reports for p in r.results if p.estimate) <= 10_000_000


@pytest.mark.criterion(6, "symmetric alpha in (1,2) campaign")
def test_c06_sym12_campaign(request):
    res = _campaign("sym12", request)
    assert res.failures() == []
    assert {r.alpha for r in res.reports} == {1.5, 1.9}


@pytest.mark.criterion(7, "big-jump part X^1 lemma checks")
def test_c07_xupper_lemmas(request):
    res = run_campaign(CAMPAIGNS["xupper"], n=1_000_000, seed=SEED)
    fails = res.failures()
    c = res.counts()
    _detail(request, f"pass={c[PASS]} fail={c[FAIL]} vacuous={c[VACUOUS]}"
            + (f"; fails at {sorted({(s, a) for s, a, _ in fails})}" if fails else ""))
    for sid, alpha, grid in CAMPAIGNS["xupper"].entries:
        assert grid == (1.5, 2.0, 4.0, 8.0) and alpha in (1.5, 1.8)
    assert fails == [], f"{len(fails)} points fail"


@pytest.mark.criterion(8, "X_1 Laplace envelopes and tilt root")
def test_c08_envelopes(request):
    worst = math.inf
    for alpha in (1.2, 1.5, 1.8):
        right = laplace_envelope(alpha, ASYM_RIGHT)
        left = laplace_envelope(alpha, ASYM_LEFT_SMALL)
        sym = laplace_envelope(alpha, SYMMETRIC_REGIME)
        for t in (0.25, 0.5, 1.0, -0.25, -0.5, -1.0):
            env = right if t > 0 else left
            ex = env.log_exact(t)
            assert env.log_lower(t) <= ex <= env.log_upper(t), (alpha, t)
            sx = sym.log_exact(t)
            assert sym.log_lower(t) <= sx <= sym.log_upper(t), (alpha, t)
            worst = min(worst, ex - env.log_lower(t), env.log_upper(t) - ex)
        for y in (2.0 / (2.0 - alpha), 10.0 / (2.0 - alpha), 100.0):
            if y >= 2.0 / (2.0 - alpha):
                assert t_y_residual(alpha, y, t_y(alpha, y)) < 1e-10
    _detail(request, f"smallest log-margin {worst:.3g}")


@pytest.mark.criterion(9, "characteristic functions of the series samplers")
def test_c09_cf(request):
    t = np.linspace(0.1, 3.0, 30)
    cases = [
        ("asym a=0.5", SamplerSource("asymmetric", 0.5, "series"), LevyCanonical.asymmetric(0.5)),
        ("asym a=1.5", SamplerSource("asymmetric", 1.5, "series"), LevyCanonical.asymmetric(1.5)),
        ("sym a=1.5", SamplerSource("symmetric", 1.5, "series"), LevyCanonical.symmetric(1.5)),
    ]
    errs = {}
    for name, src, canon in cases:
        r = verify_cf(src, CharFn.stable(canon, method="quad"), t, n=1_000_000, seed=SEED)
        errs[name] = r.sup_error
        assert r.sup_error < 0.02, name
    worst = 0.0
    for sym in (False, True):
        for alpha in (1.2, 1.5, 1.8):
            full = CharFn.stable(LevyCanonical.symmetric(alpha) if sym else LevyCanonical.asymmetric(alpha))
            for tt in (0.5, 1.0, 2.0):
                prod = CharFn.inner(alpha, sym)(tt) * CharFn.outer(alpha, sym)(tt)
                rel = abs(prod - full(tt)) / abs(full(tt))
                worst = max(worst, rel)
    _detail(request, ", ".join(f"{k}: {v:.4f}" for k, v in errs.items()) + f"; split identity {worst:.1e}")
    assert worst < 1e-8


@pytest.mark.criterion(10, "Kallenberg bound dominance")
def test_c10_kallenberg(request):
    cf = CharFn.stable(LevyCanonical.symmetric(0.5), method="closed")
    parts = []
    for y in (10.0, 100.0, 1000.0):
        num = kallenberg_bound(cf, y)
        ch = kallenberg_chain(0.5, y)
        assert ch.ordered()
        assert num <= ch.final
        assert ch.final == pytest.approx(8.0 / (0.5 * y**0.5), rel=1e-14)
        parts.append(f"y={y:g}: {num:.4f} <= {ch.final:.4f}")
    _detail(request, "; ".join(parts))


@pytest.mark.criterion(11, "crossover roots")
def test_c11_crossover(request):
    t0 = time.perf_counter()
    ratios = []
    for delta in (0.1, 0.05, 0.01):
        lo, hi = reduced_bracket(delta)
        r = reduced_root(delta)
        assert lo < r < hi
        assert abs(delta * r - math.log(r)) < 1e-9
        res = crossover(2.0 - delta, *UPPER_PRESET)
        ref = math.sqrt(math.log(1.0 / delta) / delta)
        assert res.reference == pytest.approx(ref)
        ratios.append(res.y_star / ref)
        assert 1.0 / 3.0 <= res.y_star / ref <= 3.0
    elapsed = time.perf_counter() - t0
    _detail(request, "ratios " + ", ".join(f"{v:.3f}" for v in ratios) + f", {elapsed * 1e3:.1f} ms")
    assert elapsed < 1.0


@pytest.mark.criterion(12, "density series vs inversion")
def test_c12_density(request):
    worst = 0.0
    masses = []
    for alpha in (0.5, 1.5):
        m = DensityModel(alpha)
        for x in (1.0, 2.0, 5.0):
            s = m.series(x)
            f = m.inversion(x)
            rel = abs(s.value - f) / f
            worst = max(worst, rel)
            assert s.converged and rel < 1e-4, (alpha, x, rel)
        mass = inversion_mass(alpha)[0]
        masses.append(mass)
        assert abs(mass - 1.0) < 1e-4
    _detail(request, f"max rel err {worst:.1e}; masses " + ", ".join(f"{v:.8f}" for v in masses))
