import math
import warnings
from dataclasses import replace

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from rffso.channel import (TURBULENCE_CN2, ChannelConfig, DegenerateJitter, FsoConfig, LinkBudget, RfConfig,
                           derive_fso, fso_intensity_pdf, fso_snr_pdf, gamma_eq, near_zero_jitter, re_constant,
                           rf_cdf, rf_pdf)
from rffso.validation import reference_config

mp.mp.dps = 40


def fso_cfg(**kw):
    base = dict(d=2000.0, Cn2=6e-15, wavelength=1.55e-6, a=0.05, a0=0.05, sigma_s=0.05, mu2=100.0)
    base.update(kw)
    return FsoConfig(**base)


def oracle_turbulence(Cn2, lam=mp.mpf("1.55e-6"), d=mp.mpf(2000)):
    iota = 2 * mp.pi / lam
    r2 = mp.mpf("1.23") * mp.mpf(Cn2) * iota ** (mp.mpf(7) / 6) * d ** (mp.mpf(11) / 6)
    alpha = 1 / (mp.exp(mp.mpf("0.49") * r2 / (1 + mp.mpf("1.11") * r2 ** (mp.mpf(6) / 5)) ** (mp.mpf(7) / 6)) - 1)
    beta = 1 / (mp.exp(mp.mpf("0.51") * r2 / (1 + mp.mpf("0.69") * r2 ** (mp.mpf(6) / 5)) ** (mp.mpf(5) / 6)) - 1)
    return float(r2), float(alpha), float(beta)


@pytest.mark.parametrize("regime", list(TURBULENCE_CN2))
def test_turbulence_against_high_precision(regime):
    p = derive_fso(fso_cfg(Cn2=TURBULENCE_CN2[regime]))
    r2, alpha, beta = oracle_turbulence(repr(TURBULENCE_CN2[regime]))
    assert p.rytov2 == pytest.approx(r2, rel=1e-13)
    assert p.alpha == pytest.approx(alpha, rel=1e-12)
    assert p.beta == pytest.approx(beta, rel=1e-12)


def test_beam_chain_against_high_precision():
    p = derive_fso(fso_cfg())
    iota = 2 * mp.pi / mp.mpf("1.55e-6")
    a0, a, d = mp.mpf("0.05"), mp.mpf("0.05"), mp.mpf(2000)
    lam_o = 2 * d / (iota * a0 ** 2)
    lam_1 = lam_o / (1 + lam_o ** 2)
    a_d = a0 * mp.sqrt((1 + lam_o) * (1 + mp.mpf("1.63") * mp.mpf(p.rytov2) ** (mp.mpf(6) / 5) * lam_1))
    v = mp.sqrt(mp.pi) * a / (mp.sqrt(2) * a_d)
    a_deq = mp.sqrt(a_d ** 2 * mp.sqrt(mp.pi) * mp.erf(v) / (2 * v * mp.exp(-v ** 2)))
    assert p.a_d == pytest.approx(float(a_d), rel=1e-12)
    assert p.v == pytest.approx(float(v), rel=1e-12)
    assert p.a_deq == pytest.approx(float(a_deq), rel=1e-12)
    assert p.A0 == pytest.approx(float(mp.erf(v) ** 2), rel=1e-12)
    assert p.psi == pytest.approx(float(a_deq / (2 * mp.mpf("0.05"))), rel=1e-12)


def test_reference_weak_values():
    p = derive_fso(fso_cfg())
    assert p.rytov2 == pytest.approx(0.4257, abs=1e-4)
    assert (p.alpha, p.beta) == pytest.approx((6.6007, 5.0536), abs=1e-4)
    assert p.A0 == pytest.approx(0.6879, abs=1e-4)
    assert p.psi == pytest.approx(0.9008, abs=1e-4)


def test_vanishing_turbulence():
    p = derive_fso(fso_cfg(d=1.0))
    assert p.alpha > 1e3 and p.beta > 1e3
    assert p.rytov2 < 1e-5


def test_psi_one_when_jitter_is_half_beam():
    a_deq = derive_fso(fso_cfg()).a_deq
    p = derive_fso(fso_cfg(sigma_s=a_deq / 2))
    assert p.psi == pytest.approx(1.0, rel=1e-15)
    assert p.kappa == pytest.approx(0.5, rel=1e-15)


def test_zero_jitter():
    with pytest.raises(DegenerateJitter):
        derive_fso(fso_cfg(sigma_s=0.0))
    assert derive_fso(near_zero_jitter(fso_cfg())).psi == pytest.approx(1000.0, rel=1e-12)


def test_config_validation():
    with pytest.raises(ValueError, match="fso.d"):
        fso_cfg(d=0.0)
    with pytest.raises(ValueError, match="rf.l"):
        RfConfig(2, 3, 0.5, 10.0)
    with pytest.raises(ValueError, match="rf.rho"):
        RfConfig(2, 1, 1.5, 10.0)
    with pytest.warns(UserWarning, match="Cn2"):
        fso_cfg(Cn2=1e-12)


def test_link_budget_consistency():
    cfg = reference_config()
    fso = cfg.derived
    link = LinkBudget(Ps=1.0, sigma2_SR=1.0 / cfg.rf.mu1, sigma2_RD=1.0, Pt=1.0,
                      eta=math.sqrt(cfg.mu2) / fso.mean_intensity)
    ChannelConfig(cfg.rf, cfg.fso, link)
    with pytest.raises(ValueError, match="link budget"):
        ChannelConfig(cfg.rf, replace(cfg.fso, mu2=2 * cfg.mu2), link)
    assert link.gain2(re_constant(cfg.rf)) == pytest.approx(1 / (link.sigma2_SR * re_constant(cfg.rf)))


# --- RF hop ------------------------------------------------------------------


@pytest.mark.parametrize("M,l", [(1, 1), (3, 1), (3, 2), (5, 5)])
def test_rho_zero_collapses_to_exponential(M, l):
    x = np.linspace(0, 60, 31)
    rf = RfConfig(M, l, 0.0, 10.0)
    np.testing.assert_allclose(rf_pdf(x, rf), np.exp(-x / 10) / 10, rtol=1e-10, atol=1e-14)
    np.testing.assert_allclose(rf_cdf(x, rf), -np.expm1(-x / 10), rtol=1e-10, atol=1e-14)
    assert re_constant(rf) == pytest.approx(11.0, rel=1e-12)


@pytest.mark.parametrize("rho", [0.0, 0.3, 0.9, 1.0])
def test_single_relay_is_exponential(rho):
    rf = RfConfig(1, 1, rho, 5.0)
    x = np.linspace(0, 30, 16)
    np.testing.assert_allclose(rf_pdf(x, rf), np.exp(-x / 5) / 5, rtol=1e-12)
    assert re_constant(rf) == pytest.approx(6.0)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.data(), st.sampled_from([0.0, 0.3, 0.72, 1.0]))
def test_rf_pdf_normalized(M, data, rho):
    l = data.draw(st.integers(1, M))
    rf = RfConfig(M, l, rho, 3.0)
    total = integrate.quad(lambda x: float(rf_pdf(x, rf)), 0, np.inf, epsabs=1e-13, epsrel=1e-12, limit=200)[0]
    assert total == pytest.approx(1.0, abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.data(), st.floats(0, 1))
def test_rf_cdf_monotone_onto_unit_interval(M, data, rho):
    l = data.draw(st.integers(1, M))
    rf = RfConfig(M, l, rho, 2.0)
    x = np.concatenate([[0.0], np.logspace(-4, 3, 200)])
    F = rf_cdf(x, rf)
    assert F[0] == 0.0
    assert np.all(np.diff(F) >= -1e-15)
    assert np.all((F >= 0) & (F < 1 + 1e-15))


def test_rf_cdf_limits_and_derivative():
    rf = RfConfig(4, 4, 0.5, 5.0)
    assert rf_cdf(0.0, rf) == 0.0
    assert rf_cdf(1e3 * rf.mu1, rf) == pytest.approx(1.0, abs=1e-12)
    quad = integrate.quad(lambda x: float(rf_pdf(x, rf)), 0, 5, epsabs=1e-14, epsrel=1e-13)[0]
    assert rf_cdf(5.0, rf) == pytest.approx(quad, abs=1e-10)
    h = 1e-5
    for x in (0.5, 3.0, 20.0):
        slope = (rf_cdf(x + h, rf) - rf_cdf(x - h, rf)) / (2 * h)
        assert slope == pytest.approx(float(rf_pdf(x, rf)), rel=1e-6)


def test_large_relay_count_is_finite():
    rf = RfConfig(64, 40, 0.5, 10.0)
    assert np.isfinite(rf_pdf(5.0, rf))
    assert re_constant(rf) >= 1


def test_re_constant_best_of_two_perfect_csi():
    # E[max of two unit exponentials] = 1.5
    assert re_constant(RfConfig(2, 2, 1.0, 10.0)) == pytest.approx(16.0, rel=1e-12)
    assert re_constant(RfConfig(2, 1, 1.0, 10.0)) == pytest.approx(6.0, rel=1e-12)


def test_re_constant_matches_pdf_mean():
    rf = RfConfig(5, 3, 0.6, 7.0)
    mean = integrate.quad(lambda x: x * float(rf_pdf(x, rf)), 0, np.inf, epsrel=1e-12)[0]
    assert re_constant(rf) == pytest.approx(1 + mean, rel=1e-9)


def test_re_constant_rho_monotone():
    rhos = np.linspace(0, 1, 11)
    best = [re_constant(RfConfig(4, 4, r, 10.0)) for r in rhos]
    worst = [re_constant(RfConfig(4, 1, r, 10.0)) for r in rhos]
    assert np.all(np.diff(best) >= -1e-12)
    assert np.all(np.diff(worst) <= 1e-12)


# --- FSO hop -------------------------------------------------------------------


@pytest.mark.parametrize("regime", list(TURBULENCE_CN2))
def test_fso_snr_pdf_normalized_and_mean(regime):
    fso = reference_config(regime).derived
    mu2 = 50.0
    f = lambda y: float(fso_snr_pdf(mu2 * math.exp(y), fso, mu2)) * mu2 * math.exp(y)
    edges = np.linspace(-60, 8, 35)
    total = math.fsum(integrate.quad(f, a, b, epsabs=1e-14, epsrel=1e-11)[0] for a, b in zip(edges, edges[1:]))
    assert total == pytest.approx(1.0, abs=1e-6)
    # E[sqrt(gamma2)] = sqrt(mu2) E[I] / (kappa A0) = sqrt(mu2)
    g = lambda y: f(y) * math.sqrt(mu2 * math.exp(y))
    m = math.fsum(integrate.quad(g, a, b, epsabs=1e-14, epsrel=1e-11)[0] for a, b in zip(edges, edges[1:]))
    assert m == pytest.approx(math.sqrt(mu2), rel=1e-6)


def test_intensity_pdf_moments():
    fso = reference_config().derived
    f = lambda y: float(fso_intensity_pdf(math.exp(y), fso)) * math.exp(y)
    edges = np.linspace(-60, 4, 33)
    mass = math.fsum(integrate.quad(f, a, b, epsabs=1e-14)[0] for a, b in zip(edges, edges[1:]))
    mean = math.fsum(integrate.quad(lambda y: f(y) * math.exp(y), a, b, epsabs=1e-14)[0]
                     for a, b in zip(edges, edges[1:]))
    assert mass == pytest.approx(1.0, abs=1e-7)
    assert mean == pytest.approx(fso.A0 * fso.kappa, rel=1e-7)


def test_snr_pdf_is_intensity_pdf_transformed():
    fso = reference_config("moderate").derived
    mu2 = 30.0
    for I in (0.01, 0.2, 0.6):
        g = mu2 * (I / fso.mean_intensity) ** 2
        jac = 2 * mu2 * I / fso.mean_intensity ** 2
        assert float(fso_snr_pdf(g, fso, mu2)) * jac == pytest.approx(float(fso_intensity_pdf(I, fso)), rel=1e-9)


# --- combining ---------------------------------------------------------------------


def test_gamma_eq_examples():
    assert gamma_eq(10.0, 20.0, 5.0) == pytest.approx(8.0)
    assert gamma_eq(0.0, 20.0, 5.0) == 0.0
    assert gamma_eq(10.0, math.inf, 5.0) == 10.0
    assert gamma_eq(10.0, 1e15, 5.0) == pytest.approx(10.0, rel=1e-13)


pos = st.floats(0, 1e8)


@given(pos, pos, st.floats(1, 1e6), st.floats(0, 1e3))
def test_gamma_eq_bounds_and_monotone(g1, g2, Re, dx):
    v = gamma_eq(g1, g2, Re)
    assert v <= min(g1, g1 * g2 / Re) * (1 + 1e-12)
    assert gamma_eq(g1 + dx, g2, Re) >= v
    assert gamma_eq(g1, g2 + dx, Re) >= v * (1 - 1e-15)
