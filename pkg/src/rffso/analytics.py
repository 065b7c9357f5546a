"""Closed-form CDF, average BER and ergodic capacity of the end-to-end link.

Each closed form is a finite alternating sum over the relay-selection
series; every summand carries one Meijer G (or bivariate G) evaluation.
The ``*_integral`` functions evaluate the defining integrals by adaptive
quadrature and serve as independent checks of the closed forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from .channel import (DerivedFsoParams, RfConfig, fso_snr_pdf, re_constant, rf_terms,
                      signed_log_sum)
from .specfun import (ContourConfig, Egbmgf2Spec, MeijerGSpec, egbmgf_eval, meijer_g_eval)

__all__ = [
    "ModulationScheme",
    "BPSK",
    "DBPSK",
    "PerfPoint",
    "CAPACITY_FACTOR",
    "chi1_row",
    "cdf_eq",
    "ccdf_eq",
    "avg_ber",
    "ergodic_capacity",
    "cdf_eq_integral",
    "avg_ber_integral",
    "capacity_integral",
]

# e/(2 pi): SNR scaling inside the capacity logarithm
CAPACITY_FACTOR = math.e / (2.0 * math.pi)

# BER is 1/2 minus a sum close to 1/2 at high SNR, so its kernel is
# evaluated far tighter than the BER tolerance itself.
_BER_KERNEL_TOL = 1e-12


@dataclass(frozen=True)
class ModulationScheme:
    """Binary modulation with conditional error probability Gamma(p, q g)/(2 Gamma(p))."""

    name: str
    p: float
    q: float

    def __post_init__(self):
        if (self.p, self.q) not in ((0.5, 1.0), (1.0, 1.0)):
            raise ValueError(f"unsupported modulation parameters (p, q) = ({self.p}, {self.q})")

    @classmethod
    def from_name(cls, name: str) -> "ModulationScheme":
        key = name.strip().upper().replace("SIM-", "")
        try:
            return {"BPSK": BPSK, "DBPSK": DBPSK}[key]
        except KeyError:
            raise ValueError(f"unknown modulation {name!r}; expected BPSK or DBPSK") from None

    def conditional_ber(self, g):
        """Exact bit error probability at instantaneous SNR ``g``."""
        g = np.asarray(g, dtype=float)
        if self.p == 1.0:
            return 0.5 * np.exp(-self.q * g)
        return 0.5 * special.erfc(np.sqrt(self.q * g))


BPSK = ModulationScheme("BPSK", 0.5, 1.0)
DBPSK = ModulationScheme("DBPSK", 1.0, 1.0)


@dataclass(frozen=True)
class PerfPoint:
    mu1_dB: float
    mu2_dB: float
    rho: float
    M: int
    l: int
    metric: str
    value: float
    method: str = "analytic"
    std_err: float = 0.0

    def __post_init__(self):
        if self.metric not in ("cdf", "ber", "capacity"):
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.method not in ("analytic", "mc"):
            raise ValueError(f"unknown method {self.method!r}")


def chi1_row(psi2: float, alpha: float, beta: float) -> tuple[float, ...]:
    return (psi2 / 2, alpha / 2, (alpha + 1) / 2, beta / 2, (beta + 1) / 2, 0.0)


def _log_prefactor(fso: DerivedFsoParams, power_of_two: float) -> float:
    # log of 2^(alpha+beta+power_of_two) psi^2 / (pi Gamma(alpha) Gamma(beta))
    return ((fso.alpha + fso.beta + power_of_two) * math.log(2.0) + 2 * math.log(fso.psi)
            - math.log(math.pi) - math.lgamma(fso.alpha) - math.lgamma(fso.beta))


def _fso_scale(rf: RfConfig, fso: DerivedFsoParams, mu2: float) -> float:
    """alpha^2 beta^2 kappa^2 Re / (16 mu2)."""
    return (fso.alpha * fso.beta * fso.kappa) ** 2 * re_constant(rf) / (16.0 * mu2)


def _g60(fso: DerivedFsoParams, z: float, tol: float):
    psi2 = fso.psi2
    return meijer_g_eval(MeijerGSpec(6, 0, 1, 6, ((psi2 + 2) / 2,), chi1_row(psi2, fso.alpha, fso.beta), z),
                         ContourConfig(target_rel_err=tol))


def ccdf_eq(gamma_th: float, rf: RfConfig, fso: DerivedFsoParams, mu2: float,
            target_rel_err: float = 1e-8) -> float:
    """Complementary CDF of the end-to-end SNR, the series part of the closed form."""
    if gamma_th <= 0:
        return 1.0
    B = _fso_scale(rf, fso, mu2)
    log_k = _log_prefactor(fso, -3.0)
    logs, signs = [], []
    for log_c, sign, N, D in rf_terms(rf):
        rate = N / (D * rf.mu1)
        g = _g60(fso, B * rate * gamma_th, target_rel_err)
        if g.mantissa == 0.0:
            continue
        logs.append(log_c - math.log(N) - rate * gamma_th + log_k + g.log_scale + math.log(abs(g.mantissa)))
        signs.append(sign * (1 if g.mantissa > 0 else -1))
    return min(max(signed_log_sum(logs, signs), 0.0), 1.0) if logs else 0.0


def cdf_eq(gamma_th: float, rf: RfConfig, fso: DerivedFsoParams, mu2: float,
           target_rel_err: float = 1e-8) -> float:
    """P(gamma_eq < gamma_th) in closed form."""
    if gamma_th <= 0:
        return 0.0
    return min(max(1.0 - ccdf_eq(gamma_th, rf, fso, mu2, target_rel_err), 0.0), 1.0)


def avg_ber(mod: ModulationScheme, rf: RfConfig, fso: DerivedFsoParams, mu2: float,
            target_rel_err: float = _BER_KERNEL_TOL) -> float:
    """Average bit error rate in closed form."""
    p, q = mod.p, mod.q
    B = _fso_scale(rf, fso, mu2)
    psi2 = fso.psi2
    a_row = (1.0 - p, (psi2 + 2) / 2)
    b_row = chi1_row(psi2, fso.alpha, fso.beta)
    log_k = _log_prefactor(fso, -4.0) - math.lgamma(p)
    contour = ContourConfig(target_rel_err=target_rel_err)
    logs, signs = [], []
    for log_c, sign, N, D in rf_terms(rf):
        rate = N / (D * rf.mu1)
        g = meijer_g_eval(MeijerGSpec(6, 1, 2, 6, a_row, b_row, B * rate / (rate + q)), contour)
        if g.mantissa == 0.0:
            continue
        logs.append(log_c - math.log(N) - p * math.log1p(rate / q) + log_k
                    + g.log_scale + math.log(abs(g.mantissa)))
        signs.append(sign * (1 if g.mantissa > 0 else -1))
    value = 0.5 - signed_log_sum(logs, signs)
    return min(max(value, 0.0), 0.5)


def ergodic_capacity(rf: RfConfig, fso: DerivedFsoParams, mu2: float, bandwidth: float = 1.0,
                     shannon: bool = False, contour_s: ContourConfig | None = None,
                     contour_t: ContourConfig | None = None) -> float:
    """Ergodic capacity E[log2(1 + k gamma_eq)] * bandwidth via the bivariate G.

    ``k`` is e/(2 pi) by default; ``shannon=True`` uses k = 1.
    """
    if not bandwidth > 0:
        raise ValueError("bandwidth must be positive")
    k = 1.0 if shannon else CAPACITY_FACTOR
    B = _fso_scale(rf, fso, mu2)
    log_k = _log_prefactor(fso, -3.0) - math.log(math.log(2.0)) + math.log(k)
    logs, signs = [], []
    for log_c, sign, N, D in rf_terms(rf):
        inv_rate = D * rf.mu1 / N
        spec = Egbmgf2Spec.capacity_kernel(fso.psi2, fso.alpha, fso.beta, k * inv_rate, B)
        g = egbmgf_eval(spec, contour_s, contour_t)
        if g.mantissa == 0.0:
            continue
        logs.append(log_c - math.log(N) + math.log(inv_rate) + log_k + g.log_scale + math.log(abs(g.mantissa)))
        signs.append(sign * (1 if g.mantissa > 0 else -1))
    return bandwidth * max(signed_log_sum(logs, signs), 0.0)


# ---------------------------------------------------------------------------
# definition integrals


def _quad_pieces(fn, lo: float, hi: float, pieces: int, **kw) -> float:
    edges = np.linspace(lo, hi, pieces + 1)
    return math.fsum(integrate.quad(fn, a, b, limit=200, **kw)[0] for a, b in zip(edges[:-1], edges[1:]))


def cdf_eq_integral(gamma_th: float, rf: RfConfig, fso: DerivedFsoParams, mu2: float) -> float:
    """CDF as the integral of the RF CDF against the FSO SNR density."""
    if gamma_th <= 0:
        return 0.0
    Re = re_constant(rf)
    terms = [(math.exp(lc - math.log(N)) * s, N / (D * rf.mu1)) for lc, s, N, D in rf_terms(rf)]

    def rf_ccdf(v):
        return math.fsum(w * math.exp(-r * v) for w, r in terms)

    def integrand(y):
        x = mu2 * math.exp(y)
        return rf_ccdf(gamma_th * (1.0 + Re / x)) * fso_snr_pdf(x, fso, mu2) * x

    r_min = min(r for _, r in terms)
    # below y_lo either the RF factor is < e^-60 or the FSO mass is < 1e-15
    y_lo = max(math.log(r_min * gamma_th * Re / (60.0 * mu2)), 2.0 * math.log(1e-15) / fso.psi2)
    y_hi = 25.0
    if y_lo >= y_hi:
        return 1.0
    return 1.0 - _quad_pieces(integrand, y_lo, y_hi, 12, epsabs=1e-13, epsrel=1e-10)


def avg_ber_integral(mod: ModulationScheme, rf: RfConfig, fso: DerivedFsoParams, mu2: float) -> float:
    """Average BER as the integral of the closed-form CDF against the BER kernel."""
    p, q = mod.p, mod.q
    pref = q ** p / (2.0 * math.gamma(p))

    def integrand(y):
        g = math.exp(y)
        return pref * math.exp(-q * g) * g ** p * cdf_eq(g, rf, fso, mu2, 1e-10)

    y_lo = math.log(1e-16) / p - math.log(q)
    y_hi = math.log(60.0 / q)
    return _quad_pieces(integrand, y_lo, y_hi, 10, epsabs=1e-14, epsrel=1e-9)


def capacity_integral(rf: RfConfig, fso: DerivedFsoParams, mu2: float, bandwidth: float = 1.0,
                      shannon: bool = False) -> float:
    """Capacity as the integral of the closed-form CCDF."""
    k = 1.0 if shannon else CAPACITY_FACTOR

    def integrand(y):
        g = math.exp(y)
        return k * g * ccdf_eq(g, rf, fso, mu2, 1e-9) / (1.0 + k * g)

    r_min = min(N / (D * rf.mu1) for _, _, N, D in rf_terms(rf))
    y_lo = math.log(1e-14 / k)
    y_hi = math.log(80.0 / r_min)
    return bandwidth * _quad_pieces(integrand, y_lo, y_hi, 12, epsabs=1e-12, epsrel=1e-9) / math.log(2.0)
