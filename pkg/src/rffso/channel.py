"""Physical parameter model and per-hop statistics of the RF-FSO relay link.

The RF hop is Rayleigh faded and the forwarding relay is the l-th worst of
M, chosen from outdated channel estimates with power correlation rho.  The
FSO hop combines Gamma-Gamma turbulence with Rayleigh-jitter pointing
errors.  All SNRs here are linear; dB conversion happens at config parse.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .specfun import ContourConfig, MeijerGSpec, meijer_g_eval

__all__ = [
    "TURBULENCE_CN2",
    "DegenerateJitter",
    "RfConfig",
    "FsoConfig",
    "DerivedFsoParams",
    "LinkBudget",
    "ChannelConfig",
    "db_to_linear",
    "linear_to_db",
    "derive_fso",
    "near_zero_jitter",
    "rf_terms",
    "rf_pdf",
    "rf_cdf",
    "re_constant",
    "fso_intensity_pdf",
    "fso_snr_pdf",
    "gamma_eq",
    "signed_log_sum",
]

# Refractive-index structure parameters of the three turbulence regimes, m^-2/3
TURBULENCE_CN2 = {"weak": 6e-15, "moderate": 2e-14, "strong": 5e-14}

_CN2_RANGE = (1e-17, 1e-13)


class DegenerateJitter(ValueError):
    """Zero jitter makes the pointing-error parameter infinite."""


def db_to_linear(x_db):
    return 10.0 ** (np.asarray(x_db, dtype=float) / 10.0) if np.ndim(x_db) else 10.0 ** (float(x_db) / 10.0)


def linear_to_db(x):
    return 10.0 * np.log10(x) if np.ndim(x) else 10.0 * math.log10(x)


def signed_log_sum(logs, signs) -> float:
    """Sum of sign_k * exp(log_k), largest magnitudes first."""
    order = sorted(range(len(logs)), key=lambda k: -logs[k])
    return math.fsum(signs[k] * math.exp(logs[k]) for k in order)


@dataclass(frozen=True)
class RfConfig:
    """RF hop with partial relay selection.

    M relays, the l-th worst by outdated estimate forwards (l = M is the
    best), rho is the power correlation between estimate and actual SNR,
    mu1 the average RF SNR (linear).
    """

    M: int
    l: int
    rho: float
    mu1: float

    def __post_init__(self):
        if int(self.M) != self.M or self.M < 1:
            raise ValueError(f"rf.M must be a positive integer, got {self.M}")
        if int(self.l) != self.l or not 1 <= self.l <= self.M:
            raise ValueError(f"rf.l must be an integer in [1, M={self.M}], got {self.l}")
        if not 0.0 <= self.rho <= 1.0:
            raise ValueError(f"rf.rho must lie in [0, 1], got {self.rho}")
        if not (self.mu1 > 0 and math.isfinite(self.mu1)):
            raise ValueError(f"rf.mu1 must be positive, got {self.mu1}")
        object.__setattr__(self, "M", int(self.M))
        object.__setattr__(self, "l", int(self.l))

    @property
    def mu1_dB(self) -> float:
        return linear_to_db(self.mu1)


@dataclass(frozen=True)
class FsoConfig:
    """FSO hop geometry, turbulence and electrical SNR (mu2, linear).

    Lengths in metres, Cn2 in m^-2/3.  ``F0`` is the beam radius of
    curvature (infinite for a collimated beam); ``path_loss`` is an optional
    deterministic intensity attenuation.
    """

    d: float
    Cn2: float
    wavelength: float
    a: float
    a0: float
    sigma_s: float
    mu2: float
    F0: float = math.inf
    path_loss: float = 1.0

    def __post_init__(self):
        for name in ("d", "wavelength", "a", "a0", "F0"):
            v = getattr(self, name)
            if not v > 0:
                raise ValueError(f"fso.{name} must be positive, got {v}")
        if not self.Cn2 > 0:
            raise ValueError(f"fso.Cn2 must be positive, got {self.Cn2}")
        if not _CN2_RANGE[0] <= self.Cn2 <= _CN2_RANGE[1]:
            warnings.warn(f"fso.Cn2={self.Cn2:g} lies outside the weak-to-strong span "
                          f"[{_CN2_RANGE[0]:g}, {_CN2_RANGE[1]:g}] m^-2/3", stacklevel=3)
        if not self.sigma_s >= 0:
            raise ValueError(f"fso.sigma_s must be non-negative, got {self.sigma_s}")
        if not (self.mu2 > 0 and math.isfinite(self.mu2)):
            raise ValueError(f"fso.mu2 must be positive, got {self.mu2}")
        if not 0 < self.path_loss <= 1:
            raise ValueError(f"fso.path_loss must lie in (0, 1], got {self.path_loss}")

    @property
    def mu2_dB(self) -> float:
        return linear_to_db(self.mu2)


@dataclass(frozen=True)
class DerivedFsoParams:
    rytov2: float
    alpha: float
    beta: float
    iota: float
    Theta_o: float
    Lambda_o: float
    Lambda_1: float
    a_d: float
    a_deq: float
    v: float
    A0: float
    psi: float
    kappa: float
    path_loss: float = 1.0

    @property
    def psi2(self) -> float:
        return self.psi * self.psi

    @property
    def mean_intensity(self) -> float:
        """E[I] of the combined turbulence and pointing fading."""
        return self.path_loss * self.A0 * self.kappa


@dataclass(frozen=True)
class LinkBudget:
    """Physical link budget, an alternative way to specify mu1 and mu2."""

    Ps: float
    sigma2_SR: float
    sigma2_RD: float
    Pt: float
    eta: float
    m_index: float = 1.0

    def __post_init__(self):
        for name in ("Ps", "sigma2_SR", "sigma2_RD", "Pt", "eta"):
            if not getattr(self, name) > 0:
                raise ValueError(f"link.{name} must be positive, got {getattr(self, name)}")
        if self.m_index != 1.0:
            raise ValueError("link.m_index is fixed at 1")

    def mu1(self) -> float:
        return self.Ps / self.sigma2_SR

    def mu2(self, fso: DerivedFsoParams) -> float:
        return (self.eta * self.Pt * fso.mean_intensity) ** 2 / self.sigma2_RD

    def gain2(self, Re_const: float) -> float:
        """Fixed relay power gain G^2 = 1 / (sigma2_SR * Re)."""
        return 1.0 / (self.sigma2_SR * Re_const)


@dataclass(frozen=True)
class ChannelConfig:
    """RF and FSO hop configuration, optionally with a physical link budget.

    When a link budget is present, mu1 and mu2 must agree with it to 1e-9
    relative.
    """

    rf: RfConfig
    fso: FsoConfig
    link: LinkBudget | None = None
    _derived: DerivedFsoParams = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_derived", derive_fso(self.fso))
        if self.link is not None:
            for name, want, have in (("rf.mu1", self.link.mu1(), self.rf.mu1),
                                     ("fso.mu2", self.link.mu2(self._derived), self.fso.mu2)):
                if abs(want - have) > 1e-9 * abs(want):
                    raise ValueError(f"{name}={have:.12g} disagrees with the link budget value {want:.12g}")

    @property
    def derived(self) -> DerivedFsoParams:
        return self._derived

    @property
    def mu2(self) -> float:
        return self.fso.mu2

    def with_rf(self, **changes) -> "ChannelConfig":
        return ChannelConfig(replace(self.rf, **changes), self.fso, None)

    def with_fso(self, **changes) -> "ChannelConfig":
        return ChannelConfig(self.rf, replace(self.fso, **changes), None)


def derive_fso(cfg: FsoConfig) -> DerivedFsoParams:
    """Gamma-Gamma shape parameters and pointing-error geometry.

    Plane-wave, zero-inner-scale turbulence; Gaussian beam with waist radius
    ``a0`` and curvature ``F0`` propagated over ``d``.
    """
    if cfg.sigma_s == 0:
        raise DegenerateJitter("sigma_s = 0 gives an infinite pointing-error parameter; "
                               "use near_zero_jitter() for the no-misalignment limit")
    iota = 2.0 * math.pi / cfg.wavelength
    rytov2 = 1.23 * cfg.Cn2 * iota ** (7.0 / 6.0) * cfg.d ** (11.0 / 6.0)
    r125 = rytov2 ** (6.0 / 5.0)
    # expm1 keeps alpha and beta accurate when turbulence vanishes
    alpha = 1.0 / math.expm1(0.49 * rytov2 / (1.0 + 1.11 * r125) ** (7.0 / 6.0))
    beta = 1.0 / math.expm1(0.51 * rytov2 / (1.0 + 0.69 * r125) ** (5.0 / 6.0))

    theta_o = 1.0 - cfg.d / cfg.F0
    lambda_o = 2.0 * cfg.d / (iota * cfg.a0 ** 2)
    lambda_1 = lambda_o / (theta_o ** 2 + lambda_o ** 2)
    a_d = cfg.a0 * math.sqrt((theta_o + lambda_o) * (1.0 + 1.63 * r125 * lambda_1))
    v = math.sqrt(math.pi) * cfg.a / (math.sqrt(2.0) * a_d)
    erf_v = math.erf(v)
    a_deq = a_d * math.sqrt(math.sqrt(math.pi) * erf_v / (2.0 * v * math.exp(-v * v)))
    A0 = erf_v ** 2
    psi = a_deq / (2.0 * cfg.sigma_s)
    kappa = psi ** 2 / (psi ** 2 + 1.0)
    return DerivedFsoParams(rytov2, alpha, beta, iota, theta_o, lambda_o, lambda_1,
                            a_d, a_deq, v, A0, psi, kappa, cfg.path_loss)


def near_zero_jitter(cfg: FsoConfig) -> FsoConfig:
    """Copy of ``cfg`` with sigma_s = a_deq / 2000, i.e. psi = 1000."""
    a_deq = derive_fso(replace(cfg, sigma_s=1.0)).a_deq
    return replace(cfg, sigma_s=a_deq / 2e3)


# ---------------------------------------------------------------------------
# RF hop


def _log_binom(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def rf_terms(cfg: RfConfig) -> list[tuple[float, int, int, float]]:
    """Series terms shared by the RF pdf, cdf and every closed form.

    Each entry is ``(log_c, sign, N, D)`` with
    ``c = l * C(M, l) * C(l-1, i)``, ``sign = (-1)^i``,
    ``N = M - l + i + 1`` and ``D = (M - l + i)(1 - rho) + 1``.
    """
    M, l, rho = cfg.M, cfg.l, cfg.rho
    base = math.log(l) + _log_binom(M, l)
    out = []
    for i in range(l):
        out.append((base + _log_binom(l - 1, i), -1 if i % 2 else 1, M - l + i + 1, (M - l + i) * (1.0 - rho) + 1.0))
    return out


def rf_pdf(x, cfg: RfConfig):
    """Density of the selected relay's actual RF SNR."""
    x = np.asarray(x, dtype=float)
    terms = sorted(rf_terms(cfg), key=lambda t: -(t[0] - math.log(t[3])))
    out = np.zeros_like(x)
    for log_c, sign, N, D in terms:
        out += sign * np.exp(log_c - math.log(cfg.mu1 * D) - N * x / (D * cfg.mu1))
    out = np.where(x < 0, 0.0, out)
    return out if out.ndim else float(out)


def _rf_cdf_weights(cfg: RfConfig) -> tuple[np.ndarray, np.ndarray]:
    # w_i = (-1)^i l C(M,l) C(l-1,i) / N_i rounded once from exact rationals, so that
    # the weights sum to one as closely as floats allow
    M, l = cfg.M, cfg.l
    w, rate = [], []
    for i in range(l):
        N = M - l + i + 1
        D = (M - l + i) * (1.0 - cfg.rho) + 1.0
        w.append(float(Fraction((-1) ** i * l * math.comb(M, l) * math.comb(l - 1, i), N)))
        rate.append(N / (D * cfg.mu1))
    return np.array(w), np.array(rate)


def rf_cdf(x, cfg: RfConfig):
    """CDF of the selected relay's actual RF SNR.

    Below the median the series is summed as sum w (1 - e^{-kx}), above it
    as 1 - sum w e^{-kx}; each form keeps its rounding error proportional to
    the quantity it returns.
    """
    x = np.asarray(x, dtype=float)
    w, rate = _rf_cdf_weights(cfg)
    flat = np.maximum(x.ravel(), 0.0)
    out = np.empty_like(flat)
    for j, v in enumerate(flat):
        tail = math.fsum(w * np.exp(-rate * v))
        if tail > 0.5:
            out[j] = math.fsum(w * -np.expm1(-rate * v))
        else:
            out[j] = 1.0 - tail
    out = np.clip(out, 0.0, 1.0).reshape(x.shape)
    return out if out.ndim else float(out)


def re_constant(cfg: RfConfig) -> float:
    """Re = 1 + E[gamma_1], the fixed-gain normalisation constant."""
    terms = rf_terms(cfg)
    mean = signed_log_sum([lc + math.log(D * cfg.mu1) - 2 * math.log(N) for lc, _, N, D in terms],
                          [s for _, s, _, _ in terms])
    return 1.0 + mean


# ---------------------------------------------------------------------------
# FSO hop


def _log_gg_norm(params: DerivedFsoParams) -> float:
    return 2 * math.log(params.psi) - math.lgamma(params.alpha) - math.lgamma(params.beta)


def fso_intensity_pdf(I, params: DerivedFsoParams, target_rel_err: float = 1e-10):
    """Density of the received intensity under turbulence and pointing errors.

    Includes the deterministic ``path_loss`` as a pure scaling of I.
    """
    psi2, al, be = params.psi2, params.alpha, params.beta
    scale = params.A0 * params.path_loss
    log_norm = _log_gg_norm(params) + math.log(al * be / scale)

    def one(x):
        if x <= 0:
            return 0.0
        r = meijer_g_eval(MeijerGSpec(3, 0, 1, 3, (psi2,), (psi2 - 1, al - 1, be - 1), al * be * x / scale),
                          ContourConfig(target_rel_err=target_rel_err))
        return r.mantissa * math.exp(r.log_scale + log_norm)

    return _map_scalar(one, I)


def fso_snr_pdf(g2, params: DerivedFsoParams, mu2: float, target_rel_err: float = 1e-10):
    """Density of the instantaneous electrical SNR of the FSO hop."""
    psi2, al, be = params.psi2, params.alpha, params.beta
    log_norm = _log_gg_norm(params) - math.log(2.0)
    k = al * be * params.kappa

    def one(x):
        if x <= 0:
            return 0.0
        r = meijer_g_eval(MeijerGSpec(3, 0, 1, 3, (psi2 + 1,), (psi2, al, be), k * math.sqrt(x / mu2)),
                          ContourConfig(target_rel_err=target_rel_err))
        return r.mantissa * math.exp(r.log_scale + log_norm - math.log(x))

    return _map_scalar(one, g2)


def gamma_eq(g1, g2, Re_const: float):
    """End-to-end SNR of the fixed-gain AF link, g1*g2/(g2 + Re)."""
    g1 = np.asarray(g1, dtype=float)
    g2 = np.asarray(g2, dtype=float)
    with np.errstate(invalid="ignore"):
        out = np.where(np.isinf(g2), g1, g1 * g2 / (g2 + Re_const))
    return out if out.ndim else float(out)


def _map_scalar(fn, x):
    if np.ndim(x) == 0:
        return fn(float(x))
    arr = np.asarray(x, dtype=float)
    return np.array([fn(v) for v in arr.ravel()]).reshape(arr.shape)
