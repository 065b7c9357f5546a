"""Monte Carlo simulator of the relay link.

Every stream owns a counter-based Philox generator keyed by (seed, stream
index), processes a fixed share of the samples in fixed-size chunks and
returns per-chunk moments.  Streams may run on any number of threads; the
merge is done in stream order, so results are bit-identical regardless of
the thread count.
"""
from __future__ import annotations

import logging
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .analytics import BPSK, CAPACITY_FACTOR, ModulationScheme
from .channel import DerivedFsoParams, RfConfig, gamma_eq, re_constant

__all__ = [
    "ESTIMATORS",
    "InsufficientSamples",
    "SimPlan",
    "McEstimate",
    "stream_rng",
    "sample_rf_pair",
    "sample_rf_selected",
    "sample_fso_intensity",
    "sample_gamma_eq",
    "estimate",
]

log = logging.getLogger(__name__)

ESTIMATORS = ("cdf", "ber", "capacity")


class InsufficientSamples(UserWarning):
    """The configured sample count cannot reach the requested precision."""


@dataclass(frozen=True)
class SimPlan:
    samples: int
    seed: int
    streams: int = 8
    estimators: frozenset = field(default_factory=lambda: frozenset(ESTIMATORS))
    workers: int = 1
    chunk: int = 1 << 18
    target_rel_se: float | None = None

    def __post_init__(self):
        if int(self.samples) != self.samples or self.samples < 1:
            raise ValueError(f"samples must be a positive integer, got {self.samples}")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.streams < 1 or self.workers < 1 or self.chunk < 1:
            raise ValueError("streams, workers and chunk must be positive")
        bad = set(self.estimators) - set(ESTIMATORS)
        if bad:
            raise ValueError(f"unknown estimators {sorted(bad)}; choose from {ESTIMATORS}")
        object.__setattr__(self, "estimators", frozenset(self.estimators))


@dataclass(frozen=True)
class McEstimate:
    mean: float
    std_err: float
    n: int
    seed: int
    sufficient: bool = True


def stream_rng(seed: int, index: int) -> np.random.Generator:
    """Philox generator for one sub-stream of ``seed``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed), spawn_key=(int(index),))))


def sample_rf_pair(rf: RfConfig, rng: np.random.Generator, size: int) -> tuple[np.ndarray, np.ndarray]:
    """Outdated and actual channel power |h~|^2, |h|^2 of the selected relay."""
    # |h~|^2 of M unit-power Rayleigh channels; the relay with the l-th smallest is selected
    est = rng.standard_exponential((size, rf.M))
    sel = np.partition(est, rf.l - 1, axis=1)[:, rf.l - 1] if rf.M > 1 else est[:, 0]
    # h = sqrt(rho) h~ + sqrt(1-rho) w; w is circular, so h~ may be rotated onto the real axis
    w = rng.standard_normal((2, size)) * math.sqrt((1.0 - rf.rho) / 2.0)
    re = math.sqrt(rf.rho) * np.sqrt(sel) + w[0]
    return sel, re * re + w[1] * w[1]


def sample_rf_selected(rf: RfConfig, rng: np.random.Generator, size: int) -> np.ndarray:
    """Instantaneous RF SNR of the selected relay."""
    return rf.mu1 * sample_rf_pair(rf, rng, size)[1]


def sample_fso_intensity(fso: DerivedFsoParams, rng: np.random.Generator, size: int) -> np.ndarray:
    """Received intensity: Gamma-Gamma turbulence times pointing-error loss."""
    turb = rng.gamma(fso.alpha, 1.0 / fso.alpha, size) * rng.gamma(fso.beta, 1.0 / fso.beta, size)
    sigma_s = fso.a_deq / (2.0 * fso.psi)
    r = rng.rayleigh(sigma_s, size)
    return fso.path_loss * turb * fso.A0 * np.exp(-2.0 * r * r / fso.a_deq ** 2)


def sample_gamma_eq(rf: RfConfig, fso: DerivedFsoParams, mu2: float, rng: np.random.Generator,
                    size: int, Re_const: float | None = None) -> np.ndarray:
    Re_const = re_constant(rf) if Re_const is None else Re_const
    g1 = sample_rf_selected(rf, rng, size)
    I = sample_fso_intensity(fso, rng, size)
    g2 = mu2 * (I / fso.mean_intensity) ** 2
    return gamma_eq(g1, g2, Re_const)


def _merge(parts: list[tuple[int, float, float]]) -> tuple[int, float, float]:
    # Chan et al. pairwise update of (count, mean, M2), applied in list order
    n, mean, m2 = 0, 0.0, 0.0
    for nb, mb, m2b in parts:
        if nb == 0:
            continue
        tot = n + nb
        delta = mb - mean
        mean += delta * nb / tot
        m2 += m2b + delta * delta * n * nb / tot
        n = tot
    return n, mean, m2


def _moments(x: np.ndarray) -> tuple[int, float, float]:
    mean = float(np.mean(x))
    return x.size, mean, float(np.sum((x - mean) ** 2))


def estimate(plan: SimPlan, rf: RfConfig, fso: DerivedFsoParams, mu2: float,
             mod: ModulationScheme | None = None, gamma_th: float = 1.0,
             shannon: bool = False) -> dict[str, McEstimate]:
    """Monte Carlo estimates of the requested metrics.

    BER uses the exact conditional error probability at each sampled SNR;
    CDF is the indicator of gamma_eq < gamma_th; capacity averages
    log2(1 + k gamma_eq) with k = e/(2 pi), or 1 when ``shannon``.
    """
    mod = mod or BPSK
    k = 1.0 if shannon else CAPACITY_FACTOR
    Re_const = re_constant(rf)
    names = [e for e in ESTIMATORS if e in plan.estimators]
    base, extra = divmod(plan.samples, plan.streams)

    def run_stream(idx: int):
        rng = stream_rng(plan.seed, idx)
        todo = base + (1 if idx < extra else 0)
        parts = {e: [] for e in names}
        while todo > 0:
            size = min(plan.chunk, todo)
            todo -= size
            g = sample_gamma_eq(rf, fso, mu2, rng, size, Re_const)
            if "cdf" in parts:
                parts["cdf"].append(_moments((g < gamma_th).astype(float)))
            if "ber" in parts:
                parts["ber"].append(_moments(mod.conditional_ber(g)))
            if "capacity" in parts:
                parts["capacity"].append(_moments(np.log2(1.0 + k * g)))
        return {e: _merge(p) for e, p in parts.items()}

    streams = range(plan.streams)
    if plan.workers > 1:
        with ThreadPoolExecutor(max_workers=plan.workers) as pool:
            per_stream = list(pool.map(run_stream, streams))
    else:
        per_stream = [run_stream(i) for i in streams]

    out = {}
    for e in names:
        n, mean, m2 = _merge([s[e] for s in per_stream])
        se = math.sqrt(m2 / (n - 1) / n) if n > 1 else math.inf
        ok = True
        if plan.target_rel_se is not None and not se <= plan.target_rel_se * abs(mean):
            ok = False
            warnings.warn(f"{e}: relative standard error {se / abs(mean) if mean else math.inf:.3g} exceeds "
                          f"target {plan.target_rel_se:g} at n={n}", InsufficientSamples, stacklevel=2)
        out[e] = McEstimate(mean, se, n, int(plan.seed), ok)
    log.debug("mc estimate seed=%d n=%d: %s", plan.seed, plan.samples, out)
    return out
