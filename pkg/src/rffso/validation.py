"""Comparison suites: closed form against quadrature, Monte Carlo and
special-function identities.

Every check produces one :class:`ReportRow`; evaluator failures become
failed rows instead of aborting the run.  Reports are deterministic given
the configuration and seed.
"""
from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import integrate, stats

from . import analytics as an
from . import mc
from .channel import (TURBULENCE_CN2, ChannelConfig, FsoConfig, RfConfig, db_to_linear, fso_snr_pdf,
                      rf_cdf)
from .specfun import (ContourConfig, MeijerGSpec, SpecfunError, erf, log_gamma_complex, meijer_g_eval)

__all__ = [
    "SWEEP_VARIABLES",
    "COMPARE_MODES",
    "SUITES",
    "Thresholds",
    "ReportRow",
    "ComparisonReport",
    "SweepSpec",
    "run_sweep",
    "verify_special_functions",
    "distribution_suite",
    "closed_form_suite",
    "mc_suite",
    "trends_suite",
    "run_validation",
    "reference_config",
    "bessel_k0_series",
]

log = logging.getLogger(__name__)

SWEEP_VARIABLES = ("mu1_dB", "mu2_dB", "mu1=mu2_dB", "sigma_s", "rho", "M")
COMPARE_MODES = ("analytic", "mc", "both", "quadrature")
SUITES = ("specfun", "distributions", "closed-form", "mc", "trends")
METRICS = ("cdf", "ber", "capacity")
REGIMES = ("weak", "moderate", "strong")


@dataclass(frozen=True)
class Thresholds:
    """Pass thresholds, recorded in every report header."""

    z_max: float = 3.0
    identity_rel: float = 1e-9
    bessel_rel: float = 1e-8
    cdf_abs: float = 1e-5
    ber_rel: float = 1e-5
    capacity_rel: float = 5e-3
    floor_rel: float = 1e-2
    rho0_rel: float = 1e-6
    rho0_ber_abs: float = 1e-8

    def __post_init__(self):
        for k, v in asdict(self).items():
            if not v > 0:
                raise ValueError(f"validation.thresholds.{k} must be positive, got {v}")


@dataclass(frozen=True)
class ReportRow:
    suite: str
    check: str
    x: float
    metric: str
    analytic: float = math.nan
    reference: float = math.nan
    mc_mean: float = math.nan
    mc_stderr: float = math.nan
    z: float = math.nan
    rel_gap: float = math.nan
    tol: float = math.nan
    passed: bool = False
    mc_n: int = 0
    seed: int | None = None
    note: str = ""
    error: str = ""

    COLUMNS = ("suite", "check", "x", "metric", "analytic", "reference", "mc_mean", "mc_stderr", "z",
               "rel_gap", "tol", "passed", "mc_n", "seed", "note", "error")

    def as_dict(self) -> dict:
        return {c: getattr(self, c) for c in self.COLUMNS}


@dataclass
class ComparisonReport:
    rows: list[ReportRow] = field(default_factory=list)
    thresholds: Thresholds = field(default_factory=Thresholds)
    seed: int | None = None
    elapsed_s: float = 0.0

    def extend(self, other: "ComparisonReport") -> None:
        self.rows.extend(other.rows)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def failed(self) -> list[ReportRow]:
        return [r for r in self.rows if not r.passed]

    @property
    def max_abs_z(self) -> float:
        zs = [abs(r.z) for r in self.rows if math.isfinite(r.z)]
        return max(zs) if zs else math.nan

    @property
    def max_rel_gap(self) -> float:
        gaps = [r.rel_gap for r in self.rows if math.isfinite(r.rel_gap)]
        return max(gaps) if gaps else math.nan

    def summary(self) -> dict:
        return {"rows": len(self.rows), "failed": len(self.failed), "passed": self.passed,
                "max_abs_z": self.max_abs_z, "max_rel_gap": self.max_rel_gap}


# ---------------------------------------------------------------------------
# row helpers


def _rel(a: float, b: float) -> float:
    if a == b:
        return 0.0
    return abs(a - b) / max(abs(b), 1e-300)


def _value_row(suite, check, x, metric, value, reference, tol, absolute=False, note="") -> ReportRow:
    gap = abs(value - reference) if absolute else _rel(value, reference)
    return ReportRow(suite, check, x, metric, analytic=value, reference=reference, rel_gap=gap, tol=tol,
                     passed=bool(gap <= tol), note=note)


def _bool_row(suite, check, x, metric, ok, note="", value=math.nan, reference=math.nan) -> ReportRow:
    return ReportRow(suite, check, x, metric, analytic=value, reference=reference, passed=bool(ok), note=note)


def _mc_row(suite, check, x, metric, analytic, est: mc.McEstimate, z_max: float, note="") -> ReportRow:
    z = (analytic - est.mean) / est.std_err if est.std_err > 0 else (0.0 if analytic == est.mean else math.inf)
    return ReportRow(suite, check, x, metric, analytic=analytic, mc_mean=est.mean, mc_stderr=est.std_err,
                     z=z, rel_gap=_rel(analytic, est.mean), tol=z_max, passed=bool(abs(z) <= z_max),
                     mc_n=est.n, seed=est.seed, note=note)


def _error_row(suite, check, x, metric, exc: BaseException) -> ReportRow:
    log.warning("%s/%s at x=%s failed: %s", suite, check, x, exc)
    return ReportRow(suite, check, x, metric, passed=False, error=f"{type(exc).__name__}: {exc}")


def _guarded(suite, check, x, metric, fn: Callable[[], list[ReportRow] | ReportRow]) -> list[ReportRow]:
    try:
        out = fn()
    except (SpecfunError, ArithmeticError, ValueError) as exc:
        return [_error_row(suite, check, x, metric, exc)]
    return out if isinstance(out, list) else [out]


def _point_seed(seed: int, *key: int) -> int:
    return int(np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key)).generate_state(1, np.uint64)[0])


# ---------------------------------------------------------------------------
# default configuration


def reference_config(regime: str = "weak", mu1_dB: float = 20.0, mu2_dB: float = 20.0, M: int = 2, l: int = 2,
                  rho: float = 0.72) -> ChannelConfig:
    """Reference link: d = 2 km, 1.55 um, a = a0 = sigma_s = 5 cm."""
    rf = RfConfig(M, l, rho, db_to_linear(mu1_dB))
    fso = FsoConfig(d=2000.0, Cn2=TURBULENCE_CN2[regime], wavelength=1.55e-6, a=0.05, a0=0.05, sigma_s=0.05,
                    mu2=db_to_linear(mu2_dB))
    return ChannelConfig(rf, fso)


def _regime(cfg: ChannelConfig, name: str) -> ChannelConfig:
    return cfg.with_fso(Cn2=TURBULENCE_CN2[name])


def _at(cfg: ChannelConfig, mu1_dB: float | None = None, mu2_dB: float | None = None) -> ChannelConfig:
    if mu1_dB is not None:
        cfg = cfg.with_rf(mu1=db_to_linear(mu1_dB))
    if mu2_dB is not None:
        cfg = cfg.with_fso(mu2=db_to_linear(mu2_dB))
    return cfg


def _ber(cfg, mod=an.BPSK):
    return an.avg_ber(mod, cfg.rf, cfg.derived, cfg.mu2)


def _cap(cfg):
    return an.ergodic_capacity(cfg.rf, cfg.derived, cfg.mu2)


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional sweep over ``variable`` from start to stop (inclusive).

    ``sigma_s`` is in metres, SNRs in dB.  When sweeping ``M`` with
    ``fixed.rf.l == fixed.rf.M`` the best relay is kept selected (l = M);
    otherwise l stays fixed.
    """

    variable: str
    start: float
    stop: float
    step: float
    fixed: ChannelConfig
    metrics: tuple[str, ...] = METRICS
    compare: str = "analytic"
    mod: an.ModulationScheme = an.BPSK
    gamma_th: float = 1.0
    samples: int = 10 ** 6
    seed: int = 0
    streams: int = 8
    workers: int = 1
    mc_workers: int = 1
    thresholds: Thresholds = field(default_factory=Thresholds)

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(f"sweep.variable must be one of {SWEEP_VARIABLES}, got {self.variable!r}")
        if not self.start < self.stop:
            raise ValueError("sweep.start must be below sweep.stop")
        if not self.step > 0:
            raise ValueError("sweep.step must be positive")
        bad = [m for m in self.metrics if m not in METRICS]
        if bad or not self.metrics:
            raise ValueError(f"sweep.metrics must be a non-empty subset of {METRICS}, got {list(self.metrics)}")
        if self.compare not in COMPARE_MODES:
            raise ValueError(f"sweep.compare must be one of {COMPARE_MODES}, got {self.compare!r}")
        if not self.gamma_th > 0:
            raise ValueError("gamma_th must be positive")
        object.__setattr__(self, "metrics", tuple(m for m in METRICS if m in self.metrics))

    def grid(self) -> np.ndarray:
        n = int(math.floor((self.stop - self.start) / self.step + 1e-9))
        return self.start + self.step * np.arange(n + 1)

    def config_at(self, x: float) -> ChannelConfig:
        cfg = self.fixed
        v = self.variable
        if v == "mu1_dB":
            return cfg.with_rf(mu1=db_to_linear(x))
        if v == "mu2_dB":
            return cfg.with_fso(mu2=db_to_linear(x))
        if v == "mu1=mu2_dB":
            return _at(cfg, x, x)
        if v == "sigma_s":
            return cfg.with_fso(sigma_s=float(x))
        if v == "rho":
            return cfg.with_rf(rho=float(x))
        M = int(round(x))
        l = M if cfg.rf.l == cfg.rf.M else cfg.rf.l
        return cfg.with_rf(M=M, l=l)


def _sweep_point(spec: SweepSpec, index: int, x: float) -> list[ReportRow]:
    suite = f"sweep:{spec.variable}"
    th = spec.thresholds
    try:
        cfg = spec.config_at(x)
    except ValueError as exc:
        return [_error_row(suite, spec.compare, x, m, exc) for m in spec.metrics]
    rf, fso, mu2 = cfg.rf, cfg.derived, cfg.mu2

    closed = {
        "cdf": lambda: an.cdf_eq(spec.gamma_th, rf, fso, mu2),
        "ber": lambda: an.avg_ber(spec.mod, rf, fso, mu2),
        "capacity": lambda: an.ergodic_capacity(rf, fso, mu2),
    }
    rows: list[ReportRow] = []
    est = None
    if spec.compare in ("mc", "both"):
        plan = mc.SimPlan(spec.samples, _point_seed(spec.seed, index), spec.streams, frozenset(spec.metrics),
                          workers=spec.mc_workers)
        est = mc.estimate(plan, rf, fso, mu2, spec.mod, spec.gamma_th)

    for m in spec.metrics:
        if spec.compare == "mc":
            e = est[m]
            rows.append(ReportRow(suite, "mc", x, m, mc_mean=e.mean, mc_stderr=e.std_err, mc_n=e.n, seed=e.seed,
                                  passed=e.sufficient))
            continue

        def one(m=m):
            value = closed[m]()
            if spec.compare == "analytic":
                return ReportRow(suite, "analytic", x, m, analytic=value, passed=True)
            if spec.compare == "both":
                return _mc_row(suite, "mc", x, m, value, est[m], th.z_max)
            if m == "cdf":
                ref = an.cdf_eq_integral(spec.gamma_th, rf, fso, mu2)
                return _value_row(suite, "quadrature", x, m, value, ref, th.cdf_abs, absolute=True)
            if m == "ber":
                return _value_row(suite, "quadrature", x, m, value, an.avg_ber_integral(spec.mod, rf, fso, mu2),
                                  th.ber_rel)
            return _value_row(suite, "quadrature", x, m, value, an.capacity_integral(rf, fso, mu2), th.capacity_rel)

        rows.extend(_guarded(suite, spec.compare, x, m, one))
    return rows


def run_sweep(spec: SweepSpec) -> ComparisonReport:
    """Evaluate every grid point; rows come back in grid order."""
    t0 = time.perf_counter()
    grid = [float(x) for x in spec.grid()]
    jobs = list(enumerate(grid))
    if spec.workers > 1:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            parts = list(pool.map(lambda job: _sweep_point(spec, *job), jobs))
    else:
        parts = [_sweep_point(spec, i, x) for i, x in jobs]
    rows = [r for p in parts for r in p]
    return ComparisonReport(rows, spec.thresholds, spec.seed if spec.compare in ("mc", "both") else None,
                            time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# special functions


def bessel_k0_series(x: float, terms: int = 60) -> float:
    """K_0(x) from its ascending series; adequate for 0 < x <= 10."""
    q = x * x / 4.0
    lead = math.log(x / 2.0) + 0.5772156649015329
    i0, tail, term, h = 1.0, 0.0, 1.0, 0.0
    for k in range(1, terms):
        term *= q / (k * k)
        h += 1.0 / k
        i0 += term
        tail += term * h
    return -lead * i0 + tail


def verify_special_functions(thresholds: Thresholds | None = None,
                             capacity_grid: Sequence[tuple[float, float]] = ((10, 10), (20, 20), (30, 30),
                                                                             (10, 30), (30, 10))) -> ComparisonReport:
    """Identity, oracle and contour checks of the G-function evaluators."""
    th = thresholds or Thresholds()
    t0 = time.perf_counter()
    suite = "specfun"
    rows: list[ReportRow] = []

    def g(m, n, p, q, a, b, z, contour=None):
        return meijer_g_eval(MeijerGSpec(m, n, p, q, a, b, z), contour).value

    for z in (0.01, 0.1, 1.0, 10.0, 100.0):
        rows += _guarded(suite, "exp", z, "G10_01", lambda z=z: _value_row(
            suite, "exp", z, "G10_01", g(1, 0, 0, 1, (), (0.0,), z), math.exp(-z), th.identity_rel))
        rows += _guarded(suite, "rational", z, "G11_11", lambda z=z: _value_row(
            suite, "rational", z, "G11_11", g(1, 1, 1, 1, (0.0,), (0.0,), z), 1.0 / (1.0 + z), th.identity_rel))
    for z in (0.25, 1.0, 4.0):
        rows += _guarded(suite, "bessel", z, "G20_02", lambda z=z: _value_row(
            suite, "bessel", z, "G20_02", g(2, 0, 0, 2, (), (0.0, 0.0), z), 2.0 * bessel_k0_series(2.0 * math.sqrt(z)),
            th.bessel_rel))

    s = 3 + 4j
    rows.append(_value_row(suite, "log_gamma_recurrence", 3.0, "loggamma",
                           abs(np.exp(log_gamma_complex(s + 1) - log_gamma_complex(s)) - s), 0.0, 1e-10,
                           absolute=True))
    rows.append(_value_row(suite, "erf", 1.0, "erf", erf(1.0), 0.8427007929497149, 1e-14, absolute=True))

    # contour invariance and refinement on the CDF kernel at the reference weak-turbulence point
    fso = reference_config().derived
    psi2 = fso.psi2
    b_row = an.chi1_row(psi2, fso.alpha, fso.beta)
    spec = MeijerGSpec(6, 0, 1, 6, ((psi2 + 2) / 2,), b_row, 0.7)
    tol = 1e-8

    def invariance():
        ref = meijer_g_eval(spec, ContourConfig(target_rel_err=tol)).value
        out = []
        # no ascending poles: every abscissa left of min(b) = 0 is legal
        for c in (-0.25, -0.75, -1.5):
            v = meijer_g_eval(spec, ContourConfig(abscissa=c, target_rel_err=tol)).value
            out.append(_value_row(suite, "contour_invariance", c, "G60_16", v, ref, 10 * tol,
                                  note="abscissa inside the separating strip"))
        coarse = meijer_g_eval(spec, ContourConfig(panels=8, target_rel_err=tol))
        fine = meijer_g_eval(spec, ContourConfig(panels=64, target_rel_err=tol))
        out.append(_value_row(suite, "panel_refinement", 0.7, "G60_16", coarse.value, fine.value, 10 * tol))
        return out

    rows += _guarded(suite, "contour_invariance", 0.7, "G60_16", invariance)

    base = reference_config()
    for mu1_dB, mu2_dB in capacity_grid:
        def cap_row(mu1_dB=mu1_dB, mu2_dB=mu2_dB):
            cfg = _at(base, mu1_dB, mu2_dB)
            closed = _cap(cfg)
            ref = an.capacity_integral(cfg.rf, cfg.derived, cfg.mu2)
            return _value_row(suite, "egbmgf_vs_ccdf_quadrature", mu1_dB, "capacity", closed, ref, th.capacity_rel,
                              note=f"mu1={mu1_dB} dB, mu2={mu2_dB} dB")
        rows += _guarded(suite, "egbmgf_vs_ccdf_quadrature", mu1_dB, "capacity", cap_row)
    return ComparisonReport(rows, th, None, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# distributions against MC histograms


RF_CASES = ((2, 2, 0.72), (4, 1, 0.5), (4, 4, 0.5))


def _bin_z(counts: np.ndarray, probs: np.ndarray, n: int) -> np.ndarray:
    expected = n * probs
    sd = np.sqrt(n * probs * (1.0 - probs))
    return (counts - expected) / sd


def _histogram(sampler: Callable[[np.random.Generator, int], np.ndarray], edges: np.ndarray, samples: int,
               seed: int, chunk: int = 1 << 20) -> np.ndarray:
    rng = mc.stream_rng(seed, 0)
    counts = np.zeros(len(edges) - 1, dtype=np.int64)
    todo = samples
    while todo > 0:
        size = min(chunk, todo)
        todo -= size
        counts += np.histogram(sampler(rng, size), bins=edges)[0]
    return counts


def _hist_row(suite, check, metric, counts, probs, edges, samples, seed, z_max, note) -> ReportRow:
    z = _bin_z(counts, probs, samples)
    k = int(np.argmax(np.abs(z)))
    # informational only; the pass rule is the per-bin bound
    chi2 = float(np.sum(z * z))
    centre = float(math.sqrt(edges[k] * edges[k + 1]))
    return ReportRow(suite, check, centre, metric, analytic=float(samples * probs[k]), mc_mean=float(counts[k]),
                     mc_stderr=float(math.sqrt(samples * probs[k] * (1 - probs[k]))), z=float(z[k]),
                     tol=z_max, passed=bool(np.all(np.abs(z) <= z_max)), mc_n=samples, seed=seed,
                     note=f"{note}; worst of {len(probs)} bins; chi2={chi2:.1f} on {len(probs)} bins, "
                          f"p={stats.chi2.sf(chi2, len(probs)):.3g}")


def distribution_suite(samples: int = 10 ** 7, seed: int = 0, bins: int = 50,
                       thresholds: Thresholds | None = None) -> ComparisonReport:
    """Per-bin 3-sigma comparison of sampled and analytic distributions."""
    th = thresholds or Thresholds()
    t0 = time.perf_counter()
    suite = "distributions"
    rows: list[ReportRow] = []
    mu1 = 10.0
    for k, (M, l, rho) in enumerate(RF_CASES):
        rf = RfConfig(M, l, rho, mu1)
        edges = mu1 * np.logspace(-3, math.log10(8.0), bins + 1)
        probs = np.diff(rf_cdf(edges, rf))
        s = _point_seed(seed, 1, k)
        counts = _histogram(lambda rng, n, rf=rf: mc.sample_rf_selected(rf, rng, n), edges, samples, s)
        rows.append(_hist_row(suite, f"rf_pdf(M={M},l={l},rho={rho})", "pdf", counts, probs, edges, samples, s,
                              th.z_max, "RF SNR histogram against the order-statistics CDF"))

    for k, name in enumerate(REGIMES):
        def fso_case(k=k, name=name):
            fso = reference_config(name).derived
            mu2 = 1.0
            edges = np.logspace(-4, math.log10(20.0), bins + 1)

            def mass(lo, hi):
                f = lambda y: float(fso_snr_pdf(math.exp(y), fso, mu2)) * math.exp(y)
                return integrate.quad(f, math.log(lo), math.log(hi), epsabs=1e-14, epsrel=1e-11, limit=200)[0]

            probs = np.array([mass(a, b) for a, b in zip(edges[:-1], edges[1:])])
            s = _point_seed(seed, 2, k)

            def draw(rng, n):
                i = mc.sample_fso_intensity(fso, rng, n)
                return mu2 * (i / fso.mean_intensity) ** 2

            counts = _histogram(draw, edges, samples, s)
            return _hist_row(suite, f"fso_snr_pdf({name})", "pdf", counts, probs, edges, samples, s, th.z_max,
                             "FSO SNR histogram against the G30_13 density")
        rows += _guarded(suite, f"fso_snr_pdf({name})", math.nan, "pdf", fso_case)
    return ComparisonReport(rows, th, seed, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# closed form against definition integrals and against MC


def closed_form_suite(base: ChannelConfig | None = None, grid_dB: Sequence[float] = (10, 20, 30),
                      regimes: Sequence[str] = REGIMES, gamma_th: float = 1.0,
                      thresholds: Thresholds | None = None, workers: int = 1) -> ComparisonReport:
    """CDF, BER and capacity closed forms against their defining integrals."""
    th = thresholds or Thresholds()
    t0 = time.perf_counter()
    base = base or reference_config()
    rows: list[ReportRow] = []
    for name in regimes:
        for mu2_dB in grid_dB:
            spec = SweepSpec("mu1_dB", grid_dB[0], grid_dB[-1], grid_dB[1] - grid_dB[0] if len(grid_dB) > 1 else 1.0,
                             _at(_regime(base, name), None, mu2_dB), compare="quadrature", gamma_th=gamma_th,
                             thresholds=th, workers=workers)
            for r in run_sweep(spec).rows:
                rows.append(replace(r, suite="closed-form", note=f"{name}, mu2={mu2_dB} dB"))
    return ComparisonReport(rows, th, None, time.perf_counter() - t0)


def mc_suite(base: ChannelConfig | None = None, grid_dB: Sequence[float] = (10, 20, 30),
             regimes: Sequence[str] = REGIMES, samples: int = 10 ** 6, seed: int = 0, gamma_th: float = 1.0,
             thresholds: Thresholds | None = None, workers: int = 1) -> ComparisonReport:
    """Closed forms against MC means within ``z_max`` standard errors."""
    th = thresholds or Thresholds()
    t0 = time.perf_counter()
    base = base or reference_config()
    rows: list[ReportRow] = []
    for k, name in enumerate(REGIMES):
        if name not in regimes:
            continue
        for j, mu2_dB in enumerate(grid_dB):
            spec = SweepSpec("mu1_dB", grid_dB[0], grid_dB[-1], grid_dB[1] - grid_dB[0] if len(grid_dB) > 1 else 1.0,
                             _at(_regime(base, name), None, mu2_dB), compare="both", gamma_th=gamma_th,
                             samples=samples, seed=_point_seed(seed, 3, k, j), thresholds=th, workers=workers)
            for r in run_sweep(spec).rows:
                rows.append(replace(r, suite="mc", note=f"{name}, mu2={mu2_dB} dB"))
    return ComparisonReport(rows, th, seed, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# qualitative behaviour


def _monotone(values: Sequence[float], increasing: bool, strict: bool = False) -> bool:
    pairs = list(zip(values[:-1], values[1:]))
    if increasing:
        return all(b > a if strict else b >= a for a, b in pairs)
    return all(b < a if strict else b <= a for a, b in pairs)


def _fmt(values: Iterable[float]) -> str:
    return " ".join(f"{v:.6g}" for v in values)


def trends_suite(base: ChannelConfig | None = None, thresholds: Thresholds | None = None) -> ComparisonReport:
    """Floors, relay-order symmetry at rho = 0, correlation trends and geometry orderings."""
    th = thresholds or Thresholds()
    t0 = time.perf_counter()
    base = base or reference_config()
    suite = "trends"
    rows: list[ReportRow] = []

    # BER floor with mu2 fixed at 30 dB
    def ber_floor():
        out, floors = [], {}
        for name in REGIMES:
            cfg = _regime(base, name)
            lo, hi = _ber(_at(cfg, 60, 30)), _ber(_at(cfg, 80, 30))
            floors[name] = hi
            out.append(_value_row(suite, "ber_floor_flat", 70.0, "ber", lo, hi, th.floor_rel,
                                  note=f"{name}: mu2=30 dB, mu1 60 vs 80 dB"))
        f = [floors[n] for n in REGIMES]
        out.append(_bool_row(suite, "ber_floor_order", 80.0, "ber", _monotone(f, True, strict=True),
                             note=f"weak<moderate<strong expected; floors {_fmt(f)}"))
        return out

    rows += _guarded(suite, "ber_floor", 70.0, "ber", ber_floor)

    # rho = 0: relay order and relay count are irrelevant
    def rho0():
        out = []
        cfg = base.with_rf(M=4, l=4, rho=0.0)
        b1, b4 = _ber(cfg.with_rf(l=1)), _ber(cfg)
        c1, c4 = _cap(cfg.with_rf(l=1)), _cap(cfg)
        out.append(_value_row(suite, "rho0_l_independence", 0.0, "ber", b1, b4, th.rho0_rel, note="M=4, l=1 vs l=4"))
        out.append(_value_row(suite, "rho0_l_independence", 0.0, "capacity", c1, c4, th.rho0_rel,
                              note="M=4, l=1 vs l=4"))
        for s in (0.05, 0.1, 0.2, 0.4):
            c = cfg.with_fso(sigma_s=s)
            out.append(_value_row(suite, "rho0_l_independence_vs_sigma_s", s, "ber", _ber(c.with_rf(l=1)), _ber(c),
                                  th.rho0_ber_abs, absolute=True, note="M=4, l=1 vs l=4"))
        caps = [_cap(base.with_rf(M=M, l=M, rho=0.0)) for M in range(1, 6)]
        out.append(_value_row(suite, "rho0_capacity_constant_in_M", 5.0, "capacity", max(caps), min(caps),
                              th.rho0_rel, note=f"M=1..5: {_fmt(caps)}"))
        return out

    rows += _guarded(suite, "rho0", 0.0, "ber", rho0)

    # correlation trends: better with rho for l = M, worse for l = 1
    rhos = (0.0, 0.25, 0.5, 0.72, 1.0)

    def rho_trend():
        out = []
        for l, improving in ((4, True), (1, False)):
            cfgs = [base.with_rf(M=4, l=l, rho=r) for r in rhos]
            bers = [_ber(c) for c in cfgs]
            caps = [_cap(c) for c in cfgs]
            out.append(_bool_row(suite, f"rho_trend_l={l}", float(l), "ber", _monotone(bers, not improving),
                                 note=f"M=4, rho {_fmt(rhos)}: {_fmt(bers)}"))
            out.append(_bool_row(suite, f"rho_trend_l={l}", float(l), "capacity", _monotone(caps, improving),
                                 note=f"M=4, rho {_fmt(rhos)}: {_fmt(caps)}"))
        return out

    rows += _guarded(suite, "rho_trend", math.nan, "ber", rho_trend)

    # capacity floor with mu1 fixed, none with mu1 = mu2
    def cap_floor():
        out = []
        for name in REGIMES:
            cfg = _regime(base, name)
            lo, hi = _cap(_at(cfg, 20, 60)), _cap(_at(cfg, 20, 80))
            out.append(_value_row(suite, "capacity_floor_flat", 70.0, "capacity", lo, hi, th.floor_rel,
                                  note=f"{name}: mu1=20 dB, mu2 60 vs 80 dB"))
        xs = list(range(0, 90, 10))
        caps = [_cap(_at(base, x, x)) for x in xs]
        grows = _monotone(caps, True, strict=True) and _rel(caps[-3], caps[-1]) > th.floor_rel
        out.append(_bool_row(suite, "capacity_unbounded_joint", 80.0, "capacity", grows,
                             note=f"mu1=mu2 0..80 dB: {_fmt(caps)}"))
        return out

    rows += _guarded(suite, "capacity_floor", 70.0, "capacity", cap_floor)

    # geometry: shorter link and smaller jitter give more capacity
    def geometry():
        out = []
        a = base.fso.a
        ratios = (0.5, 1.0, 2.0)
        caps = {}
        for d in (2000.0, 6000.0):
            for r in ratios:
                cfg = base.with_fso(d=d, sigma_s=r * a)
                caps[d, r] = [_cap(cfg.with_rf(M=M, l=M)) for M in (1, 3, 5)]
        for r in (0.5, 1.0):
            ok = all(x > y for x, y in zip(caps[2000.0, r], caps[6000.0, r]))
            out.append(_bool_row(suite, "capacity_decreasing_in_d", r, "capacity", ok,
                                 note=f"sigma_s/a={r}, M=1,3,5: d=2000 {_fmt(caps[2000.0, r])}; "
                                      f"d=6000 {_fmt(caps[6000.0, r])}"))
        for d in (2000.0, 6000.0):
            ok = all(_monotone([caps[d, r][i] for r in ratios], False, strict=True) for i in range(3))
            out.append(_bool_row(suite, "capacity_decreasing_in_sigma_s", d, "capacity", ok,
                                 note=f"d={d:g}, sigma_s/a {_fmt(ratios)}"))
        return out

    rows += _guarded(suite, "geometry", math.nan, "capacity", geometry)
    return ComparisonReport(rows, th, None, time.perf_counter() - t0)


# ---------------------------------------------------------------------------


def run_validation(base: ChannelConfig | None = None, suites: Sequence[str] = SUITES, samples: int = 10 ** 6,
                   hist_samples: int = 10 ** 7, seed: int = 0, thresholds: Thresholds | None = None,
                   workers: int = 1) -> ComparisonReport:
    """Run the requested suites in a fixed order and merge their rows."""
    bad = [s for s in suites if s not in SUITES]
    if bad:
        raise ValueError(f"unknown suite(s) {bad}; choose from {SUITES}")
    th = thresholds or Thresholds()
    base = base or reference_config()
    t0 = time.perf_counter()
    report = ComparisonReport([], th, seed)
    for name in SUITES:
        if name not in suites:
            continue
        t = time.perf_counter()
        if name == "specfun":
            part = verify_special_functions(th)
        elif name == "distributions":
            part = distribution_suite(hist_samples, _point_seed(seed, 10), thresholds=th)
        elif name == "closed-form":
            part = closed_form_suite(base, thresholds=th, workers=workers)
        elif name == "mc":
            part = mc_suite(base, samples=samples, seed=_point_seed(seed, 11), thresholds=th, workers=workers)
        else:
            part = trends_suite(base, th)
        log.info("suite %s: %d rows, %d failed, %.1f s", name, len(part.rows), len(part.failed),
                 time.perf_counter() - t)
        report.extend(part)
    report.elapsed_s = time.perf_counter() - t0
    return report
