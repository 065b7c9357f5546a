import math

import numpy as np
import pytest
from scipy import special

from rffso import validation as val
from rffso.channel import db_to_linear
from rffso.validation import ReportRow, SweepSpec, run_sweep


def analytic(spec_cfg, variable, start, stop, step, metrics, **kw):
    return run_sweep(SweepSpec(variable, start, stop, step, spec_cfg, metrics, **kw))


def values(report, metric):
    return np.array([r.analytic for r in report.rows if r.metric == metric])


# --- sweep plumbing


def test_grid_includes_stop(weak):
    assert SweepSpec("mu1_dB", 0, 40, 2, weak).grid().tolist() == list(range(0, 41, 2))
    assert SweepSpec("rho", 0, 1, 0.25, weak).grid().tolist() == [0, 0.25, 0.5, 0.75, 1.0]
    assert SweepSpec("rho", 0, 0.9, 0.25, weak).grid().tolist() == [0, 0.25, 0.5, 0.75]


def test_config_at(weak):
    assert SweepSpec("mu1_dB", 0, 10, 1, weak).config_at(10).rf.mu1 == pytest.approx(10.0)
    cfg = SweepSpec("mu1=mu2_dB", 0, 10, 1, weak).config_at(30)
    assert (cfg.rf.mu1, cfg.mu2) == pytest.approx((1e3, 1e3))
    assert SweepSpec("sigma_s", 0.1, 0.2, 0.1, weak).config_at(0.2).fso.sigma_s == 0.2
    # l tracks M when the best relay is selected, otherwise stays put
    assert SweepSpec("M", 1, 5, 1, weak).config_at(4).rf.l == 4
    worst = weak.with_rf(M=2, l=1)
    assert SweepSpec("M", 1, 5, 1, worst).config_at(4).rf.l == 1


@pytest.mark.parametrize("kw", [dict(variable="d"), dict(start=5, stop=5), dict(step=0), dict(metrics=()),
                                dict(metrics=("outage",)), dict(compare="plot"), dict(gamma_th=0.0)])
def test_sweep_spec_validation(weak, kw):
    args = dict(variable="mu1_dB", start=0, stop=10, step=1, fixed=weak) | kw
    with pytest.raises(ValueError):
        SweepSpec(**args)


def test_metrics_are_canonically_ordered(weak):
    assert SweepSpec("mu1_dB", 0, 1, 1, weak, ("capacity", "cdf")).metrics == ("cdf", "capacity")


def test_point_errors_are_aggregated(weak):
    # sigma_s = 0 has no finite pointing-error parameter; the other points still run
    rep = analytic(weak, "sigma_s", 0.0, 0.1, 0.05, ("ber",))
    assert [r.x for r in rep.rows] == [0.0, 0.05, 0.1]
    assert rep.rows[0].error and not rep.rows[0].passed
    assert all(r.passed and not r.error for r in rep.rows[1:])
    assert not rep.passed and rep.failed == rep.rows[:1]


def test_analyze_sweep_shapes(weak):
    rep = analytic(weak, "mu1=mu2_dB", 0, 40, 2, val.METRICS)
    assert len(rep.rows) == 63 and rep.passed
    assert np.all(np.diff(values(rep, "ber")) < 0)
    assert np.all(np.diff(values(rep, "cdf")) < 0)
    assert np.all(np.diff(values(rep, "capacity")) > 0)


def test_quadrature_sweep(weak):
    rep = analytic(weak, "mu1_dB", 10, 30, 20, val.METRICS, compare="quadrature")
    assert rep.passed, [r.note for r in rep.failed]
    assert {r.check for r in rep.rows} == {"quadrature"}


def test_mc_sweep_is_deterministic(weak):
    def run(workers, mc_workers):
        spec = SweepSpec("mu1_dB", 10, 30, 10, weak, ("cdf", "ber"), compare="both", samples=2 * 10 ** 4,
                         seed=99, workers=workers, mc_workers=mc_workers)
        return run_sweep(spec).rows

    ref = run(1, 1)
    assert run(3, 1) == ref
    assert run(2, 4) == ref
    assert all(math.isfinite(r.z) for r in ref)
    assert len({r.seed for r in ref}) == 3


# --- figure-shaped sweeps


def test_ber_floor_flat_over_mu1(regimes):
    # floor ordering across regimes is an acceptance criterion, see test_acceptance
    for name, cfg in regimes.items():
        rep = analytic(cfg.with_fso(mu2=db_to_linear(30)), "mu1_dB", 60, 80, 10, ("ber",))
        b = values(rep, "ber")
        assert abs(b[0] - b[-1]) / abs(b[-1]) <= 0.01, name


@pytest.mark.parametrize("rho", [0.0, 0.5, 0.9])
def test_ber_vs_sigma_s(weak, rho):
    base = weak.with_rf(M=4, rho=rho)
    worst = values(analytic(base.with_rf(l=1), "sigma_s", 0.05, 0.4, 0.05, ("ber",)), "ber")
    best = values(analytic(base.with_rf(l=4), "sigma_s", 0.05, 0.4, 0.05, ("ber",)), "ber")
    assert np.all(np.diff(best) > 0) and np.all(np.diff(worst) > 0)
    if rho == 0.0:
        np.testing.assert_allclose(worst, best, rtol=0, atol=1e-8)
    else:
        assert np.all(best < worst)


def test_capacity_vs_relay_count_uncorrelated(weak):
    rep = analytic(weak.with_rf(M=1, l=1, rho=0.0), "M", 1, 5, 1, ("capacity",))
    c = values(rep, "capacity")
    assert len(c) == 5
    np.testing.assert_allclose(c, c[0], rtol=1e-6)


# --- special-function suite and reports


@pytest.fixture(scope="module")
def specfun_report():
    return val.verify_special_functions()


def test_verify_special_functions(specfun_report):
    rep = specfun_report
    assert rep.passed, [(r.check, r.note, r.error) for r in rep.failed]
    exp_row = next(r for r in rep.rows if r.check.startswith("exp") and r.x == 1.0)
    assert abs(exp_row.analytic - math.exp(-1)) < 1e-9
    rat = next(r for r in rep.rows if r.check.startswith("rational") and r.x == 10.0)
    assert abs(rat.analytic - 1 / 11) < 1e-9
    caps = [r for r in rep.rows if r.metric == "capacity"]
    assert len(caps) == 5 and max(r.rel_gap for r in caps) < 5e-3


def test_corrupted_tolerance_fails(specfun_report):
    rep = val.verify_special_functions(val.Thresholds(identity_rel=1e-18, capacity_rel=1e-15))
    assert not rep.passed and len(rep.failed) > 0
    assert len(rep.rows) == len(specfun_report.rows)


def test_thresholds_validation():
    with pytest.raises(ValueError, match="z_max"):
        val.Thresholds(z_max=0)


def test_report_summary():
    rows = [ReportRow("s", "a", 1.0, "ber", z=2.5, passed=True),
            ReportRow("s", "b", 2.0, "ber", z=-3.5, passed=False),
            ReportRow("s", "c", 3.0, "capacity", rel_gap=1e-3, passed=True)]
    rep = val.ComparisonReport(rows)
    assert rep.summary() == {"rows": 3, "failed": 1, "passed": False, "max_abs_z": 3.5, "max_rel_gap": 1e-3}
    assert list(rows[0].as_dict()) == list(ReportRow.COLUMNS)


def test_bessel_series_oracle():
    for x in (0.25, 1.0, 2.0, 4.0):
        assert val.bessel_k0_series(x) == pytest.approx(special.k0(x), rel=1e-12)


def test_run_validation_rejects_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        val.run_validation(suites=("plots",))


def test_report_is_deterministic(weak):
    rep = val.run_validation(weak, suites=("specfun",), seed=5)
    assert rep.rows == val.run_validation(weak, suites=("specfun",), seed=5).rows
