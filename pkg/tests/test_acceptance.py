"""Acceptance criteria, each checked at its stated tolerance.

The default validation run is executed once per session with the CLI
defaults (fixed seed); each suite is timed separately.  One pass/fail line
per criterion is printed in the terminal summary.
"""
import math
import os
import time

import pytest

from rffso import cli
from rffso import validation as val

from conftest import ACCEPTANCE

RUNTIME_LIMIT_S = 15 * 60
PER_CASE_LIMIT_S = 2 * 60


@pytest.fixture(scope="session")
def default_run():
    cfg = cli.load_config(None)
    v = cfg.validation
    workers = min(8, os.cpu_count() or 1)
    rows, times = {}, {}
    for suite in v["suites"]:
        t0 = time.perf_counter()
        rep = val.run_validation(cfg.channel, [suite], v["samples"], v["hist_samples"], v["seed"],
                                 v["thresholds"], workers)
        times[suite] = time.perf_counter() - t0
        rows[suite] = rep.rows
    return {"rows": rows, "times": times, "seed": v["seed"], "samples": v["samples"],
            "hist_samples": v["hist_samples"], "thresholds": v["thresholds"]}


def record(key, rows, extra=""):
    ok = bool(rows) and all(r.passed for r in rows)
    bad = [f"{r.check}[{r.metric}@{r.x:g}]" for r in rows if not r.passed]
    detail = f"{len(rows) - len(bad)}/{len(rows)} rows pass"
    if bad:
        detail += "; failing: " + ", ".join(bad)
    if extra:
        detail += f"; {extra}"
    ACCEPTANCE[key] = (ok, detail)
    return ok, detail


def pick(run, suite, *checks):
    return [r for r in run["rows"][suite] if not checks or r.check.startswith(checks)]


def test_criterion_1_special_function_identities(default_run):
    rows = pick(default_run, "specfun", "exp", "rational", "bessel")
    assert {r.x for r in rows if r.check == "exp"} == {0.01, 0.1, 1.0, 10.0, 100.0}
    assert {r.x for r in rows if r.check == "rational"} == {0.01, 0.1, 1.0, 10.0, 100.0}
    assert all(r.tol == (1e-8 if r.check == "bessel" else 1e-9) for r in rows)
    ok, detail = record("1", rows, f"max rel gap {max(r.rel_gap for r in rows):.2g}")
    assert ok, detail


def test_criterion_2_distributions(default_run):
    rows = pick(default_run, "distributions")
    assert len(rows) == 6 and all(r.mc_n == 10 ** 7 for r in rows)
    per_case = default_run["times"]["distributions"] / len(rows)
    worst = max(abs(r.z) for r in rows)
    ok, detail = record("2", rows, f"worst bin |z| {worst:.2f}; {per_case:.1f} s per case")
    assert per_case <= PER_CASE_LIMIT_S
    assert ok, detail


def test_criterion_3_closed_form_vs_definition(default_run):
    rows = pick(default_run, "closed-form")
    assert len(rows) == 81
    tol = {"cdf": 1e-5, "ber": 1e-5, "capacity": 5e-3}
    assert all(r.tol == tol[r.metric] for r in rows)
    gaps = {m: max(r.rel_gap for r in rows if r.metric == m) for m in tol}
    ok, detail = record("3", rows, "max gaps " + ", ".join(f"{m} {g:.2g}" for m, g in gaps.items()))
    assert ok, detail


def test_criterion_4_closed_form_vs_mc(default_run):
    rows = pick(default_run, "mc")
    assert len(rows) == 81 and all(r.mc_n == default_run["samples"] for r in rows)
    assert 10 ** 6 <= default_run["samples"] <= 10 ** 7
    worst = max(abs(r.z) for r in rows)
    ok, detail = record("4", rows, f"max |z| {worst:.2f} at n={default_run['samples']}")
    assert ok, detail


def test_criterion_5a_ber_floor(default_run):
    rows = pick(default_run, "trends", "ber_floor")
    assert len(rows) == 4
    order = next(r for r in rows if r.check == "ber_floor_order")
    ok, detail = record("5a", rows, order.note)
    assert ok, detail


def test_criterion_5b_rho0_relay_order(default_run):
    rows = [r for r in pick(default_run, "trends", "rho0_l_independence") if r.check == "rho0_l_independence"]
    assert {r.metric for r in rows} == {"ber", "capacity"}
    assert all(r.tol == 1e-6 for r in rows)
    ok, detail = record("5b", rows, f"max rel gap {max(r.rel_gap for r in rows):.2g}")
    assert ok, detail


def test_criterion_5c_rho_trends(default_run):
    rows = pick(default_run, "trends", "rho_trend")
    assert len(rows) == 4
    ok, detail = record("5c", rows)
    assert ok, detail


def test_criterion_5d_capacity_floor(default_run):
    rows = pick(default_run, "trends", "capacity_floor", "capacity_unbounded")
    assert len(rows) == 4
    gaps = " ".join(f"{r.note.split(':')[0]} {r.rel_gap:.3%}" for r in rows if r.check == "capacity_floor_flat")
    ok, detail = record("5d", rows, f"floor gaps {gaps}")
    assert ok, detail


def test_criterion_5e_geometry(default_run):
    rows = pick(default_run, "trends", "capacity_decreasing")
    assert len(rows) == 4
    ok, detail = record("5e", rows)
    assert ok, detail


def test_criterion_6_thread_count_reproducibility(tmp_path, capsys):
    outputs = {}
    for workers in (1, 4, 8):
        path = tmp_path / f"sim_{workers}.csv"
        code = cli.main(["simulate", "--samples", "100000", "--seed", "2024", "--workers", str(workers),
                         "-o", str(path)])
        assert code == 0
        outputs[workers] = path.read_bytes()
    capsys.readouterr()
    ok = outputs[1] == outputs[4] == outputs[8]
    ACCEPTANCE["6"] = (ok, f"simulate output {len(outputs[1])} bytes, identical at 1/4/8 threads: {ok}")
    assert ok


def test_criterion_7_runtime(default_run):
    total = sum(default_run["times"].values())
    per_suite = ", ".join(f"{k} {v:.0f} s" for k, v in default_run["times"].items())
    ok = math.isfinite(total) and total <= RUNTIME_LIMIT_S
    ACCEPTANCE["7"] = (ok, f"{total:.0f} s on {os.cpu_count()} core(s) ({per_suite})")
    assert ok
