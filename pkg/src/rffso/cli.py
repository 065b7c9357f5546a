"""Command-line front end: ``rffso analyze | simulate | validate | specfun``.

Configs are YAML (JSON is accepted too).  SNRs are given in dB and
converted to linear scale once, while the config is parsed.  Every output
file starts with ``#`` comment lines echoing the effective config, so a run
can be replayed from its own output.

Exit codes: 0 success, 1 validation failure, 2 config error,
3 numerical failure.
"""
from __future__ import annotations

import argparse
import copy
import csv
import io
import json
import logging
import math
import os
import secrets
import sys
from dataclasses import asdict, dataclass
from typing import Any, Sequence

import yaml

from . import analytics as an
from . import validation as val
from .channel import TURBULENCE_CN2, ChannelConfig, FsoConfig, LinkBudget, RfConfig, db_to_linear, derive_fso
from .specfun import (ContourConfig, Egbmgf2Spec, MeijerGSpec, SpecfunError, egbmgf_eval, meijer_g_eval)

log = logging.getLogger("rffso")

ENV_LOG_LEVEL = "RFFSO_LOG_LEVEL"
EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3
CSV_COLUMNS = ("x", "metric", "method", "value", "std_err", "n", "seed")
DEFAULT_VALIDATION_SEED = 2024
MIN_SAMPLES = 10 ** 4

DEFAULT_CONFIG: dict[str, Any] = {
    "rf": {"M": 2, "l": 2, "rho": 0.72, "mu1_dB": 20.0},
    "fso": {"d": 2000.0, "Cn2": "weak", "wavelength": 1.55e-6, "a": 0.05, "a0": 0.05, "sigma_s": 0.05,
            "mu2_dB": 20.0, "F0": "inf", "path_loss": 1.0},
    "modulation": "BPSK",
    "gamma_th_dB": 0.0,
    "sweep": {"variable": "mu1=mu2_dB", "start": 0.0, "stop": 40.0, "step": 2.0,
              "metrics": ["cdf", "ber", "capacity"]},
    "sim": {"samples": 10 ** 6, "seed": None, "streams": 8},
    "validation": {"seed": DEFAULT_VALIDATION_SEED, "samples": 10 ** 6, "hist_samples": 10 ** 7,
                   "suites": list(val.SUITES), "thresholds": {}},
}

_REQUIRED = {"rf": ("M", "l", "rho"), "fso": ("d", "Cn2", "wavelength", "a", "a0", "sigma_s")}
_OPTIONAL_SECTIONS = {
    "rf": {"M", "l", "rho", "mu1_dB"},
    "fso": {"d", "Cn2", "wavelength", "a", "a0", "sigma_s", "mu2_dB", "F0", "path_loss"},
    "link": {"Ps", "sigma2_SR", "sigma2_RD", "Pt", "eta", "m_index"},
    "sweep": {"variable", "start", "stop", "step", "metrics"},
    "sim": {"samples", "seed", "streams"},
    "validation": {"seed", "samples", "hist_samples", "suites", "thresholds"},
}
_SCALARS = {"modulation", "gamma_th_dB"}


class ConfigError(ValueError):
    """Invalid or incomplete configuration; the message names the field."""

    def __init__(self, field: str, message: str, line: int | None = None):
        self.field = field
        self.line = line
        where = f" (line {line})" if line else ""
        if message.startswith(field + " "):
            message = message[len(field) + 1:]
        super().__init__(f"{field}{where}: {message}")


@dataclass
class RunConfig:
    raw: dict
    channel: ChannelConfig
    mod: an.ModulationScheme
    gamma_th: float
    sweep: dict
    sim: dict
    validation: dict
    source: str | None = None


# ---------------------------------------------------------------------------
# config parsing


def _line_index(node, prefix: str = "", out: dict | None = None) -> dict[str, int]:
    out = {} if out is None else out
    if isinstance(node, yaml.MappingNode):
        for key, value in node.value:
            path = f"{prefix}{key.value}"
            out[path] = key.start_mark.line + 1
            _line_index(value, path + ".", out)
    return out


def _read_text(text: str, source: str) -> tuple[dict, dict[str, int]]:
    try:
        data = yaml.safe_load(text)
        lines = _line_index(yaml.compose(text)) if data else {}
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise ConfigError(source, f"cannot parse: {getattr(exc, 'problem', exc)}",
                          mark.line + 1 if mark else None) from None
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(source, "top level must be a mapping")
    return data, lines


def config_echo_from_output(path: str) -> dict:
    """Recover the config echoed in the header of a CSV or JSON output file."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return json.loads(text)["config"]
    for line in text.splitlines():
        if line.startswith("# config: "):
            return json.loads(line[len("# config: "):])
    raise ConfigError(path, "no '# config:' echo line found")


def _set_path(data: dict, dotted: str, value) -> None:
    keys = dotted.split(".")
    node = data
    for k in keys[:-1]:
        if not isinstance(node.get(k), dict):
            node[k] = {}
        node = node[k]
    node[keys[-1]] = value


def _parse_override(item: str) -> tuple[str, Any]:
    if "=" not in item:
        raise ConfigError(item, "override must look like section.key=value")
    key, text = item.split("=", 1)
    try:
        value = yaml.safe_load(text)
    except yaml.YAMLError:
        value = text
    return key.strip(), value


def _num(value, field: str, lines: dict, integer: bool = False) -> float:
    if isinstance(value, bool):
        raise ConfigError(field, f"expected a number, got {value!r}", lines.get(field))
    if integer:
        # exact for 64-bit seeds, which a float round trip would corrupt
        try:
            return int(value) if isinstance(value, int) else int(str(value).strip())
        except ValueError:
            pass
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ConfigError(field, f"expected a number, got {value!r}", lines.get(field)) from None
    if math.isnan(x):
        raise ConfigError(field, "must not be NaN", lines.get(field))
    if integer:
        if not x.is_integer():
            raise ConfigError(field, f"expected an integer, got {value!r}", lines.get(field))
        return int(x)
    return x


def parse_db(value, field: str = "gamma_th", lines: dict | None = None) -> float:
    """'3dB', '3 dB' or 3 -> 3.0 (dB)."""
    if isinstance(value, str):
        text = value.strip()
        if text.lower().endswith("db"):
            text = text[:-2].strip()
        value = text
    return _num(value, field, lines or {})


def _cn2(value, lines) -> float:
    if isinstance(value, str) and value.strip().lower() in TURBULENCE_CN2:
        return TURBULENCE_CN2[value.strip().lower()]
    return _num(value, "fso.Cn2", lines)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    return obj


def build_config(data: dict, lines: dict | None = None, source: str | None = None,
                 fill_channel: bool = False) -> RunConfig:
    """Validate a raw config tree and convert it to in-memory objects.

    Optional sections fall back to the built-in defaults.  The channel
    sections come from the file alone unless ``fill_channel`` is set.
    """
    lines = lines or {}
    for key, value in data.items():
        if key in _SCALARS:
            continue
        if key not in _OPTIONAL_SECTIONS:
            raise ConfigError(key, "unknown section", lines.get(key))
        if not isinstance(value, dict):
            raise ConfigError(key, "must be a mapping", lines.get(key))
        for sub in value:
            if sub not in _OPTIONAL_SECTIONS[key]:
                raise ConfigError(f"{key}.{sub}", "unknown field", lines.get(f"{key}.{sub}"))

    raw = copy.deepcopy(DEFAULT_CONFIG)
    if not fill_channel:
        raw["rf"], raw["fso"] = {}, {"F0": "inf", "path_loss": 1.0}
    for key, value in data.items():
        if isinstance(raw.get(key), dict) and isinstance(value, dict):
            raw[key].update(copy.deepcopy(value))
        else:
            raw[key] = copy.deepcopy(value)

    link_raw = raw.get("link")
    for section, names in _REQUIRED.items():
        for name in names:
            if raw[section].get(name) is None:
                raise ConfigError(f"{section}.{name}", "missing required field")
    for section, name in (("rf", "mu1_dB"), ("fso", "mu2_dB")):
        if raw[section].get(name) is None and link_raw is None:
            raise ConfigError(f"{section}.{name}", "missing required field (or give a link section)")

    rf_raw, fso_raw = raw["rf"], raw["fso"]
    link = None
    try:
        if link_raw is not None:
            link = LinkBudget(**{k: _num(v, f"link.{k}", lines) for k, v in link_raw.items()})
        fso_kw = {k: _num(fso_raw[k], f"fso.{k}", lines)
                  for k in ("d", "wavelength", "a", "a0", "sigma_s", "F0", "path_loss")}
        fso_kw["Cn2"] = _cn2(fso_raw["Cn2"], lines)
        if fso_raw.get("mu2_dB") is not None:
            mu2 = db_to_linear(_num(fso_raw["mu2_dB"], "fso.mu2_dB", lines))
        else:
            mu2 = link.mu2(derive_fso(FsoConfig(mu2=1.0, **fso_kw)))
        if rf_raw.get("mu1_dB") is not None:
            mu1 = db_to_linear(_num(rf_raw["mu1_dB"], "rf.mu1_dB", lines))
        else:
            mu1 = link.mu1()
        rf = RfConfig(_num(rf_raw["M"], "rf.M", lines, integer=True), _num(rf_raw["l"], "rf.l", lines, integer=True),
                      _num(rf_raw["rho"], "rf.rho", lines), mu1)
        channel = ChannelConfig(rf, FsoConfig(mu2=mu2, **fso_kw), link)
    except ConfigError:
        raise
    except ValueError as exc:
        msg = str(exc)
        field = msg.split(" ", 1)[0].split("=", 1)[0] if "." in msg.split(" ", 1)[0] else "channel"
        raise ConfigError(field, msg, lines.get(field)) from None

    try:
        mod = an.ModulationScheme.from_name(str(raw["modulation"]))
    except ValueError as exc:
        raise ConfigError("modulation", str(exc), lines.get("modulation")) from None
    gamma_th = db_to_linear(parse_db(raw["gamma_th_dB"], "gamma_th_dB", lines))

    sw = raw["sweep"]
    sweep = {"variable": sw.get("variable"),
             "start": _num(sw.get("start"), "sweep.start", lines),
             "stop": _num(sw.get("stop"), "sweep.stop", lines),
             "step": _num(sw.get("step"), "sweep.step", lines),
             "metrics": tuple(sw.get("metrics") or ())}
    if sweep["variable"] not in val.SWEEP_VARIABLES:
        raise ConfigError("sweep.variable", f"must be one of {val.SWEEP_VARIABLES}", lines.get("sweep.variable"))
    if not sweep["start"] < sweep["stop"] or not sweep["step"] > 0:
        raise ConfigError("sweep", "need start < stop and step > 0", lines.get("sweep"))
    bad = [m for m in sweep["metrics"] if m not in val.METRICS]
    if bad or not sweep["metrics"]:
        raise ConfigError("sweep.metrics", f"must be a non-empty subset of {val.METRICS}", lines.get("sweep.metrics"))

    sm = raw["sim"]
    sim = {"samples": _num(sm.get("samples"), "sim.samples", lines, integer=True),
           "seed": None if sm.get("seed") is None else _num(sm["seed"], "sim.seed", lines, integer=True),
           "streams": _num(sm.get("streams"), "sim.streams", lines, integer=True)}
    if sim["streams"] < 1:
        raise ConfigError("sim.streams", "must be positive", lines.get("sim.streams"))
    if sim["seed"] is not None and not 0 <= sim["seed"] < 2 ** 64:
        raise ConfigError("sim.seed", "must be an unsigned 64-bit integer", lines.get("sim.seed"))

    vr = raw["validation"]
    suites = vr.get("suites") or list(val.SUITES)
    if isinstance(suites, str):
        suites = [s.strip() for s in suites.split(",")]
    bad = [s for s in suites if s not in val.SUITES]
    if bad:
        raise ConfigError("validation.suites", f"unknown suite(s) {bad}; choose from {val.SUITES}",
                          lines.get("validation.suites"))
    th_raw = vr.get("thresholds") or {}
    known = set(val.Thresholds.__dataclass_fields__)
    for k in th_raw:
        if k not in known:
            raise ConfigError(f"validation.thresholds.{k}", "unknown threshold",
                              lines.get(f"validation.thresholds.{k}"))
    try:
        thresholds = val.Thresholds(**{k: _num(v, f"validation.thresholds.{k}", lines) for k, v in th_raw.items()})
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError("validation.thresholds", str(exc)) from None
    validation = {"seed": _num(vr.get("seed"), "validation.seed", lines, integer=True),
                  "samples": _num(vr.get("samples"), "validation.samples", lines, integer=True),
                  "hist_samples": _num(vr.get("hist_samples"), "validation.hist_samples", lines, integer=True),
                  "suites": list(suites), "thresholds": thresholds}
    return RunConfig(_jsonable(raw), channel, mod, gamma_th, sweep, sim, validation, source)


def load_config(path: str | None, overrides: Sequence[str] = ()) -> RunConfig:
    """Read ``path`` (or the built-in reference defaults) and apply overrides."""
    if path is None:
        data, lines, fill = {}, {}, True
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError("--config", f"cannot read {path}: {exc.strerror}") from None
        if text.startswith("# rffso"):
            data, lines = config_echo_from_output(path), {}
        else:
            data, lines = _read_text(text, path)
            if "command" in data and isinstance(data.get("config"), dict):
                data, lines = data["config"], {}
        fill = False
    data = copy.deepcopy(data)
    for item in overrides:
        key, value = _parse_override(item)
        _set_path(data, key, value)
    return build_config(data, lines, path, fill_channel=fill)


# ---------------------------------------------------------------------------
# output


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "nan" if math.isnan(v) else repr(v)
    return str(v)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def render_table(command: str, cfg: RunConfig, columns: Sequence[str], rows: Sequence[dict], fmt: str,
                 extra: dict | None = None) -> str:
    """Render rows as CSV (with ``#`` header lines) or JSON; both carry the config echo."""
    extra = extra or {}
    echo = json.dumps(cfg.raw, sort_keys=True, separators=(",", ":"))
    if fmt == "json":
        # key order follows the sorted echo so a replayed config renders identically
        doc = {"command": command, "config": json.loads(echo), **extra, "columns": list(columns),
               "rows": [{c: _jsonable(r.get(c)) for c in columns} for r in rows]}
        return json.dumps(doc, indent=1, sort_keys=False, allow_nan=True) + "\n"
    buf = io.StringIO()
    buf.write(f"# rffso {command}\n")
    buf.write(f"# config: {echo}\n")
    for k, v in extra.items():
        buf.write(f"# {k}: {json.dumps(_jsonable(v), sort_keys=True, separators=(',', ':'))}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(r.get(c)) for c in columns])
    return buf.getvalue()


def _sweep_spec(cfg: RunConfig, compare: str, samples: int = 10 ** 6, seed: int = 0,
                workers: int = 1) -> val.SweepSpec:
    s = cfg.sweep
    return val.SweepSpec(s["variable"], s["start"], s["stop"], s["step"], cfg.channel, s["metrics"], compare,
                         cfg.mod, cfg.gamma_th, samples, seed, cfg.sim["streams"], mc_workers=workers)


def _sweep_rows(report: val.ComparisonReport, method: str) -> list[dict]:
    rows = []
    for r in report.rows:
        if method == "analytic":
            rows.append({"x": r.x, "metric": r.metric, "method": "analytic", "value": r.analytic,
                         "std_err": 0.0, "n": 0, "seed": None})
        else:
            rows.append({"x": r.x, "metric": r.metric, "method": "mc", "value": r.mc_mean,
                         "std_err": r.mc_stderr, "n": r.mc_n, "seed": r.seed})
    return rows


def _numeric_failures(report: val.ComparisonReport) -> int:
    bad = [r for r in report.rows if r.error]
    for r in bad:
        print(f"error: evaluator failure at x={r.x:g} metric={r.metric}: {r.error}", file=sys.stderr)
    return EXIT_NUMERIC if bad else EXIT_OK


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> int:
    cfg = load_config(args.config, _overrides(args))
    report = val.run_sweep(_sweep_spec(cfg, "analytic"))
    _write(render_table("analyze", cfg, CSV_COLUMNS, _sweep_rows(report, "analytic"), args.format), args.output)
    return _numeric_failures(report)


def cmd_simulate(args) -> int:
    cfg = load_config(args.config, _overrides(args))
    if cfg.sim["samples"] < MIN_SAMPLES:
        raise ConfigError("sim.samples", f"must be at least {MIN_SAMPLES} for reported confidence intervals")
    if cfg.sim["seed"] is None:
        seed = secrets.randbits(64)
        cfg.sim["seed"] = seed
        cfg.raw["sim"]["seed"] = seed
        log.info("generated seed %d", seed)
    seed = cfg.sim["seed"]
    report = val.run_sweep(_sweep_spec(cfg, "mc", cfg.sim["samples"], seed, args.workers))
    _write(render_table("simulate", cfg, CSV_COLUMNS, _sweep_rows(report, "mc"), args.format, {"seed": seed}),
           args.output)
    return _numeric_failures(report)


def cmd_validate(args) -> int:
    cfg = load_config(args.config, _overrides(args))
    v = cfg.validation
    if args.suite:
        suites = [s.strip() for item in args.suite for s in item.split(",") if s.strip()]
        bad = [s for s in suites if s not in val.SUITES]
        if bad:
            raise ConfigError("--suite", f"unknown suite(s) {bad}; choose from {val.SUITES}")
        cfg.raw["validation"]["suites"] = suites
        v["suites"] = suites
    report = val.run_validation(cfg.channel, v["suites"], v["samples"], v["hist_samples"], v["seed"],
                                v["thresholds"], args.workers)
    extra = {"thresholds": asdict(v["thresholds"]), "summary": report.summary(), "seed": v["seed"]}
    rows = [r.as_dict() for r in report.rows]
    _write(render_table("validate", cfg, val.ReportRow.COLUMNS, rows, args.format, extra), args.output)
    s = report.summary()
    print(f"validate: {s['rows']} rows, {s['failed']} failed, max|z|={s['max_abs_z']:.3g}, "
          f"max gap={s['max_rel_gap']:.3g}, {report.elapsed_s:.1f} s", file=sys.stderr)
    for r in report.failed:
        print(f"FAIL {r.suite}/{r.check} x={r.x:g} {r.metric}: {r.error or r.note}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_specfun(args) -> int:
    contour = ContourConfig(args.abscissa, args.half_height, args.panels, args.tol)
    if args.kind == "meijerg":
        m, n, p, q = args.order
        try:
            spec = MeijerGSpec(m, n, p, q, tuple(args.a), tuple(args.b), args.z)
        except ValueError as exc:
            raise ConfigError("meijerg", str(exc)) from None
        res = meijer_g_eval(spec, contour)
    else:
        try:
            spec = Egbmgf2Spec.capacity_kernel(args.psi2, args.alpha, args.beta, args.x, args.y)
        except ValueError as exc:
            raise ConfigError("egbmgf", str(exc)) from None
        res = egbmgf_eval(spec, contour, ContourConfig(target_rel_err=args.tol))
    abs_err = res.rel_err * abs(res.value) if res.mantissa else res.abs_err
    print(f"{res.value:.15g}  abs_err={abs_err:.3g}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def _overrides(args) -> list[str]:
    out = list(getattr(args, "set", None) or [])
    if getattr(args, "samples", None) is not None:
        out.append(f"{'validation' if args.command == 'validate' else 'sim'}.samples={args.samples}")
    if getattr(args, "seed", None) is not None:
        out.append(f"{'validation' if args.command == 'validate' else 'sim'}.seed={args.seed}")
    if getattr(args, "gamma_th", None) is not None:
        out.append(f"gamma_th_dB={parse_db(args.gamma_th, '--gamma-th')!r}")
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rffso",
                                     description="RF-FSO relay link: closed forms, Monte Carlo and validation")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, sim=False):
        p.add_argument("--config", help="YAML/JSON config (default: built-in reference parameters)")
        p.add_argument("--output", "-o", help="output file (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--set", action="append", metavar="KEY=VALUE",
                       help="override a config value, e.g. fso.d=6000 (repeatable)")
        p.add_argument("--gamma-th", help="CDF threshold in dB, e.g. 0dB")
        if sim:
            p.add_argument("--samples", type=int, help="Monte Carlo samples per point")
            p.add_argument("--seed", type=int, help="64-bit seed (generated and echoed when omitted)")
            p.add_argument("--workers", type=int, default=1, help="threads (results do not depend on this)")

    common(sub.add_parser("analyze", help="closed-form sweep"))
    common(sub.add_parser("simulate", help="Monte Carlo sweep"), sim=True)
    p = sub.add_parser("validate", help="run the comparison suites")
    common(p, sim=True)
    p.add_argument("--suite", action="append", help=f"restrict to suites from {', '.join(val.SUITES)}")

    p = sub.add_parser("specfun", help="evaluate a Meijer G or the capacity EGBMGF")
    p.add_argument("kind", choices=("meijerg", "egbmgf"))
    p.add_argument("order", nargs="*", type=int, help="m n p q (meijerg)")
    p.add_argument("--a", nargs="*", type=float, default=[])
    p.add_argument("--b", nargs="*", type=float, default=[])
    p.add_argument("--z", type=float, help="argument (meijerg)")
    p.add_argument("--psi2", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--x", type=float, help="first EGBMGF argument")
    p.add_argument("--y", type=float, help="second EGBMGF argument")
    p.add_argument("--abscissa", type=float)
    p.add_argument("--half-height", type=float)
    p.add_argument("--panels", type=int)
    p.add_argument("--tol", type=float, default=1e-8)
    return parser


def _check_specfun_args(args) -> None:
    if args.kind == "meijerg":
        if len(args.order) != 4:
            raise ConfigError("order", "meijerg needs four integers m n p q")
        if args.z is None:
            raise ConfigError("--z", "missing argument")
    else:
        for name in ("psi2", "alpha", "beta", "x", "y"):
            if getattr(args, name) is None:
                raise ConfigError(f"--{name}", "missing argument")


def main(argv: Sequence[str] | None = None) -> int:
    level = os.environ.get(ENV_LOG_LEVEL, "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    handlers = {"analyze": cmd_analyze, "simulate": cmd_simulate, "validate": cmd_validate, "specfun": cmd_specfun}
    try:
        if args.command == "specfun":
            _check_specfun_args(args)
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SpecfunError as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"config error: output: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
