"""Command-line front end: build splines, compute functionals, reproduce the
norm tables, sweep the factor rate, and emit plot-ready CSV or JSON.

Every command writes one artifact (stdout by default, ``--out`` for a file;
file writes are atomic).  CSV output is deterministic byte-for-byte for
identical inputs; JSON adds a metadata block whose timestamp is the only
non-reproducible field.  Exit codes: 0 success, 2 validation/usage error,
3 numeric failure (always for singular denominators; for unconverged
truncation only under ``--strict``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .errors import NumericError, SplineError, ValidationError
from .kernel import (
    FactorKind,
    FactorSpec,
    GammaVector,
    SplineSpec,
    TruncationMode,
    TruncationPolicy,
    eval_series,
    harmonic_series,
    interpolant_series,
)
from .functionals import (
    Method,
    arc_length,
    seminorm,
    spline_norm,
    total_variation_derivative,
    total_variation_partition,
)
from .analysis import (
    SWEEP_FUNCTIONALS,
    coincidence_check,
    limit_check,
    reproduce_norm_table,
    sweep_alpha,
)

COMMANDS = (
    "eval", "interp", "norm", "variation", "arclength",
    "seminorm", "table", "sweep", "coincide", "limit",
)

# global defaults; alpha defaults to pi/N once N is known
GLOBAL_DEFAULTS: dict = {
    "N": 7, "I1": 0, "I2": 0, "gamma": "1,1,1",
    "factor": "sinc", "alpha": None, "r": 3, "k": 1, "q": 0,
    "tail_tol": 1e-8, "m_max": 1_000_000, "mode": "adaptive",
    "samples": 4096, "alpha_min": 0.01, "alpha_max": math.pi / 2 - 0.01,
    "alpha_steps": 200, "out": None, "format": "csv", "strict": False,
}

# the published tables were evidently computed with ~20-block partial sums
# (the slow r=1 tails differ visibly from the converged values), so the
# table command reproduces that convention unless truncation flags are given
COMMAND_DEFAULTS: dict[str, dict] = {
    "table": {"factor": "power", "alpha": 1.0, "tail_tol": 0.0, "m_max": 20},
    "limit": {"factor": "power", "alpha": 1.0},
    "coincide": {"samples": 512, "factor": "sinc"},
}


@dataclass
class RunConfig:
    """Fully resolved parameters for one CLI invocation."""

    command: str
    N: int = 7
    I1: int = 0
    I2: int = 0
    gamma: tuple[float, float, float] = (1.0, 1.0, 1.0)
    factor: str = "sinc"
    alpha: float | None = None
    r: int = 3
    k: int = 1
    q: int = 0
    tail_tol: float = 1e-8
    m_max: int = 1_000_000
    mode: str = "adaptive"
    samples: int = 4096
    alpha_min: float = 0.01
    alpha_max: float = math.pi / 2 - 0.01
    alpha_steps: int = 200
    out: str | None = None
    format: str = "csv"
    strict: bool = False
    # command-specific extras
    values: tuple[float, ...] | None = None
    functional: str | None = None
    order: int | None = None
    multipliers: tuple[int, ...] | None = None
    tolerance: float = 1e-6
    route: str = "auto"
    method: str = "all"
    r_list: tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7, 8, 50)
    grids: tuple[tuple[int, int], ...] = ((0, 0), (0, 1))
    high_degree: int = 50

    def resolved_alpha(self) -> float:
        return self.alpha if self.alpha is not None else math.pi / self.N

    def spline_spec(self) -> SplineSpec:
        kind = FactorKind.SINC_POWER if self.factor == "sinc" else FactorKind.POWER_SIGN_CONSTANT
        mode = TruncationMode.ADAPTIVE if self.mode == "adaptive" else TruncationMode.CLOSED_FORM_ZETA
        return SplineSpec(
            grid_size=self.N,
            series_grid=self.I1,
            node_grid=self.I2,
            gamma=GammaVector(*self.gamma),
            factor=FactorSpec(kind, self.resolved_alpha(), self.r),
            truncation=TruncationPolicy(self.tail_tol, self.m_max, mode),
        )

    def echo(self) -> dict:
        d = asdict(self)
        d["alpha"] = self.resolved_alpha()
        d.pop("out", None)
        return d


def _parse_floats(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise ValidationError(f"could not parse {what} {text!r} as comma-separated floats")


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValidationError(f"could not parse {what} {text!r} as comma-separated integers")


def _parse_grids(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if len(tok) != 2 or any(c not in "01" for c in tok):
            raise ValidationError(f"grid pair {tok!r} must be two binary digits, e.g. 00 or 01")
        out.append((int(tok[0]), int(tok[1])))
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="trigsplines",
        description="Fundamental trigonometric splines: evaluation, functionals, tables, sweeps.",
    )
    p.add_argument("--version", action="version", version=f"trigsplines {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command")

    def common(sp):
        sp.add_argument("--config", help="JSON file with parameter values; flags override it")
        sp.add_argument("--N", type=int, help="grid size (odd, >= 3); default 7")
        sp.add_argument("--I1", type=int, choices=(0, 1), help="series grid indicator")
        sp.add_argument("--I2", type=int, choices=(0, 1), help="node grid indicator")
        sp.add_argument("--gamma", help="band weights, e.g. 1,1,1")
        sp.add_argument("--factor", choices=("sinc", "power"), help="convergence factor family")
        sp.add_argument("--alpha", type=float, help="factor rate; default pi/N")
        sp.add_argument("--r", type=int, help="spline degree parameter")
        sp.add_argument("--k", type=int, help="anchor node index, 1-based")
        sp.add_argument("--q", type=int, help="derivative order")
        sp.add_argument("--tail-tol", dest="tail_tol", type=float,
                        help="series tail target; 0 means use exactly m-max blocks")
        sp.add_argument("--m-max", dest="m_max", type=int, help="cap on summation blocks")
        sp.add_argument("--trunc-mode", dest="mode", choices=("adaptive", "zeta"),
                        help="denominator summation mode")
        sp.add_argument("--samples", type=int, help="evaluation / quadrature sample count")
        sp.add_argument("--out", help="output path (default stdout)")
        sp.add_argument("--format", choices=("csv", "json"), help="output format")
        sp.add_argument("--strict", action="store_true", default=None,
                        help="turn numeric warnings (unconverged truncation, invalid sweep samples) into exit 3")

    sp = sub.add_parser("eval", help="evaluate one fundamental spline (or derivative) on a uniform t grid")
    common(sp)

    sp = sub.add_parser("interp", help="evaluate the interpolating spline through given node values")
    common(sp)
    sp.add_argument("--values", help="comma-separated node values, length N", required=False)

    sp = sub.add_parser("norm", help="L2 norm of a fundamental spline (Parseval + quadrature)")
    common(sp)
    sp.add_argument("--method", choices=("parseval", "quadrature", "closed_form", "all"),
                    default=None, help="which route(s) to report")

    sp = sub.add_parser("variation", help="total variation over one period")
    common(sp)
    sp.add_argument("--route", choices=("auto", "derivative", "partition", "both"), default=None)

    sp = sub.add_parser("arclength", help="arc length over one period")
    common(sp)

    sp = sub.add_parser("seminorm", help="derivative seminorm (default order (r+1)/2)")
    common(sp)
    sp.add_argument("--order", type=int, default=None, help="derivative order; default (r+1)/2 for odd r")

    sp = sub.add_parser("table", help="squared-norm table over degrees and grid pairs")
    common(sp)
    sp.add_argument("--r-list", dest="r_list", help="degrees, e.g. 1,2,3,4,5,6,7,8,50")
    sp.add_argument("--grids", help="grid pairs, e.g. 00,01")

    sp = sub.add_parser("sweep", help="sweep a functional over the factor rate alpha")
    common(sp)
    sp.add_argument("--functional", choices=SWEEP_FUNCTIONALS, required=True)
    sp.add_argument("--order", type=int, default=None, help="seminorm order (seminorm sweeps)")
    sp.add_argument("--alpha-min", dest="alpha_min", type=float)
    sp.add_argument("--alpha-max", dest="alpha_max", type=float)
    sp.add_argument("--alpha-steps", dest="alpha_steps", type=int)

    sp = sub.add_parser("coincide", help="test spline coincidence at rates k*pi/N")
    common(sp)
    sp.add_argument("--multipliers", help="comma-separated k values; default per degree parity")
    sp.add_argument("--tolerance", type=float, default=None)

    sp = sub.add_parser("limit", help="high-degree limit of the squared norm")
    common(sp)
    sp.add_argument("--high-degree", dest="high_degree", type=int)

    return p


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge precedence: flag > config file > command default > global default."""
    merged = dict(GLOBAL_DEFAULTS)
    merged.update(COMMAND_DEFAULTS.get(args.command, {}))

    if getattr(args, "config", None):
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ValidationError(f"could not read config {args.config!r}: {exc}")
        if not isinstance(loaded, dict):
            raise ValidationError("config file must hold a JSON object")
        known = set(GLOBAL_DEFAULTS) | {
            "values", "functional", "order", "multipliers", "tolerance",
            "route", "method", "r_list", "grids", "high_degree",
        }
        for key in loaded:
            if key not in known:
                raise ValidationError(f"unknown config key {key!r}")
        merged.update(loaded)

    for key, value in vars(args).items():
        if key in ("command", "config") or value is None:
            continue
        merged[key] = value

    cfg = RunConfig(command=args.command)
    for key, value in merged.items():
        if not hasattr(cfg, key):
            continue
        setattr(cfg, key, value)

    # normalize string-form fields (from flags or config)
    if isinstance(cfg.gamma, str):
        cfg.gamma = _parse_floats(cfg.gamma, "--gamma")
    if len(tuple(cfg.gamma)) != 3:
        raise ValidationError(f"gamma needs exactly 3 components, got {cfg.gamma!r}")
    cfg.gamma = tuple(float(x) for x in cfg.gamma)
    if isinstance(cfg.values, str):
        cfg.values = _parse_floats(cfg.values, "--values")
    if isinstance(cfg.r_list, str):
        cfg.r_list = _parse_ints(cfg.r_list, "--r-list")
    if isinstance(cfg.grids, str):
        cfg.grids = _parse_grids(cfg.grids)
    if isinstance(cfg.multipliers, str):
        cfg.multipliers = _parse_ints(cfg.multipliers, "--multipliers")
    if cfg.format not in ("csv", "json"):
        raise ValidationError(f"format must be csv or json, got {cfg.format!r}")
    if cfg.factor not in ("sinc", "power"):
        raise ValidationError(f"factor must be sinc or power, got {cfg.factor!r}")
    if cfg.mode not in ("adaptive", "zeta"):
        raise ValidationError(f"trunc-mode must be adaptive or zeta, got {cfg.mode!r}")
    return cfg


# ---------------------------------------------------------------- output ----

def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _json_text(cfg: RunConfig, result: dict, warnings: list[str]) -> str:
    doc = {
        "command": cfg.command,
        "params": cfg.echo(),
        "result": result,
        "metadata": {
            "tool": "trigsplines",
            "version": __version__,
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "warnings": warnings,
        },
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _jsonable(x):
    if isinstance(x, float):
        return None if not math.isfinite(x) else x
    if isinstance(x, (np.floating, np.integer)):
        return _jsonable(x.item())
    if isinstance(x, np.ndarray):
        return [_jsonable(v) for v in x.tolist()]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _write_artifact(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".trigsplines-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _fmt(x: float) -> str:
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return repr(float(x))


# -------------------------------------------------------------- commands ----

def _functional_rows(fvs) -> tuple[list[str], list[list], dict]:
    header = ["kind", "method", "order", "value", "error_estimate"]
    rows = []
    res = {"functionals": []}
    for fv in fvs:
        rows.append([fv.kind.value, fv.method.value,
                     "" if fv.order is None else fv.order,
                     _fmt(fv.value), _fmt(fv.error_estimate)])
        res["functionals"].append({
            "kind": fv.kind.value, "method": fv.method.value, "order": fv.order,
            "value": _jsonable(fv.value), "error_estimate": _jsonable(fv.error_estimate),
        })
    return header, rows, res


def _cmd_eval(cfg: RunConfig, warnings: list[str]):
    if cfg.samples < 1:
        from .errors import InvalidResolution

        raise InvalidResolution(f"samples must be >= 1, got {cfg.samples}")
    spec = cfg.spline_spec()
    series = harmonic_series(spec, k=cfg.k, q=cfg.q)
    if not series.converged:
        warnings.append(
            f"series truncation hit m_max; achieved tail bound {series.tail_bound:.3e}"
        )
    t = np.linspace(0.0, 2.0 * math.pi, cfg.samples, endpoint=False)
    vals = eval_series(series, t)
    header = ["t", "value"]
    rows = [[_fmt(a), _fmt(v)] for a, v in zip(t, vals)]
    result = {"t": _jsonable(t), "value": _jsonable(vals),
              "tail_bound": _jsonable(series.tail_bound), "converged": series.converged}
    return header, rows, result


def _cmd_interp(cfg: RunConfig, warnings: list[str]):
    if cfg.values is None:
        raise ValidationError("interp needs --values (comma-separated, length N)")
    spec = cfg.spline_spec()
    series = interpolant_series(spec, np.asarray(cfg.values, dtype=float), q=cfg.q)
    if not series.converged:
        warnings.append("series truncation hit m_max")
    t = np.linspace(0.0, 2.0 * math.pi, cfg.samples, endpoint=False)
    vals = eval_series(series, t)
    header = ["t", "value"]
    rows = [[_fmt(a), _fmt(v)] for a, v in zip(t, vals)]
    result = {"t": _jsonable(t), "value": _jsonable(vals),
              "tail_bound": _jsonable(series.tail_bound), "converged": series.converged}
    return header, rows, result


def _cmd_norm(cfg: RunConfig, warnings: list[str]):
    spec = cfg.spline_spec()
    method = cfg.method or "all"
    fvs = []
    if method in ("parseval", "all"):
        fvs.extend(spline_norm(spec, k=cfg.k, method=Method.PARSEVAL))
    if method in ("quadrature", "all"):
        fvs.extend(spline_norm(spec, k=cfg.k, method=Method.QUADRATURE, samples=cfg.samples))
    if method == "closed_form" or (
        method == "all" and spec.factor.kind is FactorKind.POWER_SIGN_CONSTANT
    ):
        fvs.extend(spline_norm(spec, k=cfg.k, method=Method.CLOSED_FORM))
    return _functional_rows(fvs)


def _cmd_variation(cfg: RunConfig, warnings: list[str]):
    spec = cfg.spline_spec()
    route = cfg.route or "auto"
    if route == "auto":
        route = "derivative" if spec.factor.degree >= 2 else "partition"
    fvs = []
    if route in ("derivative", "both"):
        fvs.append(total_variation_derivative(spec, k=cfg.k, samples=max(cfg.samples, 64)))
    if route in ("partition", "both"):
        fvs.append(total_variation_partition(spec, k=cfg.k, partition=cfg.samples))
    return _functional_rows(fvs)


def _cmd_arclength(cfg: RunConfig, warnings: list[str]):
    spec = cfg.spline_spec()
    return _functional_rows([arc_length(spec, k=cfg.k, samples=max(cfg.samples, 64))])


def _cmd_seminorm(cfg: RunConfig, warnings: list[str]):
    spec = cfg.spline_spec()
    return _functional_rows([seminorm(spec, k=cfg.k, order=cfg.order)])


def _cmd_table(cfg: RunConfig, warnings: list[str]):
    kind = FactorKind.SINC_POWER if cfg.factor == "sinc" else FactorKind.POWER_SIGN_CONSTANT
    mode = TruncationMode.ADAPTIVE if cfg.mode == "adaptive" else TruncationMode.CLOSED_FORM_ZETA
    table = reproduce_norm_table(
        gamma=GammaVector(*cfg.gamma),
        degrees=cfg.r_list,
        grid_pairs=cfg.grids,
        grid_size=cfg.N,
        factor_kind=kind,
        alpha=cfg.alpha if cfg.alpha is not None else 1.0,
        truncation=TruncationPolicy(cfg.tail_tol, cfg.m_max, mode),
    )
    for key, ok in table.converged.items():
        if not ok and not math.isnan(table.values[key]):
            if cfg.tail_tol != 0.0:
                warnings.append(f"cell {key} not converged within m_max")
    for key, v in table.values.items():
        if math.isnan(v):
            warnings.append(f"cell {key} skipped: singular denominator")
    header = ["grid"] + [f"r={r}" for r in table.degrees]
    rows = []
    for gp in table.grid_pairs:
        rows.append([f"{gp[0]}{gp[1]}"] + [_fmt(table.cell(gp, r)) for r in table.degrees])
    result = {
        "degrees": list(table.degrees),
        "rows": {f"{gp[0]}{gp[1]}": _jsonable(table.row(gp)) for gp in table.grid_pairs},
    }
    return header, rows, result


def _cmd_sweep(cfg: RunConfig, warnings: list[str]):
    spec = cfg.spline_spec()
    if cfg.functional == "seminorm" and spec.factor.kind is FactorKind.POWER_SIGN_CONSTANT:
        raise ValidationError(
            "seminorm sweeps need the rate-dependent sinc factor; the power-factor "
            "spline is alpha-invariant so the sweep is vacuous"
        )
    if cfg.alpha_steps < 8:
        raise ValidationError(f"alpha-steps must be >= 8, got {cfg.alpha_steps}")
    alphas = np.linspace(cfg.alpha_min, cfg.alpha_max, cfg.alpha_steps)
    curve = sweep_alpha(
        spec, cfg.functional, alphas, order=cfg.order, samples=max(cfg.samples, 64)
    )
    n_bad = int((~curve.valid).sum())
    if n_bad:
        warnings.append(f"{n_bad} sweep samples invalid (singular denominator)")
    header = ["alpha", "value", "valid"]
    has_ref = curve.reference is not None
    if has_ref:
        header.append("reference")
    rows = []
    for a, v, ok in zip(curve.alphas, curve.values, curve.valid):
        row = [_fmt(a), _fmt(v), int(ok)]
        if has_ref:
            row.append(_fmt(curve.reference))
        rows.append(row)
    result = {
        "functional": curve.functional,
        "alphas": _jsonable(curve.alphas),
        "values": _jsonable(curve.values),
        "valid": [bool(b) for b in curve.valid],
        "reference": _jsonable(curve.reference) if has_ref else None,
        "minima": [{"alpha": _jsonable(m.alpha), "value": _jsonable(m.value)} for m in curve.minima],
    }
    return header, rows, result


def _cmd_coincide(cfg: RunConfig, warnings: list[str]):
    report = coincidence_check(
        degree=cfg.r,
        gamma=GammaVector(*cfg.gamma),
        grid_size=cfg.N,
        grid_pair=None,
        multipliers=cfg.multipliers,
        tolerance=cfg.tolerance,
        samples=max(cfg.samples, 16),
    )
    for k, reason in report.rejected:
        warnings.append(f"multiplier {k} rejected: {reason}")
    header = ["kind", "k_a", "k_b", "deviation", "within_tolerance"]
    rows = []
    for ka, kb, dev, ok in report.pair_verdicts():
        rows.append(["pair", ka, kb, _fmt(dev), int(ok)])
    for k, dev in zip(report.multipliers, report.counterpart_deviation):
        rows.append(["counterpart", k, "", _fmt(dev), int(dev <= report.tolerance)])
    result = {
        "degree": report.degree,
        "grid_pair": list(report.grid_pair),
        "multipliers": list(report.multipliers),
        "alphas": _jsonable(report.alphas),
        "rejected": [[k, reason] for k, reason in report.rejected],
        "pairwise_deviation": _jsonable(report.pairwise_deviation),
        "counterpart_deviation": _jsonable(report.counterpart_deviation),
        "tolerance": report.tolerance,
        "pairwise_coincide": report.pairwise_coincide,
        "matches_counterpart": report.matches_counterpart,
    }
    return header, rows, result


def _cmd_limit(cfg: RunConfig, warnings: list[str]):
    kind = FactorKind.SINC_POWER if cfg.factor == "sinc" else FactorKind.POWER_SIGN_CONSTANT
    report = limit_check(
        gamma=GammaVector(*cfg.gamma),
        grid_size=cfg.N,
        grid_pair=(cfg.I1, cfg.I2),
        high_degree=cfg.high_degree,
        factor_kind=kind,
        alpha=cfg.alpha if cfg.alpha is not None else 1.0,
    )
    header = ["parity", "degree", "value"]
    rows = [["odd", r, _fmt(v)] for r, v in zip(report.odd_degrees, report.odd_values)]
    rows += [["even", r, _fmt(v)] for r, v in zip(report.even_degrees, report.even_values)]
    rows.append(["high", report.high_degree, _fmt(report.value_at_high_degree)])
    rows.append(["exact", "", _fmt(report.limit_value)])
    result = {
        "limit_value": _jsonable(report.limit_value),
        "high_degree": report.high_degree,
        "value_at_high_degree": _jsonable(report.value_at_high_degree),
        "deviation": _jsonable(report.deviation),
        "odd_degrees": list(report.odd_degrees),
        "odd_values": _jsonable(report.odd_values),
        "even_degrees": list(report.even_degrees),
        "even_values": _jsonable(report.even_values),
        "odd_side": report.odd_side,
        "even_side": report.even_side,
        "odd_monotone": report.odd_monotone,
        "even_monotone": report.even_monotone,
    }
    return header, rows, result


_DISPATCH = {
    "eval": _cmd_eval,
    "interp": _cmd_interp,
    "norm": _cmd_norm,
    "variation": _cmd_variation,
    "arclength": _cmd_arclength,
    "seminorm": _cmd_seminorm,
    "table": _cmd_table,
    "sweep": _cmd_sweep,
    "coincide": _cmd_coincide,
    "limit": _cmd_limit,
}


def run(cfg: RunConfig) -> int:
    warnings: list[str] = []
    header, rows, result = _DISPATCH[cfg.command](cfg, warnings)
    if cfg.strict and warnings:
        for w in warnings:
            print(f"error (strict): {w}", file=sys.stderr)
        return 3
    if cfg.format == "csv":
        text = _csv_text(header, rows)
    else:
        text = _json_text(cfg, result, warnings)
    _write_artifact(cfg.out, text)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        cfg = resolve_config(args)
        return run(cfg)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    except SplineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
