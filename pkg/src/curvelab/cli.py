"""Command-line surface: catalog plumbing, CSV/JSON emission, verification.

Exit codes: 0 success / verdict true, 1 checked-property failure, 2
computational or domain error, 64 usage error.  Floats are serialized
with repr() (shortest round-trip decimals); CSV comment lines start
with "#".
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import curves, frenet, rectifying, verify
from .errors import (
    CurveLabError,
    DegenerateFrame,
    FrameDriftExceeded,
    UsageError,
)
from .lorentz import causal_character

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_COMPUTE = 2
EXIT_USAGE = 64

FRENET_HEADER = ("s,x0,x1,x2,x3,T0,T1,T2,T3,N0,N1,N2,N3,"
                 "B10,B11,B12,B13,B20,B21,B22,B23,"
                 "kappa1,kappa2,kappa3,eps,ode_residual_max")
SYNTH_HEADER = FRENET_HEADER.replace(",ode_residual_max", ",t_int")
POSITION_HEADER = "s,x0,x1,x2,x3"

ODE_RESIDUAL_H = 1e-4


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems as exit code 64."""

    def error(self, message):
        raise UsageError(message)


def _fmt(x) -> str:
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    return str(x)


def _write_lines(path: str | None, lines: list[str], out) -> None:
    text = "\n".join(lines) + "\n"
    if path is None or path == "-":
        out.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


# -- configuration ------------------------------------------------------------

def load_config(args) -> dict:
    """Merge a JSON config file (if given) with flag overrides."""
    cfg: dict = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}")
        if not isinstance(loaded, dict):
            raise UsageError("config file must hold a JSON object")
        cfg.update(loaded)
    if getattr(args, "curve", None):
        cfg["id"] = args.curve
    if getattr(args, "param", None):
        params = dict(cfg.get("params", {}))
        for item in args.param:
            if "=" not in item:
                raise UsageError(f"--param wants NAME=VALUE, got {item!r}")
            name, _, raw = item.partition("=")
            try:
                params[name] = float(raw)
            except ValueError:
                raise UsageError(f"--param {name}: {raw!r} is not a number")
        cfg["params"] = params
    if getattr(args, "domain", None):
        cfg["domain"] = list(args.domain)
    return cfg


def spec_from_config(cfg: dict) -> curves.CurveSpec:
    cid = cfg.get("id")
    if not cid:
        raise UsageError("no curve id given (use --curve or a config file)")
    domain = tuple(cfg["domain"]) if "domain" in cfg else None
    try:
        spec = curves.make_spec(cid, cfg.get("params"), domain)
    except KeyError:
        raise UsageError(f"unknown curve id {cid!r} "
                         f"(catalog: {', '.join(curves.catalog_ids())})")
    except ValueError as exc:
        raise UsageError(str(exc))
    if "construct" in cfg:
        # optional block {"a": ..., "t0": ..., "domain": [lo, hi]} building
        # the rectifying curve over the configured sphere curve
        block = cfg["construct"]
        if not isinstance(block, dict) or "a" not in block:
            raise UsageError('"construct" config block needs at least "a"')
        try:
            params = rectifying.ConstructionParams(
                a=float(block["a"]), t0=float(block.get("t0", 0.0)),
                domain=tuple(block["domain"]) if "domain" in block else None)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad construct block: {exc}")
        spec = rectifying.construct_rectifying(spec, params)
    return spec


# -- frame sources from CSV (synthesis round trips) ---------------------------

class CsvFrameSource:
    """Frame source backed by a cmd_synthesize CSV (grid samples only)."""

    def __init__(self, path: str):
        rows = []
        with open(path) as fh:
            header = fh.readline().strip()
            if header != SYNTH_HEADER:
                raise UsageError(f"{path} is not a synthesis CSV")
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                rows.append([float(v) for v in line.split(",")])
        if len(rows) < 2:
            raise UsageError(f"{path} holds fewer than 2 samples")
        data = np.array(rows)
        self.s = data[:, 0]
        self._data = data

    @property
    def s_range(self):
        return (float(self.s[0]), float(self.s[-1]))

    def _row(self, s: float) -> np.ndarray:
        i = int(np.argmin(np.abs(self.s - s)))
        if abs(float(self.s[i]) - s) > 1e-9 * max(1.0, abs(s)):
            raise UsageError(f"s={s} is not a sample of the synthesis CSV")
        return self._data[i]

    def frame(self, s: float) -> frenet.FrenetData:
        r = self._row(s)
        from .lorentz import Vec4
        return frenet.FrenetData(
            s=float(r[0]), position=Vec4(*r[1:5]),
            T=Vec4(*r[5:9]), N=Vec4(*r[9:13]),
            B1=Vec4(*r[13:17]), B2=Vec4(*r[17:21]),
            kappa1=float(r[21]), kappa2=float(r[22]), kappa3=float(r[23]),
            eps=int(r[24]))

    def position_at(self, s: float):
        return self.frame(s).position

    def kappa3_integral(self, s: float) -> float:
        return float(self._row(s)[25])

    def grid_samples(self, count: int) -> np.ndarray:
        idx = np.linspace(0, len(self.s) - 1, count).round().astype(int)
        return self.s[np.unique(idx)]


# -- command bodies -----------------------------------------------------------

def cmd_classify(args, out) -> int:
    spec = spec_from_config(load_config(args))
    for t in args.at:
        vel = curves.eval_curve(spec, t).derivative(1)
        out.write(f"t={_fmt(t)}: {causal_character(vel).value}\n")
    return EXIT_OK


def frenet_rows(spec: curves.CurveSpec, amap: frenet.ArclengthMap,
                count: int) -> tuple[list[str], int]:
    """Per-sample CSV data rows; degenerate samples are counted, not emitted."""
    total = amap.total
    rows = []
    degenerate = 0
    for s in np.linspace(0.01 * total, 0.99 * total, count):
        s = float(s)
        try:
            f = frenet.frenet_apparatus(spec, amap, s)
            resid = max(frenet.frenet_ode_residual(spec, amap, s,
                                                   ODE_RESIDUAL_H))
        except DegenerateFrame:
            degenerate += 1
            continue
        vals = [f.s, *f.position.components,
                *f.T.components, *f.N.components,
                *f.B1.components, *f.B2.components,
                f.kappa1, f.kappa2, f.kappa3, f.eps, resid]
        rows.append(",".join(_fmt(v) for v in vals))
    return rows, degenerate


def cmd_frenet(args, out) -> int:
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    spec = spec_from_config(load_config(args))
    amap = frenet.arclength_map(spec)
    rows, degenerate = frenet_rows(spec, amap, args.samples)
    lines = [FRENET_HEADER, *rows, f"# degenerate_samples={degenerate}"]
    _write_lines(args.output, lines, out)
    return EXIT_OK


def _source_for_check(args):
    if getattr(args, "from_synthesis", None):
        src = CsvFrameSource(args.from_synthesis)
        samples = list(src.grid_samples(args.samples))
        # A synthesized curve is congruent to a rectifying one: subtract
        # the fitted constant vector before running the position battery.
        fit = rectifying.fit_theorem31(src, samples, c=args.c)
        shift = rectifying.constant_vector_X(src, samples[0], fit)
        shifted = frenet.TranslatedSource(src, -shift)
        return shifted, args.from_synthesis, samples
    spec = spec_from_config(load_config(args))
    src = frenet.JetFrameSource(spec)
    lo, hi = src.s_range
    pad = 0.01 * (hi - lo)
    samples = list(np.linspace(lo + pad, hi - pad, args.samples))
    return src, spec.catalog_id, samples


def cmd_rectify_check(args, out) -> int:
    if args.samples < 8:
        raise UsageError("--samples must be at least 8 for the fit battery")
    src, name, samples = _source_for_check(args)
    overrides = {}
    if args.tol is not None:
        if args.tol <= 0.0:
            raise UsageError("--tol must be positive")
        overrides = {f: args.tol for f in ("distance_lead", "tangential_slope",
                                           "normal_constancy",
                                           "binormal_residual",
                                           "thm31_rms", "drift")}
    tols = rectifying.ReportTolerances.default(**overrides)
    report = rectifying.theorem33_report(src, samples, tolerances=tols,
                                         curve_name=name, c=args.c)
    text = json.dumps(report.to_json_dict(), indent=2)
    _write_lines(args.output, [text], out)
    return EXIT_OK if report.verdict else EXIT_PROPERTY


def cmd_construct(args, out) -> int:
    if args.a == 0.0:
        raise UsageError("--a must be nonzero")
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    sphere = spec_from_config(load_config(args))
    domain = tuple(args.construct_domain) if args.construct_domain else None
    spec = rectifying.construct_rectifying(
        sphere, rectifying.ConstructionParams(a=args.a, t0=args.t0,
                                              domain=domain))
    lines = [POSITION_HEADER]
    for u in np.linspace(spec.domain[0], spec.domain[1], args.samples):
        pos = curves.eval_curve(spec, float(u)).position()
        lines.append(",".join(_fmt(v) for v in (float(u), *pos.components)))
    _write_lines(args.output, lines, out)
    out.write(f"registered: {spec.catalog_id}\n")
    return EXIT_OK


def cmd_synthesize(args, out) -> int:
    if args.ds <= 0.0:
        raise UsageError("--ds must be positive")
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    if args.eps not in (1, -1):
        raise UsageError("--eps must be 1 or -1")
    cfg = load_config(args)
    s_range = tuple(cfg.get("domain", (0.5, 2.5)))
    try:
        profile = frenet.profile_from_name(args.profile,
                                           cfg.get("params", {}),
                                           args.eps, s_range)
    except KeyError as exc:
        raise UsageError(str(exc))
    except ValueError as exc:
        raise UsageError(str(exc))

    def emit(curve: frenet.SynthesizedCurve) -> None:
        lines = [SYNTH_HEADER]
        for s in curve.grid_samples(args.samples):
            f = curve.frame(float(s))
            t_int = curve.kappa3_integral(float(s))
            vals = [f.s, *f.position.components,
                    *f.T.components, *f.N.components,
                    *f.B1.components, *f.B2.components,
                    f.kappa1, f.kappa2, f.kappa3, f.eps, t_int]
            lines.append(",".join(_fmt(v) for v in vals))
        lines.append(f"# max_gram_drift={_fmt(curve.max_drift)}")
        _write_lines(args.output, lines, out)
        out.write(f"max_gram_drift={_fmt(curve.max_drift)}\n")

    try:
        curve = frenet.synthesize_curve(profile, ds=args.ds,
                                        synth_tol=args.drift_tol)
    except FrameDriftExceeded as exc:
        if exc.partial is not None:
            emit(exc.partial)
        out.write(f"error: {exc}\n")
        return EXIT_PROPERTY
    emit(curve)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r} "
                         f"(choose from {', '.join(verify.SUITES)})")
    results = verify.run_suite(args.suite)
    for res in results:
        out.write(res.line() + "\n")
    n_pass = sum(r.passed for r in results)
    out.write(f"{n_pass}/{len(results)} criteria passed\n")
    return EXIT_OK if n_pass == len(results) else EXIT_PROPERTY


# -- argument wiring ----------------------------------------------------------

def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON config file (id, params, domain)")
    p.add_argument("--curve", help="catalog curve id (overrides config)")
    p.add_argument("--param", action="append", metavar="NAME=VALUE",
                   help="curve parameter override (repeatable)")
    p.add_argument("--domain", nargs=2, type=float, metavar=("LO", "HI"),
                   help="parameter domain override")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="curvelab",
                     description="Spacelike curve toolkit for Minkowski "
                                 "4-space: frames, curvatures, rectifying "
                                 "curve checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[], help="causal character of "
                       "the velocity at given parameter values")
    _add_config_flags(p)
    p.add_argument("--at", action="append", type=float, required=True,
                   metavar="T", help="parameter value (repeatable)")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("frenet", help="frame/curvature CSV over arclength")
    _add_config_flags(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--output", "-o", help="CSV path (default stdout)")
    p.set_defaults(run=cmd_frenet)

    p = sub.add_parser("rectify-check", help="rectifying characterization "
                       "battery, JSON report")
    _add_config_flags(p)
    p.add_argument("--from-synthesis", metavar="CSV",
                   help="read the curve from a synthesize CSV instead of "
                        "the catalog")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--c", type=float, default=None,
                   help="known arclength offset (skips estimating it)")
    p.add_argument("--tol", type=float, default=None,
                   help="override every report tolerance")
    p.add_argument("--output", "-o", help="JSON path (default stdout)")
    p.set_defaults(run=cmd_rectify_check)

    p = sub.add_parser("construct", help="build a rectifying curve over a "
                       "hyperbolic-sphere curve")
    _add_config_flags(p)
    p.add_argument("--a", type=float, required=True, help="radius scale")
    p.add_argument("--t0", type=float, default=0.0, help="radius-law phase")
    p.add_argument("--construct-domain", nargs=2, type=float,
                   metavar=("LO", "HI"),
                   help="arclength window on the sphere curve")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--output", "-o", help="CSV path (default stdout)")
    p.set_defaults(run=cmd_construct)

    p = sub.add_parser("synthesize", help="integrate a curvature profile "
                       "into a curve + frame CSV")
    _add_config_flags(p)
    p.add_argument("--profile", default="cosh_over_s",
                   help="profile name: constant or cosh_over_s")
    p.add_argument("--eps", type=int, default=1)
    p.add_argument("--ds", type=float, default=1e-3)
    p.add_argument("--drift-tol", type=float, default=frenet.SYNTH_TOL,
                   help="abort threshold for the Gram drift monitor")
    p.add_argument("--samples", type=int, default=101,
                   help="rows written (grid subsample)")
    p.add_argument("--output", "-o", help="CSV path (default stdout)")
    p.set_defaults(run=cmd_synthesize)

    p = sub.add_parser("verify", help="run the numbered self-check suites")
    p.add_argument("suite", nargs="?", default="all",
                   help="all, lorentz, frenet or rectifying")
    p.set_defaults(run=cmd_verify)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FrameDriftExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    except CurveLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
