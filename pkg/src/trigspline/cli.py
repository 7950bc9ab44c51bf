"""Command-line front end.

Exit codes: 0 ok, 1 comparison above --tol, 2 input error, 3 config error,
4 singular interpolation factor, 5 truncation failure.
"""
from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    ConfigError,
    InputError,
    RequiresSmoothnessError,
    SingularFactorError,
    TailNotConvergedError,
)
from .fourier import dft_coefficients, eval_trig_polynomial
from .grids import TWO_PI, make_grid, sample_values
from .kernels import ShapeVector, SincPower, TruncationPolicy
from .oracles import (
    PeriodicCubic,
    PeriodicQuadratic,
    QuadratureSpec,
    numeric_power,
    piecewise_linear_eval,
)
from .spline import Spline, SplineConfig, build_spline, eval_spline_batch, parseval_power

EXIT_OK = 0
EXIT_TOL = 1
EXIT_INPUT = 2
EXIT_CONFIG = 3
EXIT_SINGULAR = 4
EXIT_TRUNCATION = 5

MAX_M_ENV = "TRIGSPLINE_MAX_M"

DEFAULTS = {
    "input": None,
    "spline": None,
    "N": None,
    "I1": 0,
    "I2": 0,
    "r": 1,
    "gamma": [1.0, 1.0, 1.0],
    "eta": [1.0, 1.0, 1.0],
    "factor": "sinc",
    "alpha": None,
    "max_m": 100_000,
    "tail_tol": 1e-10,
    "closed_form": True,
    "output": None,
    "format": None,
    "points": 1000,
    "oracle": "trigpoly",
    "knot_grid": None,
    "quad_points": 1 << 14,
    "tol": None,
}


@dataclass
class JobConfig:
    command: str
    input: str | None = None
    spline: str | None = None
    N: int | None = None
    I1: int = 0
    I2: int = 0
    r: int = 1
    gamma: list = field(default_factory=lambda: [1.0, 1.0, 1.0])
    eta: list = field(default_factory=lambda: [1.0, 1.0, 1.0])
    factor: str = "sinc"
    alpha: float | None = None
    max_m: int = 100_000
    tail_tol: float = 1e-10
    closed_form: bool = True
    output: str | None = None
    format: str | None = None
    points: int = 1000
    oracle: str = "trigpoly"
    knot_grid: int | None = None
    quad_points: int = 1 << 14
    tol: float | None = None

    def spline_config(self) -> SplineConfig:
        if self.factor != "sinc":
            raise ConfigError(f"unsupported factor {self.factor!r} (only 'sinc')")
        return SplineConfig(
            I1=self.I1,
            I2=self.I2,
            gamma=ShapeVector.of(self.gamma),
            eta=ShapeVector.of(self.eta),
            cf=SincPower(r=self.r, alpha=self.alpha),
            trunc=TruncationPolicy(
                max_m=self.max_m, tail_tol=self.tail_tol, closed_form=self.closed_form
            ),
        )


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def read_values(path: str) -> np.ndarray:
    """CSV (one value per line) or JSON ({"values": [...]} or a bare list), by extension."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if p.suffix.lower() == ".json":
        try:
            doc = json.loads(text)
            vals = doc["values"] if isinstance(doc, dict) else doc
            if not isinstance(vals, list):
                raise InputError(f'{path}: expected {{"values": [...]}}')
            arr = np.array([float(v) for v in vals], dtype=float)
        except (ValueError, TypeError, KeyError) as exc:
            raise InputError(f"{path}: malformed JSON samples ({exc})") from exc
        return arr
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    vals = []
    for no, line in enumerate(lines, 1):
        try:
            vals.append(float(line.strip()))
        except ValueError as exc:
            raise InputError(f"{path}:{no}: not a number: {line!r}") from exc
    return np.array(vals, dtype=float)


def load_samples(job: JobConfig, kind: int):
    if not job.input:
        raise InputError("no input file given (--input)")
    vals = read_values(job.input)
    N = job.N if job.N is not None else vals.size
    grid = make_grid(kind, N)
    return sample_values(grid, vals)


def load_spline(job: JobConfig) -> Spline:
    if job.spline:
        try:
            doc = json.loads(Path(job.spline).read_text())
            return Spline.from_dict(doc)
        except OSError as exc:
            raise InputError(f"cannot read {job.spline}: {exc}") from exc
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{job.spline}: malformed spline JSON ({exc})") from exc
    config = job.spline_config()
    return build_spline(load_samples(job, config.I2), config)


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_coeffs(job: JobConfig) -> tuple[int, str]:
    samples = load_samples(job, job.I2)
    co = dft_coefficients(samples)
    if (job.format or "json") == "csv":
        buf = io.StringIO()
        buf.write("k,a,b\n")
        buf.write(f"0,{_fmt(co.a0)},0\n")
        for k in range(co.harmonics):
            buf.write(f"{k + 1},{_fmt(co.a[k])},{_fmt(co.b[k])}\n")
        return EXIT_OK, buf.getvalue()
    return EXIT_OK, _json(co.to_dict())


def cmd_build(job: JobConfig) -> tuple[int, str]:
    return EXIT_OK, _json(load_spline(job).to_dict())


def _uniform(points: int) -> np.ndarray:
    if points < 0:
        raise ConfigError("points must be >= 0")
    return TWO_PI * np.arange(points) / points if points else np.zeros(0)


def cmd_eval(job: JobConfig) -> tuple[int, str]:
    spline = load_spline(job)
    t = _uniform(job.points)
    y = eval_spline_batch(spline, t)
    if (job.format or "csv") == "json":
        return EXIT_OK, _json({
            "config": spline.config.to_dict(),
            "t": t.tolist(),
            "value": y.tolist(),
        })
    buf = io.StringIO()
    buf.write("t,value\n")
    for ti, yi in zip(t, y):
        buf.write(f"{_fmt(ti)},{_fmt(yi)}\n")
    return EXIT_OK, buf.getvalue()


def cmd_power(job: JobConfig) -> tuple[int, str]:
    spline = load_spline(job)
    quad = numeric_power(spline, QuadratureSpec(points=job.quad_points))
    doc = {"closed_form": None, "quadrature": quad, "relative_gap": None, "pc": None, "ps": None}
    try:
        rep = parseval_power(spline)
    except RequiresSmoothnessError as exc:
        print(f"warning: {exc}; reporting quadrature only", file=sys.stderr)
    else:
        gap = abs(rep.total - quad) / abs(rep.total) if rep.total else abs(quad)
        doc.update(closed_form=rep.total, relative_gap=gap, pc=rep.pc.tolist(), ps=rep.ps.tolist())
    if (job.format or "json") == "csv":
        buf = io.StringIO()
        buf.write("quantity,value\n")
        for key in ("closed_form", "quadrature", "relative_gap"):
            val = doc[key]
            buf.write(f"{key},{'' if val is None else _fmt(val)}\n")
        return EXIT_OK, buf.getvalue()
    return EXIT_OK, _json(doc)


def cmd_compare(job: JobConfig) -> tuple[int, str]:
    spline = load_spline(job)
    t = _uniform(job.points)
    if job.oracle == "trigpoly":
        ref = eval_trig_polynomial(spline.coeffs, t)
    else:
        samples = load_samples(job, job.I2)
        if job.oracle == "linear":
            ref = piecewise_linear_eval(samples, t)
        elif job.oracle == "cubic":
            ref = PeriodicCubic(samples)(t)
        elif job.oracle == "quadratic":
            knots = job.knot_grid if job.knot_grid is not None else 1 - job.I2
            ref = PeriodicQuadratic(samples, knots)(t)
        else:
            raise ConfigError(f"unknown oracle {job.oracle!r}")
    dev = np.abs(eval_spline_batch(spline, t) - ref)
    doc = {
        "oracle": job.oracle,
        "points": int(t.size),
        "max_abs_dev": float(dev.max()) if dev.size else 0.0,
        "mean_abs_dev": float(dev.mean()) if dev.size else 0.0,
    }
    code = EXIT_OK
    if job.tol is not None and doc["max_abs_dev"] > job.tol:
        code = EXIT_TOL
    if (job.format or "json") == "csv":
        return code, "quantity,value\n" + "".join(
            f"{k},{v if isinstance(v, str) else _fmt(v)}\n" for k, v in doc.items()
        )
    return code, _json(doc)


COMMANDS = {
    "coeffs": cmd_coeffs,
    "build": cmd_build,
    "eval": cmd_eval,
    "power": cmd_power,
    "compare": cmd_compare,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON job file; its keys override flags")
    common.add_argument("--input", "-i", help="samples: CSV (one per line) or JSON {\"values\": [...]}")
    common.add_argument("--spline", help="spline JSON written by 'build' (replaces --input)")
    common.add_argument("--N", type=int, help="node count; must match the input length")
    common.add_argument("--I1", type=int, help="crosslink grid index (0 or 1)")
    common.add_argument("--I2", type=int, help="interpolation grid index (0 or 1)")
    common.add_argument("-r", type=int, help="smoothness parameter r >= 0")
    common.add_argument("--gamma", type=float, nargs=3, metavar="G")
    common.add_argument("--eta", type=float, nargs=3, metavar="E")
    common.add_argument("--factor", choices=["sinc"])
    common.add_argument("--alpha", type=float, help="sinc factor scale (default 2*pi/N)")
    common.add_argument("--max-m", dest="max_m", type=int)
    common.add_argument("--tail-tol", dest="tail_tol", type=float)
    common.add_argument("--direct", dest="closed_form", action="store_const", const=False,
                        help="force direct partial sums instead of the closed form")
    common.add_argument("--output", "-o")
    common.add_argument("--format", choices=["csv", "json"])

    parser = argparse.ArgumentParser(prog="trigspline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("coeffs", parents=[common], help="interpolation polynomial coefficients")
    sub.add_parser("build", parents=[common], help="serialise a spline to JSON")
    p = sub.add_parser("eval", parents=[common], help="dense uniform evaluation")
    p.add_argument("--points", type=int)
    p = sub.add_parser("power", parents=[common], help="closed-form vs quadrature power")
    p.add_argument("--quad-points", dest="quad_points", type=int)
    p = sub.add_parser("compare", parents=[common], help="max/mean deviation from an oracle")
    p.add_argument("--oracle", choices=["linear", "cubic", "quadratic", "trigpoly"])
    p.add_argument("--knot-grid", dest="knot_grid", type=int, help="quadratic oracle knot grid")
    p.add_argument("--points", type=int)
    p.add_argument("--tol", type=float, help="exit 1 if the max deviation exceeds this")
    return parser


def make_job(args: argparse.Namespace) -> JobConfig:
    merged = dict(DEFAULTS)
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    if args.config:
        try:
            doc = json.loads(Path(args.config).read_text())
        except OSError as exc:
            raise InputError(f"cannot read config {args.config}: {exc}") from exc
        except ValueError as exc:
            raise InputError(f"config {args.config} is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise InputError("config file must hold a JSON object")
        unknown = set(doc) - set(DEFAULTS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        merged.update(doc)
    env = os.environ.get(MAX_M_ENV)
    if env:
        try:
            merged["max_m"] = int(env)
        except ValueError as exc:
            raise ConfigError(f"{MAX_M_ENV} must be an integer, got {env!r}") from exc
    for key in ("I1", "I2", "r", "max_m", "points", "quad_points"):
        val = merged[key]
        if isinstance(val, bool) or not isinstance(val, int):
            raise ConfigError(f"{key} must be an integer, got {val!r}")
    if not isinstance(merged["tail_tol"], (int, float)) or not math.isfinite(merged["tail_tol"]):
        raise ConfigError("tail_tol must be a number")
    return JobConfig(command=args.command, **merged)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            job = make_job(args)
            code, text = COMMANDS[job.command](job)
        except InputError as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        except (ConfigError, ValueError, TypeError) as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        except SingularFactorError as exc:
            print(f"singular factor: {exc}", file=sys.stderr)
            return EXIT_SINGULAR
        except TailNotConvergedError as exc:
            print(f"truncation failure: {exc}", file=sys.stderr)
            return EXIT_TRUNCATION
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if job.output:
        with open(job.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
