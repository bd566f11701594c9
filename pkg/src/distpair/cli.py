"""Command-line front end: ``distpair verify | pair | sample``."""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import replace
from typing import Sequence

from . import pv as _pv
from .dist import pair, with_route
from .errors import ConfigError, DistPairError
from .parse import parse_distribution
from .testfn import corpus_generate, parse_test_function
from .verify import SUITES, CheckReport, run_suites

DEFAULT_TOL = 1e-7
DEFAULT_SEED = 42
DEFAULT_SIZE = 50
SUITE_NAMES = tuple(SUITES)


def _num(x) -> str:
    if x is None or not math.isfinite(x):
        return "null"
    return format(float(x), ".17g")


def _dump(obj) -> str:
    # json.dumps would print floats with repr; reports use fixed 17 digits
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _num(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_dump(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_dump(v)}" for k, v in obj.items()) + "}"
    raise TypeError(f"cannot serialize {type(obj)}")


def report_dict(reports: Sequence[CheckReport], seed: int, tol: float, size: int) -> dict:
    return {
        "seed": seed,
        "tol": float(tol),
        "corpus_size": size,
        "checks": [
            {
                "name": r.name,
                "max_residual": r.max_residual,
                "tolerance": float(r.tolerance),
                "pass": r.passed,
                "residuals": [None if v is None else float(v) for v in r.residuals],
                "wall_ms": float(r.wall_ms),
            }
            for r in reports
        ],
    }


def report_json(reports: Sequence[CheckReport], seed: int, tol: float, size: int) -> str:
    return _dump(report_dict(reports, seed, tol, size)) + "\n"


def _default_tol() -> float:
    env = os.environ.get("DISTPAIR_TOL")
    if env is None:
        return DEFAULT_TOL
    try:
        return float(env)
    except ValueError as exc:
        raise ConfigError(f"DISTPAIR_TOL is not a number: {env!r}") from exc


def _write(path: str | None, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _fmt_complex(z: complex) -> str:
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real:.10f} {sign} {abs(z.imag):.10f}i"


def cmd_verify(args) -> int:
    tol = args.tol if args.tol is not None else _default_tol()
    if not (tol >= 0 and math.isfinite(tol)):
        raise ConfigError(f"tolerance must be a nonnegative number, got {tol}")
    if args.size < 1:
        raise ConfigError("corpus size must be at least 1")
    if args.seed < 0:
        raise ConfigError("seed must be nonnegative")
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    corpus = corpus_generate(args.seed, args.size)
    reports = run_suites(names, corpus, tol)
    for r in reports:
        print(r.summary(), file=sys.stderr)
        for note in r.notes:
            print(f"  {note}", file=sys.stderr)
    if args.format == "text":
        _write(args.report, "".join(r.summary() + "\n" for r in reports))
    else:
        _write(args.report, report_json(reports, args.seed, tol, args.size))
    return 0 if all(r.passed for r in reports) else 1


def _pairing_tol(args) -> float:
    tol = args.tol if args.tol is not None else _default_tol()
    if not (tol > 0 and math.isfinite(tol)):
        raise ConfigError(f"tolerance must be positive, got {tol}")
    return tol


def _parse_inputs(args):
    try:
        dist = parse_distribution(args.dist)
        phi = parse_test_function(args.phi)
    except DistPairError as exc:
        raise ConfigError(str(exc)) from exc
    if getattr(args, "route", None):
        dist = with_route(dist, args.route)
    return dist, phi


def cmd_pair(args) -> int:
    tol = _pairing_tol(args)
    dist, phi = _parse_inputs(args)
    res = pair(dist, phi, tol)
    if args.format == "json":
        text = _dump({
            "re": res.value.real,
            "im": res.value.imag,
            "error_estimate": float(res.error_estimate),
            "evaluations": res.evaluations,
        }) + "\n"
    else:
        text = (
            f"value: {_fmt_complex(res.value)}\n"
            f"error: {res.error_estimate:.3e}\n"
            f"evaluations: {res.evaluations}\n"
        )
    _write(None, text)
    return 0


def sample_points(lo: float, hi: float, step: float) -> list[float]:
    count = math.floor((hi - lo) / step + 1e-9) + 1
    return [lo + k * step for k in range(count)]


def cmd_sample(args) -> int:
    tol = _pairing_tol(args)
    if not args.step > 0:
        raise ConfigError("step must be positive")
    if not args.lo < args.hi:
        raise ConfigError("--from must be smaller than --to")
    dist, phi = _parse_inputs(args)
    lines = ["t,re,im,err"]
    for t in sample_points(args.lo, args.hi, args.step):
        member = replace(phi, mu=t) if args.family == "translate" else replace(phi, omega=t)
        res = pair(dist, member, tol)
        lines.append(
            f"{_num(t)},{_num(res.value.real)},{_num(res.value.imag)},{_num(res.error_estimate)}"
        )
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distpair",
        description="Pair tempered distributions with Hermite-Gaussian test functions "
        "and verify the principal-value and Fourier identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites over a seeded corpus")
    v.add_argument("--suite", default="all", choices=SUITE_NAMES + ("all",))
    v.add_argument("--tol", type=float, default=None,
                   help=f"residual tolerance (default {DEFAULT_TOL:g}, env DISTPAIR_TOL)")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--size", type=int, default=DEFAULT_SIZE)
    v.add_argument("--report", default=None, help="JSON report path (default stdout)")
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.set_defaults(func=cmd_verify)

    dist_help = ("distribution expression, e.g. 'F(sgn)', '-i*pv:1 + pi*delta'; "
                 "pv:n for even n is the Hadamard finite part of 1/x^n")
    phi_help = "gauss | xgauss | gauss@1 | x2gauss | hg:poly=[c0,...];a=..;mu=..;omega=.."

    p = sub.add_parser("pair", help="evaluate a single pairing <T, phi>")
    p.add_argument("--dist", required=True, help=dist_help)
    p.add_argument("--phi", required=True, help=phi_help)
    p.add_argument("--route", choices=[r.value for r in _pv.PvRoute], default=None,
                   help="evaluation route for every p.v. term")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_pair)

    s = sub.add_parser("sample", help="sweep a translate/modulate family and write CSV")
    s.add_argument("--dist", required=True, help=dist_help)
    s.add_argument("--phi", required=True, help=phi_help)
    s.add_argument("--family", choices=("translate", "modulate"), required=True)
    s.add_argument("--from", dest="lo", type=float, required=True)
    s.add_argument("--to", dest="hi", type=float, required=True)
    s.add_argument("--step", type=float, required=True)
    s.add_argument("--route", choices=[r.value for r in _pv.PvRoute], default=None)
    s.add_argument("--tol", type=float, default=None)
    s.add_argument("--out", default=None, help="CSV path (default stdout)")
    s.add_argument("--format", choices=("csv",), default="csv")
    s.set_defaults(func=cmd_sample)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"distpair: error: {exc}", file=sys.stderr)
        return 2
    except DistPairError as exc:
        print(f"distpair: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
