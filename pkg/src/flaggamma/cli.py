"""Command-line front end.

Exit codes: 0 pass, 1 check failure, 2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .complex import DEFAULT_FACE_BUDGET, Complex, format_facets, is_flag, read_facets
from .errors import BudgetExceededError, FlagGammaError
from .gamma_complexes import FAMILIES, build_gamma_complex, format_label_for, gamma_image_complex
from .homology import betti, is_homology_sphere
from .models import associahedron_complex, coxeter_complex, enumerate_flag_2spheres, exceptional_gamma
from .vectors import (
    f_to_gamma,
    f_to_h,
    ffk_check,
    ffk_violation,
    gal_34_check,
    h_to_gamma,
    is_symmetric,
    kk_check,
    kk_violation,
    poly_trim,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- output -------------------------------------------------------------------------

def _emit(report: Dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for key, value in report.items():
            if isinstance(value, (list, tuple)):
                writer.writerow([key, *value])
            else:
                writer.writerow([key, "" if value is None else value])
        out.write(buf.getvalue())
    else:
        for key, value in report.items():
            if isinstance(value, (list, tuple)):
                value = " ".join(map(str, value))
            out.write(f"{key}: {value}\n")


def _vec(v: Optional[Sequence[int]]):
    return None if v is None else [int(x) for x in v]


# -- compute --------------------------------------------------------------------------

def compute_report(c: Complex, budget: int = DEFAULT_FACE_BUDGET) -> Dict:
    f = c.fvector
    h = f_to_h(f)
    sym = is_symmetric(h)
    gamma = h_to_gamma(h) if sym else None
    report = {
        "f": _vec(f),
        "h": _vec(h),
        "symmetric": sym,
        "gamma": _vec(gamma),
        "kk": kk_check(gamma) if gamma is not None else None,
        "ffk": ffk_check(gamma) if gamma is not None else None,
        "gal34": gal_34_check(gamma) if gamma is not None else None,
        "flag": is_flag(c),
        "betti": _vec(betti(c, budget=budget)),
        "homology_sphere": is_homology_sphere(c, budget=budget),
    }
    if gamma is None:
        report["note"] = "h not symmetric: gamma undefined"
    return report


def cmd_compute(args) -> int:
    c = read_facets(args.facets, budget=args.budget_faces)
    _emit(compute_report(c, args.budget_faces), args.format)
    return EXIT_OK


# -- check ----------------------------------------------------------------------------

def check_report(mode: str, v: Sequence[int], colors: Optional[int] = None) -> Dict:
    v = list(v)
    report: Dict = {"mode": mode, "vector": v}
    if mode == "kk":
        bad = kk_violation(v)
    elif mode == "ffk":
        bad = ffk_violation(v, colors)
    elif mode == "gal34":
        bad = None
        if not gal_34_check(v):
            g = v + [0] * max(0, 3 - len(v))
            neg = [i for i, x in enumerate(g) if x < 0]
            bad = (neg[0], None, 0) if neg else (2, 4 * g[2], g[1] ** 2)
    else:
        raise UsageError(f"unknown check mode {mode!r}")
    report["ok"] = bad is None
    if bad is not None:
        report["index"], report["shadow"], report["bound"] = bad
    return report


def cmd_check(args) -> int:
    report = check_report(args.mode, args.vector, args.colors)
    _emit(report, args.format)
    return EXIT_OK if report["ok"] else EXIT_FAIL


# -- build ----------------------------------------------------------------------------

def _facet_text(gc) -> str:
    lines = [f"# {gc.family} n={gc.n}; vertex labels:"]
    lines += [f"# {i} = {format_label_for(gc.family, x)}" for i, x in enumerate(gc.labels)]
    return "\n".join(lines) + "\n" + format_facets(gc.complex)


def cmd_build(args) -> int:
    if args.image:
        gc = gamma_image_complex(args.family, args.n, budget=args.budget_faces)
    else:
        gc = build_gamma_complex(args.family, args.n, budget=args.budget_faces)
    report: Dict = {"family": args.family, "n": args.n, "f": _vec(gc.fvector)}
    if args.emit == "faces":
        report["facets"] = [[format_label_for(args.family, gc.labels[i]) for i in f] for f in gc.complex.facets]
    if args.out:
        Path(args.out).write_text(_facet_text(gc))
        report["out"] = str(args.out)
    _emit(report, args.format)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        checks = run_suite(args.suite)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    failed = 0
    for c in checks:
        failed += not c.ok
        if args.format == "json":
            _emit({"check": c.name, "ok": c.ok, "seconds": round(c.seconds, 3), "detail": c.detail}, "json")
        else:
            print(f"{'PASS' if c.ok else 'FAIL'}  {c.seconds:7.2f}s  {c.name}  [{c.detail}]")
    if args.format != "json":
        print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


# -- oracle ---------------------------------------------------------------------------

def _complex_summary(c: Complex) -> Dict:
    f = c.fvector
    h = f_to_h(f)
    return {"facets": [list(x) for x in c.facets], "f": _vec(f), "h": _vec(h),
            "gamma": _vec(poly_trim(f_to_gamma(f))) if is_symmetric(h) else None}


def cmd_oracle(args) -> int:
    if args.spheres:
        catalog = [_complex_summary(c) for c in enumerate_flag_2spheres(args.max_vertices)]
        if args.out:
            Path(args.out).write_text(json.dumps(catalog) + "\n")
            _emit({"spheres": len(catalog), "out": str(args.out)}, args.format)
        else:
            _emit({"spheres": len(catalog), "gamma": [s["gamma"] for s in catalog]}
                  if args.format != "json" else {"spheres": catalog}, args.format)
        return EXIT_OK
    if args.table:
        _emit({"group": args.table, "gamma": _vec(exceptional_gamma(args.table))}, args.format)
        return EXIT_OK
    if args.coxeter:
        if args.n is None:
            raise UsageError("--coxeter needs --n")
        c = coxeter_complex(args.coxeter, args.n, budget=args.budget_faces)
    elif args.associahedron is not None:
        c = associahedron_complex(args.associahedron, budget=args.budget_faces)
    else:
        raise UsageError("oracle needs one of --coxeter, --associahedron, --table, --spheres")
    report = _complex_summary(c)
    if args.format != "json":
        report.pop("facets")
    report["flag"] = is_flag(c)
    report["homology_sphere"] = is_homology_sphere(c, budget=args.budget_faces)
    if args.out:
        Path(args.out).write_text(format_facets(c))
    _emit(report, args.format)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--budget-faces", type=_positive, default=DEFAULT_FACE_BUDGET,
                        help="abort with exit code 3 beyond this many faces")

    p = argparse.ArgumentParser(prog="flaggamma", description="f-, h- and gamma-vectors of flag complexes")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compute", parents=[common], help="vectors and verdicts for a facet file")
    s.add_argument("--facets", required=True, type=Path)
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("check", parents=[common], help="test an integer vector")
    s.add_argument("mode", choices=("kk", "ffk", "gal34"))
    s.add_argument("vector", nargs="+", type=int)
    s.add_argument("--colors", type=_positive, help="number of colours for ffk (default: length - 1)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("build", parents=[common], help="build a Gamma-complex")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s.add_argument("--n", required=True, type=_positive)
    s.add_argument("--emit", choices=("fvector", "faces"), default="fvector")
    s.add_argument("--image", action="store_true", help="faces are images of family members, not cliques")
    s.add_argument("--out", type=Path, help="write the facet file here")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", default="all", choices=("all", *SUITES))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", parents=[common], help="reference complexes and data")
    s.add_argument("--coxeter", choices=("A", "B"))
    s.add_argument("--n", type=_positive)
    s.add_argument("--associahedron", type=_positive, metavar="N")
    s.add_argument("--table", metavar="GROUP", help="exceptional group label, e.g. E8 or I2(5)")
    s.add_argument("--spheres", action="store_true", help="enumerate flag 2-spheres")
    s.add_argument("--max-vertices", type=_positive, default=8)
    s.add_argument("--out", type=Path)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, FlagGammaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
