"""Command-line front end: spectrum / count / scan / critical / contour.

All numerics are deterministic; identical flags produce byte-identical
output.  Floats are emitted at 15 significant digits.  Exit codes: 0 on
success, 1 when a contradiction report fired, 2 on usage errors (argparse),
3 when a count failed to certify at the maximum grid level, 4 on solver
failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import contour
from .courant import courant_scan
from .critical import (
    boundary_critical_points,
    critical_theta_02,
    critical_theta_03,
    critical_thetas,
    interior_critical_points,
)
from .errors import CertificationError, ContradictionError, SolverFailure
from .nodal import SIDES, ThetaFamily, count_nodal_domains, result_to_json
from .spectrum import build_spectrum, to_csv

__all__ = ["main", "parse_theta"]

EXIT_OK = 0
EXIT_CONTRADICTION = 1
EXIT_USAGE = 2
EXIT_UNCERTIFIED = 3
EXIT_SOLVER = 4


def parse_theta(text: str) -> float:
    """Parse an angle flag: decimals, ``pi/4``-style fractions, ``atan:7/9``.

    Symbolic forms are evaluated exactly in floating point (no string
    arithmetic drift), so special angles like ``pi/4`` land on the same
    float every run.
    """
    s = text.strip().lower().replace(" ", "")
    if s.startswith("atan:"):
        num, _, den = s[5:].partition("/")
        if not den:
            return math.atan(float(num))
        return math.atan2(float(num), float(den))
    if "pi" in s:
        coef, _, rest = s.partition("pi")
        if coef in ("", "+"):
            mult = 1.0
        elif coef == "-":
            mult = -1.0
        else:
            mult = float(coef)
        div = 1.0
        if rest.startswith("/"):
            div = float(rest[1:])
        elif rest:
            raise ValueError(f"cannot parse angle {text!r}")
        return mult * math.pi / div
    return float(s)


def _fmt_floats(obj):
    """Round every float in a JSON-ready structure to 15 significant digits."""
    if isinstance(obj, float):
        return float(format(obj, ".15g"))
    if isinstance(obj, dict):
        return {k: _fmt_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_fmt_floats(v) for v in obj]
    return obj


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump_json(payload, out: str | None) -> None:
    _emit(json.dumps(_fmt_floats(payload), indent=2, sort_keys=True) + "\n", out)


def cmd_spectrum(args) -> int:
    table = build_spectrum(args.h, args.lambda_max)
    if args.format == "json":
        payload = {
            "h": table.h,
            "lambda_max": table.lambda_max,
            "levels": [
                {
                    "value": lvl.value,
                    "pairs": [list(p) for p in lvl.pairs],
                    "label_lo": lvl.label_lo,
                    "label_hi": lvl.label_hi,
                }
                for lvl in table.levels
            ],
        }
        _dump_json(payload, args.out)
    else:
        _emit(to_csv(table), args.out)
    return EXIT_OK


def cmd_count(args) -> int:
    theta = parse_theta(args.theta)
    family = ThetaFamily.create(args.p, args.q, theta, args.h)
    result = count_nodal_domains(family, level=args.level, max_level=args.max_level)
    if args.svg is not None:
        curves = contour.nodal_curves(family, level=min(args.level, 9))
        contour.export_svg([(f"theta={theta:.15g}", curves)], path=args.svg)
    _dump_json(result_to_json(result), args.out)
    return EXIT_OK if result.certified else EXIT_UNCERTIFIED


def cmd_scan(args) -> int:
    result = courant_scan(
        args.h,
        n_max=args.n_max,
        theta_samples=args.theta_samples,
        level=args.level,
        jobs=args.jobs,
    )
    if args.format == "csv":
        lines = ["n,status,decided_by"]
        for v in result.verdicts:
            lines.append(f"{v.n},{v.status},{v.decided_by}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = {
            "h": result.h,
            "n_max": result.n_max,
            "courant_sharp": list(result.courant_sharp_labels()),
            "undecided": list(result.undecided_labels()),
            "verdicts": [
                {
                    "n": v.n,
                    "h": v.h,
                    "status": v.status,
                    "decided_by": v.decided_by,
                    "evidence": v.evidence,
                }
                for v in result.verdicts
            ],
            "contradictions": list(result.contradictions),
        }
        _dump_json(payload, args.out)
    return EXIT_CONTRADICTION if result.contradictions else EXIT_OK


def cmd_critical(args) -> int:
    payload = {
        "p": args.p,
        "q": args.q,
        "h": args.h,
        "critical_thetas": list(critical_thetas(args.p, args.q, args.h)),
        "boundary_points": {
            side: [
                {
                    "position": b.position,
                    "theta": b.theta,
                    "kind": b.kind,
                    "residual_phi": b.residual_phi,
                    "residual_tangent": b.residual_tangent,
                }
                for b in boundary_critical_points(args.p, args.q, args.h, side)
            ]
            for side in SIDES
        },
    }
    if (args.p, args.q) == (0, 2) and 0.0 <= args.h <= 0.2:
        t1, t2, t3 = critical_theta_02(args.h)
        payload["theta_star"] = [t1, t2, t3]
    if (args.p, args.q) == (0, 3) and args.h > 0.0:
        y_c, th = critical_theta_03(args.h)
        payload["y_c"] = y_c
        payload["theta_c"] = th
    if args.theta is not None:
        family = ThetaFamily.create(args.p, args.q, parse_theta(args.theta), args.h)
        payload["interior_points"] = [
            list(pt) for pt in interior_critical_points(family)
        ]
    _dump_json(payload, args.out)
    return EXIT_OK


def cmd_contour(args) -> int:
    curve_sets = []
    for text in args.theta:
        theta = parse_theta(text)
        family = ThetaFamily.create(args.p, args.q, theta, args.h)
        curves = contour.nodal_curves(family, level=args.level)
        curve_sets.append((f"theta={theta:.15g}", curves))
    if args.format == "svg":
        _emit(contour.export_svg(curve_sets), args.out)
    else:
        _emit(contour.export_csv(curve_sets), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="robinsq",
        description="Robin Laplacian on the square: spectrum, nodal counts, Courant-sharp scan.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(sp, level_default=9):
        sp.add_argument("--h", type=float, default=0.0, help="Robin parameter (h >= 0)")
        sp.add_argument("--out", default=None, help="output path (default: stdout)")
        sp.add_argument("--level", type=int, default=level_default, help="dyadic grid level")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
        sp.add_argument(
            "--seedless", action="store_true",
            help="accepted for interface compatibility; all numerics are deterministic",
        )

    sp = sub.add_parser("spectrum", help="labelled eigenvalue table")
    common(sp)
    sp.add_argument("--lambda-max", type=float, required=True, dest="lambda_max")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("count", help="certified nodal-domain count of one family member")
    common(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--theta", required=True, help="angle: decimal, pi/4, 3pi/4, atan:7/9")
    sp.add_argument("--max-level", type=int, default=None, dest="max_level")
    sp.add_argument("--svg", default=None, help="also write a nodal-curve SVG here")
    sp.add_argument("--format", choices=("json",), default="json")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("scan", help="Courant-sharp verdicts over labels")
    common(sp)
    sp.add_argument("--n-max", type=int, default=208, dest="n_max")
    sp.add_argument("--theta-samples", type=int, default=97, dest="theta_samples")
    sp.add_argument("--format", choices=("csv", "json"), default="json")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("critical", help="critical angles and boundary critical points")
    common(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--theta", default=None, help="also report interior critical points")
    sp.add_argument("--format", choices=("json",), default="json")
    sp.set_defaults(func=cmd_critical)

    sp = sub.add_parser("contour", help="nodal curves as SVG or CSV")
    common(sp, level_default=8)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--theta", nargs="+", required=True, help="one or more angles to overlay")
    sp.add_argument("--format", choices=("svg", "csv"), default="svg")
    sp.set_defaults(func=cmd_contour)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError,) as exc:
        parser.exit(EXIT_USAGE, f"robinsq: usage error: {exc}\n")
    except CertificationError as exc:
        sys.stderr.write(f"robinsq: uncertified count: {exc}\n")
        return EXIT_UNCERTIFIED
    except SolverFailure as exc:
        sys.stderr.write(f"robinsq: solver failure: {exc}\n")
        return EXIT_SOLVER
    except ContradictionError as exc:
        sys.stderr.write(f"robinsq: contradiction: {exc}\n")
        return EXIT_CONTRADICTION


if __name__ == "__main__":
    raise SystemExit(main())
