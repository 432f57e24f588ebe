"""Command-line front end.

Three verbs:

  compute   evaluate one quantity on a matrix file (JSON to stdout)
  sample    draw a seeded ensemble matrix to a file or stdout
  verify    run registered property checks, write the report JSON

Exit codes: 0 success (for verify: every non-scrutiny check passed),
1 check failure, 2 usage error, 3 malformed matrix file.  Outputs are
byte-stable for identical invocations: keys sorted, floats in shortest
round-trip decimal.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import complexmat as cm
from . import verify
from .complexmat import MatrixFormatError
from .geometry import (
    bj_orthogonal,
    parallel_trace_condition,
    parallel_witness,
    w1_parallel_conditions,
    wn_orthogonal,
)
from .norms import parse_norm
from .radius import radius_value, scalar_distance, w2_closed, wn_bounds, wn_max

USAGE_ERROR = 2
MATRIX_ERROR = 3

QUANTITIES = ("w", "wn", "w2", "bounds", "dist", "parallel", "bj-orth",
              "wn-orth", "trace-cond", "w1-conds")
BINARY = ("parallel", "bj-orth", "wn-orth", "trace-cond")


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _compute(args) -> int:
    try:
        a = cm.read_matrix(args.matrix)
        other = cm.read_matrix(args.other) if args.other else None
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MATRIX_ERROR
    try:
        spec = parse_norm(args.norm)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    q = args.quantity
    if q in BINARY and other is None:
        print(f"error: --quantity {q} needs --other FILE", file=sys.stderr)
        return USAGE_ERROR

    try:
        if q == "w":
            out = {"quantity": q, "norm": spec.label,
                   "value": radius_value(a, spec)}
        elif q == "wn":
            res = wn_max(a, spec)
            out = {"quantity": q, "norm": spec.label, "value": res.value,
                   "argmax_theta": res.argmax_theta, "bracket": res.bracket}
        elif q == "w2":
            out = {"quantity": q, "norm": "p:2", "value": w2_closed(a)}
        elif q == "bounds":
            lower, upper = wn_bounds(a, spec)
            out = {"quantity": q, "norm": spec.label,
                   "lower": lower, "upper": upper}
        elif q == "dist":
            res = scalar_distance(a, spec)
            out = {"quantity": q, "norm": spec.label, "value": res.distance,
                   "center": _complex_pair(res.center)}
        elif q == "parallel":
            res = parallel_witness(a, other, spec)
            out = {"quantity": q, "norm": spec.label,
                   "is_parallel": res.is_parallel,
                   "lam": _complex_pair(res.lam), "gap": res.gap}
        elif q == "bj-orth":
            res = bj_orthogonal(a, other, spec)
            out = {"quantity": q, "norm": spec.label,
                   "is_orthogonal": res.is_orthogonal,
                   "min_value": res.min_value,
                   "gamma_min": _complex_pair(res.gamma_min)}
        elif q == "wn-orth":
            res = wn_orthogonal(a, other, spec)
            out = {"quantity": q, "norm": spec.label,
                   "is_orthogonal": res.is_orthogonal,
                   "min_value": res.min_value,
                   "gamma_min": _complex_pair(res.gamma_min)}
        elif q == "trace-cond":
            if spec.kind != "schatten":
                print("error: trace-cond needs a Schatten norm p:<float>",
                      file=sys.stderr)
                return USAGE_ERROR
            holds = parallel_trace_condition(a, other, spec.p)
            out = {"quantity": q, "norm": spec.label, "holds": holds}
        else:  # w1-conds
            res = w1_parallel_conditions(a)
            out = {"quantity": q, "norm": "p:1", "cond5": res.cond5,
                   "cond7": res.cond7, "cond10": res.cond10}
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    print(_dump(out))
    return 0


def _sample(args) -> int:
    try:
        spec = cm.parse_ensemble(args.ensemble)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    drawn = cm.sample(spec, trial=args.trial)
    if isinstance(drawn, tuple):
        obj = {"A": cm.matrix_to_json(drawn[0]),
               "X": cm.matrix_to_json(drawn[1])}
    else:
        obj = cm.matrix_to_json(drawn)
    text = _dump(obj)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _verify(args) -> int:
    if args.suite == "all":
        ids = verify.registry_ids()
    else:
        ids = [s.strip() for s in args.suite.split(",") if s.strip()]
        if not ids:
            print("error: --suite needs ids or 'all'", file=sys.stderr)
            return USAGE_ERROR
    dims = None
    if args.dims:
        try:
            dims = tuple(int(s) for s in args.dims.split(","))
        except ValueError:
            print("error: --dims must be comma-separated integers",
                  file=sys.stderr)
            return USAGE_ERROR
    p_grid = None
    if args.p:
        try:
            p_grid = tuple(f"p:{float(s):g}" for s in args.p.split(","))
        except ValueError:
            print("error: --p must be comma-separated reals", file=sys.stderr)
            return USAGE_ERROR

    specs = []
    for cid in ids:
        try:
            specs.append(verify.make_spec(cid, dims=dims, p_grid=p_grid,
                                          trials=args.trials))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_ERROR
    reports = verify.run_suite_specs(specs, seed=args.seed, jobs=args.jobs)
    text = verify.report_json(reports)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    print(verify.format_table(reports))
    return 0 if verify.suite_passed(reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opradius",
        description="Generalized numerical radii, operator geometry, "
                    "and the property-check suite.")
    sub = parser.add_subparsers(dest="verb", required=True)

    pc = sub.add_parser("compute", help="evaluate a quantity on a matrix")
    pc.add_argument("--matrix", required=True, help="matrix JSON file")
    pc.add_argument("--other", help="second matrix for binary predicates")
    pc.add_argument("--norm", default="op", help="op or p:<float>")
    pc.add_argument("--quantity", required=True, choices=QUANTITIES)

    ps = sub.add_parser("sample", help="draw one ensemble matrix")
    ps.add_argument("--ensemble", required=True, help="kind:dim:seed")
    ps.add_argument("--trial", type=int, default=0)
    ps.add_argument("--out", help="output file (default stdout)")

    pv = sub.add_parser("verify", help="run property checks")
    pv.add_argument("--suite", default="all", help="'all' or id[,id...]")
    pv.add_argument("--dims", help="override dims, e.g. 2,3,4")
    pv.add_argument("--p", help="override Schatten grid, e.g. 1,2,3")
    pv.add_argument("--trials", type=int, help="override trials per cell")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--jobs", type=int, default=1)
    pv.add_argument("--out", default="report.json", help="report JSON path")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "compute":
        return _compute(args)
    if args.verb == "sample":
        return _sample(args)
    return _verify(args)


if __name__ == "__main__":
    sys.exit(main())
