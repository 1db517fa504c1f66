"""fracfrob command line.

Exit codes: 0 success, 2 parse/validation error, 3 unsupported problem
(complex indicial roots), 4 verification failure.
"""
from __future__ import annotations

import argparse
import logging
import math
import sys

from . import __version__
from .classify import classify_problem
from .errors import (ComplexRoots, DegenerateWronskian, DomainError, InvalidRadius,
                     ParseError, ValidationError)
from .frobenius import majorant, solve
from .problem_io import dump_report, load_report, parse_problem
from .series import FracSeries, LogSolution, eval_log
from .verify import (radius_estimate, residual, substitution_oracle, tail_bound,
                     wronskian_abel)

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_VERIFY = 0, 2, 3, 4


def _coef(v: float) -> str:
    return format(v, ".16e")


def _val(v: float) -> str:
    return format(v, ".6g")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8", newline=None) as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(str(exc)) from None


def _problem(path: str, terms=None):
    prob = parse_problem(_read(path))
    if terms is not None:
        prob = type(prob)(prob.x0, prob.alpha, prob.p, prob.q, terms, prob.radius_hint)
    return prob


def _print_series(out, title: str, f: FracSeries, count: int = 10):
    out.write(f"{title} base={_coef(f.base)}\n")
    for k, c in enumerate(f.coeffs[:count]):
        out.write(f"  {k:3d} {_coef(c)}\n")


def cmd_classify(args, out):
    out.write(f"{classify_problem(_problem(args.file))}\n")
    return EXIT_OK


def cmd_solve(args, out):
    result = solve(_problem(args.file, args.terms))
    roots = result.roots
    out.write(f"case: {roots.label()}\n")
    out.write(f"s1: {_coef(roots.s1)}\n")
    out.write(f"s2: {_coef(roots.s2)}\n")
    _print_series(out, "y1", result.y1)
    out.write(f"y2 log_coeff: {_coef(result.y2.log_coeff)}\n")
    _print_series(out, "y2 power_part", result.y2.power_part)
    if args.json:
        with open(args.json, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dump_report(result))
    return EXIT_OK


def _parse_range(spec: str):
    try:
        a, b, n = spec.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError:
        raise ValidationError(f"--range must look like A:B:N, got {spec!r}") from None
    if n < 1 or not b > a or not (math.isfinite(a) and math.isfinite(b)):
        raise ValidationError(f"invalid range {spec!r}")
    return a, b, n


def cmd_eval(args, out):
    text = _read(args.file)
    if text.lstrip().startswith("{"):
        y1, y2 = load_report(text)
        x0 = y1.x0
    else:
        result = solve(parse_problem(text))
        y1, y2, x0 = result.y1, result.y2, result.problem.x0
    a, b, n = _parse_range(args.range)
    if a <= x0:
        raise ValidationError(f"range start {a!r} must exceed x0 = {x0!r}")
    y = LogSolution.plain(y1) if args.solution == 1 else y2
    out.write("x,y\n")
    for i in range(1, n + 1):
        x = a + (b - a) * i / n
        out.write(f"{_val(x)},{_val(eval_log(y, x))}\n")
    return EXIT_OK


def _sample_points(result, n: int):
    prob = result.problem
    radius = prob.radius_hint
    if radius is None:
        est = radius_estimate(result.y1)
        radius = est.value
    span = min(1.0, 0.5 * radius)
    ys = (result.y1_solution, result.y2)
    for _ in range(60):
        pts = [prob.x0 + span * i / n for i in range(1, n + 1)]
        if all(tail_bound(y, x, radius) < 1e-12 for y in ys for x in pts):
            return pts, radius
        span *= 0.5
    return pts, radius


def cmd_verify(args, out):
    prob = _problem(args.file)
    result = solve(prob)
    pts, radius = _sample_points(result, args.points)
    ok = True
    out.write(f"classification: {classify_problem(prob)}\n")
    out.write(f"case: {result.roots.label()}\n")
    out.write(f"log_coeff: {_coef(result.y2.log_coeff)}\n")
    out.write(f"sample: {len(pts)} points in ({_val(prob.x0)}, {_val(pts[-1])}]\n")
    for name, y in (("y1", result.y1_solution), ("y2", result.y2)):
        rep = residual(prob, y, pts, r=radius)
        ok &= rep.passed
        out.write(f"residual {name}: max={_val(max(rep.residuals))} "
                  f"max_tail={_val(max(rep.tail_bounds))} {'PASS' if rep.passed else 'FAIL'}\n")
    try:
        dev = wronskian_abel(prob, result.y1, result.y2, pts[len(pts) // 2], pts)
        w_ok = dev <= 1e-8
    except DegenerateWronskian as exc:
        dev, w_ok = math.nan, False
        out.write(f"wronskian: {exc}\n")
    ok &= w_ok
    out.write(f"wronskian/abel deviation: {_val(dev)} {'PASS' if w_ok else 'FAIL'}\n")
    oracle = substitution_oracle(prob, result=result)
    o_ok = oracle.deviation <= 1e-10
    ok &= o_ok
    out.write(f"classical oracle deviation: {_val(oracle.deviation)} {'PASS' if o_ok else 'FAIL'}\n")
    out.write("verify: PASS\n" if ok else "verify: FAIL\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_majorant(args, out):
    prob = _problem(args.file, args.terms)
    result = solve(prob)
    K = prob.K
    trace = majorant(prob, result.roots, args.r, K + 1, shifted_weight=args.shifted_weight)
    out.write("k,abs_ck,Ck,ratio\n")
    ratios = trace.ratios
    for k in range(K + 1):
        ratio = ratios[k]
        out.write(f"{k},{_coef(trace.abs_c[k])},{_coef(trace.C[k])},{_coef(ratio)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracfrob",
        description="Fractional Frobenius series for sequential conformable equations of order 2*alpha.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify x0 as ordinary / regular / essential")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="indicial roots and both series solutions")
    p.add_argument("file")
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--json", metavar="PATH", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("eval", help="CSV of a solution over (A, B]")
    p.add_argument("file", help="problem file or JSON report from 'solve --json'")
    p.add_argument("--solution", type=int, choices=(1, 2), required=True)
    p.add_argument("--range", required=True, metavar="A:B:N")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="residual, Wronskian/Abel and classical-oracle checks")
    p.add_argument("file")
    p.add_argument("--points", type=int, default=20)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("majorant", help="CSV of |c_k| against the majorant C_k")
    p.add_argument("file")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--shifted-weight", action="store_true",
                   help="use the weight alpha*(j+1+|s1|) instead of alpha*(j+|s1|)+1")
    p.set_defaults(func=cmd_majorant)
    return parser


def main(argv=None, out=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, ValidationError, DomainError, InvalidRadius) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ComplexRoots as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
