"""Problem files and JSON solution reports.

Problem file grammar (UTF-8, one ``key = value`` per line, ``#`` comments)::

    alpha = 0.5
    x0 = 0
    p = [-0.25]
    q = [0]
    terms = 30          # optional
    radius_hint = 2.0   # optional
"""
from __future__ import annotations

import json
import logging
import math
import re

from .errors import ParseError, ValidationError
from .frobenius import DEFAULT_TERMS, FrobeniusResult, ProblemSpec
from .series import FracSeries, LogSolution

log = logging.getLogger(__name__)

KEYS = ("alpha", "x0", "p", "q", "terms", "radius_hint")
REQUIRED = ("alpha", "x0", "p", "q")

_LINE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*?)\s*$")


def _number(text: str, lineno: int) -> float:
    try:
        v = float(text)
    except ValueError:
        raise ParseError(f"not a number: {text!r}", lineno) from None
    if not math.isfinite(v):
        raise ParseError(f"non-finite number: {text!r}", lineno)
    return v


def _list(text: str, lineno: int) -> list:
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"expected a bracketed list, got {text!r}", lineno)
    body = text[1:-1].strip()
    if not body:
        return []
    return [_number(item.strip(), lineno) for item in body.split(",")]


def parse_problem(text: str) -> ProblemSpec:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise ParseError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, value = m.groups()
        if key not in KEYS:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in values:
            raise ParseError(f"duplicate key {key!r}", lineno)
        if key in ("p", "q"):
            values[key] = _list(value, lineno)
        elif key == "terms":
            try:
                values[key] = int(value)
            except ValueError:
                raise ParseError(f"terms must be an integer, got {value!r}", lineno) from None
        else:
            values[key] = _number(value, lineno)
    missing = [k for k in REQUIRED if k not in values]
    if missing:
        raise ValidationError(f"missing keys: {', '.join(missing)}")
    for k in ("p", "q"):
        if not values[k]:
            log.warning("%s is empty; treating it as identically zero", k)
    return ProblemSpec(values["x0"], values["alpha"], values["p"], values["q"],
                       values.get("terms", DEFAULT_TERMS), values.get("radius_hint"))


def read_problem(path) -> ProblemSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())


# -- JSON report -------------------------------------------------------------

def _series_dict(f: FracSeries) -> dict:
    return {"base": f.base, "coeffs": f.coeffs.tolist()}


def report_dict(result: FrobeniusResult) -> dict:
    prob, roots = result.problem, result.roots
    return {
        "alpha": prob.alpha,
        "x0": prob.x0,
        "case": roots.label(),
        "s1": roots.s1,
        "s2": roots.s2,
        "y1": _series_dict(result.y1),
        "y2": {
            "log_coeff": result.y2.log_coeff,
            "log_part": _series_dict(result.y2.log_part),
            "power_part": _series_dict(result.y2.power_part),
        },
    }


def dump_report(result: FrobeniusResult) -> str:
    return json.dumps(report_dict(result), indent=2) + "\n"


def load_report(text: str) -> tuple[FracSeries, LogSolution]:
    """Rebuild (y1, y2) from a JSON report."""
    try:
        d = json.loads(text)
        x0, alpha = d["x0"], d["alpha"]

        def series(s):
            return FracSeries(x0, alpha, s["base"], s["coeffs"])

        y1 = series(d["y1"])
        y2 = LogSolution(d["y2"]["log_coeff"], series(d["y2"]["log_part"]),
                         series(d["y2"]["power_part"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed solution report: {exc}") from None
    return y1, y2
