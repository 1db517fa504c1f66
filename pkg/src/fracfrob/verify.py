"""Numerical checks that do not trust the series machinery they check.

* ``numeric_talpha`` is the limit-definition derivative as a forward quotient.
* ``residual`` evaluates the equation's left-hand side at sample points.
* ``wronskian_abel`` compares y1 T y2 - y2 T y1 with the Abel prediction,
  evaluated directly from p without going through ``series_exp``.
* ``substitution_oracle`` maps the problem to a classical regular-singular
  equation in t = (x - x0)^a / a and runs a separate Frobenius recurrence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DegenerateWronskian, DomainError
from .frobenius import GAP_TOL, ProblemSpec, RootCase, solve
from .series import (FracSeries, LogSolution, conformable_deriv, eval_log,
                     eval_series, log_conformable_deriv)

DEFAULT_EPS = 1e-6


def numeric_talpha(f: Callable[[float], float], x: float, x0: float, alpha: float,
                   eps: float = DEFAULT_EPS) -> float:
    if not x > x0:
        raise DomainError(f"x = {x!r} must exceed x0 = {x0!r}")
    if not eps > 0.0:
        raise ValueError("eps must be positive")
    return (f(x + eps * (x - x0) ** (1.0 - alpha)) - f(x)) / eps


def derivative_mismatch(f: FracSeries, points: Sequence[float], eps: float = DEFAULT_EPS,
                        alpha: Optional[float] = None) -> float:
    """Max |forward quotient - termwise derivative| over ``points``.

    ``alpha`` overrides the order used in the quotient (negative controls).
    """
    a = f.alpha if alpha is None else alpha
    df = conformable_deriv(f)
    return max(abs(numeric_talpha(f, x, f.x0, a, eps) - eval_series(df, x)) for x in points)


# -- radius -----------------------------------------------------------------

@dataclass(frozen=True)
class RadiusEstimate:
    value: float  # math.inf when unbounded
    unbounded: bool
    confident: bool


def radius_estimate(series: FracSeries, growth_tol: float = 0.1) -> RadiusEstimate:
    """Ratio-test radius in x - x0 from the tail of the coefficient list.

    Uses consecutive nonzero coefficients c_i, c_j and the normalized ratio
    |c_i / c_j|^(1/(j-i)); the median of the last quarter gives the radius in
    u = (x - x0)^a. Ratios that keep growing across that window by more
    than ``growth_tol`` mean the series is entire.
    """
    c = np.abs(series.coeffs)
    idx = np.flatnonzero(c)
    if idx.size < 8:
        return RadiusEstimate(math.inf, True, False)
    i, j = idx[:-1], idx[1:]
    ratios = (c[i] / c[j]) ** (1.0 / (j - i))
    window = ratios[-max(2, ratios.size // 4):]
    if window[-1] > (1.0 + growth_tol) * window[0] and np.all(np.diff(window) >= 0):
        return RadiusEstimate(math.inf, True, True)
    return RadiusEstimate(float(np.median(window)) ** (1.0 / series.alpha), False, True)


# -- residual ---------------------------------------------------------------

@dataclass(frozen=True)
class ResidualReport:
    points: list
    residuals: list
    tail_bounds: list
    tolerances: list
    passed: bool


def _as_log(y) -> LogSolution:
    return y if isinstance(y, LogSolution) else LogSolution.plain(y)


def _poly(coeffs, u) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def _tail(f: FracSeries, d: float, geometric: float) -> float:
    last = np.abs(f.coeffs[-2:]).max()
    return float(last) * d ** (f.alpha * f.top) * geometric


def tail_bound(y: LogSolution, x: float, r: float = math.inf) -> float:
    """Estimated truncation error of ``y`` at ``x`` from its last coefficients."""
    y = _as_log(y)
    d = x - y.x0
    ratio = (d / r) ** y.alpha if math.isfinite(r) else 0.0
    if ratio >= 1.0:
        raise DomainError(f"x = {x!r} lies outside the radius r = {r!r}")
    geometric = 1.0 / (1.0 - ratio)
    tb = _tail(y.power_part, d, geometric)
    if y.log_coeff != 0.0:
        tb += abs(y.log_coeff * math.log(d)) * _tail(y.log_part, d, geometric)
    return tb


def residual(prob: ProblemSpec, y, points: Sequence[float], r: Optional[float] = None,
             abs_tol: float = 1e-10, tail_factor: Optional[float] = None) -> ResidualReport:
    """|(x-x0)^{2a} T T y + (x-x0)^a p T y + q y| at each point.

    A point passes when its residual is below ``max(abs_tol, tail_factor *
    tail_bound, rounding)``, where rounding is 64 ulp of the largest of the
    three terms. ``tail_factor`` defaults to an estimate of how much the
    operator amplifies a truncated tail.
    """
    y = _as_log(y)
    if r is None:
        r = prob.radius_hint if prob.radius_hint is not None else math.inf
    ty = log_conformable_deriv(y)
    tty = log_conformable_deriv(ty)
    a = prob.alpha
    if tail_factor is None:
        top = max(abs(y.power_part.top), abs(y.log_part.top)) + 2.0
        tail_factor = 10.0 * (1.0 + (a * top) ** 2 + a * top * sum(map(abs, prob.p))
                              + sum(map(abs, prob.q)))
    res, tails, tols = [], [], []
    for x in points:
        if not x > prob.x0:
            raise DomainError(f"sample point {x!r} must exceed x0 = {prob.x0!r}")
        d = x - prob.x0
        u = d ** a
        terms = (u * u * eval_log(tty, x), u * _poly(prob.p, u) * eval_log(ty, x),
                 _poly(prob.q, u) * eval_log(y, x))
        tb = tail_bound(y, x, r)
        res.append(abs(sum(terms)))
        tails.append(tb)
        tols.append(max(abs_tol, tail_factor * tb, 64 * np.finfo(float).eps * max(map(abs, terms))))
    passed = all(v <= t for v, t in zip(res, tols))
    return ResidualReport(list(points), res, tails, tols, passed)


# -- Wronskian / Abel -------------------------------------------------------

def wronskian(y1, y2, x: float) -> tuple[float, float]:
    """Conformable Wronskian y1 T y2 - y2 T y1 at x, and its rounding scale."""
    y1, y2 = _as_log(y1), _as_log(y2)
    a = eval_log(y1, x) * eval_log(log_conformable_deriv(y2), x)
    b = eval_log(y2, x) * eval_log(log_conformable_deriv(y1), x)
    return a - b, abs(a) + abs(b)


def _abel_log(prob: ProblemSpec, x: float) -> float:
    # log of (x-x0)^{-p0} exp(-sum_{k>=1} p_k u^k / (k a))
    d = x - prob.x0
    u = d ** prob.alpha
    tail = sum(pk * u ** k / (k * prob.alpha) for k, pk in enumerate(prob.p) if k >= 1)
    return -prob.p0 * math.log(d) - tail


def wronskian_abel(prob: ProblemSpec, y1, y2, x_ref: float, points: Sequence[float]) -> float:
    """Max relative deviation of the Wronskian from the Abel prediction."""
    w_ref, scale = wronskian(y1, y2, x_ref)
    if abs(w_ref) < 1e-12 * scale or w_ref == 0.0:
        raise DegenerateWronskian(f"W({x_ref!r}) = {w_ref!r} vanishes: solutions are dependent")
    log_ref = _abel_log(prob, x_ref)
    worst = 0.0
    for x in points:
        w, _ = wronskian(y1, y2, x)
        predicted = w_ref * math.exp(_abel_log(prob, x) - log_ref)
        worst = max(worst, abs(w - predicted) / abs(predicted))
    return worst


# -- classical substitution oracle -------------------------------------------

@dataclass(frozen=True)
class OracleReport:
    roots: tuple
    classical_y1: list
    classical_y2: Optional[list]
    deviation: float


def _classical_roots(pt0: float, qt0: float) -> tuple[float, float, Optional[int]]:
    # r^2 + (pt0 - 1) r + qt0 = 0 written around its midpoint
    half = 0.5 * (1.0 - pt0)
    rad = half * half - qt0
    if rad < -1e-12 * (half * half + abs(qt0)):
        raise DomainError("classical indicial roots are complex")
    w = math.sqrt(max(rad, 0.0))
    gap = 2.0 * w
    n = round(gap)
    if abs(gap - n) < GAP_TOL:
        return half + 0.5 * n, half - 0.5 * n, int(n)
    return half + w, half - w, None


def _classical_series(pt: list, qt: list, s: float, c0: float, n: int) -> list:
    c = [c0]
    for k in range(1, n):
        t = k + s
        den = t * (t - 1.0) + (pt[0] if pt else 0.0) * t + (qt[0] if qt else 0.0)
        num = 0.0
        for j in range(k):
            m = k - j
            pm = pt[m] if m < len(pt) else 0.0
            qm = qt[m] if m < len(qt) else 0.0
            num += c[j] * (pm * (j + s) + qm)
        c.append(-num / den)
    return c


def _rel(a: float, b: float) -> float:
    m = max(abs(a), abs(b))
    return 0.0 if m == 0.0 else abs(a - b) / m


def substitution_oracle(prob: ProblemSpec, K: Optional[int] = None, result=None) -> OracleReport:
    """Classical Frobenius in t = (x - x0)^a / a, compared with the conformable series.

    In t the equation reads t^2 Y'' + t pt(t) Y' + qt(t) Y = 0 with
    pt_k = p_k a^(k-1), qt_k = q_k a^(k-2). The classical series of the same
    function has coefficients c_k a^(k+s), so it is seeded with a^s.
    """
    K = prob.K if K is None else K
    a = prob.alpha
    pt = [pk * a ** (k - 1) for k, pk in enumerate(prob.p)]
    qt = [qk * a ** (k - 2) for k, qk in enumerate(prob.q)]
    r1, r2, gap = _classical_roots(pt[0] if pt else 0.0, qt[0] if qt else 0.0)
    result = result if result is not None else solve(prob, K)
    dev = max(_rel(r1, result.roots.s1), _rel(r2, result.roots.s2))
    hat1 = _classical_series(pt, qt, r1, a ** r1, K + 1)
    dev = max(dev, max(_rel(h, c * a ** (k + result.roots.s1))
                       for k, (h, c) in enumerate(zip(hat1, result.y1.coeffs))))
    hat2 = None
    if gap is None and result.roots.case is RootCase.DISTINCT_NON_INTEGER_GAP:
        hat2 = _classical_series(pt, qt, r2, a ** r2, K + 1)
        b = result.y2.power_part.coeffs
        dev = max(dev, max(_rel(h, c * a ** (k + result.roots.s2))
                           for k, (h, c) in enumerate(zip(hat2, b))))
    return OracleReport((r1, r2), hat1, hat2, dev)
