"""Frobenius-type series solutions of

    (x-x0)^{2a} T_a T_a y + (x-x0)^a p(x) T_a y + q(x) y = 0

around a regular alpha-singular point x0, with p and q given as coefficient
lists in powers of (x-x0)^a.

Substituting y = sum c_k (x-x0)^{(k+s)a} gives the indicial polynomial

    I0(s) = a^2 s (s-1) + a s p_0 + q_0,      I_m(s) = p_m a s + q_m  (m >= 1)

and the recurrence c_k I0(k+s) = -sum_{j<k} c_j I_{k-j}(j+s).  When the roots
are equal or differ by an integer the second solution is built by reduction
of order from the conformable Abel formula

    y2 = y1 I_a( exp(-I_a P) / y1^2 ),   P = p / (x-x0)^a.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import mpmath
import numpy as np

from . import kernels
from .errors import ComplexRoots, InvalidRadius, Resonance, ValidationError
from .series import (FracSeries, LogSolution, add, conformable_antideriv,
                     conformable_deriv, log_conformable_deriv, mul, reciprocal,
                     series_exp)

log = logging.getLogger(__name__)

DEFAULT_TERMS = 30
# |gap - round(gap)| below this declares an integer gap
GAP_TOL = 1e-9


@dataclass(frozen=True)
class ProblemSpec:
    x0: float
    alpha: float
    p: tuple
    q: tuple
    K: int = DEFAULT_TERMS
    radius_hint: Optional[float] = None

    def __post_init__(self):
        alpha = float(self.alpha)
        if not (0.0 < alpha <= 1.0):
            raise ValidationError(f"alpha must lie in (0, 1], got {self.alpha!r}")
        p = tuple(float(v) for v in self.p)
        q = tuple(float(v) for v in self.q)
        if not all(math.isfinite(v) for v in p + q) or not math.isfinite(float(self.x0)):
            raise ValidationError("coefficients and x0 must be finite")
        if int(self.K) < 1:
            raise ValidationError(f"truncation order must be >= 1, got {self.K!r}")
        if self.radius_hint is not None and not float(self.radius_hint) > 0.0:
            raise ValidationError("radius_hint must be positive")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "x0", float(self.x0))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "K", int(self.K))
        if self.radius_hint is not None:
            object.__setattr__(self, "radius_hint", float(self.radius_hint))

    @property
    def p0(self) -> float:
        return self.p[0] if self.p else 0.0

    @property
    def q0(self) -> float:
        return self.q[0] if self.q else 0.0

    def coeff_array(self, which: str, n: int) -> np.ndarray:
        """First ``n`` coefficients of p or q, zero-padded."""
        src = self.p if which == "p" else self.q
        out = np.zeros(n)
        m = min(n, len(src))
        out[:m] = src[:m]
        return out

    def p_series(self, K: int) -> FracSeries:
        return FracSeries(self.x0, self.alpha, 0.0, self.coeff_array("p", K + 1))

    def q_series(self, K: int) -> FracSeries:
        return FracSeries(self.x0, self.alpha, 0.0, self.coeff_array("q", K + 1))


class RootCase(enum.Enum):
    DISTINCT_NON_INTEGER_GAP = "distinct-non-integer-gap"
    EQUAL_ROOTS = "equal-roots"
    INTEGER_GAP = "integer-gap"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class IndicialData:
    s1: float
    s2: float
    case: RootCase
    discriminant: float
    N: Optional[int] = None  # 0 for equal roots, s1 - s2 for an integer gap

    @property
    def gap(self) -> float:
        return self.s1 - self.s2

    def label(self) -> str:
        if self.case is RootCase.INTEGER_GAP:
            return f"{self.case}({self.N})"
        return str(self.case)


def indicial_poly(s, p0, q0, alpha):
    return alpha * alpha * s * (s - 1.0) + alpha * s * p0 + q0


def indicial(p0: float, q0: float, alpha: float) -> IndicialData:
    """Real roots s1 >= s2 of I0 and the root-case tag."""
    if not (0.0 < alpha <= 1.0):
        raise ValidationError(f"alpha must lie in (0, 1], got {alpha!r}")
    a = alpha * alpha
    b = alpha * p0 - a
    c = q0
    disc = b * b - 4.0 * a * c
    scale = b * b + abs(4.0 * a * c)
    if disc < -1e-12 * scale:
        raise ComplexRoots(f"indicial discriminant {disc!r} < 0: complex roots unsupported")
    mean = -b / (2.0 * a)
    root = math.sqrt(max(disc, 0.0))
    # cancellation-free pair
    if b >= 0.0:
        t = -0.5 * (b + root)
    else:
        t = -0.5 * (b - root)
    if t == 0.0:
        s1 = s2 = 0.0
    else:
        r1, r2 = t / a, c / t
        s1, s2 = max(r1, r2), min(r1, r2)
    gap = s1 - s2
    n = round(gap)
    if abs(gap - n) < GAP_TOL:
        # snap to mean +- N/2 so that sum/difference identities hold to rounding
        n = int(n)
        s1, s2 = mean + 0.5 * n + 0.0, mean - 0.5 * n + 0.0
        case = RootCase.EQUAL_ROOTS if n == 0 else RootCase.INTEGER_GAP
        return IndicialData(s1, s2, case, disc, n)
    return IndicialData(s1, s2, RootCase.DISTINCT_NON_INTEGER_GAP, disc, None)


def shifted_poly(m: int, s: float, prob: ProblemSpec) -> float:
    if m < 1:
        raise ValueError("shifted polynomial index starts at 1")
    pm = prob.p[m] if m < len(prob.p) else 0.0
    qm = prob.q[m] if m < len(prob.q) else 0.0
    return pm * prob.alpha * s + qm


def recurrence(prob: ProblemSpec, s: float, K: int | None = None) -> FracSeries:
    """Series at exponent base ``s`` with c_0 = 1; raises Resonance if I0(k+s) ~ 0."""
    K = prob.K if K is None else K
    n = K + 1
    c, bad = kernels.frobenius(prob.coeff_array("p", n), prob.coeff_array("q", n),
                               prob.alpha, s, n)
    if bad >= 0:
        raise Resonance(bad, indicial_poly(bad + s, prob.p0, prob.q0, prob.alpha))
    return FracSeries(prob.x0, prob.alpha, s, c)


def _abel_chain(x0, alpha, p, y1, roots):
    """Power part and log coefficient of y1 * I(W / y1^2); dtype follows ``y1``."""
    L = y1.K
    P = FracSeries(x0, alpha, -1.0, p)
    analytic, _ = conformable_antideriv(P)  # the p0 term becomes p0*ln(x-x0)
    wronskian = series_exp(analytic.scale(-1.0), K=L).shift(-float(p[0]) / alpha)
    integrand = mul(wronskian, reciprocal(mul(y1, y1)))
    if roots.case is RootCase.DISTINCT_NON_INTEGER_GAP:
        lead = -1.0 - roots.gap
    else:
        lead = -1.0 - roots.N
    integrand = FracSeries(x0, alpha, lead, integrand.coeffs)
    prim, log_coeff = conformable_antideriv(integrand)
    return mul(y1, prim), log_coeff


def _extended_chain(prob, L, roots, dps):
    with mpmath.workdps(dps):
        mpf = mpmath.mpf
        a = mpf(prob.alpha)
        p = np.array([mpf(float(v)) for v in prob.coeff_array("p", L + 1)], dtype=object)
        q = np.array([mpf(float(v)) for v in prob.coeff_array("q", L + 1)], dtype=object)
        if roots.case is RootCase.DISTINCT_NON_INTEGER_GAP:
            s1 = mpf(roots.s1)
        else:
            # the nearest problem whose gap is exactly N
            mean = (1 - p[0] / a) / 2
            s1, s2 = mean + mpf(roots.N) / 2, mean - mpf(roots.N) / 2
            q[0] = a * a * s1 * s2
        c, bad = kernels.frobenius(p, q, a, s1, L + 1)
        if bad >= 0:
            raise Resonance(bad)
        y1 = FracSeries(prob.x0, prob.alpha, roots.s1, c)
        power, log_coeff = _abel_chain(prob.x0, prob.alpha, p, y1, roots)
        return power.to_float(), float(log_coeff)


def _close(a: FracSeries, b: FracSeries, rtol: float) -> bool:
    return bool(np.all(np.abs(a.coeffs - b.coeffs) <= rtol * np.abs(b.coeffs)))


def reduction_of_order(prob: ProblemSpec, y1: FracSeries,
                       roots: IndicialData | None = None, extended: bool = True) -> LogSolution:
    """Second solution from y1 (c_0 = 1) via the conformable Abel formula.

    Works at y1's own order L. The power part starts at s2 (s1 + 1 for equal
    roots) and carries L + 1 (resp. L) coefficients; the log coefficient is
    the residue picked up by the outer antiderivative.

    The product y1 * I(W / y1^2) cancels heavily in its high coefficients
    (about 1.5 digits per term), so by default the chain reruns y1 and
    itself in mpmath, raising the working precision until two passes agree
    to 1e-15.
    """
    if y1.coeffs[0] != 1.0:
        raise ValueError("reduction_of_order expects y1 normalized to c_0 = 1")
    roots = roots or indicial(prob.p0, prob.q0, prob.alpha)
    L = y1.K
    if extended:
        dps = 30 + 3 * L // 2
        prev = _extended_chain(prob, L, roots, dps)
        for _ in range(6):
            dps = 3 * dps // 2
            power, log_coeff = _extended_chain(prob, L, roots, dps)
            if _close(power, prev[0], 1e-15) and abs(log_coeff - prev[1]) <= 1e-15 * abs(prev[1]):
                break
            prev = power, log_coeff
        else:
            log.warning("extended-precision reduction did not settle at %d digits", dps)
    else:
        power, log_coeff = _abel_chain(prob.x0, prob.alpha, prob.coeff_array("p", L + 1), y1, roots)
    if roots.case is RootCase.EQUAL_ROOTS:
        # constant of the inner antiderivative is zero, so the s1 term is empty
        power = FracSeries(prob.x0, prob.alpha, roots.s1 + 1.0, power.coeffs[1:])
    else:
        power = FracSeries(prob.x0, prob.alpha, roots.s2, power.coeffs)
    return LogSolution(log_coeff, y1, power)


@dataclass(frozen=True, eq=False)
class FrobeniusResult:
    problem: ProblemSpec
    roots: IndicialData
    y1: FracSeries
    y2: LogSolution

    @property
    def y1_solution(self) -> LogSolution:
        return LogSolution.plain(self.y1)

    def solution(self, which: int) -> LogSolution:
        if which == 1:
            return self.y1_solution
        if which == 2:
            return self.y2
        raise ValueError("solution index must be 1 or 2")


def solve(prob: ProblemSpec, K: int | None = None) -> FrobeniusResult:
    K = prob.K if K is None else K
    roots = indicial(prob.p0, prob.q0, prob.alpha)
    if roots.case is RootCase.DISTINCT_NON_INTEGER_GAP:
        y1 = recurrence(prob, roots.s1, K)
        y2 = LogSolution.plain(recurrence(prob, roots.s2, K))
        return FrobeniusResult(prob, roots, y1, y2)
    y1_ext = recurrence(prob, roots.s1, K + roots.N + 2)
    ext = reduction_of_order(prob, y1_ext, roots)
    y1 = y1_ext.truncate(K)
    y2 = LogSolution(ext.log_coeff, y1, ext.power_part.truncate(K))
    if roots.case is RootCase.EQUAL_ROOTS:
        assert y2.log_coeff == 1.0 and y2.power_part.base == roots.s1 + 1.0
    else:
        assert y2.power_part.base == roots.s2 and y2.power_part.coeffs[0] != 0.0
    return FrobeniusResult(prob, roots, y1, y2)


def _magnitude(s: FracSeries) -> FracSeries:
    return FracSeries(s.x0, s.alpha, s.base, np.abs(s.coeffs))


def _magnitude_deriv(y: LogSolution) -> LogSolution:
    """Termwise-absolute analogue of log_conformable_deriv (no cancellation)."""
    power = _magnitude(conformable_deriv(y.power_part))
    if y.log_coeff == 0.0:
        return LogSolution(0.0, y.log_part, power)
    extra = _magnitude(y.log_part.shift(-1.0).scale(y.log_coeff))
    return LogSolution(abs(y.log_coeff), _magnitude(conformable_deriv(y.log_part)),
                       add(power, extra))


def operator_residual(prob: ProblemSpec, y: LogSolution,
                      absolute: bool = False) -> tuple[LogSolution, float]:
    """Apply the left-hand side of the equation to ``y`` in series form.

    Returns the residual as a LogSolution together with the highest exponent
    (in alpha-steps) up to which its coefficients are complete. The ln-part of
    the residual is ``log_coeff * L[log_part]``. With ``absolute=True`` every
    coefficient is replaced by its magnitude before it is combined, which
    gives the rounding scale of each residual coefficient.
    """
    if absolute:
        y = LogSolution(abs(y.log_coeff), _magnitude(y.log_part), _magnitude(y.power_part))
        deriv, mag = _magnitude_deriv, _magnitude
    else:
        deriv, mag = log_conformable_deriv, (lambda s: s)

    def apply(f: FracSeries, tf: FracSeries, ttf: FracSeries) -> FracSeries:
        p = mag(prob.p_series(tf.K))
        q = mag(prob.q_series(f.K))
        return add(add(ttf.shift(2.0), mul(p, tf).shift(1.0)), mul(q, f))

    ty = deriv(y)
    tty = deriv(ty)
    power = apply(y.power_part, ty.power_part, tty.power_part)
    if y.log_coeff == 0.0:
        return LogSolution(0.0, FracSeries.zero(prob.x0, prob.alpha), power), y.power_part.top
    log = apply(y.log_part, ty.log_part, tty.log_part)
    return LogSolution(y.log_coeff, log, power), min(y.power_part.top, y.log_part.top)


@dataclass(frozen=True, eq=False)
class MajorantTrace:
    r: float
    alpha: float
    M: float
    N: int
    C: np.ndarray = field(repr=False)
    D: np.ndarray = field(repr=False)  # C_k r^{k a}; stays finite where C overflows
    abs_c: np.ndarray = field(repr=False)
    shifted_weight: bool = False

    @property
    def ratios(self) -> np.ndarray:
        """C_{k+1} / C_k; nan where C_k is a zero seed."""
        with np.errstate(divide="ignore", invalid="ignore"):
            out = self.D[1:] / self.D[:-1] * self.r ** -self.alpha
        return np.where(self.D[:-1] == 0.0, np.nan, out)

    def dominates(self) -> bool:
        return bool(np.all(self.abs_c <= self.C))


def majorant(prob: ProblemSpec, roots: IndicialData, r: float, K: int | None = None,
             shifted_weight: bool = False) -> MajorantTrace:
    """Majorant sequence C_k >= |c_k(s1)| certifying convergence for |x - x0| < r.

    For k >= N, with N - 1 <= |s1 - s2| < N,

        C_k = M sum_{j<k} w_j r^{j a} C_j / (r^{k a} a^2 k (k - |s1 - s2|))

    where w_j = a (j + |s1|) + 1 bounds |I_m(j+s1)| r^{m a} / M. With
    ``shifted_weight`` the weight a (j + 1 + |s1|) is used instead; that one
    need not dominate when a < 1.
    """
    if not (r > 0.0 and math.isfinite(r)):
        raise InvalidRadius(f"r must be a positive finite number, got {r!r}")
    if prob.radius_hint is not None and r >= prob.radius_hint:
        raise InvalidRadius(f"r = {r!r} must stay below radius_hint = {prob.radius_hint!r}")
    K = prob.K if K is None else K
    alpha = prob.alpha
    gap = abs(roots.s1 - roots.s2)
    N = int(math.floor(gap)) + 1
    c = np.abs(recurrence(prob, roots.s1, max(K, N - 1)).coeffs)
    log_r = math.log(r)
    n_pq = max(len(prob.p), len(prob.q), 1)
    weights = np.exp(np.arange(n_pq) * alpha * log_r)
    M = max(float(np.max(np.abs(prob.coeff_array("p", n_pq)) * weights)),
            float(np.max(np.abs(prob.coeff_array("q", n_pq)) * weights)),
            1e-300)
    seed = c[:N] * np.exp(np.arange(N) * alpha * log_r)
    shift = alpha if shifted_weight else 1.0
    D = kernels.majorant_scaled(seed, M, alpha, abs(roots.s1), gap, shift, K + 1)
    with np.errstate(over="ignore"):
        C = D * np.exp(-np.arange(K + 1) * alpha * log_r)
    C[:N] = c[:N]
    return MajorantTrace(r, alpha, M, N, C, D, c[:K + 1], shifted_weight)
