"""Truncated fractional power series in u = (x - x0)**alpha.

A :class:`FracSeries` stands for ``sum_{k=0..K} c_k (x - x0)**((k + base) * alpha)``.
The base is any real number, measured in alpha-steps, so a series may start at
a negative or non-integer multiple of alpha. Values are immutable.

Coefficients are float64. An object array of mpmath numbers is also accepted;
every operation below then keeps that precision (used where a computation
cancels too heavily for doubles).

Conformable derivative and antiderivative act termwise:

    T_a (x - x0)**(m a) = m a (x - x0)**((m - 1) a)
    I_a (x - x0)**(m a) = (x - x0)**((m + 1) a) / ((m + 1) a),   m != -1
    I_a (x - x0)**(-a)  = ln(x - x0)

A :class:`LogSolution` carries ``C ln(x - x0) * log_part + power_part``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath
import numpy as np

from . import kernels
from .errors import (DomainError, IncompatibleSeries, NonPositiveLeadingPower,
                     ZeroLeadingCoefficient)

# tolerance for deciding that two bases sit on the same integer lattice
LATTICE_TOL = 1e-9


def _lattice_offset(a: float, b: float) -> int:
    d = a - b
    n = round(d)
    if abs(d - n) > LATTICE_TOL:
        raise IncompatibleSeries(f"base offset {d!r} is not an integer number of alpha-steps")
    return int(n)


@dataclass(frozen=True, eq=False)
class FracSeries:
    x0: float
    alpha: float
    base: float
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha!r}")
        if getattr(self.coeffs, "dtype", None) == object:
            c = np.array(self.coeffs, dtype=object).reshape(-1)
            finite = all(mpmath.isfinite(v) for v in c)
        else:
            c = np.array(self.coeffs, dtype=np.float64).reshape(-1) + 0.0  # drops -0.0
            finite = bool(np.all(np.isfinite(c)))
        if c.size == 0:
            raise ValueError("a series needs at least one coefficient")
        if not finite:
            raise ValueError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "x0", float(self.x0))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "base", float(self.base))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, x0, alpha, K=0, base=0.0) -> "FracSeries":
        return cls(x0, alpha, base, np.zeros(K + 1))

    @classmethod
    def monomial(cls, x0, alpha, power, coeff=1.0) -> "FracSeries":
        """``coeff * (x - x0)**(power * alpha)`` as a one-term series."""
        return cls(x0, alpha, power, [coeff])

    def _new(self, base, coeffs) -> "FracSeries":
        return FracSeries(self.x0, self.alpha, base, coeffs)

    # -- structure ------------------------------------------------------------

    @property
    def K(self) -> int:
        return self.coeffs.size - 1

    @property
    def top(self) -> float:
        """Exponent (in alpha-steps) of the last retained term."""
        return self.base + self.K

    @property
    def extended(self) -> bool:
        return self.coeffs.dtype == object

    def to_float(self) -> "FracSeries":
        if not self.extended:
            return self
        return self._new(self.base, np.array([float(v) for v in self.coeffs]))

    def to_mp(self) -> "FracSeries":
        """Exact conversion to mpmath coefficients (precision set by the caller's context)."""
        if self.extended:
            return self
        return self._new(self.base, np.array([mpmath.mpf(float(v)) for v in self.coeffs], dtype=object))

    @property
    def normalized(self) -> bool:
        return self.coeffs[0] != 0.0

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def coeff_at(self, power: float) -> float:
        """Coefficient of the term with exponent ``power`` alpha-steps (0 if absent)."""
        k = _lattice_offset(power, self.base)
        return float(self.coeffs[k]) if 0 <= k <= self.K else 0.0

    def check_compatible(self, other: "FracSeries"):
        if self.x0 != other.x0 or self.alpha != other.alpha:
            raise IncompatibleSeries(
                f"(x0, alpha) mismatch: ({self.x0}, {self.alpha}) vs ({other.x0}, {other.alpha})")

    def truncate(self, K: int) -> "FracSeries":
        if K < 0:
            raise ValueError("truncation order must be non-negative")
        if K >= self.K:
            return self.pad(K)
        return self._new(self.base, self.coeffs[:K + 1])

    def pad(self, K: int) -> "FracSeries":
        """Extend with zero coefficients up to order ``K`` (never shortens)."""
        if K <= self.K:
            return self
        return self._new(self.base, np.concatenate([self.coeffs, np.zeros(K - self.K, dtype=self.coeffs.dtype)]))

    def rebase(self, base: float) -> "FracSeries":
        """Same series expressed from a lower lattice base, zero-padding the front."""
        k = _lattice_offset(self.base, base)
        if k < 0:
            raise IncompatibleSeries("can only rebase downward")
        if k == 0:
            return self._new(base, self.coeffs)
        return self._new(base, np.concatenate([np.zeros(k, dtype=self.coeffs.dtype), self.coeffs]))

    def trim(self) -> "FracSeries":
        """Drop leading zero coefficients, raising the base accordingly."""
        nz = np.flatnonzero(self.coeffs)
        if nz.size == 0 or nz[0] == 0:
            return self
        return self._new(self.base + int(nz[0]), self.coeffs[nz[0]:])

    def shift(self, steps: float) -> "FracSeries":
        """Multiply by ``(x - x0)**(steps * alpha)``."""
        return self._new(self.base + steps, self.coeffs)

    def scale(self, a: float) -> "FracSeries":
        return self._new(self.base, a * self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, other.scale(-1.0))

    def __neg__(self):
        return self.scale(-1.0)

    def __mul__(self, other):
        if isinstance(other, FracSeries):
            return mul(self, other)
        return self.scale(float(other))

    __rmul__ = __mul__

    def __call__(self, x):
        return eval_series(self, x)

    def deriv(self) -> "FracSeries":
        return conformable_deriv(self)

    def __repr__(self):
        return (f"FracSeries(x0={self.x0!r}, alpha={self.alpha!r}, base={self.base!r}, "
                f"coeffs={self.coeffs.tolist()!r})")


def add(f: FracSeries, g: FracSeries) -> FracSeries:
    """Coefficientwise sum after aligning both series to the lower base.

    Coefficients past a series' last retained term are read as zero, so the
    result runs up to the larger of the two top exponents.
    """
    f.check_compatible(g)
    lo, hi = (f, g) if f.base <= g.base else (g, f)
    off = _lattice_offset(hi.base, lo.base)
    n = max(lo.K, hi.K + off) + 1
    out = np.zeros(n, dtype=np.result_type(lo.coeffs, hi.coeffs))
    out[:lo.K + 1] += lo.coeffs
    out[off:off + hi.K + 1] += hi.coeffs
    return lo._new(lo.base, out)


def mul(f: FracSeries, g: FracSeries) -> FracSeries:
    """Cauchy product, truncated to ``min(f.K, g.K)``."""
    f.check_compatible(g)
    n = min(f.K, g.K) + 1
    return f._new(f.base + g.base, kernels.cauchy(f.coeffs, g.coeffs, n))


def reciprocal(f: FracSeries, K: int | None = None) -> FracSeries:
    """Series g with f*g == 1 through order K (default f.K)."""
    if f.coeffs[0] == 0.0:
        raise ZeroLeadingCoefficient("reciprocal needs a nonzero leading coefficient")
    n = (f.K if K is None else K) + 1
    return f._new(-f.base, kernels.reciprocal(f.coeffs, n))


def _is_int_power(t: float) -> bool:
    return abs(t - round(t)) <= LATTICE_TOL


def _lattice_factors(f: FracSeries, m: np.ndarray) -> np.ndarray:
    # m * alpha, formed at the series' own precision
    if not f.extended:
        return m * f.alpha
    a = mpmath.mpf(f.alpha)
    return np.array([mpmath.mpf(float(v)) * a for v in m], dtype=object)


def conformable_deriv(f: FracSeries) -> FracSeries:
    """Termwise power rule; a term with exponent exactly zero vanishes."""
    m = f.base + np.arange(f.K + 1)
    m[np.abs(m) <= LATTICE_TOL] = 0.0
    return f._new(f.base - 1.0, _lattice_factors(f, m) * f.coeffs)


def conformable_antideriv(f: FracSeries) -> tuple[FracSeries, float]:
    """Termwise antiderivative with zero integration constant.

    Returns ``(series, log_coeff)``; the ``(x - x0)**(-alpha)`` term integrates
    to ``log_coeff * ln(x - x0)`` and is zeroed in the returned series.
    """
    m = f.base + np.arange(f.K + 1) + 1.0
    is_log = np.abs(m) <= LATTICE_TOL
    log_coeff = f.coeffs[is_log].sum() if is_log.any() else 0.0
    if not f.extended:
        log_coeff = float(log_coeff)
    m[is_log] = 1.0
    out = f.coeffs / _lattice_factors(f, m)
    out[is_log] = 0.0
    return f._new(f.base + 1.0, out), log_coeff


def series_exp(g: FracSeries, K: int | None = None) -> FracSeries:
    """exp(g) for g holding only positive integer alpha-step powers.

    Result has base 0 and leading coefficient 1. ``K`` defaults to the top
    exponent of ``g``; coefficients of ``g`` past its last term count as zero.
    """
    if g.is_zero():
        return g._new(0.0, np.eye(1, (g.K if K is None else K) + 1).ravel())
    t = g.trim()
    if not _is_int_power(t.base):
        raise IncompatibleSeries("series_exp needs integer alpha-step powers")
    lead = int(round(t.base))
    if lead < 1:
        raise NonPositiveLeadingPower(f"exp argument has a term at power {lead} (need >= 1)")
    n = (int(round(t.top)) if K is None else K) + 1
    h = np.zeros(max(n, 1), dtype=t.coeffs.dtype)
    upto = min(n, lead + t.K + 1)
    h[lead:upto] = t.coeffs[:upto - lead]
    return g._new(0.0, kernels.exp_series(h, n))


def _check_domain(x0: float, x: float) -> float:
    d = float(x) - x0
    if not d > 0.0:
        raise DomainError(f"x = {x!r} must exceed x0 = {x0!r}")
    return d


def eval_series(f: FracSeries, x: float) -> float:
    d = _check_domain(f.x0, x)
    u = d ** f.alpha
    return float(kernels.horner(f.coeffs, u)) * u ** f.base


@dataclass(frozen=True, eq=False)
class LogSolution:
    log_coeff: float
    log_part: FracSeries
    power_part: FracSeries

    def __post_init__(self):
        self.log_part.check_compatible(self.power_part)
        object.__setattr__(self, "log_coeff", float(self.log_coeff))

    @classmethod
    def plain(cls, f: FracSeries) -> "LogSolution":
        return cls(0.0, FracSeries.zero(f.x0, f.alpha), f)

    @property
    def x0(self):
        return self.power_part.x0

    @property
    def alpha(self):
        return self.power_part.alpha

    @property
    def has_log(self) -> bool:
        return self.log_coeff != 0.0 and not self.log_part.is_zero()

    def scale(self, a: float) -> "LogSolution":
        return LogSolution(self.log_coeff * a, self.log_part, self.power_part.scale(a))

    def __call__(self, x):
        return eval_log(self, x)


def eval_log(y: LogSolution, x: float) -> float:
    val = eval_series(y.power_part, x)
    if y.log_coeff != 0.0:
        d = _check_domain(y.x0, x)
        val += y.log_coeff * math.log(d) * eval_series(y.log_part, x)
    return val


def log_conformable_deriv(y: LogSolution) -> LogSolution:
    """T_a(C ln * f + g) = C ln * T_a f + (C (x-x0)**-a f + T_a g)."""
    y.log_part.check_compatible(y.power_part)
    power = conformable_deriv(y.power_part)
    if y.log_coeff == 0.0:
        return LogSolution(0.0, y.log_part, power)
    extra = y.log_part.shift(-1.0).scale(y.log_coeff)
    return LogSolution(y.log_coeff, conformable_deriv(y.log_part), add(power, extra))
