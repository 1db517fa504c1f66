"""Point classification for sequential conformable equations.

An equation ``T^n y + a_{n-1} T^{n-1} y + ... + a_0 y = 0`` is alpha-ordinary at
x0 when every a_k is a series in natural powers of (x - x0)**alpha, regular
alpha-singular when it is not ordinary but each (x - x0)**((n-k) alpha) a_k is,
and essential otherwise. Coefficients are given as finite Laurent-type series
in alpha-steps and are taken to be exact.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import IncompatibleSeries


class PointClass(enum.Enum):
    ALPHA_ORDINARY = "alpha-ordinary"
    REGULAR_ALPHA_SINGULAR = "regular-alpha-singular"
    ESSENTIAL_ALPHA_SINGULAR = "essential-alpha-singular"

    def __str__(self):
        return self.value


@dataclass(frozen=True, eq=False)
class LaurentAlphaSeries:
    """``sum_i coeffs[i] (x - x0)**((min_step + i) alpha)``."""
    x0: float
    alpha: float
    min_step: int
    coeffs: tuple = field(default=())

    def __post_init__(self):
        if not (0.0 < self.alpha <= 1.0):
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha!r}")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        object.__setattr__(self, "min_step", int(self.min_step))

    def leading_step(self) -> int | None:
        """Step index of the first nonzero coefficient, None for the zero series."""
        nz = np.flatnonzero(np.asarray(self.coeffs, dtype=float))
        return None if nz.size == 0 else self.min_step + int(nz[0])

    def shifted(self, steps: int) -> "LaurentAlphaSeries":
        return LaurentAlphaSeries(self.x0, self.alpha, self.min_step + steps, self.coeffs)

    def scaled(self, a: float) -> "LaurentAlphaSeries":
        return LaurentAlphaSeries(self.x0, self.alpha, self.min_step, [a * c for c in self.coeffs])


def pole_order(f: LaurentAlphaSeries) -> int:
    lead = f.leading_step()
    return 0 if lead is None else max(0, -lead)


def classify_coefficients(coeffs: Sequence[LaurentAlphaSeries]) -> PointClass:
    """Classify from the monic coefficients a_0..a_{n-1} of an order-n alpha equation."""
    if not coeffs:
        raise ValueError("need at least one coefficient")
    first = coeffs[0]
    for a in coeffs[1:]:
        if a.x0 != first.x0 or a.alpha != first.alpha:
            raise IncompatibleSeries("coefficients disagree on (x0, alpha)")
    n = len(coeffs)
    orders = [pole_order(a) for a in coeffs]
    if all(o == 0 for o in orders):
        return PointClass.ALPHA_ORDINARY
    if all(o <= n - k for k, o in enumerate(orders)):
        return PointClass.REGULAR_ALPHA_SINGULAR
    return PointClass.ESSENTIAL_ALPHA_SINGULAR


def classify_point(P: LaurentAlphaSeries, Q: LaurentAlphaSeries) -> PointClass:
    """Classify x0 for ``T T y + P T y + Q y = 0``."""
    return classify_coefficients([Q, P])


def to_monic(prob) -> tuple[LaurentAlphaSeries, LaurentAlphaSeries]:
    """Divide the order-2 alpha equation through by (x - x0)**(2 alpha)."""
    P = LaurentAlphaSeries(prob.x0, prob.alpha, -1, prob.p)
    Q = LaurentAlphaSeries(prob.x0, prob.alpha, -2, prob.q)
    return P, Q


def classify_problem(prob) -> PointClass:
    return classify_point(*to_monic(prob))
