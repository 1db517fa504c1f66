import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import bessel
from oracles import log_ansatz
from fracfrob.errors import ComplexRoots, InvalidRadius, Resonance, ValidationError
from fracfrob.frobenius import (GAP_TOL, ProblemSpec, RootCase, indicial, indicial_poly, majorant,
                                operator_residual, recurrence, reduction_of_order,
                                shifted_poly, solve)


def bessel_j_normalized(nu, K):
    """c_{2m} of J_nu scaled to c_0 = 1, from the gamma-function series."""
    c = np.zeros(K + 1)
    for m in range(K // 2 + 1):
        c[2 * m] = (-1) ** m * math.gamma(nu + 1) / (math.factorial(m) * math.gamma(m + nu + 1) * 4 ** m)
    return c


# -- indicial -----------------------------------------------------------------

def test_indicial_examples():
    r = indicial(0.0, 0.0, 1.0)
    assert (r.s1, r.s2, r.case, r.N) == (1.0, 0.0, RootCase.INTEGER_GAP, 1)
    r = indicial(-0.25, 0.0, 0.5)
    assert r.case is RootCase.DISTINCT_NON_INTEGER_GAP
    assert r.s1 == pytest.approx(1.5, abs=1e-15) and r.s2 == pytest.approx(0.0, abs=1e-15)
    for a in (0.2, 0.5, 1.0):
        r = indicial(a, -(a / 3) ** 2, a)
        assert r.case is RootCase.DISTINCT_NON_INTEGER_GAP
        assert r.s1 == pytest.approx(1 / 3, rel=1e-14) and r.s2 == pytest.approx(-1 / 3, rel=1e-14)
    r = indicial(1.0, 0.0, 1.0)
    assert r.case is RootCase.EQUAL_ROOTS and r.N == 0 and r.label() == "equal-roots"
    assert indicial(1.0, -0.25, 1.0).label() == "integer-gap(1)"


def test_indicial_errors():
    with pytest.raises(ComplexRoots):
        indicial(0.0, 1.0, 1.0)
    with pytest.raises(ValidationError):
        indicial(0.0, 0.0, 0.0)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 1.0), st.floats(-5, 5), st.floats(-5, 5))
def test_indicial_root_residual_and_vieta(a, p0, q0):
    try:
        r = indicial(p0, q0, a)
    except ComplexRoots:
        assert (a * p0 - a * a) ** 2 - 4 * a * a * q0 < 0
        return
    scale = max(1.0, a * a, abs(a * p0), abs(q0))
    if r.case is RootCase.DISTINCT_NON_INTEGER_GAP:
        for s in (r.s1, r.s2):
            assert abs(indicial_poly(s, p0, q0, a)) <= 1e-12 * scale * max(1.0, s * s)
    assert r.s1 >= r.s2
    assert r.s1 + r.s2 == pytest.approx(1 - p0 / a, rel=1e-12, abs=1e-12)
    # snapping moves the gap by at most GAP_TOL, hence the product by about gap * GAP_TOL
    slack = 1e-12 if r.case is RootCase.DISTINCT_NON_INTEGER_GAP else GAP_TOL * (1.0 + r.gap)
    assert r.s1 * r.s2 == pytest.approx(q0 / a ** 2, rel=1e-12, abs=slack * max(1.0, r.s1 ** 2))


# -- recurrence ---------------------------------------------------------------

def test_shifted_poly_examples():
    prob = ProblemSpec(0, 1.0, [1, 0], [-1 / 9, 0, 1])
    assert all(shifted_poly(2, s, prob) == 1.0 for s in (-2.0, 0.0, 0.3, 7.0))
    assert shifted_poly(7, 1.3, prob) == 0.0
    prob = ProblemSpec(0, 0.5, [1.0, 3.0], [0.0, -2.5])
    assert shifted_poly(1, 0.0, prob) == -2.5
    assert shifted_poly(1, 2.0, prob) == 3.0 * 0.5 * 2.0 - 2.5


def test_recurrence_bessel_third():
    c = recurrence(bessel(1 / 3), 1 / 3, 30)
    assert c.base == pytest.approx(1 / 3)
    assert c.coeffs[1] == 0.0
    assert c.coeffs[2] == pytest.approx(-3 / 16, rel=1e-15)
    assert c.coeffs[4] == pytest.approx(9 / 896, rel=1e-15)
    np.testing.assert_allclose(c.coeffs, bessel_j_normalized(1 / 3, 30), rtol=1e-12, atol=0)


def test_recurrence_euler_type_is_single_term():
    prob = ProblemSpec(0, 0.5, [-0.25], [0.0])
    c = recurrence(prob, 1.5, 10)
    assert c.coeffs[0] == 1.0 and not np.any(c.coeffs[1:])


def test_recurrence_resonance():
    with pytest.raises(Resonance) as exc:
        recurrence(bessel(1.0), -1.0, 10)
    assert exc.value.k == 2


# -- solve / reduction of order ----------------------------------------------

def test_solve_equal_roots_bessel_zero():
    r = solve(bessel(0.0, K=12))
    assert r.roots.case is RootCase.EQUAL_ROOTS
    np.testing.assert_allclose(r.y1.coeffs[:5], [1, 0, -1 / 4, 0, 1 / 64], rtol=1e-15)
    assert r.y2.log_coeff == 1.0
    assert r.y2.log_part is r.y1
    pp = r.y2.power_part
    assert pp.base == 1.0
    assert pp.coeff_at(2) == pytest.approx(1 / 4, rel=1e-14)
    assert pp.coeff_at(4) == pytest.approx(-3 / 128, rel=1e-14)


def test_solve_integer_gap_zero_log():
    r = solve(bessel(0.5, K=12))
    assert r.roots.label() == "integer-gap(1)"
    assert abs(r.y2.log_coeff) < 1e-12
    b = r.y2.power_part.coeffs
    assert r.y2.power_part.base == -0.5
    assert b[0] == pytest.approx(-1.0, rel=1e-15)   # -c0 / (N alpha)
    # -x^{-1/2} cos x
    np.testing.assert_allclose(b[:9], -np.array([1, 0, -1 / 2, 0, 1 / 24, 0, -1 / 720, 0, 1 / 40320]),
                               rtol=1e-13, atol=1e-16)


def test_solve_euler_type():
    r = solve(ProblemSpec(0, 0.5, [-0.25], [0.0], K=5))
    assert r.roots.case is RootCase.DISTINCT_NON_INTEGER_GAP
    assert r.y1.base == pytest.approx(1.5) and r.y1.coeffs.tolist() == [1, 0, 0, 0, 0, 0]
    assert r.y2.log_coeff == 0.0
    assert r.y2.power_part.base == pytest.approx(0.0, abs=1e-15)
    assert r.y2.power_part.coeffs.tolist() == [1, 0, 0, 0, 0, 0]


def test_reduction_of_order_euler_gives_constant():
    prob = ProblemSpec(0, 0.5, [-0.25], [0.0])
    y2 = reduction_of_order(prob, recurrence(prob, 1.5, 6))
    assert y2.log_coeff == 0.0
    assert y2.power_part.base == pytest.approx(0.0, abs=1e-15)
    # integrand x^{0.25 - 1.5}: I_a gives x^{-0.75} / (-1.5 * 0.5); times x^{0.75}
    np.testing.assert_allclose(y2.power_part.coeffs, [-4 / 3, 0, 0, 0, 0, 0, 0], atol=1e-15)


def test_reduction_of_order_requires_normalized_y1():
    prob = bessel(0.0)
    with pytest.raises(ValueError):
        reduction_of_order(prob, recurrence(prob, 0.0, 5).scale(2.0))


@pytest.mark.parametrize("nu,N", [(0, 0), (0.5, 1), (1, 2), (1.5, 3), (2, 4)])
def test_log_cases_match_coefficient_matching_oracle(nu, N):
    K = 16
    r = solve(bessel(nu, K=K))
    assert r.roots.N == N
    s1, s2 = F(nu).limit_denominator(), -F(nu).limit_denominator()
    p, q = [1], [-F(nu).limit_denominator() ** 2, 0, 1]
    pp = r.y2.power_part
    if N == 0:
        C, b = log_ansatz(p, q, s1, s2, K + 2, b0=0)
        ours = pp.coeffs
        ref = [float(v) for v in b[1:K + 2]]
    else:
        C, b = log_ansatz(p, q, s1, s2, K + 1, b0=F(-1, N), bN=F(pp.coeffs[N]))
        ours = pp.coeffs
        ref = [float(v) for v in b]
    assert r.y2.log_coeff == pytest.approx(float(C), rel=1e-12, abs=1e-14)
    np.testing.assert_allclose(ours, ref, rtol=1e-12, atol=1e-300)


def test_operator_residual_cancels():
    for nu in (0.0, 0.5, 1.0, 1 / 3):
        prob = bessel(nu, alpha=0.6, K=20)
        r = solve(prob)
        for y in (r.y1_solution, r.y2):
            res, top = operator_residual(prob, y)
            scale, _ = operator_residual(prob, y, absolute=True)
            for part, sc in ((res.power_part, scale.power_part), (res.log_part, scale.log_part)):
                n = int(round(top - part.base)) + 1
                assert np.all(np.abs(part.coeffs[:n]) <= 1e-12 * sc.coeffs[:n] + 1e-300)


def test_problem_validation():
    with pytest.raises(ValidationError):
        ProblemSpec(0, 1.5, [1], [1])
    with pytest.raises(ValidationError):
        ProblemSpec(0, 0.5, [1], [float("inf")])
    with pytest.raises(ValidationError):
        ProblemSpec(0, 0.5, [1], [1], K=0)
    with pytest.raises(ValidationError):
        ProblemSpec(0, 0.5, [1], [1], radius_hint=-1.0)


# -- majorant -----------------------------------------------------------------

def test_majorant_euler_trivially_dominates():
    prob = ProblemSpec(0, 0.5, [-0.25], [0.0])
    tr = majorant(prob, indicial(-0.25, 0.0, 0.5), 2.0, 20)
    assert tr.N == 2  # 1 <= 1.5 < 2
    assert tr.C[1] == 0.0  # |c_1| is a seed
    assert np.all(tr.C[tr.N:] > 0) and tr.dominates()
    assert not np.any(tr.abs_c[1:])


def test_majorant_bessel_and_ratio():
    prob = bessel(1 / 3)
    roots = indicial(prob.p0, prob.q0, prob.alpha)
    tr = majorant(prob, roots, 1.0, 220)
    assert tr.N == 1 and tr.M == 1.0
    assert np.all(tr.abs_c[:51] <= tr.C[:51])
    assert abs(tr.ratios[200] - 1.0) < 0.01


def test_majorant_scaling_in_r():
    prob = bessel(0.25, alpha=0.5, K=60)
    roots = indicial(prob.p0, prob.q0, prob.alpha)
    for r in (0.3, 2.0, 7.0):
        tr = majorant(prob, roots, r, 2000)
        assert tr.dominates()
        dev = np.abs(tr.ratios * r ** 0.5 - 1.0)
        # the approach to r^{-a} is slow and slower for large M / a
        assert dev[1999] < 0.01 and dev[1999] < dev[400] < dev[60]


def test_majorant_errors_and_shifted_weight():
    prob = bessel(1 / 3)
    roots = indicial(prob.p0, prob.q0, prob.alpha)
    with pytest.raises(InvalidRadius):
        majorant(prob, roots, 0.0)
    with pytest.raises(InvalidRadius):
        majorant(ProblemSpec(0, 1, [1], [0, 0, 1], radius_hint=1.0), roots, 1.5)
    a = 0.5
    prob = bessel(1 / 3, alpha=a, K=40)
    roots = indicial(prob.p0, prob.q0, a)
    valid = majorant(prob, roots, 1.0)
    shifted = majorant(prob, roots, 1.0, shifted_weight=True)
    assert shifted.shifted_weight and np.all(shifted.C[valid.N:] < valid.C[valid.N:])


@pytest.mark.parametrize("nu, a", [(1.0, 0.5), (0.5, 0.3), (2.0, 0.9), (1.0, 1.0)])
def test_integer_gap_leading_coefficient(nu, a):
    # reduction of order with W normalized to 1 gives b_0 = -1/(N a)
    r = solve(bessel(nu, a))
    N = r.roots.N
    assert r.y2.power_part.base == r.roots.s2
    assert r.y2.power_part.coeffs[0] == pytest.approx(-1.0 / (N * a), rel=1e-13)
