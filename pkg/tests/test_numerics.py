from fractions import Fraction as F
import math
import random

import mpmath
import numpy as np
import pytest
from scipy import integrate

from apostol_bernoulli.apostol import beta_lambda, lerch_negative
from apostol_bernoulli.combinatorics import bernoulli_polynomial
from apostol_bernoulli.errors import BudgetError, DomainError, PrecisionError
from apostol_bernoulli.exact import Polynomial
from apostol_bernoulli.numerics import (
    adaptive_quad,
    beta_integral_rep,
    bernoulli_limit_check,
    cot_consistency,
    exp_poly_tail,
    exp_rational,
    gauss_kronrod,
    hermite_phi,
    lerch_series,
    power_sum_series,
    series_transform,
)
from apostol_bernoulli.report import NOTED

X = Polynomial.x()


# --- quadrature engine ----------------------------------------------------


def test_gauss_kronrod_polynomial_exactness():
    rng = np.random.default_rng(3)
    for deg in (0, 5, 13, 21):
        c = rng.normal(size=deg + 1)
        f = np.polynomial.Polynomial(c)
        exact = f.integ()(2.0) - f.integ()(-1.0)
        k, g = gauss_kronrod(f, -1.0, 2.0)
        assert k == pytest.approx(exact, rel=1e-12, abs=1e-12)
        if deg <= 13:
            assert g == pytest.approx(exact, rel=1e-12, abs=1e-12)


def test_adaptive_quad_against_scipy():
    cases = [
        (lambda t: np.sin(5 * t) * np.exp(-t), 0.0, 12.0),
        (lambda t: np.sqrt(t), 0.0, 1.0),
        (lambda t: 1 / (1 + 25 * t * t), -1.0, 1.0),
    ]
    for f, a, b in cases:
        res = adaptive_quad(f, a, b, tol=1e-10)
        ref, _ = integrate.quad(f, a, b, epsabs=1e-13, limit=200)
        assert abs(res.value - ref) <= 1e-10
        assert res.error_estimate <= 1e-10
        assert res.evaluations % 15 == 0


def test_adaptive_quad_budget_error_carries_best():
    with pytest.raises(BudgetError) as info:
        adaptive_quad(lambda t: np.sqrt(np.abs(t - 0.3)), 0.0, 1.0, tol=1e-15, budget=200)
    best = info.value.best
    assert best.evaluations <= 200
    assert best.value == pytest.approx(integrate.quad(lambda t: np.sqrt(abs(t - 0.3)), 0, 1, points=[0.3])[0], abs=1e-3)


def test_exp_poly_tail_against_scipy():
    for shift, p, c, T in ((0.5, 0, 1.0, 2.0), (1.0, 3, 2 * math.pi, 1.5), (2.5, 6, 0.7, 4.0)):
        ref, _ = integrate.quad(lambda t: (shift + t) ** p * math.exp(-c * t), T, np.inf, epsabs=1e-14)
        assert exp_poly_tail(shift, p, c, T) == pytest.approx(ref, rel=1e-10)


# --- series ---------------------------------------------------------------


def test_lerch_series_examples():
    r0 = lerch_series(0.5, 0, 1.0)
    assert r0.value == pytest.approx(2.0, abs=1e-10)
    assert r0.tail_bound < 1e-10
    assert lerch_series(0.5, -1, 1.0).value == pytest.approx(4.0, abs=1e-10)
    r = lerch_series(F(1, 3), -2, F(1, 2), tol=1e-12)
    assert abs(r.value - float(lerch_negative(F(1, 3), 2, F(1, 2)))) <= 1e-12


def test_lerch_series_complex_and_positive_s():
    lam = 0.6 * complex(math.cos(1.0), math.sin(1.0))
    ref = complex(mpmath.lerchphi(lam, -2, 0.75))
    assert abs(lerch_series(lam, -2, 0.75, tol=1e-12).value - ref) <= 1e-11
    assert lerch_series(0.5, 2, 1.0, tol=1e-13).value == pytest.approx(float(mpmath.lerchphi(0.5, 2, 1)), rel=1e-12)


def test_lerch_series_domain_errors():
    with pytest.raises(DomainError):
        lerch_series(1.0, 0, 1.0)
    with pytest.raises(DomainError):
        lerch_series(0.5, 0, 0.0)
    with pytest.raises(DomainError):
        lerch_series(0.5, -1, 1.0, tol=0)


def test_lerch_series_grid_matches_exact():
    for lam in (F(1, 5), F(1, 2), F(4, 5)):
        for m in range(7):
            for a in (F(1, 3), F(1), F(7, 2)):
                exact = float(lerch_negative(lam, m, a))
                got = lerch_series(lam, -m, a, tol=1e-15).value
                assert abs(got - exact) <= 1e-12 * max(1.0, abs(exact))


def test_power_sum_examples():
    assert power_sum_series(0, 0.5).value == pytest.approx(2.0, abs=1e-10)
    assert power_sum_series(1, 0.5).value == pytest.approx(2.0, abs=1e-10)
    x = F(1, 3)
    expected = float((X**3 + 4 * X**2 + X)(x) / (1 - x) ** 4)
    assert power_sum_series(3, x, tol=1e-13).value == pytest.approx(expected, rel=1e-12)


def test_power_sum_grid():
    for n in range(11):
        for x in (F(1, 3), F(-1, 3), F(1, 2), F(-9, 10)):
            res = power_sum_series(n, x, tol=1e-13)
            assert res.tail_bound <= 1e-13
    with pytest.raises(DomainError):
        power_sum_series(2, 1.0)


def test_series_transform_examples():
    assert series_transform(Polynomial([1]), F(1, 2)) == (2, 2, 2)
    assert series_transform(X**2, F(1, 2)) == (6, 6, 6)
    a, b, c = series_transform(X**2 + X, F(1, 3))
    assert a == b == c == F(3, 2) + F(3, 4)


def test_series_transform_random_polynomials():
    rng = random.Random(11)
    for _ in range(50):
        d = rng.randint(0, 6)
        p = Polynomial(F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(d + 1))
        for x in (F(1, 2), F(-1, 2), F(1, 3)):
            a, b, c = series_transform(p, x)
            assert a == b == c
            # brute-force partial sum with an explicit tail allowance
            partial = sum(p(F(k)) * x**k for k in range(200))
            assert abs(float(partial - a)) < 1e-40


# --- integral representations --------------------------------------------


def test_hermite_examples():
    assert hermite_phi(0.5, 0, 1.0).value == pytest.approx(2.0, abs=1e-8)
    assert hermite_phi(0.5, -1, 1.0).value == pytest.approx(4.0, abs=1e-8)
    exact = lerch_negative(F(math.exp(-1)), 2, F(1, 2))
    assert hermite_phi(math.exp(-1), -2, 0.5).value == pytest.approx(float(exact), abs=1e-8)


def test_hermite_grid_against_series():
    for lam in (0.2, 0.5, 0.8):
        for s in (0, -1, -3):
            for a in (0.5, 1.0, 2.5):
                h = hermite_phi(lam, s, a)
                ser = lerch_series(lam, s, a, tol=1e-14).value
                assert abs(h.value - ser) <= 1e-7


def test_hermite_literal_integrals_against_scipy():
    lam, s, a = 0.5, -2, 1.5
    first, _ = integrate.quad(lambda t: lam**t * (a + t) ** (-s), 0, np.inf, epsabs=1e-13)
    second, _ = integrate.quad(
        lambda t: math.sin(s * math.atan(t / a) - t * math.log(lam)) * (a * a + t * t) ** (-s / 2) / math.expm1(2 * math.pi * t),
        0, 40, epsabs=1e-13, limit=200,
    )
    ref = 0.5 * a ** (-s) + first + 2 * second
    assert hermite_phi(lam, s, a, tol=1e-10).value == pytest.approx(ref, abs=1e-9)


def test_hermite_positive_s_exploratory():
    assert hermite_phi(0.5, 2, 1.0).value == pytest.approx(float(mpmath.lerchphi(0.5, 2, 1)), abs=1e-8)


def test_hermite_domain():
    with pytest.raises(DomainError):
        hermite_phi(1.0, 0, 1.0)
    with pytest.raises(DomainError):
        hermite_phi(0.5, 0, -1.0)


def test_beta_integral_rep_examples():
    for m, alpha in ((2, 1.0), (3, 0.5), (2, 2.0)):
        q = beta_integral_rep(m, alpha)
        exact = float(beta_lambda(m).value(F(math.exp(-alpha))))
        assert abs(q.value - exact) <= 1e-8
        assert not q.exploratory


def test_beta_integral_rep_grid_and_negative_alpha():
    for m in range(2, 7):
        for alpha in (0.5, 1.0, 2.0):
            q = beta_integral_rep(m, alpha)
            assert abs(q.value - q.reference) <= 1e-8
        q = beta_integral_rep(m, -1.0)
        assert q.exploratory
    with pytest.raises(DomainError):
        beta_integral_rep(1, 1.0)


def test_exp_rational_against_mpmath():
    with mpmath.workprec(260):
        for x in (F(1, 10), F(-1, 10000), F(7, 3), F(-5)):
            ref = mpmath.exp(mpmath.mpf(x.numerator) / x.denominator)
            got = exp_rational(x)
            got_mp = mpmath.mpf(got.numerator) / got.denominator
            assert abs(got_mp / ref - 1) < mpmath.mpf(2) ** -195


# --- limits ---------------------------------------------------------------


def test_limit_plain_target_passes():
    for m in range(1, 5):
        for a in (F(0), F(1, 2)):
            r = bernoulli_limit_check(m, a, target="B")
            assert r.passed, r.detail


def test_limit_scaled_target_matches_where_targets_coincide():
    assert bernoulli_limit_check(1, 0).passed
    assert bernoulli_limit_check(3, 0).passed
    assert bernoulli_limit_check(3, F(1, 2)).passed


def test_limit_scaled_target_offset_is_m_minus_one_times_B():
    r = bernoulli_limit_check(2, 0)
    assert not r.passed
    b2 = float(bernoulli_polynomial(2)(F(0)))
    assert r.witnesses["errors"][-1] == pytest.approx(b2, rel=1e-3)


def test_limit_float_precision_guard():
    assert bernoulli_limit_check(1, 0, precision="float", target="B").passed
    with pytest.raises(PrecisionError):
        bernoulli_limit_check(4, 0, precision="float", target="B")


def test_limit_bad_alphas():
    with pytest.raises(DomainError):
        bernoulli_limit_check(2, 0, alphas=(1e-2, 1e-1))


def test_cot_consistency():
    for x in (F(1, 3), F(1, 4), F(1, 5)):
        for m in range(1, 7):
            assert cot_consistency(x, m).status == "pass"
        assert cot_consistency(x, 0).status == NOTED
    with pytest.raises(DomainError):
        cot_consistency(F(1), 1)
