from fractions import Fraction as F
import math
import random

import mpmath
import pytest
import sympy

from apostol_bernoulli.apostol import (
    BIVARIATE_ROUTES,
    LAMBDA_ROUTES,
    BetaBivariate,
    BetaLambda,
    F_negative,
    beta_bivariate,
    beta_diff_a,
    beta_difference_check,
    beta_integrate,
    beta_lambda,
    beta_shift,
    beta_special_values,
    lerch_negative,
    mirimanoff_identity,
)
from apostol_bernoulli.errors import ConsistencyError, DomainError, PoleError
from apostol_bernoulli.exact import BetaPolynomial, Polynomial, RationalFunction

X = Polynomial.x()
LAM = RationalFunction.variable()


def generating_series(n, a, lam):
    """n! [z^n] z e^(az)/(lam e^z - 1), by exact power-series division at a rational point."""
    # denominator: (lam - 1) + lam * sum_{k>=1} z^k/k!
    d = [lam - 1] + [lam / math.factorial(k) for k in range(1, n + 1)]
    inv = [1 / d[0]]
    for j in range(1, n + 1):
        inv.append(-sum(d[k] * inv[j - k] for k in range(1, j + 1)) / d[0])
    num = [F(0)] + [a ** (k - 1) / math.factorial(k - 1) for k in range(1, n + 1)]  # z e^(az)
    coeff = sum(num[k] * inv[n - k] for k in range(n + 1))
    return coeff * math.factorial(n)


def test_small_index_lambda_values():
    assert beta_lambda(0).value == 0
    assert beta_lambda(1).value == 1 / (LAM - 1)
    assert beta_lambda(2).value == RationalFunction(-2 * X, (X - 1) ** 2)
    assert beta_lambda(3).value == RationalFunction(3 * X**2 + 3 * X, (X - 1) ** 3)


def test_lambda_values_from_symbolic_expansion():
    # frozen from a sympy series expansion of the generating function
    assert beta_lambda(4).value == RationalFunction(-4 * (X**3 + 4 * X**2 + X), (X - 1) ** 4)
    assert beta_lambda(5).value == RationalFunction(5 * (X**4 + 11 * X**3 + 11 * X**2 + X), (X - 1) ** 5)


def test_small_index_bivariate_values():
    assert beta_bivariate(0).value == BetaPolynomial()
    assert beta_bivariate(1).value == BetaPolynomial([1 / (LAM - 1)])
    assert beta_bivariate(2).value == BetaPolynomial([RationalFunction(-2 * X, (X - 1) ** 2), 2 / (LAM - 1)])


def test_bivariate_three_from_symbolic_expansion():
    expected = BetaPolynomial([
        RationalFunction(3 * (X**2 + X), (X - 1) ** 3),
        RationalFunction(-6 * X, (X - 1) ** 2),
        3 / (LAM - 1),
    ])
    assert beta_bivariate(3).value == expected


@pytest.mark.parametrize("n", range(0, 21))
def test_all_routes_agree(n):
    ref = beta_lambda(n, "recursion").value
    for route in LAMBDA_ROUTES:
        assert beta_lambda(n, route).value == ref, route
    ref2 = beta_bivariate(n, "convolution").value
    for route in BIVARIATE_ROUTES:
        assert beta_bivariate(n, route).value == ref2, route


def test_generating_function_oracle():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(0, 12)
        a = F(rng.randint(-6, 6), rng.randint(1, 4))
        lam = F(rng.randint(-9, 9), rng.randint(1, 5))
        if lam == 1:
            continue
        assert beta_bivariate(n).value.evaluate(a, lam) == generating_series(n, a, lam)
        assert beta_lambda(n).value(lam) == generating_series(n, F(0), lam)


def test_sympy_symbolic_spot_check():
    z, a, lam = sympy.symbols("z a lam")
    series = sympy.series(z * sympy.exp(a * z) / (lam * sympy.exp(z) - 1), z, 0, 5).removeO()
    for n in range(5):
        coeff = sympy.factorial(n) * series.coeff(z, n)
        for av, lv in ((F(1, 3), F(2)), (F(-2), F(1, 5)), (F(5, 2), F(-3, 4))):
            expected = coeff.subs({a: sympy.Rational(av.numerator, av.denominator), lam: sympy.Rational(lv.numerator, lv.denominator)})
            expected = sympy.nsimplify(sympy.simplify(expected))
            assert beta_bivariate(n).value.evaluate(av, lv) == F(int(expected.p), int(expected.q))


def test_pole_order():
    for n in range(1, 21):
        assert beta_lambda(n).value.denominator == (X - 1) ** n


def test_invariant_guards():
    with pytest.raises(ConsistencyError):
        BetaLambda(0, 1 / (LAM - 1))
    with pytest.raises(ConsistencyError):
        BetaLambda(2, 1 / (LAM - 2))
    with pytest.raises(ConsistencyError):
        BetaBivariate(2, BetaPolynomial([1 / (LAM - 1)]))
    with pytest.raises(DomainError):
        beta_lambda(3, "bogus")
    with pytest.raises(DomainError):
        beta_lambda(-1)


def test_diff_in_a():
    assert beta_diff_a(2, 1) == BetaPolynomial([2 / (LAM - 1)])
    assert beta_diff_a(2, 1) == beta_bivariate(1).value * 2
    assert beta_diff_a(5, 0) == beta_bivariate(5).value
    assert beta_diff_a(3, 3) == BetaPolynomial()
    for n in range(16):
        for p in range(n + 1):
            beta_diff_a(n, p)
    with pytest.raises(DomainError):
        beta_diff_a(2, 3)


def test_diff_in_lambda_does_not_hold():
    d = BetaPolynomial(c.derivative() for c in beta_bivariate(2).value.coefficients)
    assert d != beta_bivariate(1).value * 2


def test_shift():
    for n in range(8):
        assert beta_shift(n, 0) == beta_bivariate(n).value
    s = beta_shift(2, 1)
    assert s[0] == beta_bivariate(2).value(1)
    assert s[0] == RationalFunction(Polynomial([-2]), (X - 1) ** 2)
    for b in (F(5), F(-3, 7)):
        assert beta_shift(1, b) == BetaPolynomial([1 / (LAM - 1)])
    for n in range(16):
        for b in (1, -1, F(1, 2), 3):
            beta_shift(n, b)


def test_integrate():
    assert beta_integrate(3, F(2), F(2)) == 0
    assert beta_integrate(1, 0, 1) == 1 / (LAM - 1)
    b3 = beta_bivariate(3).value
    assert beta_integrate(2, 0, 1) == (b3(1) - b3(0)) / 3
    for n in range(1, 16):
        for a, b in ((0, 1), (-1, 2), (F(1, 2), F(3, 2))):
            beta_integrate(n, a, b)


def test_difference_equation():
    left, right = beta_difference_check(1)
    assert left == right == BetaPolynomial([RationalFunction(Polynomial([1]))])
    left, right = beta_difference_check(2)
    assert left == right == BetaPolynomial([0, 2])
    left, right = beta_difference_check(3)
    assert left == right == BetaPolynomial([0, 0, 3])
    for n in range(1, 21):
        left, right = beta_difference_check(n)
        assert left == right


def test_mirimanoff_identity():
    left, right = mirimanoff_identity(1, 1)
    assert left == right == LAM / (LAM - 1)
    for n in range(1, 11):
        for m in range(1, 6):
            left, right = mirimanoff_identity(n, m)
            assert left == right, (n, m)
    left, right = mirimanoff_identity(2, 1)
    assert left == right == beta_lambda(2).value


def test_special_values():
    r1 = beta_special_values(1)
    assert r1.passed and r1.tag == "special-value"
    for n in (2, 5, 20):
        r = beta_special_values(n)
        assert r.passed and r.tag == "special-value"


def test_lerch_negative_examples():
    for a in (F(0), F(1), F(7, 3)):
        assert lerch_negative(F(1, 2), 0, a) == 2
    assert lerch_negative(F(1, 2), 1, 1) == 4
    # sum (n + 1/2)^2 3^-n by splitting into three power sums
    assert lerch_negative(F(1, 3), 2, F(1, 2)) == F(21, 8)
    with pytest.raises(PoleError, match="pole at lambda=1"):
        lerch_negative(1, 1, 1)


def test_lerch_negative_against_mpmath():
    with mpmath.workdps(30):
        for lam in (F(1, 5), F(1, 2), F(4, 5), F(-1, 3)):
            for m in range(7):
                for a in (F(1, 3), F(1), F(7, 2)):
                    exact = lerch_negative(lam, m, a)
                    ref = mpmath.lerchphi(mpmath.mpf(lam.numerator) / lam.denominator, -m, mpmath.mpf(a.numerator) / a.denominator)
                    got = mpmath.mpf(exact.numerator) / exact.denominator
                    assert abs(got - ref) <= mpmath.mpf(10) ** -20 * max(1, abs(ref))


def test_F_negative_examples():
    # lambda/(1 - lambda) at lambda = i
    assert F_negative(F(1, 4), 0) == pytest.approx((-1 + 1j) / 2, abs=1e-14)
    assert F_negative(F(1, 2), 0) == pytest.approx(-0.5, abs=1e-14)
    lam = 1j
    assert F_negative(F(1, 4), 1) == pytest.approx(lam / (lam - 1) ** 2, abs=1e-14)
    with pytest.raises(DomainError):
        F_negative(F(2), 1)


def test_F_negative_against_polylog():
    # F(x, -m) = Li_{-m}(e^(2 pi i x))
    for x in (F(1, 3), F(1, 4), F(1, 5), F(2, 7)):
        for m in range(7):
            ref = complex(mpmath.polylog(-m, mpmath.expjpi(2 * mpmath.mpf(x.numerator) / x.denominator)))
            assert abs(F_negative(x, m) - ref) <= 1e-9 * max(1.0, abs(ref)), (x, m)
