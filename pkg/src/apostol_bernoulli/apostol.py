"""Apostol-Bernoulli functions beta_n(lambda) and beta_n(a, lambda).

They are the coefficients of the exponential generating function

    z e^{az} / (lambda e^z - 1) = sum_n beta_n(a, lambda) z^n / n!

and beta_n(lambda) = beta_n(0, lambda).  Each is built by several
independent routes (Stirling numbers, geometric polynomials, Eulerian
polynomials, a linear recursion / binomial convolution), all of which
must agree exactly.  Differentiation in the identities below is with
respect to ``a``.
"""

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, pi

from .combinatorics import binomial, mirimanoff_polynomial, stirling2
from .errors import ConsistencyError, DomainError, PoleError
from .exact import BetaPolynomial, Polynomial, RationalFunction, _linear_power_root, as_scalar
from .polyfamilies import eulerian_poly, geometric_poly
from .report import check

__all__ = [
    "LAMBDA_ROUTES",
    "BIVARIATE_ROUTES",
    "BetaLambda",
    "BetaBivariate",
    "beta_lambda",
    "beta_bivariate",
    "beta_diff_a",
    "beta_shift",
    "beta_integrate",
    "beta_difference_check",
    "mirimanoff_identity",
    "beta_special_values",
    "lerch_negative",
    "F_negative",
]

LAMBDA_ROUTES = ("recursion", "stirling", "geometric", "eulerian")
BIVARIATE_ROUTES = ("convolution", "stirling", "geometric", "eulerian")

_X = Polynomial.x()
LAM = RationalFunction.variable()
_T = LAM / (1 - LAM)  # lambda / (1 - lambda)


def _divides_power_of_lam_minus_one(den, n):
    d = den.degree()
    if d == 0:
        return True
    return d <= n and _linear_power_root(den) == 1


@dataclass(frozen=True)
class BetaLambda:
    """beta_n(lambda) as a reduced rational function."""

    index: int
    value: RationalFunction

    def __post_init__(self):
        if self.index == 0 and self.value:
            raise ConsistencyError("beta_0(lambda) must vanish", self.value)
        if not _divides_power_of_lam_minus_one(self.value.denominator, self.index):
            raise ConsistencyError(f"denominator of beta_{self.index} does not divide (L-1)^n", self.value)

    def __call__(self, lam):
        return self.value(lam)


@dataclass(frozen=True)
class BetaBivariate:
    """beta_n(a, lambda) as a polynomial in ``a`` over rational functions in lambda."""

    index: int
    value: BetaPolynomial

    def __post_init__(self):
        n = self.index
        if n == 0:
            if self.value:
                raise ConsistencyError("beta_0(a, lambda) must vanish", self.value)
            return
        if self.value.degree() != n - 1:
            raise ConsistencyError(f"beta_{n}(a, lambda) must have degree {n - 1} in a", self.value)
        if self.value[n - 1] != n / (LAM - 1):
            raise ConsistencyError(f"top coefficient of beta_{n}(a, lambda) is not n/(L-1)", self.value)
        for c in self.value.coefficients:
            if not _divides_power_of_lam_minus_one(c.denominator, n):
                raise ConsistencyError(f"coefficient denominator of beta_{n} does not divide (L-1)^n", c)

    def __call__(self, a, lam=None):
        if lam is None:
            return self.value(a)
        return self.value.evaluate(a, lam)


def _check_index(n):
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"index must be a nonnegative integer, got {n!r}")


# --- beta_n(lambda) -------------------------------------------------------


def _stirling_sum(k):
    # sum_{j<k} S(k-1, j) j! t^j, expanded directly in rational functions
    return sum((_T**j * (stirling2(k - 1, j) * factorial(j)) for j in range(k)), RationalFunction())


def _lambda_stirling(k):
    if k == 0:
        return RationalFunction()
    return _stirling_sum(k) * k / (LAM - 1)


def _lambda_geometric(k):
    if k == 0:
        return RationalFunction()
    return geometric_poly(k - 1).compose(_T) * k / (LAM - 1)


def _lambda_eulerian(k):
    if k == 0:
        return RationalFunction()
    return RationalFunction(eulerian_poly(k - 1).scale(-k), (1 - _X) ** k)


@lru_cache(maxsize=None)
def _lambda_recursion(n):
    # the k = n term of  beta_n = lambda sum_{k<=n} C(n,k) beta_k  is solved away
    if n == 0:
        return RationalFunction()
    if n == 1:
        return 1 / (LAM - 1)
    s = sum((_lambda_recursion(k) * binomial(n, k) for k in range(1, n)), RationalFunction())
    return s * _T


_LAMBDA_BUILDERS = {
    "recursion": _lambda_recursion,
    "stirling": _lambda_stirling,
    "geometric": _lambda_geometric,
    "eulerian": _lambda_eulerian,
}


@lru_cache(maxsize=None)
def beta_lambda(n, route="recursion"):
    """beta_n(lambda) built by the named route."""
    _check_index(n)
    try:
        build = _LAMBDA_BUILDERS[route]
    except KeyError:
        raise DomainError(f"unknown route {route!r}; choose from {LAMBDA_ROUTES}") from None
    if route == "recursion":
        for j in range(0, n, 64):
            build(j)
    return BetaLambda(n, build(n))


# --- beta_n(a, lambda) ----------------------------------------------------


def _bivariate_from_terms(n, term):
    # term(k) is the coefficient of a^(n-k); k runs 1..n (k = 0 vanishes)
    coeffs = [RationalFunction()] * n
    for k in range(1, n + 1):
        coeffs[n - k] = term(k)
    return BetaPolynomial(coeffs)


def _bivariate_convolution(n):
    return _bivariate_from_terms(n, lambda k: beta_lambda(k).value * binomial(n, k))


def _bivariate_stirling(n):
    inv = 1 / (LAM - 1)
    return _bivariate_from_terms(n, lambda k: _stirling_sum(k) * inv * (binomial(n, k) * k))


def _bivariate_geometric(n):
    inv = 1 / (LAM - 1)
    return _bivariate_from_terms(n, lambda k: geometric_poly(k - 1).compose(_T) * inv * (binomial(n, k) * k))


def _bivariate_eulerian(n):
    return _bivariate_from_terms(
        n, lambda k: RationalFunction(eulerian_poly(k - 1).scale(-binomial(n, k) * k), (1 - _X) ** k)
    )


_BIVARIATE_BUILDERS = {
    "convolution": _bivariate_convolution,
    "stirling": _bivariate_stirling,
    "geometric": _bivariate_geometric,
    "eulerian": _bivariate_eulerian,
}


@lru_cache(maxsize=None)
def beta_bivariate(n, route="convolution"):
    """beta_n(a, lambda) built by the named route."""
    _check_index(n)
    try:
        build = _BIVARIATE_BUILDERS[route]
    except KeyError:
        raise DomainError(f"unknown route {route!r}; choose from {BIVARIATE_ROUTES}") from None
    return BetaBivariate(n, build(n))


# --- identities -----------------------------------------------------------


def beta_diff_a(n, p):
    """p-th derivative of beta_n(a, lambda) in ``a``, checked against n!/(n-p)! beta_{n-p}."""
    _check_index(n)
    if not 0 <= p <= n:
        raise DomainError(f"need 0 <= p <= n, got n={n}, p={p}")
    d = beta_bivariate(n).value
    for _ in range(p):
        d = d.derivative()
    expected = beta_bivariate(n - p).value * (factorial(n) // factorial(n - p))
    if d != expected:
        raise ConsistencyError(f"derivative identity fails at n={n}, p={p}", d, expected)
    return d


def beta_shift(n, b):
    """beta_n(a + b, lambda) by substitution, checked against the binomial expansion."""
    b = as_scalar(b)
    shifted = beta_bivariate(n).value.shift(b)
    expansion = BetaPolynomial()
    for k in range(n + 1):
        expansion = expansion + beta_bivariate(k).value * (binomial(n, k) * b ** (n - k))
    if shifted != expansion:
        raise ConsistencyError(f"shift identity fails at n={n}, b={b}", shifted, expansion)
    return shifted


def beta_integrate(n, a, b):
    """Integral of beta_n(t, lambda) over t in [a, b], checked against the beta_{n+1} difference."""
    if n < 1:
        raise DomainError("beta_integrate needs n >= 1")
    a, b = as_scalar(a), as_scalar(b)
    anti = beta_bivariate(n).value.antiderivative()
    integral = anti(b) - anti(a)
    upper = beta_bivariate(n + 1).value
    expected = (upper(b) - upper(a)) / (n + 1)
    if integral != expected:
        raise ConsistencyError(f"integral identity fails at n={n}, [{a}, {b}]", integral, expected)
    return integral


def beta_difference_check(n):
    """(lambda beta_n(a+1, lambda) - beta_n(a, lambda),  n a^(n-1))."""
    if n < 1:
        raise DomainError("beta_difference_check needs n >= 1")
    b = beta_bivariate(n).value
    left = b.shift(1) * LAM - b
    right = BetaPolynomial.from_polynomial(Polynomial.monomial(n - 1, n))
    return left, right


def mirimanoff_identity(n, m):
    """Both sides of lambda^m beta_n(m, lambda) = beta_n(lambda) + n sum_{k<m} k^(n-1) lambda^k."""
    if n < 1 or m < 1:
        raise DomainError("mirimanoff_identity needs n >= 1 and m >= 1")
    left = beta_bivariate(n).value(m) * LAM**m
    right = beta_lambda(n).value + RationalFunction(mirimanoff_polynomial(n, m).scale(n))
    return left, right


def beta_special_values(n):
    """Check lambda beta_1(1, L) = beta_1(L) + 1, and lambda beta_n(1, L) = beta_n(L) for n >= 2."""
    if n < 1:
        raise DomainError("beta_special_values needs n >= 1")
    left = beta_bivariate(n).value(1) * LAM
    right = beta_lambda(n).value + (1 if n == 1 else 0)
    return check("special-value", left == right, {"n": n}, left=left, right=right)


# --- Lerch transcendent ---------------------------------------------------


def lerch_negative(lam, m, a):
    """Phi(lambda, -m, a) = -beta_{m+1}(a, lambda)/(m+1), exactly."""
    lam, a = as_scalar(lam), as_scalar(a)
    _check_index(m)
    if lam == 1:
        raise PoleError(lam, "pole at lambda=1")
    return -beta_bivariate(m + 1).value.evaluate(a, lam) / (m + 1)


def F_negative(x, m):
    """F(x, -m) = sum_n e^(2 pi i n x) n^m continued to s = -m, for non-integer x.

    Computed as -e^(2 pi i x) beta_{m+1}(1, e^(2 pi i x))/(m+1) and
    cross-checked against -beta_{m+1}(e^(2 pi i x))/(m+1).  The two agree
    for m >= 1; at m = 0 the second is larger by exactly 1, because
    lambda beta_1(1, lambda) = beta_1(lambda) + 1.  The first form is the
    one returned: F(x, 0) = lambda/(1 - lambda).
    """
    x = as_scalar(x)
    _check_index(m)
    if x.denominator == 1:
        raise DomainError(f"F(x, -m) needs non-integer x (lambda = 1 is a pole), got x={x}")
    lam = cmath.exp(2j * pi * float(x))
    value = -lam * beta_bivariate(m + 1).value(1)(lam) / (m + 1)
    reduced = -beta_lambda(m + 1).value(lam) / (m + 1)
    if m == 0:
        reduced -= 1
    if abs(value - reduced) > 1e-9 * max(1.0, abs(value)):
        raise ConsistencyError(f"F(x,-m) routes disagree at x={x}, m={m}", value, reduced)
    return value
