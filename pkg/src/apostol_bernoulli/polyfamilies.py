"""Geometric, Eulerian and derivative polynomials.

Derivative polynomials express the m-th derivative of a function in terms
of the function itself::

    tanh:  d^m/dx^m tanh x = C_m(tanh x)
    sech:  d^m/dx^m sech x = sech x * S_m(tanh x)
    tan:   d^m/dx^m tan x  = P_m(tan x)
    sec:   d^m/dx^m sec x  = sec x * Q_m(tan x)
    cot:   d^m/dx^m cot x  = (-i)^(m+1) C_m(i cot x)

They are generated by chain-rule recurrences and cross-checked against
closed forms in terms of geometric polynomials and of beta_n(lambda).
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import binomial, eulerian_number, stirling2
from .errors import ConsistencyError, DomainError
from .exact import I, Polynomial, RationalFunction

__all__ = [
    "DerivativeKind",
    "geometric_poly",
    "eulerian_poly",
    "geometric_eulerian_bridge",
    "derivative_poly",
    "derivative_poly_closed",
    "tanh_closed_geometric",
    "tanh_closed_beta",
    "sech_closed_geometric",
    "sech_closed_beta",
    "tan_closed_beta",
    "complexify_bridge",
]


class DerivativeKind(str, Enum):
    TANH = "tanh"
    SECH = "sech"
    TAN = "tan"
    SEC = "sec"
    COT = "cot"


Z = Polynomial.x()
_ONE = Polynomial((1,))


@lru_cache(maxsize=None)
def geometric_poly(n):
    """omega_n(x) = sum_k S(n, k) k! x^k."""
    if n < 0:
        raise DomainError("geometric_poly needs n >= 0")
    return Polynomial([stirling2(n, k) * factorial(k) for k in range(n + 1)])


@lru_cache(maxsize=None)
def eulerian_poly(n):
    """A_n(x) = sum_k <n k> x^(n-k)."""
    if n < 0:
        raise DomainError("eulerian_poly needs n >= 0")
    return Polynomial([eulerian_number(n, n - j) for j in range(n + 1)])


def geometric_eulerian_bridge(n):
    """Both sides of omega_n(L/(1-L)) = A_n(L)/(1-L)^n, reduced."""
    lam = RationalFunction.variable()
    left = geometric_poly(n).compose(lam / (1 - lam))
    right = RationalFunction(eulerian_poly(n), (1 - Z) ** n)
    return left, right


_RECURRENCE = {
    # kind: (seed, factor multiplying p', factor multiplying p)
    DerivativeKind.TANH: (Z, 1 - Z * Z, None),
    DerivativeKind.SECH: (_ONE, 1 - Z * Z, -Z),
    DerivativeKind.TAN: (Z, 1 + Z * Z, None),
    DerivativeKind.SEC: (_ONE, 1 + Z * Z, Z),
}


@lru_cache(maxsize=None)
def _ladder(kind, m):
    seed, dfac, pfac = _RECURRENCE[kind]
    if m == 0:
        return seed
    prev = _ladder(kind, m - 1)
    nxt = dfac * prev.derivative()
    if pfac is not None:
        nxt = nxt + pfac * prev
    return nxt


def _cot(m):
    # (-i)^(m+1) C_m(i z), over Q(i)
    c = _ladder(DerivativeKind.TANH, m).to_gaussian()
    p = c(Polynomial((0, I))).scale((-I) ** (m + 1))
    try:
        return p.to_rational()
    except ConsistencyError as exc:
        raise ConsistencyError(f"cot polynomial m={m} has imaginary residue", p) from exc


def derivative_poly(kind, m):
    """Derivative polynomial of the given kind by its exact recurrence."""
    kind = DerivativeKind(kind)
    if m < 0:
        raise DomainError("derivative order must be nonnegative")
    if kind is DerivativeKind.COT:
        return _cot(m)
    for j in range(0, m, 64):
        _ladder(kind, j)  # keep recursion depth bounded
    return _ladder(kind, m)


def tanh_closed_geometric(m):
    """(-2)^m (z+1) omega_m((z-1)/2).  Equals C_m only for m >= 1."""
    half = Fraction(1, 2)
    return (Z + 1) * geometric_poly(m)(Polynomial((-half, half))).scale(Fraction(-2) ** m)


def tanh_closed_beta(m):
    """(-2)^(m+1)/(m+1) * beta_{m+1}((z-1)/(z+1)).  Equals C_m only for m >= 1."""
    from .apostol import beta_lambda

    r = RationalFunction(Z - 1, Z + 1)
    val = beta_lambda(m + 1).value.compose(r) * (Fraction(-2) ** (m + 1) / (m + 1))
    return _as_polynomial(val, f"tanh beta route m={m}")


def sech_closed_geometric(m):
    """sum_k C(m,k) 2^k omega_k(-(z+1)/2)."""
    arg = Polynomial((Fraction(-1, 2), Fraction(-1, 2)))
    out = Polynomial()
    for k in range(m + 1):
        out = out + geometric_poly(k)(arg).scale(binomial(m, k) * 2**k)
    return out


def sech_closed_beta(m):
    """1/(z-1) sum_k C(m,k) 2^(k+1)/(k+1) beta_{k+1}((z+1)/(z-1))."""
    from .apostol import beta_lambda

    r = RationalFunction(Z + 1, Z - 1)
    total = RationalFunction()
    for k in range(m + 1):
        total = total + beta_lambda(k + 1).value.compose(r) * (Fraction(binomial(m, k) * 2 ** (k + 1), k + 1))
    return _as_polynomial(total / (Z - 1), f"sech beta route m={m}")


def tan_closed_beta(m):
    """(-1)^m (2i)^(m+1)/(m+1) * beta_{m+1}((iz-1)/(iz+1)), computed over Q(i)."""
    from .apostol import beta_lambda

    r = RationalFunction(Polynomial((-1, I)), Polynomial((1, I)))
    scale = (-1) ** m * (2 * I) ** (m + 1) / (m + 1)
    val = beta_lambda(m + 1).value.compose(r) * scale
    return _as_polynomial(val, f"tan beta route m={m}").to_rational()


def _as_polynomial(r, what):
    if not r.is_polynomial():
        raise ConsistencyError(f"{what}: result is not a polynomial", r)
    return r.numerator


def derivative_poly_closed(kind, m):
    """Derivative polynomial from the closed forms; both routes must agree.

    tanh uses the geometric-polynomial form and the beta form (m >= 1),
    sech likewise (m >= 0), tan uses the beta form over the Gaussian
    rationals and is compared with the recurrence.
    """
    kind = DerivativeKind(kind)
    if kind is DerivativeKind.TANH:
        if m < 1:
            raise DomainError("closed forms for tanh hold for m >= 1 only")
        a, b = tanh_closed_geometric(m), tanh_closed_beta(m)
    elif kind is DerivativeKind.SECH:
        if m < 0:
            raise DomainError("derivative order must be nonnegative")
        a, b = sech_closed_geometric(m), sech_closed_beta(m)
    elif kind is DerivativeKind.TAN:
        if m < 0:
            raise DomainError("derivative order must be nonnegative")
        a, b = tan_closed_beta(m), derivative_poly(kind, m)
    else:
        raise DomainError(f"no closed form for {kind.value}")
    if a != b:
        raise ConsistencyError(f"closed-form routes disagree for {kind.value}, m={m}", a, b)
    return a


def complexify_bridge(m):
    """(P_m by recurrence, P_m as -i^(m+1) C_m(iz)) after checking the parity identity.

    Also checks (-1)^m P_m(z) = -P_m(-z) = (-i)^(m+1) C_m(iz).
    """
    p = derivative_poly(DerivativeKind.TAN, m)
    c = derivative_poly(DerivativeKind.TANH, m).to_gaussian()
    bridged = c(Polynomial((0, I))).scale(-(I ** (m + 1)))
    try:
        bridged = bridged.to_rational()
    except ConsistencyError as exc:
        raise ConsistencyError(f"tan bridge m={m} has imaginary residue", bridged) from exc
    flipped = -p(Polynomial((0, -1)))
    signed = p.scale((-1) ** m)
    cot = derivative_poly(DerivativeKind.COT, m)
    if not (signed == flipped == cot):
        raise ConsistencyError(f"parity identity fails at m={m}", signed, flipped, cot)
    return p, bridged
