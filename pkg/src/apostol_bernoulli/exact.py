"""Exact scalars, dense polynomials and reduced rational functions.

Everything here is immutable.  Scalars are :class:`fractions.Fraction`
(aliased as :data:`Rational`) or :class:`GaussianRational`; floats never
appear as stored coefficients, they only show up as evaluation points.

A polynomial is a tuple of coefficients, low to high, with trailing zeros
stripped; the zero polynomial is the empty tuple and has degree ``None``.
"""

from fractions import Fraction
import numbers

from .errors import ConsistencyError, DomainError, PoleError

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "I",
    "Polynomial",
    "RationalFunction",
    "BetaPolynomial",
    "poly_gcd",
    "as_scalar",
    "parse_rational",
    "format_rational",
]


def parse_rational(text):
    """Parse ``"p/q"``, an integer, or a finite decimal string exactly."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def format_rational(x):
    """Canonical ``p/q`` text, with ``/q`` omitted when ``q == 1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    real = re
    imag = im

    @classmethod
    def from_complex(cls, z):
        """Exact conversion of a complex float (every float is a dyadic rational)."""
        z = complex(z)
        return cls(Fraction(z.real), Fraction(z.imag))

    def is_real(self):
        return self._im == 0

    def conjugate(self):
        return GaussianRational(self._re, -self._im)

    def norm(self):
        return self._re * self._re + self._im * self._im

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __repr__(self):
        return f"GaussianRational({format_rational(self._re)!r}, {format_rational(self._im)!r})"

    def __str__(self):
        if self._im == 0:
            return format_rational(self._re)
        if self._re == 0:
            return f"{format_rational(self._im)}i"
        sign = "+" if self._im > 0 else "-"
        return f"{format_rational(self._re)}{sign}{format_rational(abs(self._im))}i"

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, numbers.Complex):
                return complex(self) == other
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) + other
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) - other
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return other - complex(self)
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) * other
            return NotImplemented
        return GaussianRational(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) / other
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return self * GaussianRational(o._re / n, -o._im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return other / complex(self)
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return 1 / (self ** (-k))
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


I = GaussianRational(0, 1)


def as_scalar(c):
    """Normalize an exact scalar; ints become Fractions, floats are rejected."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, GaussianRational):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"exact scalar expected, got {type(c).__name__}")


def _is_scalar(c):
    return isinstance(c, (int, Fraction, GaussianRational))


def _exactify(x):
    # floats are dyadic rationals, so this is lossless
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, complex):
        return GaussianRational.from_complex(x)
    return x


class Polynomial:
    """Dense univariate polynomial with exact coefficients, low to high."""

    __slots__ = ("_c",)

    def __init__(self, coefficients=()):
        cs = [as_scalar(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self._c = tuple(cs)

    @classmethod
    def _raw(cls, cs):
        # cs already normalized scalars; strips trailing zeros only
        cs = list(cs)
        while cs and cs[-1] == 0:
            cs.pop()
        p = cls.__new__(cls)
        p._c = tuple(cs)
        return p

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def coefficients(self):
        return self._c

    def degree(self):
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __getitem__(self, k):
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    @property
    def leading(self):
        if not self._c:
            raise DomainError("zero polynomial has no leading coefficient")
        return self._c[-1]

    def __repr__(self):
        return "Polynomial([" + ", ".join(str(c) for c in self._c) + "])"

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        if _is_scalar(other):
            return self._c == Polynomial((other,))._c
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self._c))

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return other
        if _is_scalar(other):
            return Polynomial((other,))
        return None

    def __neg__(self):
        return Polynomial._raw(-c for c in self._c)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Polynomial._raw(out)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        c = as_scalar(c)
        return Polynomial._raw(x * c for x in self._c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self):
        return Polynomial._raw(k * c for k, c in enumerate(self._c) if k)

    def antiderivative(self):
        """Antiderivative with zero constant term."""
        return Polynomial._raw([Fraction(0)] + [c / (k + 1) for k, c in enumerate(self._c)])

    def __call__(self, x):
        """Horner evaluation at a scalar, float, polynomial or rational function."""
        if isinstance(x, RationalFunction):
            return self.compose(x)
        acc = Fraction(0) if not isinstance(x, Polynomial) else Polynomial()
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def compose(self, r):
        """``self(r)`` for a polynomial or rational function ``r``."""
        if isinstance(r, Polynomial) or _is_scalar(r):
            return self(r)
        if not isinstance(r, RationalFunction):
            raise TypeError(f"cannot compose with {type(r).__name__}")
        num, den = _homogenize(self, r.numerator, r.denominator)
        return RationalFunction(num, den)

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o._c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        db = len(o._c) - 1
        lead = o._c[-1]
        if len(rem) <= db:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(rem) - 1 - db, -1, -1):
            q = rem[i + db] / lead
            quot[i] = q
            if q != 0:
                for j, c in enumerate(o._c):
                    rem[i + j] = rem[i + j] - q * c
        return Polynomial._raw(quot), Polynomial._raw(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ConsistencyError("inexact polynomial division", self, other, r)
        return q

    def monic(self):
        if not self._c:
            return self
        return self.scale(1 / self._c[-1])

    def shift(self, b):
        """``p(x + b)``."""
        return self(Polynomial((b, 1)))

    def to_rational(self):
        """Drop vanished imaginary parts; raise if any coefficient is not real."""
        out = []
        for c in self._c:
            if isinstance(c, GaussianRational):
                if c.im != 0:
                    raise ConsistencyError("nonzero imaginary coefficient", self)
                c = c.re
            out.append(c)
        return Polynomial(out)

    def to_gaussian(self):
        return Polynomial._raw(c if isinstance(c, GaussianRational) else GaussianRational(c) for c in self._c)

    def is_real(self):
        return all(not isinstance(c, GaussianRational) or c.im == 0 for c in self._c)


def _homogenize(p, u, v):
    """Numerator and denominator of ``p(u/v)`` as ``sum c_k u^k v^(d-k)`` over ``v^d``."""
    d = p.degree()
    if d is None:
        return Polynomial(), Polynomial((1,))
    upow = [Polynomial((1,))]
    vpow = [Polynomial((1,))]
    for _ in range(d):
        upow.append(upow[-1] * u)
        vpow.append(vpow[-1] * v)
    num = Polynomial()
    for k, c in enumerate(p.coefficients):
        if c != 0:
            num = num + (upow[k] * vpow[d - k]).scale(c)
    return num, vpow[d]


def poly_gcd(p, q):
    """Monic gcd by the plain Euclidean algorithm (zero if both are zero)."""
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()


def _multiplicity_at(p, root):
    """Largest j with (x - root)^j dividing p, via repeated synthetic division."""
    j = 0
    cs = list(p.coefficients)
    while cs:
        acc = Fraction(0)
        out = []
        for c in reversed(cs):
            acc = acc * root + c
            out.append(acc)
        if out[-1] != 0:
            break
        cs = list(reversed(out[:-1]))
        j += 1
    return j


def _linear_power_root(den):
    """If den == (x - r)^k for k >= 1 return r, else None."""
    k = den.degree()
    if not k:
        return None
    r = -den[k - 1] / k
    if den == Polynomial((-r, 1)) ** k:
        return r
    return None


class RationalFunction:
    """Reduced quotient of polynomials with a monic denominator."""

    __slots__ = ("_num", "_den")

    def __init__(self, numerator=0, denominator=1):
        num = _as_poly(numerator)
        den = _as_poly(denominator)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self._num, self._den = Polynomial(), Polynomial((1,))
            return
        if den.degree() > 0:
            g = _fast_gcd(num, den)
            if g.degree():
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.leading
        if lead != 1:
            inv = 1 / lead
            num, den = num.scale(inv), den.scale(inv)
        self._num, self._den = num, den

    @classmethod
    def _reduced(cls, num, den):
        # caller guarantees gcd(num, den) = 1
        r = cls.__new__(cls)
        if not num:
            r._num, r._den = Polynomial(), Polynomial((1,))
            return r
        lead = den.leading
        if lead != 1:
            inv = 1 / lead
            num, den = num.scale(inv), den.scale(inv)
        r._num, r._den = num, den
        return r

    @classmethod
    def variable(cls):
        return cls(Polynomial.x())

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    def is_zero(self):
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def is_polynomial(self):
        return self._den.degree() == 0

    def check_invariants(self):
        if not self._den or self._den.leading != 1:
            raise ConsistencyError("denominator not monic", self)
        if poly_gcd(self._num, self._den).degree():
            raise ConsistencyError("rational function not reduced", self)

    def __repr__(self):
        return f"RationalFunction({self._num!r}, {self._den!r})"

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self._num == other._num and self._den == other._den
        if isinstance(other, Polynomial) or _is_scalar(other):
            return self.is_polynomial() and self._num == other
        return NotImplemented

    def __hash__(self):
        return hash(("RationalFunction", self._num, self._den))

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial) or _is_scalar(other):
            return RationalFunction._reduced(_as_poly(other), Polynomial((1,)))
        return None

    def __neg__(self):
        return RationalFunction._reduced(-self._num, self._den)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o._num:
            return self
        if not self._num:
            return o
        if self._den == o._den:
            return RationalFunction(self._num + o._num, self._den)
        g = _fast_gcd(self._den, o._den)
        d1 = self._den.exact_div(g)
        d2 = o._den.exact_div(g)
        return RationalFunction(self._num * d2 + o._num * d1, d1 * o._den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if _is_scalar(other):
            c = as_scalar(other)
            if c == 0:
                return RationalFunction()
            return RationalFunction._reduced(self._num.scale(c), self._den)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self._num or not o._num:
            return RationalFunction()
        g1 = _fast_gcd(self._num, o._den)
        g2 = _fast_gcd(o._num, self._den)
        num = self._num.exact_div(g1) * o._num.exact_div(g2)
        den = self._den.exact_div(g2) * o._den.exact_div(g1)
        return RationalFunction._reduced(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self._num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction._reduced(self._den, self._num)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        # powers of a reduced fraction stay reduced
        return RationalFunction._reduced(self._num ** k, self._den ** k)

    def __call__(self, x):
        """Evaluate at a point or compose with a polynomial/rational function.

        Float and complex points are converted exactly to rationals, the
        value is computed exactly and rounded once at the end.
        """
        if isinstance(x, (Polynomial, RationalFunction)):
            return self.compose(x)
        floaty = isinstance(x, (float, complex))
        xe = _exactify(x)
        d = self._den(xe)
        if d == 0:
            raise PoleError(x)
        value = self._num(xe) / d
        if floaty:
            if isinstance(value, GaussianRational):
                return complex(value)
            if isinstance(x, complex):
                return complex(float(value))
            return float(value)
        return value

    def compose(self, r):
        """``self(r)``; the result is reduced."""
        if isinstance(r, Polynomial):
            r = RationalFunction._reduced(r, Polynomial((1,)))
        u, v = r.numerator, r.denominator
        nn, nd = _homogenize(self._num, u, v)
        dn, dd = _homogenize(self._den, u, v)
        if not dn:
            raise PoleError(r, "composition lands on a pole identically")
        return RationalFunction(nn * dd, dn * nd)

    def derivative(self):
        n, d = self._num, self._den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)


def _fast_gcd(p, q):
    # denominators here are almost always powers of (x - r); avoid Euclid then
    for a, b in ((p, q), (q, p)):
        if b.degree() and b.degree() > 0:
            r = _linear_power_root(b)
            if r is not None:
                j = min(_multiplicity_at(a, r), b.degree()) if a else b.degree()
                return Polynomial((-r, 1)) ** j
    return poly_gcd(p, q)


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if _is_scalar(x):
        return Polynomial((x,))
    raise TypeError(f"polynomial expected, got {type(x).__name__}")


class BetaPolynomial:
    """Polynomial in ``a`` whose coefficients are rational functions of ``lambda``."""

    __slots__ = ("_c",)

    def __init__(self, coefficients=()):
        cs = []
        for c in coefficients:
            if not isinstance(c, RationalFunction):
                c = RationalFunction(c)
            cs.append(c)
        while cs and not cs[-1]:
            cs.pop()
        self._c = tuple(cs)

    @classmethod
    def from_polynomial(cls, p):
        """Lift a scalar polynomial in ``a``."""
        return cls(RationalFunction(c) for c in p.coefficients)

    @property
    def coefficients(self):
        return self._c

    def degree(self):
        return len(self._c) - 1 if self._c else None

    def __bool__(self):
        return bool(self._c)

    def __getitem__(self, k):
        if 0 <= k < len(self._c):
            return self._c[k]
        return RationalFunction()

    def __repr__(self):
        return f"BetaPolynomial({list(self._c)!r})"

    def __eq__(self, other):
        if isinstance(other, BetaPolynomial):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(("BetaPolynomial", self._c))

    def __neg__(self):
        return BetaPolynomial(-c for c in self._c)

    def __add__(self, other):
        if not isinstance(other, BetaPolynomial):
            return NotImplemented
        n = max(len(self._c), len(other._c))
        return BetaPolynomial(self[k] + other[k] for k in range(n))

    def __sub__(self, other):
        if not isinstance(other, BetaPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BetaPolynomial):
            if not self._c or not other._c:
                return BetaPolynomial()
            out = [RationalFunction()] * (len(self._c) + len(other._c) - 1)
            for i, x in enumerate(self._c):
                for j, y in enumerate(other._c):
                    out[i + j] = out[i + j] + x * y
            return BetaPolynomial(out)
        if isinstance(other, (RationalFunction, Polynomial)) or _is_scalar(other):
            return BetaPolynomial(c * other for c in self._c)
        return NotImplemented

    __rmul__ = __mul__

    def derivative(self):
        """Derivative in ``a``."""
        return BetaPolynomial(c * k for k, c in enumerate(self._c) if k)

    def antiderivative(self):
        """Antiderivative in ``a`` with zero constant term."""
        return BetaPolynomial([RationalFunction()] + [c * Fraction(1, k + 1) for k, c in enumerate(self._c)])

    def shift(self, b):
        """Substitute ``a -> a + b``."""
        b = as_scalar(b)
        out = [RationalFunction()] * len(self._c)
        # binomial expansion of (a + b)^k, accumulated per power
        for k, c in enumerate(self._c):
            if not c:
                continue
            row = Polynomial((b, 1)) ** k
            for j, coef in enumerate(row.coefficients):
                if coef != 0:
                    out[j] = out[j] + c * coef
        return BetaPolynomial(out)

    def __call__(self, a):
        """Substitute a value (or exact scalar) for ``a``; returns a RationalFunction."""
        a = as_scalar(a)
        acc = RationalFunction()
        for c in reversed(self._c):
            acc = acc * a + c
        return acc

    def evaluate(self, a, lam):
        """Exact value at ``(a, lambda)``; raises PoleError at poles in lambda."""
        a = as_scalar(a)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * a + c(lam)
        return acc

    def max_pole_order(self, root=1):
        """Largest multiplicity of ``(lambda - root)`` among the coefficient denominators."""
        return max((_multiplicity_at(c.denominator, Fraction(root)) for c in self._c), default=0)
