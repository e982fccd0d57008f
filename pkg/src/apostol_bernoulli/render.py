"""Text, LaTeX and JSON renderings of exact objects.

JSON schema: rationals are strings ``"p/q"``; polynomials are
``{"variable": v, "coefficients": [...]}`` low to high; rational functions
are ``{"variable": v, "num": [...], "den": [...]}``; a bivariate beta is
``{"variable": "a", "parameter": "lambda", "coefficients": [ratfunc, ...]}``
indexed by power of ``a``.
"""

from fractions import Fraction
from math import gcd

from .exact import (
    BetaPolynomial,
    GaussianRational,
    Polynomial,
    RationalFunction,
    _linear_power_root,
    format_rational,
    parse_rational,
)

_TEXT_SYMBOL = {"lambda": "λ"}
_LATEX_SYMBOL = {"lambda": r"\lambda"}


def _sym(var, latex):
    return (_LATEX_SYMBOL if latex else _TEXT_SYMBOL).get(var, var)


def _scalar_text(c):
    if isinstance(c, GaussianRational):
        return f"({c})" if c.im != 0 else format_rational(c.re)
    return format_rational(c)


def _monomial(k, var, latex):
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{{{k}}}" if latex else f"{var}^{k}"


def _coef_abs(c, latex, bare=False):
    c = abs(c)
    if latex and c.denominator != 1:
        return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
    if c.denominator != 1:
        return format_rational(c) if bare else f"({format_rational(c)})"
    return str(c.numerator)


def poly_string(p, var="x", latex=False):
    """Descending-power rendering, e.g. ``2z^3 - 2z``."""
    v = _sym(var, latex)
    terms = []
    for k in range(len(p.coefficients) - 1, -1, -1):
        c = p.coefficients[k]
        if c == 0:
            continue
        if isinstance(c, GaussianRational) and c.im != 0:
            body = _scalar_text(c) + _monomial(k, v, latex)
            terms.append(("+", body))
            continue
        c = Fraction(c.re) if isinstance(c, GaussianRational) else c
        sign = "-" if c < 0 else "+"
        mono = _monomial(k, v, latex)
        if abs(c) == 1 and mono:
            body = mono
        else:
            body = _coef_abs(c, latex, bare=not mono) + mono
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _integer_content(p):
    cs = p.coefficients
    if not cs or any(not isinstance(c, Fraction) or c.denominator != 1 for c in cs):
        return 1
    g = 0
    for c in cs:
        g = gcd(g, c.numerator)
    if cs[-1] < 0:
        g = -g
    return g


def _numerator_string(p, var, latex):
    nonzero = sum(1 for c in p.coefficients if c != 0)
    g = _integer_content(p)
    if nonzero > 1 and g not in (1, -1):
        inner = poly_string(p.scale(Fraction(1, g)), var, latex)
        return f"{g}({inner})"
    if nonzero > 1 and g == -1:
        return f"-({poly_string(-p, var, latex)})"
    return poly_string(p, var, latex)


def _denominator_string(d, var, latex):
    v = _sym(var, latex)
    r = _linear_power_root(d)
    k = d.degree()
    if r is not None and k > 1:
        if r == 0:
            return _monomial(k, v, latex)
        base = poly_string(Polynomial((-r, 1)), var, latex)
        return f"({base})^{{{k}}}" if latex else f"({base})^{k}"
    return poly_string(d, var, latex)


def ratfunc_string(r, var="lambda", latex=False):
    """``-2λ/(λ - 1)^2`` style text, or ``\\frac{..}{..}`` in LaTeX."""
    num = _numerator_string(r.numerator, var, latex)
    if r.is_polynomial():
        return num
    den = _denominator_string(r.denominator, var, latex)
    if latex:
        return rf"\frac{{{num}}}{{{den}}}"
    if r.numerator.degree() and sum(1 for c in r.numerator.coefficients if c != 0) > 1 and not num.endswith(")"):
        num = f"({num})"
    if r.denominator.degree() and " " in den and not den.startswith("("):
        den = f"({den})"
    return f"{num}/{den}"


def beta_string(b, latex=False):
    """Polynomial in ``a`` with rational-function coefficients, highest power first."""
    if not b:
        return "0"
    out = ""
    for k in range(len(b.coefficients) - 1, -1, -1):
        c = b.coefficients[k]
        if not c:
            continue
        coef = ratfunc_string(c, "lambda", latex)
        mono = _monomial(k, "a", latex)
        if not mono:
            body = coef
        elif c == 1:
            body = mono
        elif latex:
            body = rf"\left({coef}\right){mono}"
        else:
            body = f"({coef}){mono}"
        if not out:
            out = body
        elif not mono and coef.startswith("-"):
            out += f" - {body[1:]}"
        else:
            out += f" + {body}"
    return out


def complex_string(z):
    z = complex(z)
    sign = "-" if z.imag < 0 or (z.imag == 0 and str(z.imag).startswith("-")) else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def to_text(obj, var=None, latex=False):
    """Render any exposed object as text or LaTeX."""
    if isinstance(obj, BetaPolynomial):
        return beta_string(obj, latex)
    if isinstance(obj, RationalFunction):
        return ratfunc_string(obj, var or "lambda", latex)
    if isinstance(obj, Polynomial):
        return poly_string(obj, var or "x", latex)
    if isinstance(obj, Fraction):
        if latex and obj.denominator != 1:
            sign = "-" if obj < 0 else ""
            return rf"{sign}\frac{{{abs(obj.numerator)}}}{{{obj.denominator}}}"
        return format_rational(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, complex):
        return complex_string(obj)
    if isinstance(obj, float):
        return repr(obj)
    return str(obj)


def _scalar_json(c):
    if isinstance(c, GaussianRational):
        return {"re": format_rational(c.re), "im": format_rational(c.im)}
    return format_rational(c)


def _scalar_from_json(v):
    if isinstance(v, dict):
        return GaussianRational(parse_rational(v["re"]), parse_rational(v["im"]))
    return parse_rational(v)


def to_json(obj, var=None):
    """JSON-ready structure for an exact object (lossless)."""
    if isinstance(obj, BetaPolynomial):
        return {
            "variable": "a",
            "parameter": "lambda",
            "coefficients": [to_json(c, "lambda") for c in obj.coefficients],
        }
    if isinstance(obj, RationalFunction):
        return {
            "variable": var or "lambda",
            "num": [_scalar_json(c) for c in obj.numerator.coefficients],
            "den": [_scalar_json(c) for c in obj.denominator.coefficients],
        }
    if isinstance(obj, Polynomial):
        return {"variable": var or "x", "coefficients": [_scalar_json(c) for c in obj.coefficients]}
    if isinstance(obj, (Fraction, int, GaussianRational)):
        return _scalar_json(Fraction(obj) if isinstance(obj, int) else obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, float):
        return obj
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def from_json(data):
    """Inverse of :func:`to_json` for exact objects."""
    if isinstance(data, str):
        return parse_rational(data)
    if isinstance(data, dict):
        if "parameter" in data:
            return BetaPolynomial(from_json(c) for c in data["coefficients"])
        if "num" in data:
            return RationalFunction(
                Polynomial(_scalar_from_json(c) for c in data["num"]),
                Polynomial(_scalar_from_json(c) for c in data["den"]),
            )
        if "coefficients" in data:
            return Polynomial(_scalar_from_json(c) for c in data["coefficients"])
        if set(data) == {"re", "im"}:
            if isinstance(data["re"], str):
                return _scalar_from_json(data)
            return complex(data["re"], data["im"])
    if isinstance(data, float):
        return data
    raise ValueError(f"unrecognized JSON object: {data!r}")
