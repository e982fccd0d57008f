"""Batch command line: emit, eval, table, verify.

Exit codes: 0 success, 1 verification failure or pole, 2 usage error.
"""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction
import json
import sys
import time

from . import __version__, verify as verify_mod
from .apostol import (
    BIVARIATE_ROUTES,
    LAMBDA_ROUTES,
    F_negative,
    beta_bivariate,
    beta_lambda,
    lerch_negative,
)
from .combinatorics import bernoulli_polynomial
from .errors import BudgetError, ConsistencyError, DomainError, IterationLimitError, PoleError
from .exact import parse_rational
from .numerics import (
    DEFAULT_BUDGET,
    DEFAULT_QUAD_TOL,
    DEFAULT_SERIES_TOL,
    hermite_phi,
    lerch_series,
    power_sum_series,
)
from .polyfamilies import DerivativeKind, derivative_poly, derivative_poly_closed, eulerian_poly, geometric_poly
from .render import to_json, to_text

MAX_INDEX = 64
FAMILIES = ("beta-lambda", "beta", "geometric", "eulerian", "bernoulli", "derivative")
EVAL_TARGETS = ("beta", "lerch", "F", "power-sum", "hermite")
FORMATS = ("text", "latex", "json")
DERIVATIVE_ROUTES = ("recurrence", "closed")

_ROUTES = {"beta-lambda": LAMBDA_ROUTES, "beta": BIVARIATE_ROUTES, "derivative": DERIVATIVE_ROUTES}
_VARIABLE = {"beta-lambda": "lambda", "beta": "a", "geometric": "x", "eulerian": "x", "bernoulli": "x", "derivative": "z"}


class UsageError(Exception):
    pass


@dataclass
class OutputDocument:
    format: str
    payload: object
    metadata: dict = field(default_factory=dict)

    def render(self, with_metadata=False):
        if self.format == "json":
            if with_metadata:
                return json.dumps({"format": self.format, "payload": self.payload, "metadata": self.metadata})
            return json.dumps(self.payload, separators=(",", ":"), ensure_ascii=False)
        text = self.payload if isinstance(self.payload, str) else "\n".join(self.payload)
        if with_metadata:
            meta = " ".join(f"{k}={v}" for k, v in self.metadata.items())
            text = f"{text}\n# {meta}"
        return text


def _render(obj, fmt, var):
    if fmt == "json":
        return to_json(obj, var)
    return to_text(obj, var, latex=fmt == "latex")


def _check_index(value, what="index"):
    if value < 0 or value > MAX_INDEX:
        raise UsageError(f"{what} must be in 0..{MAX_INDEX}, got {value}")


def _build(family, n, kind=None, route=None):
    routes = _ROUTES.get(family)
    if route is not None and routes is None:
        raise UsageError(f"family {family} has a single construction; --route does not apply")
    if route is not None and route not in routes:
        raise UsageError(f"unknown route {route!r} for {family}; choose from {', '.join(routes)}")
    if family != "derivative" and kind is not None:
        raise UsageError("--kind applies to the derivative family only")
    if family == "beta-lambda":
        return beta_lambda(n, route or "recursion").value
    if family == "beta":
        return beta_bivariate(n, route or "convolution").value
    if family == "geometric":
        return geometric_poly(n)
    if family == "eulerian":
        return eulerian_poly(n)
    if family == "bernoulli":
        return bernoulli_polynomial(n)
    if kind is None:
        raise UsageError("derivative family needs --kind")
    if (route or "recurrence") == "closed":
        return derivative_poly_closed(kind, n)
    return derivative_poly(kind, n)


def cmd_emit(args):
    _check_index(args.index)
    obj = _build(args.family, args.index, args.kind, args.route)
    return OutputDocument(args.format, _render(obj, args.format, _VARIABLE[args.family]))


def cmd_table(args):
    _check_index(args.up_to, "up_to")
    var = _VARIABLE[args.family]
    rows = [_render(_build(args.family, n, args.kind, args.route), args.format, var) for n in range(args.up_to + 1)]
    return OutputDocument(args.format, rows)


# --- eval -----------------------------------------------------------------


def _number(text):
    """Rational unless written with a decimal point or exponent."""
    if any(ch in text for ch in ".eE"):
        try:
            return float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    try:
        return parse_rational(text)
    except DomainError:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--lambda" if n == "lam" else f"-{n}" for n in missing)
        raise UsageError(f"eval {args.target} needs {flags}")


def _integer(args, name):
    v = getattr(args, name)
    if v != int(v):
        raise UsageError(f"-{name} must be an integer")
    v = int(v)
    _check_index(abs(v), f"-{name}")
    return v


def _scalar_out(value, exact, fmt, tol=None):
    if exact:
        return _render(value, fmt, None)
    value = complex(value) if isinstance(value, complex) else float(value)
    if fmt == "json":
        return {"value": to_json(value), "tolerance": tol}
    return to_text(value) + (f"  (tol {tol:g})" if tol is not None else "")


def cmd_eval(args):
    t, fmt = args.target, args.format
    if t == "beta":
        _need(args, "n", "lam")
        n = _integer(args, "n")
        a = args.a if args.a is not None else Fraction(0)
        exact = isinstance(args.lam, Fraction) and isinstance(a, Fraction)
        if args.lam == 1 and n > 0:
            raise PoleError(args.lam, "pole at lambda=1")
        value = beta_bivariate(n).value.evaluate(Fraction(a), Fraction(args.lam))
        return OutputDocument(fmt, _scalar_out(value, exact, fmt))
    if t == "lerch":
        _need(args, "m", "lam", "a")
        m = _integer(args, "m")
        exact = isinstance(args.lam, Fraction) and isinstance(args.a, Fraction)
        if m >= 0:
            value = lerch_negative(Fraction(args.lam), m, Fraction(args.a))
            return OutputDocument(fmt, _scalar_out(value, exact, fmt))
        if args.lam == 1:
            raise PoleError(args.lam, "pole at lambda=1")
        res = lerch_series(args.lam, -m, args.a, tol=args.tol or DEFAULT_SERIES_TOL)
        return OutputDocument(fmt, _scalar_out(res.value, False, fmt, args.tol or DEFAULT_SERIES_TOL))
    if t == "F":
        _need(args, "m", "x")
        if not isinstance(args.x, Fraction):
            raise UsageError("eval F needs rational -x")
        value = F_negative(args.x, _integer(args, "m"))
        return OutputDocument(fmt, _scalar_out(value, False, fmt, 1e-9))
    if t == "power-sum":
        _need(args, "n", "x")
        n = _integer(args, "n")
        tol = args.tol or DEFAULT_SERIES_TOL
        res = power_sum_series(n, args.x, tol=tol)
        if isinstance(args.x, Fraction):
            x = args.x
            return OutputDocument(fmt, _scalar_out(eulerian_poly(n)(x) / (1 - x) ** (n + 1), True, fmt))
        return OutputDocument(fmt, _scalar_out(res.value, False, fmt, tol))
    # hermite
    _need(args, "lam", "a")
    s = _integer(args, "s") if args.s is not None else 0
    tol = args.tol or DEFAULT_QUAD_TOL
    res = hermite_phi(args.lam, s, args.a, tol=tol, budget=args.budget or DEFAULT_BUDGET)
    return OutputDocument(fmt, _scalar_out(res.value, False, fmt, tol))


# --- verify ---------------------------------------------------------------


def _witness(v):
    try:
        return to_text(v)
    except (TypeError, ValueError):
        return str(v)


def _result_json(r):
    d = r.as_dict()
    d["witnesses"] = {k: _witness(v) for k, v in r.witnesses.items()}
    return d


def cmd_verify(args):
    _check_index(args.max_n, "--max-n")
    results = verify_mod.run(args.suite, max_n=args.max_n, tol=args.tol or 1e-9)
    counts = {"pass": 0, "fail": 0, "noted": 0}
    for r in results:
        counts[r.status] += 1
    summary = f"{len(results)} checks: {counts['pass']} pass, {counts['fail']} fail, {counts['noted']} noted"
    if args.format == "json":
        payload = {"suite": args.suite, "summary": counts, "results": [_result_json(r) for r in results]}
    else:
        lines = []
        for r in results:
            if r.status == "pass" and not args.all_results:
                continue
            params = ", ".join(f"{k}={v}" for k, v in r.params.items())
            line = f"{r.status.upper():5} {r.tag} [{params}]"
            if r.detail:
                line += f" {r.detail}"
            for k, v in r.witnesses.items():
                line += f"\n        {k}: {_witness(v)}"
            lines.append(line)
        lines.append(summary)
        payload = lines
    doc = OutputDocument(args.format, payload)
    doc.exit_code = 1 if counts["fail"] else 0
    return doc


# --- entry point ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser():
    p = _Parser(prog="apostol-bernoulli", description="Exact Apostol-Bernoulli functions and related polynomials.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--metadata", action="store_true", help="append command echo, version and timing")

    e = sub.add_parser("emit", help="render one exact object")
    e.add_argument("family", choices=FAMILIES)
    e.add_argument("index", type=int)
    e.add_argument("--kind", choices=[k.value for k in DerivativeKind])
    e.add_argument("--route")
    common(e)
    e.set_defaults(func=cmd_emit)

    t = sub.add_parser("table", help="render indices 0..UP_TO of a family")
    t.add_argument("family", choices=FAMILIES)
    t.add_argument("up_to", type=int)
    t.add_argument("--kind", choices=[k.value for k in DerivativeKind])
    t.add_argument("--route")
    common(t)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("eval", help="evaluate at a point")
    v.add_argument("target", choices=EVAL_TARGETS)
    v.add_argument("--lambda", dest="lam", type=_number)
    v.add_argument("-m", type=_number)
    v.add_argument("-n", type=_number)
    v.add_argument("-s", type=_number)
    v.add_argument("-a", type=_number)
    v.add_argument("-x", type=_number)
    v.add_argument("--tol", type=float)
    v.add_argument("--budget", type=int)
    common(v)
    v.set_defaults(func=cmd_eval)

    r = sub.add_parser("verify", help="run the identity corpus")
    r.add_argument("--suite", choices=("all",) + verify_mod.SUITES, default="all")
    r.add_argument("--max-n", type=int, default=20)
    r.add_argument("--tol", type=float)
    r.add_argument("--all-results", action="store_true", help="list passing checks too")
    common(r)
    r.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if getattr(args, "tol", None) is not None and args.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        doc = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConsistencyError, BudgetError, IterationLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    doc.metadata = {
        "command": " ".join(sys.argv[1:] if argv is None else argv),
        "version": __version__,
        "seconds": round(time.perf_counter() - start, 4),
    }
    print(doc.render(args.metadata))
    return getattr(doc, "exit_code", 0)


if __name__ == "__main__":
    sys.exit(main())
