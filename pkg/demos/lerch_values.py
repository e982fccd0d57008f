"""Lerch values at negative integer s: exact formula, direct series, Hermite integral."""

from fractions import Fraction

from apostol_bernoulli import hermite_phi, lerch_negative, lerch_series

# %% Exact values come from beta_{m+1}(a, lambda), so rational input gives rational output.
lam, a = Fraction(1, 2), Fraction(1, 3)
print(f"{'m':>2} {'exact':>22} {'series':>22} {'hermite':>22}")
for m in range(6):
    exact = lerch_negative(lam, m, a)
    series = lerch_series(lam, -m, a, tol=1e-13)
    herm = hermite_phi(float(lam), -m, float(a), tol=1e-10)
    print(f"{m:>2} {str(exact):>22} {series.value:>22.15g} {herm.value:>22.15g}")

# %% The series result carries its own tail bound and term count.
r = lerch_series(Fraction(4, 5), -3, Fraction(7, 2), tol=1e-12)
print()
print(f"series at lambda=4/5, s=-3, a=7/2: {r.value!r}")
print(f"  terms {r.terms_used}, tail bound {r.tail_bound:.2e}")
print(f"  exact {float(lerch_negative(Fraction(4, 5), 3, Fraction(7, 2)))!r}")

# %% lambda = 1 is a pole of the exact formula and is reported as such.
try:
    lerch_negative(1, 1, 1)
except Exception as exc:
    print()
    print(type(exc).__name__, exc)
