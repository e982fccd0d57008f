"""The alpha -> 0+ limit of beta_m(a, e^-alpha) + e^(a alpha) m!/alpha^m.

The limit is frequently quoted as m*B_m(a).  Measured in exact arithmetic the
sequence settles on B_m(a) instead; the two agree only for m = 1 or where
B_m(a) vanishes.
"""

from fractions import Fraction

from apostol_bernoulli import bernoulli_limit_check, bernoulli_polynomial

for m in range(1, 5):
    for a in (Fraction(0), Fraction(1, 2)):
        b = bernoulli_polynomial(m)(a)
        scaled = bernoulli_limit_check(m, a, target="mB")
        plain = bernoulli_limit_check(m, a, target="B")
        print(f"m={m} a={str(a):<4} B_m(a)={str(b):<6} "
              f"m*B_m: {scaled.status:<4}  B_m: {plain.status:<4}  {plain.detail}")

# %% Doubles run out of room quickly: the pole term m!/alpha^m swamps the answer.
print()
try:
    bernoulli_limit_check(4, 0, precision="float", target="B")
except Exception as exc:
    print(type(exc).__name__, exc)
