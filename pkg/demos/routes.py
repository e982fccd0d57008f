"""Four ways to build the same beta_n(lambda), and how the results render."""

from apostol_bernoulli import beta_bivariate, beta_lambda, eulerian_poly, geometric_poly
from apostol_bernoulli.apostol import LAMBDA_ROUTES
from apostol_bernoulli.render import to_json, to_text

# %% Each route builds beta_n independently; they agree as reduced rational functions.
for n in range(7):
    values = {route: beta_lambda(n, route).value for route in LAMBDA_ROUTES}
    agree = len({to_text(v) for v in values.values()}) == 1
    print(f"n={n}  {to_text(values['recursion']):<40} all routes agree: {agree}")

# %% The Eulerian route reads the numerator straight off A_{n-1}.
n = 5
print()
print(f"A_{n - 1}(x)     =", to_text(eulerian_poly(n - 1)))
print(f"beta_{n}(lambda) =", to_text(beta_lambda(n).value))

# %% The geometric polynomials supply the same numbers through omega_n(1/(lambda-1)).
print(f"omega_{n}(x)     =", to_text(geometric_poly(n)))

# %% Bivariate values are polynomials in a with rational-function coefficients.
print()
for n in range(4):
    print(f"beta_{n}(a, lambda) =", to_text(beta_bivariate(n).value))

# %% Three renderings of one object.
b = beta_lambda(3).value
print()
print("text :", to_text(b))
print("latex:", to_text(b, latex=True))
print("json :", to_json(b))
