# %% [markdown]
# The brute-force oracles know nothing about W_q, which makes them a fair
# referee for the analytic solver.

# %%
import numpy as np

from lambert_tsallis import Trinomial, solve_trinomial
from lambert_tsallis.oracle import scan_real_roots, trinomial_positive_roots

rng = np.random.default_rng(0)
worst = 0.0
for _ in range(200):
    a, b = rng.uniform(0.1, 5.0, 2)
    c = -rng.uniform(0.1, 10.0)
    beta = rng.uniform(0.2, 3.0)
    alpha = beta + rng.uniform(0.05, 3.0)
    analytic = [x for x in solve_trinomial(Trinomial(a, alpha, b, beta, c)).real_roots() if x > 0][0]
    f = lambda x: a * x**alpha + b * x**beta + c  # noqa: E731
    hi = 1.0
    while f(hi) < 0:
        hi *= 2
    (ref,) = scan_real_roots(f, 0.0, hi)
    worst = max(worst, abs(analytic - ref) / ref)
print(f"worst relative gap over 200 trinomials: {worst:.2e}")

# %%
# Rational exponents reduce to a polynomial in x^(1/d): here
# u^3 - 7u + 6 = (u - 1)(u - 2)(u + 3) with u = sqrt(x).
print(trinomial_positive_roots(1.0, 1.5, -7.0, 0.5, 6.0))
print(solve_trinomial((1.0, 1.5, -7.0, 0.5, 6.0)).real_roots())
