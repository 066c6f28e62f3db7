# %% [markdown]
# Roots of a x^alpha + b x^beta + c = 0 through W_q.
#
# Each W_q value gives a candidate root; only candidates that actually
# satisfy the equation (under principal powers) are kept.

# %%
import math

from lambert_tsallis import Trinomial, solve_trinomial

t = Trinomial(1.0, math.pi, 1.0, math.e, -1.0)
rs = solve_trinomial(t)
print("x^pi + x^e = 1 ->", rs.real_roots())

# %%
# A negative constant under a non-integer power makes the W_q argument
# complex, yet both real roots come back.
t = Trinomial(1.0, 2.01, -5.0, 1.0, 6.0)
for r in solve_trinomial(t):
    print(f"{r.value!r:>28}  residual={r.residual:.1e}  {r.formula.value} {r.wq_branch}")

# %%
# As the exponent drifts to 2 the roots slide to those of x^2 - 5x + 6.
# At eps = 0.1 the curve no longer reaches zero.
for eps in (1e-1, 1e-2, 1e-3, 1e-4):
    roots = solve_trinomial((1.0, 2.0 + eps, -5.0, 1.0, 6.0)).real_roots()
    print(f"eps={eps:g}: {roots}")
