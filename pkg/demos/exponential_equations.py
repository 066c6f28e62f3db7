# %% [markdown]
# A^x + B^x = C^x and phi^x - phibar^x = y sqrt(5), both reduced to
# trinomials in e^x.

# %%
from lambert_tsallis import fibonacci_number, solve_fermat, solve_fibonacci

for abc in [(4, 3, 5), (22, 4, 121), (2, 2, 4), (1, 2, 3)]:
    print(f"{abc}: x = {solve_fermat(*abc).real_roots()}")

# %%
# At even integers the left side is sqrt(5) times a Fibonacci number,
# so feeding F_n back in recovers n.
for n in (2, 10, 20, 40):
    x = solve_fibonacci(fibonacci_number(n)).real_roots()[0]
    print(f"F_{n} = {fibonacci_number(n)} -> x = {x:.12f}")

# %%
# Odd symmetry, and y = 0 handled directly.
print(solve_fibonacci(7).real_roots(), solve_fibonacci(-7).real_roots())
rs = solve_fibonacci(0)
print(rs.real_roots(), rs.warnings)
