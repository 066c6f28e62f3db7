# %% [markdown]
# Real branches of W_q and where they meet.
#
# For q < 2 the curve w -> w exp_q(w) turns around at w_b = 1/(q-2). Left
# of that point sits the secondary branch, right of it the principal one.

# %%
import numpy as np

from lambert_tsallis import PRINCIPAL, SECONDARY, branch_point, wq_eval_real

for q in (0.5, 0.75, 1.0, 1.5, 5 / 3, 2.0, 3.0):
    bp = branch_point(q)
    if bp.exists:
        print(f"q={q:.4g}: branch point z_b={bp.z_b:.6f}, w_b={bp.w_b:.6f}")
    else:
        print(f"q={q:.4g}: no finite branch point")

# %%
# Both branches close in on w_b as z approaches z_b from the right.
q = 1.5
bp = branch_point(q)
for k in range(1, 7):
    z = bp.z_b + 10.0 ** -k
    hi = wq_eval_real(q, z, PRINCIPAL).w.real
    lo = wq_eval_real(q, z, SECONDARY).w.real
    print(f"z = z_b + 1e-{k}:  principal {hi: .8f}   secondary {lo: .8f}")

# %%
# q = 1 is the classical Lambert W; q > 1 bends the principal branch toward
# the asymptote w = 1/(q-1).
zs = np.linspace(0.0, 6.0, 7)
for q in (0.75, 1.0, 5 / 3):
    ws = [wq_eval_real(q, float(z)).w.real for z in zs]
    print(f"q={q:.4g}: " + "  ".join(f"{w:.4f}" for w in ws))
