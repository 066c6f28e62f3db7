# %% [markdown]
# W_q is multivalued off the real line. The complex evaluator starts damped
# Newton from a fixed seed grid and reports every distinct solution it
# reaches, sorted by modulus.

# %%
from lambert_tsallis import exp_q, wq_eval_complex

for q, z in [(1.0, -0.2), (0.7, 2 - 1.5j), (3.0, 2.2 - 3.8j)]:
    print(f"q={q}, z={z}")
    for r in wq_eval_complex(q, z):
        check = abs(r.w * exp_q(q, r.w) - z)
        print(f"  {r.branch}: w={r.w:.10g}  |w exp_q(w) - z|={check:.1e}")
