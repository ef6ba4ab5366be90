# %% [markdown]
# Counting singular fibres.  Every genus 3 or genus 5 fibration coming from a
# numerically trivial involution has its singular fibres constrained by a small
# system of linear equations; solving them lists the possible configurations.

# %%
from isogenous.ledger import load_tables, solve_g3, solve_g3z4, solve_g5

tables = load_tables()
for case, t in tables.items():
    print(case, t.columns)

# %%
for e_b in (0, 2):
    s = solve_g3(e_b)
    print("genus 3, e(B) =", e_b, s.nonzero(), "free:", s.free_variables)

# %%
s = solve_g5(2)
for label, sols in s.grouped().items():
    for sol in sols:
        print(label, {k: v for k, v in sol.items() if v})

# %% [markdown]
# The Z/4 case sweeps H^2 and hbar over a box and keeps only parameters that
# produce solutions.  Widening the box changes nothing.

# %%
for chi in (3, 5, 10):
    sols = solve_g3z4(chi)
    first = sols.solutions[0]
    print(chi, len(sols), {k: first[k] for k in ("H2", "hbar", "k1", "k2", "k3", "x2")})
    print("   x1 + x3 + x7 =", {s["x1"] + s["x3"] + s["x7"] for s in sols})
