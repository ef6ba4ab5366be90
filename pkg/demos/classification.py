# %% [markdown]
# Which abelian groups of order <= 25 admit a disjoint pair of spherical
# systems with chi = 1, i.e. a surface with p_g = q = 0?

# %%
import time

from isogenous import abelian_groups, automorphisms, classify_pgq0, invariants

for n in (8, 9, 16, 25):
    print(n, [G.orders for G in abelian_groups(n)])

# %%
print("|Aut((Z/2)^4)| =", len(automorphisms(abelian_groups(16)[-1])))

# %%
t = time.perf_counter()
res = classify_pgq0(25, count_pairs=True)
print(f"{time.perf_counter() - t:.1f}s")
for G in res.groups_found:
    S = res.witnesses[G]
    print(G.orders, "pairs up to Aut(G):", res.pair_counts[G])
    print("   ", S.system_c.coords(), "|", S.system_d.coords(), invariants(S).as_dict())
