# %% [markdown]
# Three infinite families of surfaces with p_g = q, built from disjoint pairs
# of spherical systems over (Z/2)^3 and (Z/2)^4.  For each one we look at the
# invariants, the H^2 decomposition by characters and the subgroup of G that
# acts trivially on cohomology.

# %%
from isogenous import family, fixed_locus, h2_table, invariants, lefschetz_number
from isogenous import numerically_trivial_subgroup

S = family("Z23", 1)
print(S)
print("genera:", S.cover_c.genus, S.cover_d.genus)
print(invariants(S).as_dict())

# %% [markdown]
# Each character chi contributes d_chi(C) * d_conj(chi)(D) to H^2.  Characters
# with a nonzero product are the mixing ones.

# %%
table = h2_table(S)
for row in table:
    if row.dim_c or row.dim_d:
        print(row.character.exponents, row.dim_c, row.dim_d, row.product)
print("mixing:", [c.exponents for c in table.mixing_set])

# %%
rep = numerically_trivial_subgroup(S)
print("subgroup:", sorted(g.coords for g in rep.subgroup.elements))
print("type:", rep.subgroup.cyclic_type(), "bound applies:", rep.bound_applies)

# %% [markdown]
# Lefschetz numbers two ways: from the fixed locus and from the trace on
# cohomology.  The elements with L(g) = e(S) are exactly the subgroup above.

# %%
e = invariants(S).euler
for g in S.group.elements:
    L = lefschetz_number(S, g)
    assert L == fixed_locus(S, g).euler_fixed
    print(g.coords, L, "<- trivial" if L == e else "")

# %%
for name, rs in (("Z23", range(1, 6)), ("Z23prime", range(1, 6)), ("Z24", range(1, 6))):
    for r in rs:
        T = family(name, r)
        inv = invariants(T)
        sub = numerically_trivial_subgroup(T).subgroup
        print(f"{name:9s} r={r}  g=({T.cover_c.genus},{T.cover_d.genus})  chi={inv.chi}  |sub|={sub.order}")
