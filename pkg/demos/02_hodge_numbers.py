# %% [markdown]
# # (k,0)-Hodge numbers of products and symmetric powers

# %%
from mzeta.hodge import E, brute_force_sym_invariants, curve, kunneth_product, pg, pg_sym_formula, psi_h, surface, sym_power

print(kunneth_product(E, E))
print(psi_h(kunneth_product(curve(2), curve(3))))

# %%
S = surface(0, 2)
for n in range(5):
    h = sym_power(S, n)
    print(n, h.h, pg(h), pg_sym_formula(2, n))

# %%
# the generating function agrees with a direct trace computation over S_n
print(sym_power(surface(1, 2), 3) == brute_force_sym_invariants(surface(1, 2), 3))
