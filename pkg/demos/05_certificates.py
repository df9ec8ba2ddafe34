# %% [markdown]
# # Irrationality certificates
# The identity term of the determinant expansion carries a top Hodge number
# that no other term can reach, so the determinant cannot vanish.

# %%
from mzeta.irrationality import certify_irrational, star_expansion

for t in star_expansion(3, 2):
    print(t.sigma, t.sign, t.indices)

# %%
cert = certify_irrational(0, 2, 4, (1, 10))
print(cert.render_text())

# %%
print(certify_irrational(2, 4, 5, (1, 30)).conclusion)
