# %% [markdown]
# # Factoring in the monoid C
# Every polynomial with positive leading coefficient splits uniquely into
# primes and primitive irreducibles.

# %%
from mzeta.intpoly import IntPolynomial, factor_in_C
from mzeta.monoid_ring import RingElement, embed_poly

f = IntPolynomial.parse("6+12t+6t^2")
print(factor_in_C(f))

# %%
# products of larger irreducibles come back intact
g = IntPolynomial.parse("1+t+t^3") * IntPolynomial.parse("-2+t^2") ** 2
fac = factor_in_C(g)
print(fac, fac.expand() == g)

# %%
# the embedding into the monoid ring turns multiplication into word concatenation
x = RingElement.from_word(embed_poly(f))
print(x, "|", x * x)
