# %% [markdown]
# # Hankel scans
# Curve series are rational, so some Hankel column eventually vanishes.
# Surface series with P_g >= 2 show no such tail.

# %%
import random

from mzeta.zeta_series import curve_zeta, rationality_scan, surface_leading_zeta

for g in (1, 2, 3):
    reps = rationality_scan(curve_zeta(g, 60), g, 20, exact=True)
    print(g, [(r.n, r.n0) for r in reps])

# %%
S = surface_leading_zeta(0, 2, 28)
for rep in rationality_scan(S, 4, 20, rng=random.Random(0)):
    print(rep.n, rep.classification, rep.verdicts[:3])
