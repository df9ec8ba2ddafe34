# %% [markdown]
# # Rational closed forms
# Series in the symbols L and E, checked by multiplying through by the denominator.

# %%
from mzeta.zeta_series import id_measure_series, id_rational_form, rational_check_mul, series_tex

for name in ("P1", "elliptic", "P2"):
    S = id_measure_series(name, 50)
    P, Q = id_rational_form(name)
    print(name, rational_check_mul(S, P, Q), series_tex(P, Q))

# %%
S = id_measure_series("P2", 4)
for n, c in enumerate(S.coefficients):
    print(n, c)
