# %% [markdown]
# # Reducing Appell F4 to elliptic integrals
#
# F4(-1/2,-1/2;1,1;X,Y) is evaluated three ways: the raw double series, a
# three-term product expansion in 2F1's, and that expansion written out in K
# and E.  The expansion coefficients are refit from data to show which
# values are right.

# %%
import math

import numpy as np

from ellip2 import complete_KE, f4_bilinear_ke, f4_reduced, f4_series, gauss_2f1, reduction_coefficients

print("exact expansion coefficients:", [str(c) for c in reduction_coefficients()])

# %% [markdown]
# ## Three routes at a few points

# %%
for u, v in [(0.1, 0.1), (0.3, 0.2), (0.5, 0.25), (0.45, 0.45)]:
    X, Y = u * (1 - v), v * (1 - u)
    print(f"u={u:<5} v={v:<5} series {f4_series(-.5, -.5, 1, 1, X, Y):.15f} "
          f"reduced {f4_reduced(u, v):.15f} K/E form {f4_bilinear_ke(u, v):.15f}")

# %% [markdown]
# ## Least-squares refit of the coefficients
# Basis functions (uv)^r 2F1(r-1/2, r-1/2; 1+r; u) 2F1(..; v), r = 0, 1, 2.

# %%
rng = np.random.default_rng(1)
rows, rhs = [], []
while len(rows) < 50:
    u, v = rng.uniform(0, 0.9, 2)
    if u + v > 0.9:
        continue
    rows.append([(u * v) ** r * gauss_2f1(r - .5, r - .5, 1 + r, u) * gauss_2f1(r - .5, r - .5, 1 + r, v)
                 for r in range(3)])
    rhs.append(f4_series(-.5, -.5, 1, 1, u * (1 - v), v * (1 - u)))
coef, *_ = np.linalg.lstsq(np.array(rows), np.array(rhs), rcond=None)
print("fitted:", coef, " 1/64 =", 1 / 64, " 1/16 =", 1 / 16)

# %% [markdown]
# ## The alternative K/E coefficients do not fit

# %%
u, v = 0.3, 0.2
Ku, Eu = complete_KE(math.sqrt(u))
Kv, Ev = complete_KE(math.sqrt(v))
alt = 4 / math.pi**2 * (66 * Eu * Ev - 32 * (2 - v) * Eu * Kv - 32 * (2 - u) * Ev * Ku
                        + (63 - 31 * (u + v) + 15 * u * v) * Ku * Kv)
print(f"alternative {alt:.6f}  validated {f4_bilinear_ke(u, v):.6f}  "
      f"series {f4_series(-.5, -.5, 1, 1, u * (1 - v), v * (1 - u)):.6f}")
