# %% [markdown]
# # Two-parameter complete elliptic integrals
#
# K(k1, k2) from a product of one-parameter K's; E(k1, k2) by a Legendre
# series, a closed form through F4, and brute-force quadrature.

# %%
import math

import numpy as np

from ellip2 import (
    gen_E, gen_E_closed, gen_E_quad, gen_E_series, gen_E_symmetric, gen_K, gen_K_quad,
)
from ellip2.cli import main as cli

# %% [markdown]
# ## K(k1, k2): product formula vs quadrature

# %%
for p in [(0.3, 0.2), (0.5, 0.5), (0.8, 0.5), (0.9, 0.4)]:
    a, b = gen_K(*p).value, gen_K_quad(*p).value
    print(f"{p}: product {a:.15f} quadrature {b:.15f} rel {abs(a - b) / b:.1e}")

# %% [markdown]
# ## E(k1, k2): three routes

# %%
for p in [(0.3, 0.3), (0.6, 0.1), (0.8, 0.5), (0.2, 0.95), (0.7, 0.7)]:
    vals = {r.__name__: r(*p) for r in (gen_E_series, gen_E_closed, gen_E_quad)}
    spread = np.ptp([r.value for r in vals.values()]) / vals["gen_E_quad"].value
    print(p, {k: round(v.value, 15) for k, v in vals.items()}, f"spread {spread:.1e}")

# %% [markdown]
# ## Automatic choice of route

# %%
for p in [(0.5, 0.5), (0.0, 0.7), (0.0, 0.0)]:
    r = gen_E(*p)
    print(p, r.method.value, r.value, "terms/evals:", r.terms_or_evals)

# %% [markdown]
# ## The symmetric case k1 = k2 = k needs k < 1/sqrt(2)

# %%
for k in (0.1, 0.5, 0.7):
    print(k, gen_E_symmetric(k).value, gen_E_closed(k, k).value)
try:
    gen_E_symmetric(0.71)
except ValueError as exc:
    print("rejected:", exc)

# %% [markdown]
# ## The same from the command line

# %%
cli(["eval", "--k1", "0.5", "--k2", "0.3", "--method", "auto"])
cli(["verify", "--k1-range", "0", "0.6", "4", "--k2-range", "0", "0.6", "4"])
cli(["export", "--k1-range", "0.7", "0.9", "2", "--k2-range", "0.5", "0.5", "1"])
