# %% [markdown]
# # One-parameter building blocks
#
# The two-parameter integrals are assembled from ordinary complete elliptic
# integrals, the Jacobi function dn, Gauss 2F1 and Legendre functions of
# half-integer degree.  This script exercises each of them against an
# independent route.

# %%
import math

import numpy as np

from ellip2 import (
    Modulus, complete_E, complete_K, dn_even_moment, f0, gauss_2f1, jacobi_dn,
    legendre_laplace_oracle, legendre_p_halfint,
)
from ellip2.legendre import x_for_modulus

# %% [markdown]
# ## K and E by the arithmetic-geometric mean
# Legendre's relation E K' + E' K - K K' = pi/2 holds to rounding.

# %%
for k in (0.1, 0.5, 0.9, 0.999999):
    m = Modulus(k)
    K, E = complete_K(m), complete_E(m)
    Kc, Ec = complete_K(m.complement), complete_E(m.complement)
    print(f"k={k:<9} K={K:.16f} E={E:.16f}  Legendre defect={E*Kc + Ec*K - K*Kc - math.pi/2:+.1e}")

# %% [markdown]
# ## dn and its even moments
# dn(K) = k', and the integral of dn^(2m) over a quarter period is a Legendre
# function of degree m - 1/2.

# %%
k = 0.6
print("dn(K, 0.6) =", jacobi_dn(complete_K(k), k))
u = np.linspace(0, complete_K(k), 5)
print("dn on [0, K]:", np.round(jacobi_dn(u, k), 12))

x = x_for_modulus(k)
w = x + math.sqrt(x * x - 1)
for m in range(4):
    quad = dn_even_moment(m, k)
    closed = 0.5 * math.pi * w ** (0.5 - m) * legendre_p_halfint(m + 1, x)
    print(f"m={m}: quadrature {quad:.15f}  Legendre {closed:.15f}")

# %% [markdown]
# ## Legendre functions: recurrence vs Laplace integral

# %%
for n in range(6):
    print(f"P_{n - 1.5:+.1f}(1.5) recurrence {legendre_p_halfint(n, 1.5):.15f} "
          f"integral {legendre_laplace_oracle(n - 1.5, 1.5):.15f}")

# %% [markdown]
# ## 2F1(-1/2, -1/2; 1; z) in closed form

# %%
for z in (0.1, 0.5, 0.9):
    print(f"z={z}: series {gauss_2f1(-0.5, -0.5, 1, z):.15f}  closed {f0(z):.15f}")
