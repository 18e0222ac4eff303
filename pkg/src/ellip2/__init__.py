"""Two-parameter complete elliptic integrals K(k1, k2) and E(k1, k2).

Building blocks (one-parameter K, E, dn; Gauss 2F1; Legendre functions of
half-integer degree; Appell F4 and its reduction; adaptive quadrature) are
exposed alongside the two-parameter evaluators.
"""

from .appell import (
    f4_bilinear_grad, f4_bilinear_ke, f4_dt, f4_reduced, f4_series,
    reduction_coefficients, slater_coefficient, solve_uv,
)
from .config import DEFAULT_CONFIG, SeriesConfig
from .elliptic import (
    Modulus, complete_E, complete_K, complete_KE, dE_dk, dK_dk, dn_even_moment, jacobi_dn,
)
from .errors import ConvergenceError, DomainError
from .hyper import f0, f0_double_prime, f0_prime, gauss_2f1
from .legendre import legendre_laplace_oracle, legendre_p_halfint, modulus_for_x, x_for_modulus
from .oracles import moment_closed_form, moment_integral, oracle_E2, oracle_I_stage, oracle_K2
from .params import ModulusPair, ReducedParams, reduce_params
from .quadrature import QuadResult, gauss_kronrod_panel, gauss_legendre, integrate_1d, integrate_2d
from .twoparam import (
    EvalResult, Method, gen_E, gen_E_closed, gen_E_quad, gen_E_series, gen_E_symmetric,
    gen_K, gen_K_quad,
)

__version__ = "0.1.0"
