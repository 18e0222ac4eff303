"""The two-parameter complete elliptic integrals K(k1, k2) and E(k1, k2).

    K(k1, k2) = int_0^{pi/2} int_0^{pi/2} (1 - k1^2 sin^2 a - k2^2 sin^2 b)^(-1/2)
    E(k1, k2) = int_0^{pi/2} int_0^{pi/2} (1 - k1^2 sin^2 a - k2^2 sin^2 b)^(+1/2)

K has a product formula in one-parameter K's.  E is available three ways:
a Legendre-function series in t, a closed form through the reduced Appell
F4, and direct quadrature.  :func:`gen_E` picks one and records which.
"""

import enum
import math
from typing import NamedTuple

from .appell import check_f4_domain, f4_bilinear_ke, f4_bilinear_grad, solve_uv
from .config import DEFAULT_CONFIG, SeriesConfig
from .elliptic import Modulus, complete_K
from .errors import ConvergenceError, DomainError
from .legendre import scaled_sequence
from .oracles import oracle_E2, oracle_K2
from .params import ModulusPair, reduce_params

_EPS = 2.0**-52
PI2_4 = 0.25 * math.pi**2
SYMMETRIC_K_MAX = 1.0 / math.sqrt(2.0)


class Method(str, enum.Enum):
    QUADRATURE = "quadrature"
    LEGENDRE_SERIES = "legendre_series"
    F4_CLOSED = "f4_closed"
    PRODUCT_FORMULA = "product_formula"


class EvalResult(NamedTuple):
    value: float
    method: Method
    error_estimate: float
    terms_or_evals: int


def _pair(k1, k2=None):
    if isinstance(k1, ModulusPair):
        return k1
    return ModulusPair(k1, k2)


def gen_K(k1, k2=None) -> EvalResult:
    """K(k1, k2) from the product formula ``2/(1+k2') K(k3) K'(k4)``.

    ``k3 = (k1' - k')/(1 + k2')``, ``k4 = (k1' + k')/(1 + k2')`` and
    ``K'(k4) = K(sqrt(1 - k4^2))``.  Both k3 and the complement of k4 are
    evaluated in cancellation-free forms.
    """
    mp = _pair(k1, k2)
    a, b, c = mp.k1_prime, mp.k_prime, mp.k2_prime
    q1, q2 = mp.k1**2, mp.k2**2
    k3 = q2 / ((a + b) * (1.0 + c))
    k4 = (a + b) / (1.0 + c)
    # (1+c)^2 (1 - k4^2) = 2 k1^2 [1 + (2 - k1^2 - k2^2)/(c + ab)]
    k4c = math.sqrt(2.0 * q1 * (1.0 + (2.0 - q1 - q2) / (c + a * b))) / (1.0 + c)
    value = 2.0 / (1.0 + c) * complete_K(Modulus(k3)) * complete_K(Modulus(k4c, k4))
    return EvalResult(value, Method.PRODUCT_FORMULA, 16 * _EPS * value, 2)


def gen_K_quad(k1, k2=None, tol=1e-12) -> EvalResult:
    res = oracle_K2(_pair(k1, k2), tol)
    return EvalResult(res.value, Method.QUADRATURE, res.error_estimate, res.evals)


def gen_E_quad(k1, k2=None, tol=1e-12) -> EvalResult:
    res = oracle_E2(_pair(k1, k2), tol)
    return EvalResult(res.value, Method.QUADRATURE, res.error_estimate, res.evals)


def gen_E_series(k1, k2=None, cfg: SeriesConfig = None) -> EvalResult:
    """E(k1, k2) from the series in Legendre functions of degree n - 3/2.

    With ``c_n = (-1/2)_n (1/2)_n / (n!)^2`` the double integral is

        E = (1/4) sqrt(1 - k1^2/2 - k2^2/2) * pi^2 sqrt(2A)
            * sum_n c_n t^(n-1/2) P_{n-3/2}(x),

    which simplifies to ``(pi^2/4) sqrt(k2') sum_n c_n t^n P_{n-3/2}(x)``;
    that form is used so that k1 = 0 (t = 0) needs no special case.  Terms
    decay like ``(k1^2/k2'^2)^n``.
    """
    cfg = cfg or DEFAULT_CONFIG
    mp = _pair(k1, k2)
    rp = reduce_params(mp)
    t, x = rp.t, rp.x
    if not t < 1.0:
        raise DomainError(f"t = {t:.6g} >= 1: Legendre series does not decay")
    ratio = (mp.k1 / mp.k2_prime) ** 2

    total = 0.0
    coeff = 1.0
    small = 0
    seq = scaled_sequence(x, t)
    for n in range(cfg.max_terms):
        if n:
            coeff *= (n - 1.5) * (n - 0.5) / (n * n)
        term = coeff * next(seq)
        total += term
        if n and cfg.negligible(term, total):
            small += 1
            if small == 2:
                break
        else:
            small = 0
    else:
        raise ConvergenceError(f"Legendre series not converged in {cfg.max_terms} terms")
    scale = PI2_4 * math.sqrt(mp.k2_prime)
    tail = abs(term) * ratio / (1.0 - ratio) if ratio > 0 else 0.0
    value = scale * total
    err = scale * tail + (n + 1) * _EPS * abs(value)
    return EvalResult(value, Method.LEGENDRE_SERIES, err, n + 1)


def _closed_core(t, x, x_minus_1, one_plus_k2p):
    # E = -(pi^2/2) k1 sqrt((x+1)/2) t d/dt[t^(-1/2) F4]
    #   = (pi^2/8) (1 + k2') (F4 - 2 t dF4/dt)
    # using k1 sqrt(t) sqrt((x+1)/2) = t (1 + k2') / 2.
    split = solve_uv(t, x, x_minus_1)
    F = f4_bilinear_ke(split.u, split.v)
    gu, gv = f4_bilinear_grad(split.u, split.v)
    Ft = gu * split.u_dot + gv * split.v_dot
    return 0.125 * math.pi**2 * one_plus_k2p * (F - 2.0 * t * Ft)


def gen_E_closed(k1, k2=None) -> EvalResult:
    """E(k1, k2) from the reduced Appell F4 and its t-derivative.

    The bracket ``d/dt [t^(-1/2) F4]`` is expanded analytically, with
    ``dF4/dt`` from the chain rule through the (u, v) split.  Once the
    prefactor is simplified the expression is regular at t = 0, so k1 = 0 is
    accepted as well.
    """
    mp = _pair(k1, k2)
    rp = reduce_params(mp)
    check_f4_domain(rp.X, rp.Y)
    value = _closed_core(rp.t, rp.x, rp.x_minus_1, 1.0 + mp.k2_prime)
    # rounding only; conditioning degrades as k1^2 + k2^2 -> 1 through 1/k'
    err = 64 * _EPS * abs(value) / max(mp.k_prime, _EPS)
    return EvalResult(value, Method.F4_CLOSED, err, 0)


def gen_E_symmetric(k) -> EvalResult:
    """E(k, k) through the F4 arguments (4 xi, xi^2).

    ``xi = (1 + A - sqrt(1 + 2A))/A = k^2/(1 + k')^2``; the double series
    converges iff ``2 sqrt(xi) + xi < 1``, i.e. k < 1/sqrt(2).
    """
    k = float(k)
    if not 0.0 <= k < SYMMETRIC_K_MAX or not 2.0 * k * k < 1.0:
        raise DomainError(
            f"k1 = k2 = {k} violates k < 1/sqrt(2) = {SYMMETRIC_K_MAX:.10f} "
            "required for convergence of the F4 series"
        )
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    xi = (k / (1.0 + kp)) ** 2
    if not 2.0 * math.sqrt(xi) + xi < 1.0:
        raise DomainError(f"2 sqrt(xi) + xi >= 1 at k = {k}")
    # From X = 4 xi = 2t/(1+x), Y = xi^2 = (x-1)/(x+1):
    xm1 = 2.0 * xi * xi / (1.0 - xi * xi)
    t = 4.0 * xi / (1.0 - xi * xi)
    value = _closed_core(t, 1.0 + xm1, xm1, 2.0 / (1.0 + xi))
    err = 64 * _EPS * abs(value) / max(kp, _EPS)
    return EvalResult(value, Method.F4_CLOSED, err, 0)


def gen_E(k1, k2=None, cfg: SeriesConfig = None, tol=1e-12) -> EvalResult:
    """E(k1, k2) by the first applicable route.

    Closed form when k1 > 0 and the F4 series converges, else the Legendre
    series when t < 1, else quadrature.
    """
    mp = _pair(k1, k2)
    rp = reduce_params(mp)
    if rp.t > 0 and rp.f4_radius < 1.0:
        return gen_E_closed(mp)
    if rp.t < 1.0:
        return gen_E_series(mp, cfg)
    return gen_E_quad(mp, tol=tol)
