"""Appell F4 with parameters (-1/2, -1/2; 1, 1) and its reduction to K and E.

Three evaluation routes are kept side by side:

* :func:`f4_series` sums the double series by anti-diagonals, for any
  parameters, inside ``sqrt(X) + sqrt(Y) < 1``;
* :func:`f4_reduced` uses the product expansion in terms of Gauss functions
  of ``u`` and ``v`` where ``X = u(1-v)``, ``Y = v(1-u)``.  For these
  parameters it has exactly three terms;
* :func:`f4_bilinear_ke` is the same expansion written out in complete
  elliptic integrals of moduli ``sqrt(u)`` and ``sqrt(v)``.

The expansion coefficients are computed from their general term, not typed
in, and the test-suite refits them against the double series.
"""

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .config import DEFAULT_CONFIG, SeriesConfig
from .elliptic import Modulus, complete_KE
from .errors import ConvergenceError, DomainError
from .hyper import SMALL_Z, f0, gauss_2f1, z2_f0_double_prime, z_f0_prime

A_F4 = B_F4 = -0.5
C_F4 = C2_F4 = 1.0


def _poch(a, r):
    out = Fraction(1)
    for i in range(r):
        out *= a + i
    return out


def slater_coefficient(r, a, b, c, c2):
    """Exact r-th coefficient ``(a)_r (b)_r (1+a+b-c-c2)_r / (r! (c)_r (c2)_r)``."""
    a, b, c, c2 = (Fraction(p).limit_denominator(10**6) for p in (a, b, c, c2))
    return (_poch(a, r) * _poch(b, r) * _poch(1 + a + b - c - c2, r)
            / (math.factorial(r) * _poch(c, r) * _poch(c2, r)))


def reduction_coefficients(a=A_F4, b=B_F4, c=C_F4, c2=C2_F4, r_max=8):
    """Non-vanishing expansion coefficients, as exact fractions."""
    coeffs = [slater_coefficient(r, a, b, c, c2) for r in range(r_max + 1)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


# (1, -1/2, 1/64)
REDUCTION_COEFFICIENTS = reduction_coefficients()
assert len(REDUCTION_COEFFICIENTS) == 3

# Multipliers turning 2F1(1/2,1/2;2) and 2F1(3/2,3/2;3) into derivatives of
# f0: 4 f0' and 32 f0''.  Products of two such factors give 16 and 1024.
_C1 = float(REDUCTION_COEFFICIENTS[1]) * 16.0
_C2 = float(REDUCTION_COEFFICIENTS[2]) * 1024.0


def check_f4_domain(X, Y):
    if X < 0 or Y < 0:
        raise DomainError("F4 arguments must be non-negative here")
    if math.sqrt(X) + math.sqrt(Y) >= 1.0:
        raise DomainError(
            f"sqrt(X) + sqrt(Y) = {math.sqrt(X) + math.sqrt(Y):.6g} >= 1: F4 double series diverges"
        )


def f4_series(a, b, c, c2, X, Y, cfg: SeriesConfig = None, *, full_output=False):
    """Appell ``F4(a, b; c, c2; X, Y)`` by its double power series.

    Terms are grouped on anti-diagonals ``m + n = s``; summation stops after
    two consecutive negligible anti-diagonals.  ``cfg.max_terms`` caps the
    number of anti-diagonals.  With ``full_output`` the number of individual
    terms summed is returned too.

    Each anti-diagonal is written as ``P_s * S_s`` with
    ``P_s = (a)_s (b)_s / (s!)^2`` and
    ``S_s = sum_m (s!)^2 X^m Y^n / ((c)_m m! (c2)_n n!)``; the inner terms are
    formed from log-factorials so neither factor overflows.  Requires
    ``c, c2 > 0``.
    """
    cfg = cfg or DEFAULT_CONFIG
    X, Y = float(X), float(Y)
    check_f4_domain(X, Y)
    if not (c > 0 and c2 > 0):
        raise DomainError("f4_series supports c, c2 > 0 only")
    lx = math.log(X) if X > 0 else -math.inf
    ly = math.log(Y) if Y > 0 else -math.inf

    cap = 64
    # log(s!), log((c)_m m!), log((c2)_n n!)
    lfac = np.zeros(cap)
    lc = np.zeros(cap)
    lc2 = np.zeros(cap)
    p = 1.0
    total = 1.0
    terms = 1
    small = 0
    for s in range(1, cfg.max_terms + 1):
        if s >= cap:
            cap *= 2
            lfac, lc, lc2 = (np.resize(arr, cap) for arr in (lfac, lc, lc2))
        lfac[s] = lfac[s - 1] + math.log(s)
        lc[s] = lc[s - 1] + math.log((c + s - 1) * s)
        lc2[s] = lc2[s - 1] + math.log((c2 + s - 1) * s)
        p *= (a + s - 1) * (b + s - 1) / (s * s)

        m = np.arange(s + 1)
        with np.errstate(invalid="ignore"):
            powers = np.where(m > 0, m * lx, 0.0) + np.where(m < s, (s - m) * ly, 0.0)
        expo = 2.0 * lfac[s] - lc[: s + 1] - lc2[s::-1] + powers
        diag = p * float(np.exp(expo).sum())  # positive terms: no cancellation
        total += diag
        terms += s + 1
        if cfg.negligible(diag, total):
            small += 1
            if small == 2:
                return (total, terms) if full_output else total
        else:
            small = 0
    raise ConvergenceError(f"F4 series not converged after {cfg.max_terms} anti-diagonals")


class SplitUV(NamedTuple):
    """Solution of ``u(1-v) = X, v(1-u) = Y`` and its t-derivatives at fixed x."""

    u: float
    v: float
    u_dot: float
    v_dot: float


def solve_uv(t, x, x_minus_1=None):
    """Split the F4 arguments ``X = 2t/(1+x)``, ``Y = (x-1)/(x+1)``.

    Takes the root that vanishes as t -> 0, x -> 1:

        u = (1 + t - D)/(x + 1),  v = (x - t - D)/(x + 1),
        D = sqrt(1 - 2 t x + t^2),

    evaluated in the rationalised forms ``u = 2t/(1+t+D)`` and
    ``v = (x-1)/(x-t+D)``.  Pass ``x_minus_1`` when it is known more
    accurately than ``x - 1``.
    """
    t, x = float(t), float(x)
    xm1 = x - 1.0 if x_minus_1 is None else float(x_minus_1)
    if t < 0 or xm1 < 0:
        raise DomainError("need t >= 0 and x >= 1")
    disc = (1.0 - t) ** 2 - 2.0 * t * xm1
    if disc <= 0.0:
        raise DomainError(f"1 - 2tx + t^2 = {disc:.3g} <= 0: no real splitting")
    D = math.sqrt(disc)
    u = 2.0 * t / (1.0 + t + D)
    v = xm1 / (x - t + D)
    r = (x - t) / D
    return SplitUV(u, v, (1.0 + r) / (x + 1.0), (r - 1.0) / (x + 1.0))


def split_from_moduli(k1, k2):
    """Same split written in the moduli (lower roots).

    Kept as an independent check on :func:`solve_uv`; it cancels badly for
    small moduli and is not used on the evaluation path.
    """
    k1p = math.sqrt(1.0 - k1 * k1)
    k2p = math.sqrt(1.0 - k2 * k2)
    kp = math.sqrt(1.0 - k1 * k1 - k2 * k2)
    den = (1.0 + k2p) ** 2
    u = 2.0 * (k1 * k1 + k2p - k1p * kp) / den
    v = (1.0 - 2.0 * k1 * k1 + k2p * k2p - 2.0 * k1p * kp) / den
    pref = k2p / (den * kp * k1p)
    w = 2.0 * kp * kp + k2 * k2
    return SplitUV(u, v, pref * (2.0 * kp * k1p + w), pref * (-2.0 * kp * k1p + w))


def _check_unit(u, v):
    if not (0.0 <= u < 1.0 and 0.0 <= v < 1.0):
        raise DomainError(f"(u, v) = ({u}, {v}) outside [0, 1)^2")


def f4_reduced(u, v):
    """``F4(-1/2,-1/2;1,1; u(1-v), v(1-u))`` from the three-term expansion.

    ``f0(u) f0(v) - 8 [u f0'(u)][v f0'(v)] + 16 [u^2 f0''(u)][v^2 f0''(v)]``
    """
    u, v = float(u), float(v)
    _check_unit(u, v)
    return (f0(u) * f0(v)
            + _C1 * (z_f0_prime(u) * z_f0_prime(v))
            + _C2 * (z2_f0_double_prime(u) * z2_f0_double_prime(v)))


def _ke(z):
    return complete_KE(Modulus.from_parameter(z))


def f4_bilinear_ke(u, v):
    """The reduced F4 written as a bilinear form in K and E.

    With ``E_u = E(sqrt u)``, ``K_u = K(sqrt u)`` and likewise for v::

        (4/pi^2) [ 6 E_u E_v - 2(2-v) E_u K_v - 2(2-u) E_v K_u
                   + (3 - u - v) K_u K_v ]
    """
    u, v = float(u), float(v)
    _check_unit(u, v)
    Ku, Eu = _ke(u)
    Kv, Ev = _ke(v)
    # each product is grouped so that swapping u and v is exact
    cross = -2.0 * (2.0 - v) * (Eu * Kv) - 2.0 * (2.0 - u) * (Ev * Ku)
    return 4.0 / math.pi**2 * (6.0 * (Eu * Ev) + cross + (3.0 - (u + v)) * (Ku * Kv))


def _dke_du(z):
    """d/dz of (K(sqrt z), E(sqrt z)).

    ``dE/dz = (E - K)/(2z)``, ``dK/dz = (E/(1-z) - K)/(2z)``; hypergeometric
    series below SMALL_Z where those quotients cancel.
    """
    if z < SMALL_Z:
        dK = math.pi / 8.0 * gauss_2f1(1.5, 1.5, 2.0, z)
        dE = -math.pi / 8.0 * gauss_2f1(0.5, 1.5, 2.0, z)
        return dK, dE
    K, E = _ke(z)
    return (E / (1.0 - z) - K) / (2.0 * z), (E - K) / (2.0 * z)


def f4_bilinear_grad(u, v):
    """Partial derivatives of :func:`f4_bilinear_ke` in u and v."""
    u, v = float(u), float(v)
    _check_unit(u, v)
    Ku, Eu = _ke(u)
    Kv, Ev = _ke(v)
    dKu, dEu = _dke_du(u)
    dKv, dEv = _dke_du(v)
    s = 4.0 / math.pi**2
    gu = s * (6.0 * dEu * Ev - 2.0 * (2.0 - v) * dEu * Kv + 2.0 * Ev * Ku
              - 2.0 * (2.0 - u) * Ev * dKu - Ku * Kv + (3.0 - (u + v)) * dKu * Kv)
    gv = s * (6.0 * Eu * dEv - 2.0 * (2.0 - u) * dEv * Ku + 2.0 * Eu * Kv
              - 2.0 * (2.0 - v) * Eu * dKv - Ku * Kv + (3.0 - (u + v)) * Ku * dKv)
    return gu, gv


def f4_dt(t, x, x_minus_1=None):
    """``d/dt F4(-1/2,-1/2;1,1; 2t/(1+x), (x-1)/(x+1))`` at fixed x.

    Chain rule through the (u, v) split.  Regular at t = 0.
    """
    split = solve_uv(t, x, x_minus_1)
    gu, gv = f4_bilinear_grad(split.u, split.v)
    return gu * split.u_dot + gv * split.v_dot
