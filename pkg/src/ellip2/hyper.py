"""Gauss hypergeometric series and the K/E closed forms of F(-1/2,-1/2;1;z).

Only three parameter triples matter downstream: (-1/2,-1/2;1), (1/2,1/2;2)
and (3/2,3/2;3).  The second and third are first and second derivatives of
the first (up to constants 4 and 32), and all three reduce to complete
elliptic integrals of modulus ``sqrt(z)``.  The plain series is kept for
general parameters and as the reference those closed forms are tested
against.
"""

import math
from typing import NamedTuple

from .config import DEFAULT_CONFIG, SeriesConfig
from .elliptic import Modulus, complete_KE
from .errors import ConvergenceError, DomainError

# The raw series is refused beyond this |z|; near 1 use the closed forms.
SERIES_Z_LIMIT = 0.95

# Below this argument the derivative products switch to their power series,
# where the closed forms lose relative accuracy to cancellation.
SMALL_Z = 0.05


def _is_nonpositive_int(c):
    return c <= 0 and float(c).is_integer()


class HyperParams(NamedTuple):
    a: float
    b: float
    c: float

    def validate(self):
        if _is_nonpositive_int(self.c):
            raise DomainError(f"c={self.c} is a non-positive integer")
        return self


def _rgamma(x):
    if _is_nonpositive_int(x):
        return 0.0
    return 1.0 / math.gamma(x)


def gauss_2f1(a, b, c, z, cfg: SeriesConfig = None, *, full_output=False):
    """Sum ``2F1(a, b; c; z)`` from its power series.

    The series stops after two consecutive terms that are negligible under
    ``cfg`` (a single small term can be an accident of alternating-sign
    coefficients).  At exactly ``z = 1`` Gauss's summation theorem is used
    when ``c - a - b > 0``.

    Returns the sum, or ``(sum, terms_used)`` with ``full_output=True``.
    """
    HyperParams(a, b, c).validate()
    cfg = cfg or DEFAULT_CONFIG
    z = float(z)
    if z == 1.0:
        if c - a - b <= 0:
            raise DomainError("series diverges at z = 1 unless c - a - b > 0")
        val = math.gamma(c) * math.gamma(c - a - b) * _rgamma(c - a) * _rgamma(c - b)
        return (val, 0) if full_output else val
    if abs(z) >= 1.0:
        raise DomainError(f"|z| = {abs(z)} >= 1 is outside the disc of convergence")
    if abs(z) > SERIES_Z_LIMIT:
        raise DomainError(f"|z| = {abs(z)} > {SERIES_Z_LIMIT}: series refused, use a closed form")

    total = term = 1.0
    small = 0
    n = 0
    while n < cfg.max_terms:
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        n += 1
        total += term
        if cfg.negligible(term, total):
            small += 1
            if small == 2:
                return (total, n + 1) if full_output else total
        else:
            small = 0
    raise ConvergenceError(f"2F1({a},{b};{c};{z}) not converged after {cfg.max_terms} terms")


def _ke_sqrt(z):
    """K and E at modulus sqrt(z), with the complement taken as sqrt(1-z)."""
    if not 0.0 <= z < 1.0:
        raise DomainError(f"z={z} outside [0, 1)")
    return complete_KE(Modulus.from_parameter(z))


def f0(z):
    """``F(-1/2,-1/2;1;z) = (2/pi) [2E - (1-z)K]`` at modulus ``sqrt(z)``."""
    z = float(z)
    K, E = _ke_sqrt(z)
    return 2.0 / math.pi * (2.0 * E - (1.0 - z) * K)


def f0_prime(z, *, limit_at_zero=False):
    """First derivative of ``f0``: ``(E - (1-z)K) / (pi z)``.

    z = 0 is rejected unless ``limit_at_zero`` asks for the value 1/4.
    """
    z = float(z)
    if z == 0.0:
        if limit_at_zero:
            return 0.25
        raise DomainError("f0_prime is 0/0 at z = 0; pass limit_at_zero=True")
    K, E = _ke_sqrt(z)
    return (E - (1.0 - z) * K) / (math.pi * z)


def f0_double_prime(z, *, limit_at_zero=False):
    """Second derivative of ``f0``: ``((2-z)K - 2E) / (2 pi z^2)``; limit 1/32."""
    z = float(z)
    if z == 0.0:
        if limit_at_zero:
            return 1.0 / 32.0
        raise DomainError("f0_double_prime is 0/0 at z = 0; pass limit_at_zero=True")
    K, E = _ke_sqrt(z)
    return ((2.0 - z) * K - 2.0 * E) / (2.0 * math.pi * z * z)


def z_f0_prime(z):
    """``z * f0'(z)``, finite and accurate down to z = 0."""
    z = float(z)
    if z < SMALL_Z:
        if z < 0.0:
            raise DomainError(f"z={z} < 0")
        return 0.25 * z * gauss_2f1(0.5, 0.5, 2.0, z)
    K, E = _ke_sqrt(z)
    return (E - (1.0 - z) * K) / math.pi


def z2_f0_double_prime(z):
    """``z**2 * f0''(z)``, finite and accurate down to z = 0."""
    z = float(z)
    if z < SMALL_Z:
        if z < 0.0:
            raise DomainError(f"z={z} < 0")
        return z * z / 32.0 * gauss_2f1(1.5, 1.5, 3.0, z)
    K, E = _ke_sqrt(z)
    return ((2.0 - z) * K - 2.0 * E) / (2.0 * math.pi)
