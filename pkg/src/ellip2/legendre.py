"""Legendre functions P_nu(x), x >= 1, for half-odd-integer degree nu = n - 3/2.

The two lowest degrees come from complete elliptic integrals,

    P_{-1/2}(x) = (2/pi) K(k) / sqrt(x + s),
    P_{+1/2}(x) = (2/pi) E(k) * sqrt(x + s),

with ``s = sqrt(x^2 - 1)``, ``k' = 1/(x + s)`` and ``k^2 = 2s/(x + s)``.
P_{-3/2} = P_{1/2} by the reflection nu -> -nu - 1, and higher degrees
follow from the three-term recurrence in the degree, which is stable in the
increasing direction for x >= 1.
"""

import math

import numpy as np

from .elliptic import Modulus, complete_KE
from .errors import ConvergenceError, DomainError
from .quadrature import integrate_1d

MAX_X = 1e12


def _check_x(x):
    x = float(x)
    if not x >= 1.0:
        raise DomainError(f"x={x} < 1: only the region x >= 1 is supported")
    if x > MAX_X:
        raise DomainError(f"x={x} exceeds the supported range x <= {MAX_X:g}")
    return x


def modulus_for_x(x):
    """The modulus paired with ``x`` in the elliptic representation.

    Uses ``k^2 = 2s/(x+s)`` and ``k' = 1/(x+s)``, both free of cancellation
    as x -> 1+.
    """
    x = _check_x(x)
    s = math.sqrt((x - 1.0) * (x + 1.0))
    e = x + s
    return Modulus(math.sqrt(2.0 * s / e), 1.0 / e)


def x_for_modulus(k):
    """Inverse map: ``x^2 = (1 - k^2/2)^2 / (1 - k^2)``."""
    k = float(k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"k={k} outside [0, 1)")
    return (1.0 - 0.5 * k * k) / math.sqrt((1.0 - k) * (1.0 + k))


def _base_pair(x):
    """(P_{1/2}(x), P_{-1/2}(x))."""
    x = _check_x(x)
    s = math.sqrt((x - 1.0) * (x + 1.0))
    root = math.sqrt(x + s)
    K, E = complete_KE(Modulus(math.sqrt(2.0 * s / (x + s)), 1.0 / (x + s)))
    return 2.0 / math.pi * E * root, 2.0 / math.pi * K / root


def scaled_sequence(x, scale=1.0):
    """Yield ``scale**n * P_{n-3/2}(x)`` for n = 0, 1, 2, ... without end.

    Scaling inside the recurrence keeps the terms representable when
    ``P_{n-3/2}(x)`` alone would overflow.
    """
    p_half, p_mhalf = _base_pair(x)
    q_prev, q = p_half, scale * p_mhalf
    yield q_prev
    yield q
    n = 1
    s2 = scale * scale
    while True:
        # (n - 1/2) P_{n-1/2} = (2n - 2) x P_{n-3/2} - (n - 3/2) P_{n-5/2}
        q_next = ((2 * n - 2) * x * scale * q - (n - 1.5) * s2 * q_prev) / (n - 0.5)
        q_prev, q = q, q_next
        n += 1
        yield q


def legendre_p_halfint(n, x):
    """``P_{n-3/2}(x)`` for integer ``n >= 0`` and ``1 <= x <= 1e12``."""
    if int(n) != n or n < 0:
        raise DomainError(f"degree index n={n} must be a non-negative integer")
    for i, p in enumerate(scaled_sequence(x)):
        if i == n:
            return p


def legendre_laplace_oracle(nu, x, tol=1e-11):
    """``P_nu(x) = (1/pi) int_0^pi (x + sqrt(x^2-1) cos t)^nu dt`` by quadrature.

    Independent of the elliptic-integral route; used to check it.
    """
    x = _check_x(x)
    s = math.sqrt((x - 1.0) * (x + 1.0))
    res = integrate_1d(
        lambda t: (x + s * np.cos(t)) ** nu,
        0.0, math.pi, tol, vectorized=True,
    )
    if not res.converged:
        raise ConvergenceError(f"Laplace integral for P_{nu}({x}) did not reach tol={tol}")
    return res.value / math.pi
