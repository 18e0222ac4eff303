"""Brute-force quadrature of the defining integrals and intermediate stages.

Nothing here uses the series or F4 machinery, so these values serve as the
reference the other routes are checked against.
"""

import math

import numpy as np

from .elliptic import Modulus, complete_E
from .errors import ConvergenceError, DomainError
from .legendre import legendre_p_halfint
from .params import ModulusPair, t_from_AB, x_from_AB
from .quadrature import QuadResult, integrate_1d, integrate_2d

_SQUARE = (0.0, 0.5 * math.pi)
STAGES = ("y_integral", "z_integral", "z_moment")


def _require(res: QuadResult, what):
    if not res.converged:
        raise ConvergenceError(f"{what}: quadrature stalled at error {res.error_estimate:.3g}")
    return res


def oracle_E2(mp: ModulusPair, tol=1e-12) -> QuadResult:
    """``int int sqrt(1 - k1^2 sin^2 a - k2^2 sin^2 b)`` over [0, pi/2]^2."""
    q1, q2 = mp.k1 * mp.k1, mp.k2 * mp.k2

    def f(a, b):
        return np.sqrt(1.0 - q1 * np.sin(a) ** 2 - q2 * np.sin(b) ** 2)

    return _require(integrate_2d(f, _SQUARE, _SQUARE, tol), "E(k1,k2)")


def oracle_K2(mp: ModulusPair, tol=1e-12) -> QuadResult:
    """Same square, reciprocal square root integrand."""
    q1, q2 = mp.k1 * mp.k1, mp.k2 * mp.k2

    def f(a, b):
        return 1.0 / np.sqrt(1.0 - q1 * np.sin(a) ** 2 - q2 * np.sin(b) ** 2)

    return _require(integrate_2d(f, _SQUARE, _SQUARE, tol), "K(k1,k2)")


def I_from_E2(E2, mp: ModulusPair):
    """``I = int_0^pi int_0^pi sqrt(1 + A cos x + B cos y)`` given E(k1, k2)."""
    return 4.0 * E2 / math.sqrt(1.0 - 0.5 * (mp.k1**2 + mp.k2**2))


def _AB(mp):
    d = 1.0 - 0.5 * (mp.k1**2 + mp.k2**2)
    return 0.5 * mp.k1**2 / d, 0.5 * mp.k2**2 / d


def _z_limits(A, B):
    if A <= 0:
        raise DomainError("A = 0: the z substitution is undefined")
    if B <= 0:
        raise DomainError("B = 0: z0 = z_pi and the z-integral degenerates")
    return math.sqrt(2.0 * A / (1.0 + A + B)), math.sqrt(2.0 * A / (1.0 + A - B))


def _z_integral(R, A, B, tol):
    """``int_{z0}^{z_pi} R(z) dz / sqrt((z^2 - z0^2)(z_pi^2 - z^2))``.

    Split at the midpoint; ``z = z0 + s^2`` on the left half and
    ``z = z_pi - s^2`` on the right, with the vanishing factor divided out
    by hand (``z^2 - z0^2 = s^2 (2 z0 + s^2)``) so no difference of nearly
    equal numbers is formed.
    """
    z0, zp = _z_limits(A, B)
    half = 0.5 * (zp - z0)

    def left(s):
        z = z0 + s * s
        return 2.0 * R(z) / np.sqrt((2.0 * z0 + s * s) * (zp * zp - z * z))

    def right(s):
        z = zp - s * s
        return 2.0 * R(z) / np.sqrt((z * z - z0 * z0) * (2.0 * zp - s * s))

    span = math.sqrt(half)
    parts = [integrate_1d(g, 0.0, span, 0.5 * tol, vectorized=True) for g in (left, right)]
    return QuadResult(
        math.fsum(r.value for r in parts),
        math.fsum(r.error_estimate for r in parts),
        sum(r.evals for r in parts),
        all(r.converged for r in parts),
    )


def moment_integral(A, B, n, tol=1e-12):
    """``int z^(2n-2) dz / sqrt((z^2-z0^2)(z_pi^2-z^2))`` by quadrature."""
    return _require(_z_integral(lambda z: z ** (2 * n - 2), A, B, tol), f"moment n={n}")


def moment_closed_form(A, B, n):
    """``(pi/2) t^(n-3/2) P_{n-3/2}(x)`` with t, x from (A, B)."""
    t, x = t_from_AB(A, B), x_from_AB(A, B)
    return 0.5 * math.pi * t ** (n - 1.5) * legendre_p_halfint(n, x)


def oracle_I_stage(mp: ModulusPair, stage, tol=1e-12, n=None) -> QuadResult:
    """Evaluate one intermediate integral of the reduction chain.

    ``stage`` is ``"y_integral"`` (single integral over y of an E(k)
    kernel), ``"z_integral"`` (the same after the change of variable to z)
    or ``"z_moment"`` (the bare z-moment of order ``n``).  The first two
    return I, the double integral of ``sqrt(1 + A cos x + B cos y)``.
    """
    A, B = _AB(mp)
    if stage == "y_integral":
        def f(y):
            w = 1.0 + A + B * math.cos(y)
            return math.sqrt(w) * complete_E(Modulus.from_parameter(2.0 * A / w))
        res = integrate_1d(f, 0.0, math.pi, tol)
        return _require(QuadResult(2.0 * res.value, 2.0 * res.error_estimate, res.evals, res.converged), stage)
    if stage == "z_integral":
        z0, zp = _z_limits(A, B)
        pref = 4.0 * math.sqrt(2.0 * A) * z0 * zp
        Ez = np.vectorize(lambda z: complete_E(Modulus(min(z, 1.0))))
        res = _require(_z_integral(lambda z: Ez(z) / (z * z), A, B, tol), stage)
        return QuadResult(pref * res.value, pref * res.error_estimate, res.evals, True)
    if stage == "z_moment":
        if n is None:
            raise ValueError("z_moment needs n")
        return moment_integral(A, B, n, tol)
    raise ValueError(f"unknown stage {stage!r}")
