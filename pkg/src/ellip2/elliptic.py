"""Complete elliptic integrals of one modulus and the Jacobi ``dn`` function.

K and E come from a single arithmetic-geometric mean sweep.  ``dn`` uses the
descending AGM chain (Landen sequence) followed by back-substitution of the
amplitude.  Everything here takes the modulus ``k`` (not the parameter
``m = k**2``); a :class:`Modulus` may be passed instead of a float to carry
an accurately known complement.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError
from .quadrature import integrate_1d

_EPS = np.finfo(float).eps
HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus ``k`` together with its complement ``k' = sqrt(1-k^2)``.

    ``k_prime`` is computed as ``sqrt((1-k)(1+k))`` unless supplied; callers
    that know the complement more accurately than ``k`` itself should use
    :meth:`from_complement`.
    """

    k: float
    k_prime: float = None

    def __post_init__(self):
        k = float(self.k)
        if not (0.0 <= k <= 1.0) or math.isnan(k):
            raise DomainError(f"modulus k={k!r} outside [0, 1]")
        object.__setattr__(self, "k", k)
        if self.k_prime is None:
            object.__setattr__(self, "k_prime", math.sqrt((1.0 - k) * (1.0 + k)))
        else:
            kp = float(self.k_prime)
            if not 0.0 <= kp <= 1.0:
                raise DomainError(f"complement k'={kp!r} outside [0, 1]")
            if abs(k * k + kp * kp - 1.0) > 8 * _EPS:
                raise DomainError(f"k={k!r} and k'={kp!r} are not complementary")
            object.__setattr__(self, "k_prime", kp)

    @classmethod
    def from_complement(cls, k_prime):
        kp = float(k_prime)
        if not 0.0 <= kp <= 1.0:
            raise DomainError(f"complement k'={kp!r} outside [0, 1]")
        return cls(math.sqrt((1.0 - kp) * (1.0 + kp)), kp)

    @classmethod
    def from_parameter(cls, m):
        """Build from the parameter ``m = k**2``."""
        m = float(m)
        if not 0.0 <= m <= 1.0:
            raise DomainError(f"parameter m={m!r} outside [0, 1]")
        return cls(math.sqrt(m), math.sqrt(1.0 - m))

    @property
    def complement(self):
        return Modulus(self.k_prime, self.k)


def as_modulus(m):
    return m if isinstance(m, Modulus) else Modulus(m)


def _agm_KE(mod):
    # a_n, b_n AGM of (1, k'); c_n = (a_{n-1} - b_{n-1})/2 with c_0 = k.
    # E/K = 1 - sum 2^(n-1) c_n^2, with the n = 0 term folded in as
    # (1 + k'^2)/2 to avoid cancelling against 1 as k -> 1.
    a, b, c = 1.0, mod.k_prime, mod.k
    weight = 0.5
    acc = 0.0
    for _ in range(64):
        if c <= _EPS * a:
            break
        a_next = 0.5 * (a + b)
        c = c * c / (4.0 * a_next)
        b = math.sqrt(a * b)
        a = a_next
        weight *= 2.0
        acc += weight * c * c
    K = math.pi / (2.0 * a)
    return K, K * (0.5 * (1.0 + mod.k_prime**2) - acc)


def complete_K(m):
    """Complete elliptic integral of the first kind, ``K(k)``, for 0 <= k < 1."""
    mod = as_modulus(m)
    if mod.k_prime == 0.0:
        raise DomainError("K(k) diverges at k = 1")
    if mod.k == 0.0:
        return HALF_PI
    return _agm_KE(mod)[0]


def complete_E(m):
    """Complete elliptic integral of the second kind, ``E(k)``, for 0 <= k <= 1."""
    mod = as_modulus(m)
    if mod.k_prime == 0.0:
        return 1.0
    if mod.k == 0.0:
        return HALF_PI
    return _agm_KE(mod)[1]


def complete_KE(m):
    """Both integrals from one AGM sweep; ``(K(k), E(k))``."""
    mod = as_modulus(m)
    if mod.k_prime == 0.0:
        raise DomainError("K(k) diverges at k = 1")
    if mod.k == 0.0:
        return HALF_PI, HALF_PI
    return _agm_KE(mod)


def dE_dk(m, *, limit_at_zero=False):
    """``dE/dk = (E - K)/k``.

    At k = 0 the closed form is 0/0; the limit value 0 is returned only when
    ``limit_at_zero`` is set.
    """
    mod = as_modulus(m)
    if mod.k == 0.0:
        if limit_at_zero:
            return 0.0
        raise DomainError("dE/dk is 0/0 at k = 0; pass limit_at_zero=True for the limit")
    if mod.k_prime == 0.0:
        raise DomainError("dE/dk diverges at k = 1")
    K, E = _agm_KE(mod)
    return (E - K) / mod.k


def dK_dk(m, *, limit_at_zero=False):
    """``dK/dk = E/(k k'^2) - K/k``."""
    mod = as_modulus(m)
    if mod.k == 0.0:
        if limit_at_zero:
            return 0.0
        raise DomainError("dK/dk is 0/0 at k = 0; pass limit_at_zero=True for the limit")
    if mod.k_prime == 0.0:
        raise DomainError("dK/dk diverges at k = 1")
    K, E = _agm_KE(mod)
    return E / (mod.k * mod.k_prime**2) - K / mod.k


def jacobi_dn(u, m):
    """Jacobi elliptic function ``dn(u, k)`` for 0 <= k < 1.

    Accepts scalar or array ``u``.  The amplitude ``phi`` is recovered by the
    descending AGM chain and ``dn`` is formed as ``sqrt(k'^2 + k^2 cos^2 phi)``,
    which stays accurate at ``u = K`` where the quotient form is 0/0.
    """
    mod = as_modulus(m)
    if mod.k_prime == 0.0:
        raise DomainError("dn is only supported for 0 <= k < 1")
    scalar = np.ndim(u) == 0
    u = np.asarray(u, dtype=float)
    if not np.all(np.isfinite(u)):
        raise DomainError("u must be finite")
    if mod.k == 0.0:
        out = np.ones_like(u)
        return float(out) if scalar else out

    a_seq, c_seq = [1.0], [mod.k]
    a, b, c = 1.0, mod.k_prime, mod.k
    while c > _EPS * a:
        a_next = 0.5 * (a + b)
        c = c * c / (4.0 * a_next)
        b = math.sqrt(a * b)
        a = a_next
        a_seq.append(a)
        c_seq.append(c)
    n = len(a_seq) - 1
    phi = (2.0**n) * a_seq[n] * u
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + np.arcsin(c_seq[j] / a_seq[j] * np.sin(phi)))
    cos_phi = np.cos(phi)
    out = np.sqrt(mod.k_prime**2 + (mod.k * cos_phi) ** 2)
    return float(out) if scalar else out


def dn_even_moment(m_exp, mod, tol=1e-12):
    """``int_0^K dn(u)^(2 m_exp) du`` by adaptive quadrature.

    Meant as an independent check on closed forms, not as a fast path.
    """
    if int(m_exp) != m_exp or m_exp < 0:
        raise DomainError("m_exp must be a non-negative integer")
    mod = as_modulus(mod)
    K = complete_K(mod)
    power = 2 * int(m_exp)
    res = integrate_1d(lambda u: jacobi_dn(u, mod) ** power, 0.0, K, tol, vectorized=True)
    if not res.converged:
        raise ConvergenceError(f"dn moment quadrature stalled at error {res.error_estimate:.3g}")
    return res.value
