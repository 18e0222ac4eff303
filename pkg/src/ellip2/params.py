"""Modulus pairs and the reduced parameters derived from them.

For a pair (k1, k2) with k1^2 + k2^2 < 1 the evaluation routes use

    A = (k1^2/2) / (1 - k1^2/2 - k2^2/2),   B likewise with k2,
    t = 2A / sqrt((1+A)^2 - B^2) = k1^2 / k2',
    x = (1+A) / sqrt((1+A)^2 - B^2) = (1 + k2'^2) / (2 k2'),

and the F4 arguments X = 2t/(1+x), Y = (x-1)/(x+1).  Quantities are formed
from the moduli where that avoids cancellation; the (A, B) forms are exposed
separately so the two can be compared.
"""

import math
from dataclasses import dataclass, field

from .appell import SplitUV, solve_uv
from .errors import DomainError


@dataclass(frozen=True)
class ModulusPair:
    k1: float
    k2: float
    k1_prime: float = field(init=False)
    k2_prime: float = field(init=False)
    k_prime: float = field(init=False)

    def __post_init__(self):
        k1, k2 = float(self.k1), float(self.k2)
        if not (0.0 <= k1 < 1.0 and 0.0 <= k2 < 1.0):
            raise DomainError(f"moduli ({k1}, {k2}) must lie in [0, 1)")
        k1p = math.sqrt((1.0 - k1) * (1.0 + k1))
        if not k2 < k1p:
            raise DomainError(
                f"k1^2 + k2^2 = {k1 * k1 + k2 * k2:.17g} must be < 1"
            )
        object.__setattr__(self, "k1", k1)
        object.__setattr__(self, "k2", k2)
        object.__setattr__(self, "k1_prime", k1p)
        object.__setattr__(self, "k2_prime", math.sqrt((1.0 - k2) * (1.0 + k2)))
        object.__setattr__(self, "k_prime", math.sqrt((k1p - k2) * (k1p + k2)))

    @classmethod
    def from_AB(cls, A, B):
        """Inverse of the (A, B) map: ``k1^2 = 2A/(1+A+B)``."""
        if A < 0 or B < 0 or A + B >= 1:
            raise DomainError("need A, B >= 0 and A + B < 1")
        s = 1.0 + A + B
        return cls(math.sqrt(2.0 * A / s), math.sqrt(2.0 * B / s))

    def swapped(self):
        return ModulusPair(self.k2, self.k1)


def t_from_AB(A, B):
    return 2.0 * A / math.sqrt((1.0 + A) ** 2 - B * B)


def x_from_AB(A, B):
    return (1.0 + A) / math.sqrt((1.0 + A) ** 2 - B * B)


@dataclass(frozen=True)
class ReducedParams:
    A: float
    B: float
    t: float
    x: float
    x_minus_1: float
    split: SplitUV

    @property
    def z0(self):
        return math.sqrt(2.0 * self.A / (1.0 + self.A + self.B))

    @property
    def z_pi(self):
        return math.sqrt(2.0 * self.A / (1.0 + self.A - self.B))

    @property
    def X(self):
        return 2.0 * self.t / (1.0 + self.x)

    @property
    def Y(self):
        return self.x_minus_1 / (self.x + 1.0)

    @property
    def f4_radius(self):
        """``sqrt(X) + sqrt(Y)``; the F4 series converges when this is < 1."""
        return math.sqrt(self.X) + math.sqrt(self.Y)


def reduce_params(mp: ModulusPair) -> ReducedParams:
    k1, k2, k2p = mp.k1, mp.k2, mp.k2_prime
    half_sum = 1.0 - 0.5 * (k1 * k1 + k2 * k2)
    A = 0.5 * k1 * k1 / half_sum
    B = 0.5 * k2 * k2 / half_sum
    t = k1 * k1 / k2p
    one_minus = k2 * k2 / (1.0 + k2p)
    xm1 = one_minus * one_minus / (2.0 * k2p)
    x = 1.0 + xm1
    return ReducedParams(A, B, t, x, xm1, solve_uv(t, x, xm1))
