import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ellip2 import (
    DomainError, Modulus, complete_E, complete_K, complete_KE, dE_dk, dK_dk,
    dn_even_moment, integrate_1d, jacobi_dn, legendre_p_halfint,
)
from ellip2.legendre import x_for_modulus

EPS = np.finfo(float).eps
mpmath.mp.dps = 40


def maclaurin(k, coeff, terms=400):
    """(pi/2) sum c_n k^(2n) with c_n = coeff(n); plain float summation."""
    total, c = 0.0, 1.0
    for n in range(terms):
        if n:
            c *= coeff(n)
        total += c * k ** (2 * n)
    return 0.5 * math.pi * total


def series_K(k):
    return maclaurin(k, lambda n: ((n - 0.5) / n) ** 2)


def series_E(k):
    return maclaurin(k, lambda n: (n - 1.5) * (n - 0.5) / (n * n))


class TestModulus:
    def test_complement(self):
        m = Modulus(0.6)
        assert m.k_prime == pytest.approx(0.8, abs=1e-16)
        assert m.complement.k == m.k_prime

    @given(st.floats(0.0, 1.0))
    def test_pythagoras(self, k):
        m = Modulus(k)
        assert abs(m.k**2 + m.k_prime**2 - 1.0) <= 4 * EPS

    @pytest.mark.parametrize("bad", [-0.1, 1.1, float("nan")])
    def test_rejects(self, bad):
        with pytest.raises(DomainError):
            Modulus(bad)

    def test_inconsistent_complement(self):
        with pytest.raises(DomainError):
            Modulus(0.6, 0.7)

    def test_from_parameter(self):
        assert Modulus.from_parameter(0.25).k == 0.5


class TestCompleteIntegrals:
    def test_k_zero(self):
        assert complete_K(0.0) == 0.5 * math.pi
        assert complete_E(0.0) == 0.5 * math.pi

    def test_half_against_maclaurin(self):
        assert complete_K(0.5) == pytest.approx(series_K(0.5), rel=1e-15)
        assert complete_E(0.5) == pytest.approx(series_E(0.5), rel=1e-15)
        assert complete_K(0.5) == pytest.approx(1.685750, abs=5e-7)
        assert complete_E(0.5) == pytest.approx(1.467462, abs=5e-7)

    def test_k_one(self):
        assert complete_E(1.0) == 1.0
        with pytest.raises(DomainError):
            complete_K(1.0)

    @pytest.mark.parametrize("k", np.linspace(0.01, 0.999999, 60))
    def test_ulp_accuracy(self, k):
        K, E = complete_KE(k)
        mk = mpmath.mpf(float(k)) ** 2
        K_ref, E_ref = float(mpmath.ellipk(mk)), float(mpmath.ellipe(mk))
        assert abs(K - K_ref) <= 4 * EPS * K_ref
        assert abs(E - E_ref) <= 4 * EPS * E_ref

    @pytest.mark.parametrize("k", np.round(np.arange(0.1, 0.91, 0.1), 1))
    def test_legendre_relation(self, k):
        m = Modulus(k)
        K, E = complete_KE(m)
        Kc, Ec = complete_KE(m.complement)
        assert E * Kc + Ec * K - K * Kc == pytest.approx(0.5 * math.pi, abs=1e-12)

    def test_monotone(self):
        ks = np.arange(1e-3, 1.0, 1e-3)
        K = np.array([complete_K(k) for k in ks])
        E = np.array([complete_E(k) for k in ks])
        assert np.all(np.diff(K) > 0)
        assert np.all(np.diff(E) < 0)

    def test_agrees_with_quadrature(self):
        k = 0.7
        res = integrate_1d(lambda th: np.sqrt(1 - k * k * np.sin(th) ** 2), 0, math.pi / 2,
                           1e-14, vectorized=True)
        assert complete_E(k) == pytest.approx(res.value, rel=1e-13)


class TestDerivatives:
    @pytest.mark.parametrize("k", [0.2, 0.5, 0.8])
    def test_finite_difference(self, k):
        h = 1e-5
        fd_E = (complete_E(k + h) - complete_E(k - h)) / (2 * h)
        fd_K = (complete_K(k + h) - complete_K(k - h)) / (2 * h)
        assert dE_dk(k) == pytest.approx(fd_E, rel=1e-6)
        assert dK_dk(k) == pytest.approx(fd_K, rel=1e-6)

    def test_restatement(self):
        assert dE_dk(0.5) == pytest.approx((complete_E(0.5) - complete_K(0.5)) / 0.5, rel=1e-15)

    def test_zero_limit(self):
        with pytest.raises(DomainError):
            dE_dk(0.0)
        assert dE_dk(0.0, limit_at_zero=True) == 0.0
        assert abs(dE_dk(1e-6)) < 1e-5


def dn_by_inversion(u, k):
    """Invert u = F(phi, k) by bisection on a quadrature of the integrand."""
    def F(phi):
        return integrate_1d(lambda t: 1 / np.sqrt(1 - k * k * np.sin(t) ** 2), 0, phi,
                            1e-14, vectorized=True).value
    lo, hi = 0.0, math.pi / 2 + 1e-12
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if F(mid) < u else (lo, mid)
    phi = 0.5 * (lo + hi)
    return math.sqrt(1 - k * k * math.sin(phi) ** 2)


class TestJacobiDn:
    def test_origin(self):
        assert jacobi_dn(0.0, 0.7) == 1.0

    def test_zero_modulus(self):
        assert np.all(jacobi_dn(np.linspace(0, 5, 7), 0.0) == 1.0)

    def test_quarter_period(self):
        k = 0.6
        K = complete_K(k)
        assert jacobi_dn(K, k) == pytest.approx(0.8, rel=1e-12)
        assert jacobi_dn(K, k) == pytest.approx(dn_by_inversion(K, k), rel=1e-10)

    @pytest.mark.parametrize("u", [0.3, 0.9, 1.4])
    def test_inversion_oracle(self, u):
        assert jacobi_dn(u, 0.6) == pytest.approx(dn_by_inversion(u, 0.6), rel=1e-10)

    def test_against_mpmath(self):
        u = np.linspace(-3, 3, 13)
        got = jacobi_dn(u, 0.9)
        ref = [float(mpmath.ellipfun("dn", x, m=0.81)) for x in u]
        assert np.allclose(got, ref, rtol=1e-13, atol=0)

    def test_even_and_periodic(self):
        k = 0.8
        K = complete_K(k)
        u = np.linspace(0, K, 9)
        assert np.allclose(jacobi_dn(u, k), jacobi_dn(-u, k), rtol=1e-15)
        assert np.allclose(jacobi_dn(u + 2 * K, k), jacobi_dn(u, k), rtol=1e-12)


class TestDnMoments:
    def test_zero_is_K(self):
        assert dn_even_moment(0, 0.5) == pytest.approx(complete_K(0.5), rel=1e-12)

    def test_one_is_E(self):
        assert dn_even_moment(1, 0.5) == pytest.approx(complete_E(0.5), rel=1e-12)

    def test_rejects_fraction(self):
        with pytest.raises(DomainError):
            dn_even_moment(1.5, 0.5)

    @pytest.mark.parametrize("k", [0.2, 0.5, 0.8])
    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    def test_legendre_identity(self, m, k):
        # int_0^K dn^{2m} = (pi/2) (x + sqrt(x^2-1))^(1/2 - m) P_{m-1/2}(x)
        x = x_for_modulus(k)
        w = x + math.sqrt(x * x - 1)
        closed = 0.5 * math.pi * w ** (0.5 - m) * legendre_p_halfint(m + 1, x)
        assert dn_even_moment(m, k) == pytest.approx(closed, rel=1e-9)
