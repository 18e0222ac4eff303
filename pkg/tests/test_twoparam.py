import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ellip2 import (
    ConvergenceError, DomainError, Method, SeriesConfig, complete_E, complete_K, gen_E,
    gen_E_closed, gen_E_quad, gen_E_series, gen_E_symmetric, gen_K, gen_K_quad,
)

QUARTER_PI_SQ = 0.25 * math.pi**2

E_ROUTES = [gen_E_quad, gen_E_series, gen_E_closed]


def grid(n, step=None):
    ks = np.linspace(0, 0.95, n) if step is None else np.arange(0, 1, step)
    return [(float(a), float(b)) for a in ks for b in ks if a * a + b * b < 1]


pairs = st.tuples(st.floats(0, 0.99), st.floats(0, 0.99)).filter(
    lambda p: p[0] ** 2 + p[1] ** 2 < 0.98
)


class TestK:
    def test_origin(self):
        assert gen_K(0, 0).value == pytest.approx(QUARTER_PI_SQ, rel=1e-15)

    @pytest.mark.parametrize("k", [0.1, 0.6, 0.9])
    def test_factorised(self, k):
        assert gen_K(k, 0).value == pytest.approx(0.5 * math.pi * complete_K(k), rel=1e-14)
        assert gen_K(0, k).value == pytest.approx(0.5 * math.pi * complete_K(k), rel=1e-14)

    def test_against_quadrature(self):
        assert gen_K(0.5, 0.5).value == pytest.approx(gen_K_quad(0.5, 0.5).value, rel=1e-9)

    @given(pairs)
    def test_symmetric_and_bounded(self, p):
        a = gen_K(*p).value
        b = gen_K(p[1], p[0]).value
        assert a == pytest.approx(b, rel=1e-13)
        assert a >= QUARTER_PI_SQ * (1 - 1e-15)

    def test_method_tag(self):
        assert gen_K(0.3, 0.2).method is Method.PRODUCT_FORMULA


class TestEPoints:
    @pytest.mark.parametrize("route", E_ROUTES)
    def test_origin(self, route):
        assert route(0, 0).value == pytest.approx(QUARTER_PI_SQ, rel=1e-14)

    @pytest.mark.parametrize("route", E_ROUTES)
    @pytest.mark.parametrize("k", [0.5, 0.6])
    def test_factorised(self, route, k):
        assert route(k, 0).value == pytest.approx(0.5 * math.pi * complete_E(k), rel=1e-12)

    @pytest.mark.parametrize("route", [gen_E_series, gen_E_closed])
    def test_half_half(self, route):
        assert route(0.5, 0.5).value == pytest.approx(gen_E_quad(0.5, 0.5).value, rel=1e-8)

    def test_tri_path_point(self):
        vals = [r(0.3, 0.3).value for r in E_ROUTES]
        assert max(vals) - min(vals) <= 1e-12 * vals[0]

    def test_small_moduli(self):
        ref = gen_E_quad(1e-3, 1e-3).value
        assert gen_E_closed(1e-3, 1e-3).value == pytest.approx(ref, abs=1e-10)
        assert gen_E_series(1e-3, 1e-3).value == pytest.approx(ref, abs=1e-10)

    def test_closed_accepts_zero_first_modulus(self):
        assert gen_E_closed(0, 0.6).value == pytest.approx(0.5 * math.pi * complete_E(0.6), rel=1e-13)

    @pytest.mark.parametrize("route", E_ROUTES)
    def test_domain(self, route):
        with pytest.raises(DomainError):
            route(0.8, 0.7)

    def test_error_estimates(self):
        for r in E_ROUTES:
            res = r(0.4, 0.6)
            assert res.error_estimate >= 0
            assert abs(res.value - gen_E_quad(0.4, 0.6, tol=1e-13).value) <= res.error_estimate + 1e-13

    def test_series_budget(self):
        with pytest.raises(ConvergenceError):
            gen_E_series(0.9, 0.3, SeriesConfig(max_terms=5))

    def test_series_reports_terms(self):
        res = gen_E_series(0.5, 0.5)
        assert res.method is Method.LEGENDRE_SERIES and res.terms_or_evals > 3


class TestDispatch:
    def test_closed_when_possible(self):
        assert gen_E(0.5, 0.3).method is Method.F4_CLOSED

    def test_zero_first_modulus_uses_series(self):
        res = gen_E(0.0, 0.6)
        assert res.method is Method.LEGENDRE_SERIES
        assert res.value == pytest.approx(0.5 * math.pi * complete_E(0.6), rel=1e-14)

    def test_every_admissible_point_is_served(self):
        for p in grid(25):
            assert gen_E(*p).method in (Method.F4_CLOSED, Method.LEGENDRE_SERIES)


class TestSymmetric:
    def test_origin(self):
        assert gen_E_symmetric(0).value == pytest.approx(QUARTER_PI_SQ, rel=1e-15)

    def test_matches_general(self):
        assert gen_E_symmetric(0.5).value == pytest.approx(gen_E_closed(0.5, 0.5).value, rel=1e-13)
        assert gen_E_symmetric(0.5).value == pytest.approx(gen_E_quad(0.5, 0.5).value, rel=1e-10)

    def test_boundary(self):
        gen_E_symmetric(0.70)
        gen_E_symmetric(0.7071)
        for bad in (0.7072, 0.71, 1 / math.sqrt(2), -0.1):
            with pytest.raises(DomainError, match=r"1/sqrt\(2\)"):
                gen_E_symmetric(bad)


class TestInvariants:
    @pytest.mark.parametrize("route", E_ROUTES)
    def test_symmetry(self, route):
        for k1, k2 in grid(15):
            a, b = route(k1, k2).value, route(k2, k1).value
            assert a == pytest.approx(b, rel=1e-10)

    @settings(max_examples=100, deadline=None)
    @given(pairs)
    def test_bounds(self, p):
        v = gen_E(*p).value
        assert 0 < v <= QUARTER_PI_SQ
        if p != (0.0, 0.0) and max(p) > 1e-4:
            assert v < QUARTER_PI_SQ

    def test_monotone(self):
        ks = np.round(np.arange(0, 1, 0.01), 2)
        for k2 in ks:
            row = [gen_E(k1, k2).value for k1 in ks if k1 * k1 + k2 * k2 < 1]
            assert np.all(np.diff(row) < 0)

    def test_pochhammer_rewrite(self):
        # (1/2)_k = -2 (k - 1/2) (-1/2)_k turns the series coefficients into squares
        def poch(a, k):
            out = Fraction(1)
            for i in range(k):
                out *= a + i
            return out
        h = Fraction(1, 2)
        for k in range(11):
            assert poch(h, k) == -2 * (k - h) * poch(-h, k)
            fact = math.factorial(k)
            lhs = poch(-h, k) * poch(h, k) / (fact * fact)
            assert lhs == -2 * (k - h) * (poch(-h, k) / fact) ** 2

    @pytest.mark.parametrize("k1,k2", [(0.3, 0.4), (0.8, 0.5), (0.2, 0.9), (0.95, 0.3)])
    def test_series_and_closed_far_from_origin(self, k1, k2):
        a, b = gen_E_series(k1, k2).value, gen_E_closed(k1, k2).value
        assert a == pytest.approx(b, rel=1e-12)
