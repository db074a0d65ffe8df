"""Quadrature rules, Laguerre evaluation, and the end-to-end oracle."""

import io
import math

import numpy as np
import pytest
from scipy.special import gammaln

from lagmark.matrix_builder import build_a
from lagmark.oracle_quadrature import (
    LaguerreExpansion,
    dump_expansion_csv,
    expansion_eval,
    expansion_norm_sq,
    expansion_weighted_values,
    extremal_from_eigenvector,
    gauss_laguerre,
    laguerre_eval,
    rayleigh_quotient,
)
from lagmark.spectral import mu_max_power


class TestGaussLaguerre:
    def test_single_node(self):
        rule = gauss_laguerre(1, 0.0)
        np.testing.assert_allclose(rule.nodes, [1.0], atol=1e-14)
        np.testing.assert_allclose(rule.weights, [1.0], atol=1e-14)

    def test_two_nodes_by_hand(self):
        rule = gauss_laguerre(2, 0.0)
        np.testing.assert_allclose(rule.nodes, [2.0 - math.sqrt(2.0), 2.0 + math.sqrt(2.0)], rtol=1e-13)
        np.testing.assert_allclose(
            rule.weights, [(2.0 + math.sqrt(2.0)) / 4.0, (2.0 - math.sqrt(2.0)) / 4.0], rtol=1e-13
        )

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.0, 10.0])
    @pytest.mark.parametrize("m", [5, 20, 60])
    def test_zeroth_moment(self, m, alpha):
        rule = gauss_laguerre(m, alpha)
        assert rule.weights.sum() == pytest.approx(math.exp(gammaln(alpha + 1.0)), rel=1e-10)
        assert np.all(rule.nodes > 0.0)
        assert np.all(rule.weights > 0.0)

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 2.0])
    @pytest.mark.parametrize("m", [3, 8, 15])
    def test_monomial_exactness(self, m, alpha):
        rule = gauss_laguerre(m, alpha)
        for degree in range(2 * m):
            moment = float(rule.weights @ rule.nodes**degree)
            assert moment == pytest.approx(math.exp(gammaln(alpha + degree + 1.0)), rel=1e-9)

    def test_size_guards(self):
        with pytest.raises(ValueError):
            gauss_laguerre(0, 0.0)
        with pytest.raises(ValueError):
            gauss_laguerre(301, 0.0)


class TestLaguerreEval:
    def test_order_zero_and_one(self):
        assert laguerre_eval(0, 1.7, 5.5) == 1.0
        assert laguerre_eval(1, 0.0, 1.0) == 0.0
        assert laguerre_eval(2, 0.0, 0.0) == pytest.approx(1.0, rel=1e-15)

    @pytest.mark.parametrize("alpha", [-0.3, 0.0, 1.7])
    @pytest.mark.parametrize("x", [0.5, 1.0, 3.0])
    def test_shift_identity(self, alpha, x):
        # order-m polynomial at alpha+1 equals the sum of orders 0..m at alpha
        for m in (1, 2, 5):
            total = sum(laguerre_eval(nu, alpha, x) for nu in range(m + 1))
            assert laguerre_eval(m, alpha + 1.0, x) == pytest.approx(total, rel=1e-12, abs=1e-12)

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.0, 2.0])
    def test_orthogonality_by_quadrature(self, alpha):
        rule = gauss_laguerre(12, alpha)
        for m in range(0, 11):
            for mp in range(m, 11):
                integral = float(rule.weights @ (laguerre_eval(m, alpha, rule.nodes) * laguerre_eval(mp, alpha, rule.nodes)))
                if m == mp:
                    norm_sq = math.exp(gammaln(m + alpha + 1.0) - gammaln(m + 1.0))
                    assert integral == pytest.approx(norm_sq, rel=1e-9)
                else:
                    assert abs(integral) <= 1e-9

    def test_orthogonality_normalized_large_alpha(self):
        alpha = 10.0
        rule = gauss_laguerre(12, alpha)
        for m in range(0, 11):
            for mp in range(m + 1, 11):
                scale = math.exp(
                    0.5 * (gammaln(m + alpha + 1.0) - gammaln(m + 1.0) + gammaln(mp + alpha + 1.0) - gammaln(mp + 1.0))
                )
                integral = float(
                    rule.weights @ (laguerre_eval(m, alpha, rule.nodes) * laguerre_eval(mp, alpha, rule.nodes))
                )
                assert abs(integral) / scale <= 1e-12

    def test_rejects_negative_order(self):
        with pytest.raises(ValueError):
            laguerre_eval(-1, 0.0, 1.0)


class TestExpansionEval:
    def test_derivative_of_first_order(self):
        p = LaguerreExpansion(alpha=0.7, coeffs=np.array([1.0]))
        for x in (0.2, 1.0, 4.4):
            assert expansion_eval(p, x, derivative=True) == -1.0

    def test_zero_coefficients(self):
        p = LaguerreExpansion(alpha=1.0, coeffs=np.zeros(4))
        assert expansion_eval(p, 2.0) == 0.0

    def test_matches_direct_sum(self):
        rng = np.random.default_rng(11)
        coeffs = rng.normal(size=6)
        p = LaguerreExpansion(alpha=0.5, coeffs=coeffs)
        x = np.array([0.1, 1.0, 7.3])
        direct = sum(coeffs[nu - 1] * laguerre_eval(nu, 0.5, x) for nu in range(1, 7))
        np.testing.assert_allclose(expansion_eval(p, x), direct, rtol=1e-12)
        direct_deriv = -sum(coeffs[nu - 1] * laguerre_eval(nu - 1, 1.5, x) for nu in range(1, 7))
        np.testing.assert_allclose(expansion_eval(p, x, derivative=True), direct_deriv, rtol=1e-12)


class TestRayleighQuotient:
    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.0, 4.0])
    def test_first_order_polynomial(self, alpha):
        p = LaguerreExpansion(alpha=alpha, coeffs=np.array([1.0]))
        assert rayleigh_quotient(p) == pytest.approx(1.0 / (alpha + 1.0), rel=1e-12)

    def test_extremal_two_by_two(self):
        result = mu_max_power(build_a(2, 0.0))
        p = extremal_from_eigenvector(result, 0.0)
        assert rayleigh_quotient(p) == pytest.approx((3.0 + math.sqrt(5.0)) / 2.0, rel=1e-10)

    def test_random_expansions_stay_below_maximum(self):
        n, alpha = 10, 1.0
        mu = mu_max_power(build_a(n, alpha)).mu_max
        rng = np.random.default_rng(42)
        for _ in range(100):
            p = LaguerreExpansion(alpha=alpha, coeffs=rng.normal(size=n))
            assert rayleigh_quotient(p) <= mu + 1e-8

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            rayleigh_quotient(LaguerreExpansion(alpha=0.0, coeffs=np.zeros(3)))

    def test_rule_size_guard(self):
        p = LaguerreExpansion(alpha=0.0, coeffs=np.ones(5))
        with pytest.raises(ValueError):
            rayleigh_quotient(p, rule_size=5)


class TestExtremalFromEigenvector:
    def test_single_degree(self):
        result = mu_max_power(build_a(1, 2.0))
        p = extremal_from_eigenvector(result, 2.0)
        # coefficient 1/beta_2 with beta_2^2 = Gamma(4)/Gamma(2) = 6 at alpha = 2
        assert p.coeffs[0] == pytest.approx(1.0 / math.sqrt(6.0), rel=1e-12)

    def test_two_by_two_direction(self):
        result = mu_max_power(build_a(2, 0.0))
        p = extremal_from_eigenvector(result, 0.0)
        golden = (1.0 + math.sqrt(5.0)) / 2.0
        assert p.coeffs[1] / p.coeffs[0] == pytest.approx(golden, rel=1e-8)

    @pytest.mark.parametrize("n,alpha", [(5, 3.0), (12, -0.5), (20, 10.0), (50, 0.0)])
    def test_unit_norm_both_routes(self, n, alpha):
        result = mu_max_power(build_a(n, alpha))
        p = extremal_from_eigenvector(result, alpha)
        assert expansion_norm_sq(p) == pytest.approx(1.0, rel=1e-10)
        rule = gauss_laguerre(n + 2, alpha)
        weighted = expansion_weighted_values(p, rule)
        assert float(weighted @ weighted) == pytest.approx(1.0, rel=1e-9)

    def test_weighted_values_match_raw_at_small_degree(self):
        result = mu_max_power(build_a(6, 1.0))
        p = extremal_from_eigenvector(result, 1.0)
        rule = gauss_laguerre(8, 1.0)
        raw = expansion_eval(p, rule.nodes) * np.sqrt(rule.weights)
        np.testing.assert_allclose(expansion_weighted_values(p, rule), raw, rtol=1e-10)

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 2.0])
    def test_end_to_end_small_degrees(self, alpha):
        for n in (1, 2, 3, 5, 8, 12):
            result = mu_max_power(build_a(n, alpha))
            p = extremal_from_eigenvector(result, alpha)
            assert rayleigh_quotient(p) == pytest.approx(result.mu_max, rel=1e-9)


class TestDump:
    def test_expansion_csv(self):
        p = LaguerreExpansion(alpha=1.0, coeffs=np.array([0.25, -1.5, 3.0]))
        buffer = io.StringIO()
        dump_expansion_csv(p, buffer)
        lines = buffer.getvalue().strip().splitlines()
        assert lines[0] == "nu,coefficient"
        assert len(lines) == 4
        assert [float(line.split(",")[1]) for line in lines[1:]] == [0.25, -1.5, 3.0]
