"""Power iteration, the Jacobi solver, and the constant itself."""

import math

import numpy as np
import pytest

from conftest import charpoly_mu_max
from lagmark.matrix_builder import build_a, frobenius_sq, inf_norm, trace
from lagmark.spectral import (
    ConvergenceError,
    full_spectrum,
    jacobi_eigh,
    markov_constant,
    mu_max_power,
)

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


class TestPowerIteration:
    def test_single_entry_matrix(self):
        result = mu_max_power(build_a(1, 3.0))
        assert result.mu_max == pytest.approx(0.25, rel=1e-14)
        assert result.iterations == 0
        assert result.residual == 0.0
        np.testing.assert_allclose(result.eigenvector, [1.0])

    def test_two_by_two_closed_form(self):
        # largest root of mu^2 - 3 mu + 1
        result = mu_max_power(build_a(2, 0.0))
        assert result.mu_max == pytest.approx((3.0 + math.sqrt(5.0)) / 2.0, rel=1e-12)
        # eigenvector direction (1, golden ratio)
        assert result.eigenvector[1] / result.eigenvector[0] == pytest.approx(GOLDEN, rel=1e-8)

    def test_degree_five_closed_form(self):
        result = mu_max_power(build_a(5, 0.0))
        assert result.mu_max == pytest.approx((2.0 * math.sin(math.pi / 22.0)) ** -2, rel=1e-11)

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 2.0, 10.0])
    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_against_charpoly_bisection(self, n, alpha):
        matrix = build_a(n, alpha)
        result = mu_max_power(matrix)
        assert result.mu_max == pytest.approx(charpoly_mu_max(matrix.entries), rel=1e-10)

    @pytest.mark.parametrize("n,alpha", [(2, 0.0), (10, -0.9), (25, 2.0), (30, 100.0)])
    def test_certificate_invariants(self, n, alpha):
        matrix = build_a(n, alpha)
        result = mu_max_power(matrix, tol=1e-12)
        assert result.residual <= 1e-12 * result.mu_max
        assert abs(np.linalg.norm(result.eigenvector) - 1.0) <= 1e-13
        assert matrix.entries.diagonal().max() <= result.mu_max <= inf_norm(matrix)
        assert result.mu_max <= trace(matrix)
        got = float(np.linalg.norm(matrix.entries @ result.eigenvector - result.mu_max * result.eigenvector))
        assert got == pytest.approx(result.residual, rel=1e-6, abs=1e-15)

    def test_deterministic_runs(self):
        first = mu_max_power(build_a(17, 1.5))
        second = mu_max_power(build_a(17, 1.5))
        assert first.mu_max == second.mu_max
        assert first.iterations == second.iterations
        np.testing.assert_array_equal(first.eigenvector, second.eigenvector)

    def test_nonconvergence_carries_residual(self):
        with pytest.raises(ConvergenceError) as info:
            mu_max_power(build_a(30, 100.0), tol=1e-12, max_iter=3)
        assert info.value.iterations == 3
        assert info.value.residual > 0.0

    def test_rejects_too_small_tolerance(self):
        with pytest.raises(ValueError):
            mu_max_power(build_a(3, 1.0), tol=1e-15)


class TestFullSpectrum:
    def test_two_by_two(self):
        spectrum = full_spectrum(build_a(2, 0.0))
        np.testing.assert_allclose(spectrum, [(3.0 - math.sqrt(5.0)) / 2.0, (3.0 + math.sqrt(5.0)) / 2.0], rtol=1e-12)

    def test_single(self):
        np.testing.assert_allclose(full_spectrum(build_a(1, 7.0)), [0.125])

    def test_degree_three_sum(self):
        assert full_spectrum(build_a(3, 0.0)).sum() == pytest.approx(6.0, rel=1e-10)

    @pytest.mark.parametrize("n,alpha", [(5, 1.0), (12, -0.9), (20, 10.0), (30, 0.0)])
    def test_sum_identities(self, n, alpha):
        matrix = build_a(n, alpha)
        spectrum = full_spectrum(matrix)
        assert np.all(np.diff(spectrum) > 0.0)
        assert np.all(spectrum > 0.0)
        assert spectrum.sum() == pytest.approx(trace(matrix), rel=1e-10)
        assert (spectrum**2).sum() == pytest.approx(frobenius_sq(matrix), rel=1e-9)

    @pytest.mark.parametrize("n,alpha", [(6, -0.5), (9, 0.0), (14, 3.0)])
    def test_matches_library_solver(self, n, alpha):
        # LAPACK is an implementation-independent reference for the Jacobi code
        matrix = build_a(n, alpha)
        np.testing.assert_allclose(full_spectrum(matrix), np.linalg.eigvalsh(matrix.entries), rtol=1e-10, atol=1e-13)

    def test_size_guard(self):
        with pytest.raises(ValueError):
            full_spectrum(build_a(501, 0.0))

    def test_jacobi_eigenvectors_reconstruct(self):
        matrix = build_a(10, 2.0).entries
        values, vectors = jacobi_eigh(matrix)
        np.testing.assert_allclose(vectors @ np.diag(values) @ vectors.T, matrix, atol=1e-12)
        np.testing.assert_allclose(vectors.T @ vectors, np.eye(10), atol=1e-13)


class TestMarkovConstant:
    def test_examples(self):
        assert markov_constant(1, 0.0) == pytest.approx(1.0, rel=1e-13)
        assert markov_constant(1, 3.0) ** 2 == pytest.approx(0.25, rel=1e-13)
        assert markov_constant(2, 0.0) == pytest.approx(GOLDEN, rel=1e-12)

    def test_degree_three_bracket(self):
        # dorfler lower 1.1333..., row-sum style upper 4.125 at alpha = 2
        value = markov_constant(3, 2.0) ** 2
        assert math.sqrt(1.1333333333333333) <= markov_constant(3, 2.0) <= math.sqrt(4.125)
        assert value == pytest.approx(charpoly_mu_max(build_a(3, 2.0).entries), rel=1e-10)

    @pytest.mark.parametrize("alpha", [-0.9, 0.0, 2.0, 25.0])
    def test_strictly_increasing_in_degree(self, alpha):
        previous = markov_constant(1, alpha)
        for n in range(2, 14):
            current = markov_constant(n, alpha)
            assert current - previous > 1e-12 * max(1.0, previous)
            previous = current
