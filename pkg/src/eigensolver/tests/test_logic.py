# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

import math

import numpy as np

from core.params import ParameterError
from eigensolver.banded import apply_reflectors, householder_tridiagonalize
from eigensolver.dense import jacobi_eigensystem, jacobi_eigenvalues
from eigensolver.ops import (
    eigen_adaptive, eigen_banded, eigen_model, eigen_tridiagonal,
    growth_ratios, merge_parity_spectra, solve,
)
from eigensolver.spectrum import NotConverged, SolverError, Spectrum
from eigensolver.tridiagonal import bisect, inverse_iteration, sturm_count
from hamiltonian.matrices import (
    BasisLabel, FULL_SPIN_FOCK, PARITY_MINUS, PARITY_PLUS, SectorMatrix,
    TruncationPolicy,
)
from hamiltonian.ops import (
    MINUS, PLUS, build_full, build_parity_sector, sector_to_full,
)
from pairtheory.ops import ground_energy_bounds
from test import (
    RabiTestCase, weak_atom_params, rabi_params, random_symmetric_bands,
)

LABEL = BasisLabel(PARITY_PLUS, 0)


def _matrix(bands):
    dim = len(bands[0])
    return SectorMatrix(bands, BasisLabel(PARITY_PLUS, dim - 1))


class DenseOracleTest(RabiTestCase):

    def test_reconstruction(self):
        rng = np.random.RandomState(11)
        a = rng.normal(size=(12, 12))
        a = a + a.T
        values, vectors = jacobi_eigensystem(a)
        self.assertTrue(np.all(np.diff(values) >= 0))
        np.testing.assert_allclose(np.dot(vectors.T, vectors), np.eye(12),
                                   atol=1e-12)
        np.testing.assert_allclose(
            np.dot(vectors * values, vectors.T), a, atol=1e-11)

    def test_iteration_cap(self):
        a = np.array([[1.0, 2.0, 0.5], [2.0, -1.0, 0.3], [0.5, 0.3, 2.0]])
        self.assertRaises(SolverError, jacobi_eigensystem, a, 0)


class TridiagonalTest(RabiTestCase):

    def test_diagonal(self):
        spectrum = eigen_tridiagonal(_matrix([[1.0, 1.0, 3.0], [0.0, 0.0]]))
        np.testing.assert_allclose(spectrum.eigenvalues, [1.0, 1.0, 3.0],
                                   atol=1e-14)

    def test_two_by_two(self):
        spectrum = eigen_tridiagonal(_matrix([[1.0, 1.0], [0.5]]), True)
        np.testing.assert_allclose(spectrum.eigenvalues, [0.5, 1.5],
                                   atol=1e-14)
        self.assertProjectorsClose(
            spectrum.eigenvectors[:, 0],
            np.array([1.0, -1.0]) / math.sqrt(2.0))

    def test_parity_sector_against_dense_oracle(self):
        m = build_parity_sector(rabi_params(1.0), PLUS, 99)
        self.assertEqual(m.dim, 100)
        spectrum = eigen_tridiagonal(m)
        np.testing.assert_allclose(spectrum.eigenvalues,
                                   jacobi_eigenvalues(m.to_dense()),
                                   rtol=0, atol=1e-10)

    def test_random_against_dense_oracle(self):
        rng = np.random.RandomState(5)
        for dim in (1, 2, 3, 7, 20, 50):
            m = _matrix(random_symmetric_bands(rng, dim, 1))
            spectrum = eigen_tridiagonal(m, True)
            np.testing.assert_allclose(spectrum.eigenvalues,
                                       jacobi_eigenvalues(m.to_dense()),
                                       rtol=0, atol=1e-10)
            vectors = spectrum.eigenvectors
            np.testing.assert_allclose(np.dot(vectors.T, vectors),
                                       np.eye(dim), atol=1e-9)
            residual = np.linalg.norm(
                m.matvec(vectors) - vectors * spectrum.eigenvalues, axis=0)
            self.assertTrue(np.all(
                residual <= 1e-8 * np.maximum(1.0,
                                              np.abs(spectrum.eigenvalues))))

    def test_lowest_levels_only(self):
        m = build_parity_sector(rabi_params(2.0), MINUS, 60)
        everything = eigen_tridiagonal(m)
        lowest = eigen_tridiagonal(m, True, count=3)
        self.assertEqual(len(lowest), 3)
        self.assertEqual(lowest.eigenvectors.shape, (61, 3))
        np.testing.assert_allclose(lowest.eigenvalues,
                                   everything.eigenvalues[:3], atol=1e-13)

    def test_sturm_count(self):
        rng = np.random.RandomState(17)
        for dim in (1, 4, 12, 50):
            bands = random_symmetric_bands(rng, dim, 1)
            values = jacobi_eigenvalues(_matrix(bands).to_dense())
            shifts = rng.uniform(-9.0, 9.0, 40)
            # keep clear of the eigenvalues themselves
            shifts = shifts[np.min(np.abs(shifts[:, None] - values[None, :]),
                                   axis=1) > 1e-8]
            expected = np.sum(values[None, :] < shifts[:, None], axis=1)
            np.testing.assert_array_equal(
                sturm_count(bands[0], bands[1], shifts), expected)

    def test_interlacing(self):
        rng = np.random.RandomState(23)
        for dim in range(2, 13):
            diag, off = random_symmetric_bands(rng, dim, 1)
            outer = bisect(diag, off, np.arange(dim))
            inner = bisect(diag[:-1], off[:-1], np.arange(dim - 1))
            tol = 1e-12
            self.assertTrue(np.all(outer[:-1] <= inner + tol))
            self.assertTrue(np.all(inner <= outer[1:] + tol))

    def test_degenerate_cluster(self):
        # two identical decoupled blocks give exactly double eigenvalues
        diag = np.array([1.0, 2.0, 1.0, 2.0])
        off = np.array([0.3, 0.0, 0.3])
        values = bisect(diag, off, np.arange(4))
        vectors = inverse_iteration(diag, off, values)
        np.testing.assert_allclose(np.dot(vectors.T, vectors), np.eye(4),
                                   atol=1e-10)

    def test_bisection_cap(self):
        with self.assertRaises(SolverError) as context:
            bisect([1.0, 2.0], [0.5], [0, 1], max_iter=2)
        self.assertIn(context.exception.value, (0, 1))

    def test_rejects_wide_matrix(self):
        m = build_full(rabi_params(1.0), 4)
        self.assertRaises(ParameterError, eigen_tridiagonal, m)


class BandedTest(RabiTestCase):

    def test_tridiagonal_input_is_untouched(self):
        rng = np.random.RandomState(29)
        bands = random_symmetric_bands(rng, 15, 1)
        diag, off, reflectors = householder_tridiagonalize(
            _matrix(bands).to_dense())
        self.assertEqual(reflectors, [])
        np.testing.assert_array_equal(diag, bands[0])
        np.testing.assert_array_equal(off, bands[1])

        m = _matrix(bands)
        np.testing.assert_allclose(eigen_banded(m).eigenvalues,
                                   eigen_tridiagonal(m).eigenvalues,
                                   atol=1e-12)

    def test_reduction_is_orthogonal(self):
        rng = np.random.RandomState(31)
        m = _matrix(random_symmetric_bands(rng, 9, 3))
        diag, off, reflectors = householder_tridiagonalize(m.to_dense())
        q = apply_reflectors(reflectors, np.eye(9))
        t = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
        np.testing.assert_allclose(np.dot(q.T, q), np.eye(9), atol=1e-12)
        np.testing.assert_allclose(np.dot(q, np.dot(t, q.T)), m.to_dense(),
                                   atol=1e-12)

    def test_random_against_dense_oracle(self):
        rng = np.random.RandomState(37)
        for dim, width in ((5, 2), (16, 3), (40, 4), (60, 2)):
            m = _matrix(random_symmetric_bands(rng, dim, width))
            spectrum = eigen_banded(m, True)
            np.testing.assert_allclose(spectrum.eigenvalues,
                                       jacobi_eigenvalues(m.to_dense()),
                                       rtol=0, atol=1e-10)
            residual = np.linalg.norm(
                m.matvec(spectrum.eigenvectors)
                - spectrum.eigenvectors * spectrum.eigenvalues, axis=0)
            self.assertLess(residual.max(), 1e-6)

    def test_spin_block(self):
        m = build_full(rabi_params(0.0, omega_a=1.0, epsilon=1.0), 1)
        values = eigen_banded(m).eigenvalues
        np.testing.assert_allclose(
            values[:2], 0.5 + np.array([-1.0, 1.0]) * math.sqrt(0.5),
            atol=1e-14)

    def test_parity_decomposition(self):
        p = rabi_params(2.0, omega_a=0.1, omega_c=0.75)
        full = solve(build_full(p, 40)).eigenvalues
        union = np.sort(np.concatenate([
            solve(build_parity_sector(p, PLUS, 40)).eigenvalues,
            solve(build_parity_sector(p, MINUS, 40)).eigenvalues]))
        np.testing.assert_allclose(full, union, rtol=0, atol=1e-10)

    def test_parity_decomposition_at_large_cutoff(self):
        for g in (0.5, 1.0, 2.0, 3.0):
            p = rabi_params(g)
            full = solve(build_full(p, 200)).eigenvalues
            union = np.sort(np.concatenate([
                solve(build_parity_sector(p, PLUS, 200)).eigenvalues,
                solve(build_parity_sector(p, MINUS, 200)).eigenvalues]))
            np.testing.assert_allclose(full, union, rtol=0, atol=1e-10)

    def test_many_random_matrices_against_dense_oracle(self):
        rng = np.random.RandomState(53)
        for trial in range(200):
            dim = int(rng.randint(1, 101))
            width = 1 if trial % 2 else int(rng.randint(2, 6))
            width = min(width, max(dim - 1, 1))
            m = _matrix(random_symmetric_bands(rng, dim, width))
            values = solve(m).eigenvalues
            np.testing.assert_allclose(values,
                                       jacobi_eigenvalues(m.to_dense()),
                                       rtol=0, atol=1e-10)


class AdaptiveTest(RabiTestCase):

    def test_free_family_converges_at_once(self):
        policy = TruncationPolicy(8, 256, m_levels=3, tol=1e-9)
        spectrum = eigen_adaptive(
            lambda N: build_parity_sector(rabi_params(0.0), PLUS, N), policy)
        self.assertEqual(spectrum.truncation_used, 16)
        self.assertEqual(spectrum.converged_levels, 3)
        np.testing.assert_allclose(spectrum.eigenvalues, [1.0, 1.0, 3.0],
                                   atol=1e-13)

    def test_strong_coupling(self):
        p = rabi_params(3.0)
        policy = TruncationPolicy(32, 4096, m_levels=4, tol=1e-9)
        spectrum = eigen_model(p, policy)
        self.assertEqual(len(spectrum), 4)
        self.assertLessEqual(spectrum.truncation_used, 1024)
        lower, upper = ground_energy_bounds(p)
        self.assertGreaterEqual(spectrum.eigenvalues[0], lower - 1e-9)
        self.assertLessEqual(spectrum.eigenvalues[0], upper + 1e-9)
        # pairs of nearly degenerate levels of opposite parity
        self.assertLess(spectrum.eigenvalues[1] - spectrum.eigenvalues[0],
                        1e-6)
        self.assertNotEqual(spectrum.parities[0], spectrum.parities[1])

    def test_truncation_deltas_shrink(self):
        p = rabi_params(2.0)
        lowest = [solve(build_parity_sector(p, MINUS, N), count=1)
                  .eigenvalues[0] for N in (8, 16, 32, 64, 128)]
        deltas = np.abs(np.diff(lowest))
        self.assertTrue(np.all(deltas[1:] <= deltas[:-1] + 1e-12))

    def test_not_converged(self):
        policy = TruncationPolicy(2, 4, m_levels=2, tol=1e-12)
        with self.assertRaises(NotConverged) as context:
            eigen_model(rabi_params(3.0), policy)
        self.assertEqual(context.exception.truncation, 4)
        self.assertEqual(len(context.exception.value), 2)

    def test_growth_ratios(self):
        ratios = growth_ratios(build_parity_sector(rabi_params(1.0), PLUS,
                                                   400), tail=4)
        self.assertEqual(ratios.shape, (4,))
        self.assertLess(ratios.max(), 0.2)
        self.assertTrue(np.all(ratios > 0))


class EigenModelTest(RabiTestCase):

    policy = TruncationPolicy(16, 1024, m_levels=6, tol=1e-10)

    def test_parity_route_matches_full(self):
        for p in (rabi_params(1.5, omega_a=0.6),
                  weak_atom_params(1.0, C=0.1, ell=2)):
            with_parity = eigen_model(p, self.policy, True)
            without = eigen_model(p, self.policy, True, use_parity=False)
            np.testing.assert_allclose(with_parity.eigenvalues,
                                       without.eigenvalues, atol=1e-8)
            self.assertEqual(with_parity.basis_label.kind, FULL_SPIN_FOCK)
            self.assertIsNone(without.parities)

            cutoff = max(with_parity.truncation_used,
                         without.truncation_used)
            first = np.zeros(2 * (cutoff + 1))
            second = np.zeros(2 * (cutoff + 1))
            ground = with_parity.ground_state()
            first[:ground.shape[0]] = ground
            ground = without.ground_state()
            second[:ground.shape[0]] = ground
            self.assertProjectorsClose(first, second, atol=1e-4)

    def test_ground_state_has_odd_parity(self):
        for g in (0.0, 0.5, 2.0, 4.0):
            spectrum = eigen_model(rabi_params(g), self.policy)
            self.assertEqual(spectrum.parities[0], -1)
            self.assertTrue(np.all(np.diff(spectrum.eigenvalues) >= -1e-12))

    def test_bias_uses_full_matrix(self):
        spectrum = eigen_model(weak_atom_params(1.0, epsilon=0.05),
                               self.policy.with_levels(2), True)
        self.assertIsNone(spectrum.parities)
        self.assertEqual(spectrum.eigenvectors.shape[1], 2)

    def test_ground_state_needs_vectors(self):
        spectrum = Spectrum([0.0], None, LABEL, 0)
        self.assertFalse(spectrum.has_vectors)
        self.assertRaises(SolverError, spectrum.ground_state)

    def test_merge_keeps_values_with_their_vectors(self):
        # Plus sector a round-off below the minus ground state
        minus = Spectrum([1.0, 3.0], np.eye(2), BasisLabel(PARITY_MINUS, 1),
                         1)
        plus = Spectrum([1.0 - 1e-14, 2.0], np.array([[0.0, 1.0],
                                                       [1.0, 0.0]]),
                        BasisLabel(PARITY_PLUS, 1), 1)
        merged = merge_parity_spectra(minus, plus, 3)
        self.assertEqual(list(merged.parities), [-1, 1, 1])
        np.testing.assert_array_equal(merged.eigenvalues,
                                      [1.0, 1.0 - 1e-14, 2.0])
        mapped_minus = sector_to_full(minus.eigenvectors, MINUS, 1)
        mapped_plus = sector_to_full(plus.eigenvectors, PLUS, 1)
        np.testing.assert_array_equal(merged.eigenvectors[:, 0],
                                      mapped_minus[:, 0])
        np.testing.assert_array_equal(merged.eigenvectors[:, 1],
                                      mapped_plus[:, 0])
        np.testing.assert_array_equal(merged.eigenvectors[:, 2],
                                      mapped_plus[:, 1])
