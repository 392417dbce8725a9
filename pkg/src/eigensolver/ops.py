# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

import logging

import numpy as np

from core.params import ParameterError
from hamiltonian.matrices import BasisLabel, FULL_SPIN_FOCK
from hamiltonian.ops import (
    MINUS, PLUS, build_full, build_parity_sector,
    build_parity_sector_quadratic, sector_to_full,
)
from rabi.logger import StyleAdapter

from . import settings as solver_settings
from .banded import apply_reflectors, householder_tridiagonalize
from .spectrum import NotConverged, Spectrum
from .tridiagonal import bisect, inverse_iteration

logger = StyleAdapter(logging.getLogger(__name__))


def _levels(dim, count):
    if count is None:
        return dim
    return max(0, min(int(count), dim))


def eigen_tridiagonal(m, want_vectors=False, count=None):
    """
    Eigenvalues (and optionally eigenvectors) of a symmetric tridiagonal
    SectorMatrix by Sturm bisection and inverse iteration.

    :param m: SectorMatrix with half_bandwidth <= 1
    :param want_vectors: compute eigenvectors as well
    :param count: only the lowest count levels (all when None)
    :return: Spectrum
    """
    if m.half_bandwidth > 1:
        raise ParameterError('Matrix is not tridiagonal', m.half_bandwidth)

    diag = m.diag
    off = m.band1
    values = bisect(diag, off, np.arange(_levels(m.dim, count)))
    vectors = None
    if want_vectors:
        vectors = inverse_iteration(diag, off, values)
    return Spectrum(values, vectors, m.basis_label, m.basis_label.cutoff)


def eigen_banded(m, want_vectors=False, count=None):
    """
    Eigenvalues of a symmetric banded SectorMatrix: Householder reduction to
    tridiagonal form followed by eigen_tridiagonal. Tridiagonal input goes
    straight to eigen_tridiagonal.

    :param m: SectorMatrix
    :param want_vectors: compute eigenvectors as well
    :param count: only the lowest count levels (all when None)
    :return: Spectrum
    """
    if m.half_bandwidth <= 1:
        return eigen_tridiagonal(m, want_vectors, count)

    diag, off, reflectors = householder_tridiagonalize(m.to_dense())
    values = bisect(diag, off, np.arange(_levels(m.dim, count)))
    vectors = None
    if want_vectors:
        vectors = apply_reflectors(reflectors,
                                   inverse_iteration(diag, off, values))
    return Spectrum(values, vectors, m.basis_label, m.basis_label.cutoff)


def solve(m, want_vectors=False, count=None):
    """
    Pick the cheapest solver for the bandwidth of m.
    """
    if m.half_bandwidth <= 1:
        return eigen_tridiagonal(m, want_vectors, count)
    return eigen_banded(m, want_vectors, count)


def growth_ratios(m, tail=None):
    """
    Off-diagonal row weight relative to the diagonal,
    (sum_k |b_k|) / (|a_n| + 1), for the last rows of m. For a Jacobi
    matrix whose truncations converge these ratios go to zero.
    """
    if tail is None:
        tail = solver_settings.GROWTH_TAIL
    dim = m.dim
    weight = np.zeros(dim)
    for k, band in enumerate(m.bands[1:], start=1):
        weight[:dim - k] += np.abs(band)
        weight[k:] += np.abs(band)
    ratios = weight / (np.abs(m.diag) + 1.0)
    return ratios[-min(tail, dim):]


def eigen_adaptive(builder, policy, want_vectors=False):
    """
    Doubling truncation loop. Cutoffs N = n_start, 2 n_start, ... are tried
    until the first m_levels eigenvalues move by less than tol between N
    and 2N (with 2N <= n_max). The 2N spectrum is returned.

    :param builder: callable N -> SectorMatrix producing nested matrices
    :param policy: TruncationPolicy
    :param want_vectors: compute eigenvectors of the returned spectrum
    :return: Spectrum with m_levels levels
    """
    count = policy.m_levels
    previous = None
    deltas = None
    last_cutoff = None

    for cutoff in policy.schedule():
        matrix = builder(cutoff)
        last_cutoff = cutoff
        if matrix.dim < count:
            continue

        spectrum = solve(matrix, False, count)
        logger.debug('N={0}: growth ratios {1}', cutoff,
                     growth_ratios(matrix))
        if previous is not None:
            deltas = np.abs(spectrum.eigenvalues - previous)
            logger.debug('N={0}: max delta {1:.3e}', cutoff, deltas.max())
            if np.all(deltas < policy.tol):
                if want_vectors:
                    spectrum = solve(matrix, True, count)
                spectrum.truncation_used = cutoff
                spectrum.converged_levels = count
                return spectrum
        previous = spectrum.eigenvalues

    raise NotConverged(
        'Levels did not settle below tol={0} up to N={1}'.format(
            policy.tol, last_cutoff),
        deltas, last_cutoff)


def eigen_model(p, policy, want_vectors=False, use_parity=True):
    """
    Lowest policy.m_levels levels of the generalized Rabi Hamiltonian with
    A² term.

    With epsilon = 0 the two parity sectors are solved separately and
    merged; eigenvectors are then embedded in the interleaved full basis and
    every level carries its parity. Otherwise the full matrix is used.

    :param p: ModelParams
    :param policy: TruncationPolicy
    :param want_vectors: compute eigenvectors
    :param use_parity: allow the parity route
    :return: Spectrum
    """
    if p.epsilon != 0.0 or not use_parity:
        return eigen_adaptive(lambda N: build_full(p, N), policy,
                              want_vectors)

    builder = build_parity_sector_quadratic if p.has_a2_term \
        else build_parity_sector
    minus = eigen_adaptive(lambda N: builder(p, MINUS, N), policy,
                           want_vectors)
    plus = eigen_adaptive(lambda N: builder(p, PLUS, N), policy,
                          want_vectors)
    return merge_parity_spectra(minus, plus, policy.m_levels)


def merge_parity_spectra(minus, plus, count):
    """
    Union of the two sector spectra, lowest count levels. Ties go to the
    minus sector, which holds the ground state.
    """
    values = np.concatenate([minus.eigenvalues, plus.eigenvalues])
    parities = np.concatenate([-np.ones(len(minus), dtype=int),
                               np.ones(len(plus), dtype=int)])
    order = np.argsort(values, kind='stable')

    # The ground state of the epsilon = 0 model has parity -1; keep it first
    # when round-off puts the plus sector a hair below
    if parities[order[0]] == 1:
        gap = minus.eigenvalues[0] - values[order[0]]
        if gap <= 1e-12 * max(1.0, abs(minus.eigenvalues[0])):
            rest = [i for i in order if i != 0]
            order = np.array([0] + rest)

    order = order[:count]
    cutoff = max(minus.truncation_used, plus.truncation_used)
    vectors = None
    if minus.has_vectors and plus.has_vectors:
        full = np.hstack([
            sector_to_full(minus.eigenvectors, MINUS, cutoff),
            sector_to_full(plus.eigenvectors, PLUS, cutoff)])
        vectors = full[:, order]

    # Values, vectors and parities share one order; values are ascending up
    # to the tie allowance above
    return Spectrum(values[order], vectors,
                    BasisLabel(FULL_SPIN_FOCK, cutoff), cutoff,
                    converged_levels=count, parities=parities[order])
