# -*- coding: utf-8 -*-
"""
Symmetric banded matrices over truncated spin x Fock bases, and the policy
used to pick the truncation.
"""
from __future__ import unicode_literals, print_function

from collections import namedtuple

import numpy as np

from core.params import ParameterError

from . import settings as ham_settings

# Kinds of basis a matrix can be expressed in
FULL_SPIN_FOCK = 'FullSpinFock'
PARITY_PLUS = 'ParityPlus'
PARITY_MINUS = 'ParityMinus'
JAYNES_CUMMINGS = 'JaynesCummings'

BASIS_KINDS = (FULL_SPIN_FOCK, PARITY_PLUS, PARITY_MINUS, JAYNES_CUMMINGS)

# kind is one of BASIS_KINDS, cutoff the highest Fock level retained
BasisLabel = namedtuple('BasisLabel', ['kind', 'cutoff'])


def basis_dimension(label):
    """
    Number of states in a basis. Spin x Fock bases hold two states per Fock
    level, parity sectors one.
    """
    if label.kind == FULL_SPIN_FOCK:
        return 2 * (label.cutoff + 1)
    if label.kind == JAYNES_CUMMINGS:
        return 2
    return label.cutoff + 1


class SectorMatrix(object):
    """
    Symmetric banded matrix stored by diagonals.

    bands[0] is the main diagonal and bands[k] holds the entries (i, i + k)
    for i = 0..dim-k-1. Only one triangle is stored, so the matrix is
    symmetric by construction. Trailing bands that are identically zero are
    dropped, so half_bandwidth is the true bandwidth.
    """

    def __init__(self, bands, basis_label):
        diag = np.array(bands[0], dtype=float)
        dim = diag.shape[0]
        if dim < 1:
            raise ParameterError('A matrix needs at least one row', dim)

        stored = [diag]
        for k, band in enumerate(bands[1:], start=1):
            band = np.array(band, dtype=float)
            if band.shape != (max(dim - k, 0),):
                raise ParameterError(
                    'Band {0} must have length {1}'.format(k, dim - k),
                    band.shape)
            stored.append(band)
        while len(stored) > 1 and not np.any(stored[-1]):
            stored.pop()

        for band in stored:
            if not np.all(np.isfinite(band)):
                raise ParameterError('Matrix entries must be finite',
                                     basis_label)
            band.setflags(write=False)

        self.bands = tuple(stored)
        self.basis_label = basis_label

    @property
    def dim(self):
        return self.bands[0].shape[0]

    @property
    def half_bandwidth(self):
        return len(self.bands) - 1

    @property
    def diag(self):
        return self.bands[0]

    def band(self, k):
        """
        Entries (i, i + k). Bands beyond the bandwidth are zero.
        """
        if k < len(self.bands):
            return self.bands[k]
        return np.zeros(max(self.dim - k, 0))

    @property
    def band1(self):
        return self.band(1)

    @property
    def band2(self):
        return self.band(2)

    def to_dense(self):
        dense = np.diag(self.bands[0])
        for k, band in enumerate(self.bands[1:], start=1):
            dense += np.diag(band, k) + np.diag(band, -k)
        return dense

    def matvec(self, x):
        """
        Product with a vector or with the columns of a 2D array.
        """
        x = np.asarray(x, dtype=float)
        y = self.bands[0].reshape((-1,) + (1,) * (x.ndim - 1)) * x
        for k, band in enumerate(self.bands[1:], start=1):
            b = band.reshape((-1,) + (1,) * (x.ndim - 1))
            y[:-k] += b * x[k:]
            y[k:] += b * x[:-k]
        return y

    def __repr__(self):
        return 'SectorMatrix(dim={0}, half_bandwidth={1}, {2!r})'.format(
            self.dim, self.half_bandwidth, self.basis_label)


class TruncationPolicy(object):
    """
    Doubling schedule for the Fock cutoff: N = n_start, 2 n_start, ... up to
    n_max. The first m_levels eigenvalues must move by less than tol (an
    absolute energy) between N and 2N.
    """

    def __init__(self, n_start=None, n_max=None, m_levels=1, tol=None):
        self.n_start = int(ham_settings.N_START if n_start is None
                           else n_start)
        self.n_max = int(ham_settings.N_MAX if n_max is None else n_max)
        self.m_levels = int(m_levels)
        self.tol = float(ham_settings.TOL if tol is None else tol)

        if not 1 <= self.n_start <= self.n_max:
            raise ParameterError('Truncation needs 1 <= n_start <= n_max',
                                 (self.n_start, self.n_max))
        if self.m_levels < 1:
            raise ParameterError('m_levels must be at least 1',
                                 self.m_levels)
        if not self.tol > 0:
            raise ParameterError('tol must be positive', self.tol)

    def with_levels(self, m_levels):
        return TruncationPolicy(self.n_start, self.n_max, m_levels, self.tol)

    def schedule(self):
        """
        Cutoffs visited by the adaptive loop.
        """
        n = self.n_start
        while n <= self.n_max:
            yield n
            n *= 2

    def __repr__(self):
        return ('TruncationPolicy(n_start={0}, n_max={1}, m_levels={2}, '
                'tol={3!r})').format(self.n_start, self.n_max,
                                     self.m_levels, self.tol)
