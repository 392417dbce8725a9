# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

import numpy as np

from rabi import RabiException


class SolverError(RabiException):
    """
    An iteration cap was hit. value is the index of the offending
    eigenvalue or eigenvector.
    """
    pass


class NotConverged(RabiException):
    """
    The adaptive truncation reached n_max without the requested levels
    settling. value holds the last per-level deltas and truncation the last
    cutoff tried.
    """

    def __init__(self, msg, value=None, truncation=None):
        super(NotConverged, self).__init__(msg, value)
        self.truncation = truncation


class Spectrum(object):
    """
    Ascending eigenvalues and, on demand, the eigenvectors as columns in the
    coordinates of basis_label.

    :param eigenvalues: sorted array
    :param eigenvectors: (dim, k) array or None
    :param basis_label: BasisLabel of the source matrix
    :param truncation_used: Fock cutoff of the matrix that produced it
    :param converged_levels: levels certified by the adaptive loop, None
        for a single direct solve
    :param parities: +1/-1 per level when known, otherwise None
    """

    def __init__(self, eigenvalues, eigenvectors, basis_label,
                 truncation_used, converged_levels=None, parities=None):
        self.eigenvalues = np.asarray(eigenvalues, dtype=float)
        self.eigenvectors = eigenvectors
        self.basis_label = basis_label
        self.truncation_used = truncation_used
        self.converged_levels = converged_levels
        self.parities = parities

    def __len__(self):
        return self.eigenvalues.shape[0]

    @property
    def has_vectors(self):
        return self.eigenvectors is not None

    def ground_state(self):
        """
        Lowest eigenvector.
        """
        if self.eigenvectors is None:
            raise SolverError('Spectrum computed without eigenvectors', 0)
        return self.eigenvectors[:, 0]

    def __repr__(self):
        return 'Spectrum({0} levels, {1!r}, N={2})'.format(
            len(self), self.basis_label, self.truncation_used)
