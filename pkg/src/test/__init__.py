# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

import os
import shutil
import tempfile

import django
import numpy as np

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'rabi.settings.development')
django.setup()

from django.test import SimpleTestCase  # NOQA

from core.params import CouplingLaw, ModelParams  # NOQA
from hamiltonian.matrices import TruncationPolicy  # NOQA

# Weakly detuned atom used by the photon number checks: omega_a = 0.1,
# epsilon = 0, omega_c = 0.75
WEAK_ATOM_OMEGA_A = 0.1
WEAK_ATOM_OMEGA_C = 0.75


def rabi_params(g, omega_a=1.0, omega_c=1.0, epsilon=0.0, C=0.0, ell=0):
    return ModelParams(omega_a, epsilon, omega_c, g, CouplingLaw(C, ell))


def weak_atom_params(g, C=0.1, ell=1, epsilon=0.0):
    return ModelParams(WEAK_ATOM_OMEGA_A, epsilon, WEAK_ATOM_OMEGA_C, g,
                       CouplingLaw(C, ell))


def random_symmetric_bands(rng, dim, half_bandwidth):
    """
    Random bands (diagonal first) of a symmetric banded matrix.
    """
    bands = [rng.uniform(-5.0, 5.0, dim)]
    for k in range(1, half_bandwidth + 1):
        bands.append(rng.uniform(-2.0, 2.0, max(dim - k, 0)))
    return bands


class RabiTestCase(SimpleTestCase):
    """
    Base class of the numerical tests: a default truncation policy and a
    scratch folder removed after every test.
    """

    policy = TruncationPolicy(n_start=32, n_max=4096, tol=1e-9)

    def setUp(self):
        super(RabiTestCase, self).setUp()
        self.scratch = tempfile.mkdtemp(prefix='rabi-test-')

    def tearDown(self):
        shutil.rmtree(self.scratch, ignore_errors=True)
        super(RabiTestCase, self).tearDown()

    def assertProjectorsClose(self, first, second, atol=1e-8):
        """
        Compare the spans of two sets of orthonormal columns, insensitive
        to sign and to rotations inside degenerate subspaces.
        """
        first = np.atleast_2d(first.T).T
        second = np.atleast_2d(second.T).T
        np.testing.assert_allclose(np.dot(first, first.T),
                                   np.dot(second, second.T), atol=atol)
