# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

import math

import numpy as np

from core.ops import coupling_value, renormalize, renormalized_params
from core.params import CouplingLaw, ModelParams, ParameterError
from test import RabiTestCase, rabi_params


class CouplingLawTest(RabiTestCase):

    def test_coupling_value(self):
        self.assertAlmostEqual(coupling_value(CouplingLaw(0.1, 1), 2.0), 0.2)
        self.assertEqual(coupling_value(CouplingLaw(0.0, 0), 5.0), 0.0)
        self.assertAlmostEqual(coupling_value(CouplingLaw(0.1, 2), 3.0), 0.9)

    def test_rejects_invalid_law(self):
        self.assertRaises(ParameterError, CouplingLaw, 0.1, 3)
        self.assertRaises(ParameterError, CouplingLaw, -0.1, 1)
        self.assertRaises(ParameterError, CouplingLaw, 0.1, True)
        self.assertRaises(ParameterError, coupling_value,
                          CouplingLaw(0.1, 1), -1.0)


class ModelParamsTest(RabiTestCase):

    def test_invariants(self):
        self.assertRaises(ParameterError, ModelParams, 1.0, 0.0, 0.0, 1.0)
        self.assertRaises(ParameterError, ModelParams, 1.0, 0.0, 1.0, -0.5)
        self.assertRaises(ParameterError, ModelParams, -1.0, 0.0, 1.0, 1.0)
        self.assertRaises(ParameterError, ModelParams, 1.0, float('nan'),
                          1.0, 1.0)

    def test_with_coupling_keeps_the_rest(self):
        p = rabi_params(0.5, omega_a=0.1, omega_c=0.75, epsilon=0.05,
                        C=0.1, ell=2)
        q = p.with_coupling(2.0)
        self.assertEqual(q.g, 2.0)
        self.assertEqual(q.as_tuple()[:3], p.as_tuple()[:3])
        self.assertEqual(q.coupling_law, p.coupling_law)
        self.assertEqual(p, rabi_params(0.5, omega_a=0.1, omega_c=0.75,
                                        epsilon=0.05, C=0.1, ell=2))


class RenormalizeTest(RabiTestCase):

    def test_identity_without_a2_term(self):
        r = renormalize(rabi_params(1.7))
        self.assertEqual(r.omega_g, 1.0)
        self.assertEqual(r.g_tilde, 1.7)
        self.assertEqual((r.m1, r.m2), (1.0, 0.0))
        self.assertEqual(renormalized_params(rabi_params(1.7)),
                         rabi_params(1.7))

    def test_closed_form_point(self):
        r = renormalize(rabi_params(2.0, C=0.5, ell=1))
        self.assertAlmostEqual(r.omega_g, 3.0, places=14)
        self.assertAlmostEqual(r.g_tilde, 2.0 / math.sqrt(3.0), places=14)
        self.assertAlmostEqual(r.m1, 1.1547005383792515, places=12)
        self.assertAlmostEqual(r.m2, -0.5773502691896258, places=12)

    def test_weak_atom_point(self):
        r = renormalize(ModelParams(0.1, 0.0, 0.75, 1.0, CouplingLaw(0.1, 2)))
        omega_g = math.sqrt(0.8625)
        self.assertAlmostEqual(r.omega_g, omega_g, places=14)
        self.assertAlmostEqual(r.g_tilde, math.sqrt(0.75 / omega_g),
                               places=14)

    def test_ccr_preserved(self):
        rng = np.random.RandomState(7)
        for _ in range(200):
            p = rabi_params(rng.uniform(0.0, 2.0),
                            omega_c=rng.uniform(0.5, 2.0),
                            C=rng.uniform(0.0, 0.1),
                            ell=int(rng.randint(0, 3)))
            r = renormalize(p)
            self.assertLessEqual(abs(r.m1 ** 2 - r.m2 ** 2 - 1.0), 1e-14)
            self.assertGreaterEqual(r.m1, 1.0)
            self.assertLessEqual(r.m2, 0.0)
            self.assertGreaterEqual(r.omega_g, p.omega_c)
            self.assertLessEqual(r.g_tilde, p.g + 1e-15)

    def test_monotone_in_c_and_g(self):
        for ell in (1, 2):
            by_c = [renormalize(rabi_params(1.5, omega_c=0.75, C=c,
                                            ell=ell)).omega_g
                    for c in np.linspace(0.0, 0.5, 11)]
            self.assertTrue(np.all(np.diff(by_c) >= 0))
            by_g = [renormalize(rabi_params(g, omega_c=0.75, C=0.1,
                                            ell=ell)).omega_g
                    for g in np.linspace(0.0, 4.0, 17)]
            self.assertTrue(np.all(np.diff(by_g) >= 0))

    def test_photon_mass(self):
        p = rabi_params(2.0, omega_c=0.75, C=0.1, ell=1)
        r = renormalize(p)
        self.assertAlmostEqual(r.omega_g ** 2,
                               p.omega_c ** 2 + r.photon_mass ** 2,
                               places=12)
        self.assertAlmostEqual(r.squeeze,
                               0.5 * math.log(r.omega_g / p.omega_c))
