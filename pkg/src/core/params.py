# -*- coding: utf-8 -*-
"""
Value types describing one point of the generalized quantum Rabi model with
A²-term:

    H = (w_a/2) s_z - (eps/2) s_x + w_c (a^+ a + 1/2) + g s_x (a + a^+)
        + C_g g (a + a^+)^2,       C_g = C * g**ell

All energies use hbar = 1.
"""
from __future__ import unicode_literals, print_function

import math

from rabi import RabiException

from . import settings as core_settings


class ParameterError(RabiException, ValueError):
    """
    Raised when a parameter set or a builder precondition is violated.
    """
    pass


def _finite(name, value):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ParameterError('{0} must be a number'.format(name), value)
    if not math.isfinite(value):
        raise ParameterError('{0} must be finite'.format(name), value)
    return value


class CouplingLaw(object):
    """
    Coupling law C_g(g) = C * g**ell. C = 0 (any ell) means no A² term.
    """

    def __init__(self, C=0.0, ell=0):
        self.C = _finite('C', C)
        if self.C < 0:
            raise ParameterError('C must be nonnegative', C)
        if ell not in core_settings.ALLOWED_ELL or isinstance(ell, bool):
            raise ParameterError(
                'ell must be one of {0}'.format(
                    ', '.join(str(x) for x in core_settings.ALLOWED_ELL)),
                ell)
        self.ell = int(ell)

    @property
    def is_trivial(self):
        return self.C == 0.0

    def __eq__(self, other):
        return isinstance(other, CouplingLaw) and \
            (self.C, self.ell) == (other.C, other.ell)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.C, self.ell))

    def __repr__(self):
        return 'CouplingLaw(C={0!r}, ell={1!r})'.format(self.C, self.ell)


class ModelParams(object):
    """
    The five Hamiltonian parameters plus the coupling law.

    :param omega_a: Atom frequency (>= 0)
    :param epsilon: Bias
    :param omega_c: Cavity frequency (> 0)
    :param g: Coupling strength (>= 0)
    :param coupling_law: CouplingLaw, defaults to no A² term
    """

    def __init__(self, omega_a, epsilon, omega_c, g, coupling_law=None):
        self.omega_a = _finite('omega_a', omega_a)
        self.epsilon = _finite('epsilon', epsilon)
        self.omega_c = _finite('omega_c', omega_c)
        self.g = _finite('g', g)
        self.coupling_law = coupling_law or CouplingLaw()

        if self.omega_c <= 0:
            raise ParameterError('omega_c must be positive', omega_c)
        if self.g < 0:
            raise ParameterError('g must be nonnegative', g)
        # Negative atom frequencies are reached through the spin-chiral
        # relation, never as input
        if self.omega_a < 0:
            raise ParameterError('omega_a must be nonnegative', omega_a)

    @property
    def C(self):
        return self.coupling_law.C

    @property
    def ell(self):
        return self.coupling_law.ell

    @property
    def has_a2_term(self):
        return not self.coupling_law.is_trivial

    @property
    def spin_splitting(self):
        """
        Gap of the free atom, sqrt(omega_a**2 + epsilon**2).
        """
        return math.hypot(self.omega_a, self.epsilon)

    def with_coupling(self, g):
        """
        Copy of the parameters at another coupling strength.
        """
        return ModelParams(self.omega_a, self.epsilon, self.omega_c, g,
                           self.coupling_law)

    def as_tuple(self):
        return (self.omega_a, self.epsilon, self.omega_c, self.g,
                self.coupling_law.C, self.coupling_law.ell)

    def __eq__(self, other):
        return isinstance(other, ModelParams) and \
            self.as_tuple() == other.as_tuple()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return ('ModelParams(omega_a={0!r}, epsilon={1!r}, omega_c={2!r}, '
                'g={3!r}, coupling_law={4!r})').format(
            self.omega_a, self.epsilon, self.omega_c, self.g,
            self.coupling_law)


class RenormalizedParams(object):
    """
    Result of the Hopfield-Bogoliubov elimination of the A² term.

    a = m1 b + m2 b^+ with m1**2 - m2**2 = 1. The physical mode oscillates
    at omega_g and couples to the spin with g_tilde.
    """

    def __init__(self, omega_g, g_tilde, m1, m2, omega_c, c_g_times_g):
        self.omega_g = omega_g
        self.g_tilde = g_tilde
        self.m1 = m1
        self.m2 = m2
        self.omega_c = omega_c
        self.c_g_times_g = c_g_times_g

    @property
    def squeeze(self):
        """
        Squeeze parameter r = ln(omega_g / omega_c) / 2, so that
        m1 = cosh r and m2 = -sinh r.
        """
        return 0.5 * math.log(self.omega_g / self.omega_c)

    @property
    def photon_mass(self):
        """
        2 sqrt(C_g g omega_c), so that omega_g**2 = omega_c**2 + mass**2.
        """
        return 2.0 * math.sqrt(self.c_g_times_g * self.omega_c)

    def __repr__(self):
        return ('RenormalizedParams(omega_g={0!r}, g_tilde={1!r}, '
                'm1={2!r}, m2={3!r})').format(
            self.omega_g, self.g_tilde, self.m1, self.m2)
