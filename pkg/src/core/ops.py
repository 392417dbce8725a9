# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

import math

from .params import CouplingLaw, ModelParams, ParameterError, \
    RenormalizedParams


def coupling_value(law, g):
    """
    Evaluate the coupling law C_g = C * g**ell.

    :param law: CouplingLaw
    :param g: Coupling strength (>= 0)
    :return: C_g, a nonnegative float
    """
    if g < 0:
        raise ParameterError('g must be nonnegative', g)
    if law.is_trivial:
        return 0.0
    return law.C * g ** law.ell


def renormalize(p):
    """
    Closed forms of the pair theory:

        omega_g = sqrt(omega_c**2 + 4 C_g g omega_c)
        g_tilde = g sqrt(omega_c / omega_g)
        m1, m2 = (sqrt(omega_c/omega_g) +- sqrt(omega_g/omega_c)) / 2

    :param p: ModelParams
    :return: RenormalizedParams
    """
    c_g_g = coupling_value(p.coupling_law, p.g) * p.g
    if c_g_g == 0.0:
        # Exact identity transform
        return RenormalizedParams(p.omega_c, p.g, 1.0, 0.0, p.omega_c, 0.0)

    omega_g = math.sqrt(p.omega_c * p.omega_c + 4.0 * c_g_g * p.omega_c)
    ratio = math.sqrt(p.omega_c / omega_g)
    # cosh/sinh of the squeeze parameter keep m1**2 - m2**2 = 1 to round-off
    r = 0.5 * math.log(omega_g / p.omega_c)
    return RenormalizedParams(
        omega_g=omega_g,
        g_tilde=p.g * ratio,
        m1=math.cosh(r),
        m2=-math.sinh(r),
        omega_c=p.omega_c,
        c_g_times_g=c_g_g)


def renormalized_params(p):
    """
    ModelParams of the renormalized Hamiltonian H(omega_a, eps, omega_g,
    g_tilde) without A² term, unitarily equivalent to p.
    """
    r = renormalize(p)
    return ModelParams(p.omega_a, p.epsilon, r.omega_g, r.g_tilde,
                       CouplingLaw())
