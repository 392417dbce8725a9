# -*- coding: utf-8 -*-
"""
Expectation values of real state vectors over the interleaved spin x Fock
basis (index 2n + s, s = 0 up, s = 1 down).
"""
from __future__ import unicode_literals, print_function

import math

import numpy as np

from pairtheory.squeeze import TailMassError

from . import settings as obs_settings


def spin_components(state):
    state = np.asarray(state, dtype=float)
    if state.ndim != 1 or state.shape[0] < 2 or state.shape[0] % 2:
        raise ValueError('Expected an interleaved spin x Fock vector')
    return state[0::2], state[1::2]


def fock_weights(state):
    """
    Probability of every Fock level, summed over the spin.
    """
    up, down = spin_components(state)
    return up * up + down * down


def tail_mass(state, fraction=None):
    """
    Weight carried by the top fraction of the Fock levels (at least one).
    """
    if fraction is None:
        fraction = obs_settings.TAIL_FRACTION
    weights = fock_weights(state)
    window = max(1, int(math.ceil(fraction * weights.shape[0])))
    return float(np.sum(weights[-window:]))


def check_tail(state, tolerance=None):
    if tolerance is None:
        tolerance = obs_settings.TAIL_MASS_TOLERANCE
    mass = tail_mass(state)
    if mass > tolerance:
        raise TailMassError(
            'State has weight {0:.3e} in its top Fock levels'.format(mass),
            mass)


def number_expectation(state):
    """
    <a^+ a> = sum_n n (|c_n^up|^2 + |c_n^down|^2).

    :param state: normalized interleaved vector
    :return: nonnegative float
    """
    check_tail(state)
    weights = fock_weights(state)
    return float(np.dot(np.arange(weights.shape[0]), weights))


def quadrature_moments(state):
    """
    (<a + a^+>, <a^2 + a^+2>) of a real state.
    """
    check_tail(state)
    first = 0.0
    second = 0.0
    for c in spin_components(state):
        n = np.arange(c.shape[0], dtype=float)
        first += 2.0 * np.dot(c[:-1] * c[1:], np.sqrt(n[1:]))
        second += 2.0 * np.dot(c[:-2] * c[2:], np.sqrt(n[1:-1] * n[2:]))
    return float(first), float(second)


def field_fluctuation(state, omega):
    """
    Variance of the field (a + a^+) / sqrt(2 omega) in the given state.

    :param state: normalized interleaved vector
    :param omega: frequency of the mode the Fock basis belongs to
    :return: (Delta Phi)^2
    """
    first, second = quadrature_moments(state)
    variance = second + 2.0 * number_expectation(state) + 1.0 - first ** 2
    return variance / (2.0 * omega)


def ladder_norms(state):
    """
    (||a psi||^2, ||a^+ psi||^2), computed by applying the ladder operators.
    """
    check_tail(state)
    lowered = 0.0
    raised = 0.0
    for c in spin_components(state):
        root = np.sqrt(np.arange(1, c.shape[0] + 1, dtype=float))
        # (a c)_n = sqrt(n+1) c_{n+1},  (a^+ c)_{n+1} = sqrt(n+1) c_n
        lowered += float(np.sum((root[:-1] * c[1:]) ** 2))
        raised += float(np.sum((root * c) ** 2))
    return lowered, raised


def parity_expectation(state):
    """
    <(-1)^(a^+ a) s_z>.
    """
    up, down = spin_components(state)
    signs = np.where(np.arange(up.shape[0]) % 2 == 0, 1.0, -1.0)
    return float(np.dot(signs, up * up - down * down))


def vacuum_weight(state):
    up, down = spin_components(state)
    return float(up[0] ** 2 + down[0] ** 2)


def flip_spin(vectors):
    """
    s_x applied to interleaved vectors.
    """
    vectors = np.asarray(vectors, dtype=float)
    flipped = np.empty_like(vectors)
    flipped[0::2] = vectors[1::2]
    flipped[1::2] = vectors[0::2]
    return flipped


def displaced_vacuum(alpha, cutoff):
    """
    Fock coefficients of exp(alpha (a^+ - a)) |0>, real alpha, truncated at
    cutoff.
    """
    coeffs = np.empty(cutoff + 1)
    coeffs[0] = math.exp(-0.5 * alpha * alpha)
    for n in range(1, cutoff + 1):
        coeffs[n] = coeffs[n - 1] * alpha / math.sqrt(n)
    return coeffs
