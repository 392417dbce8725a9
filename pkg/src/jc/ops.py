# -*- coding: utf-8 -*-
"""
Jaynes-Cummings model in closed form: the vacuum |down,0> at E_0 = 0 and,
for every n >= 0, the pair

    E_{+-(n+1)} = omega (n+1) +- g sqrt(n+1)

from the block of |up,n> and |down,n+1>. The ground state is the vacuum for
g < omega and becomes phi_{-(n+1)} for
(sqrt(n+1) + sqrt n) omega < g < (sqrt(n+2) + sqrt(n+1)) omega.
"""
from __future__ import unicode_literals, print_function

import math
from collections import namedtuple

import numpy as np

from core.params import ParameterError
from eigensolver.ops import eigen_tridiagonal
from hamiltonian.ops import build_jaynes_cummings_block
from rabi import RabiException

from . import settings as jc_settings

SEPARABLE_VACUUM = 'separable-vacuum'
ENTANGLED = 'entangled'

JcLevel = namedtuple('JcLevel', ['index', 'energy', 'state_descriptor'])


class DegenerateError(RabiException):
    """
    The coupling sits on a crossing threshold where the ground state is not
    unique. value is the threshold level n.
    """
    pass


def _check(omega, g):
    if not (math.isfinite(omega) and math.isfinite(g)):
        raise ParameterError('omega and g must be finite', (omega, g))
    if not omega > 0:
        raise ParameterError('omega must be positive', omega)
    if g < 0:
        raise ParameterError('g must be nonnegative', g)
    if g > jc_settings.MAX_COUPLING_RATIO * omega:
        raise ParameterError(
            'g/omega above {0:g} does not resolve the crossing thresholds'
            .format(jc_settings.MAX_COUPLING_RATIO), g / omega)


def crossing_threshold(omega, n):
    """
    Coupling at which phi_{-(n+1)} takes over the ground state,
    (sqrt(n+1) + sqrt(n)) omega.
    """
    return (math.sqrt(n + 1.0) + math.sqrt(n)) * omega


def jc_spectrum(omega, g, max_n=None):
    """
    Closed-form levels for n = 0..max_n plus the vacuum level, ascending in
    energy (ties keep the signed index order).

    :param omega: common atom and cavity frequency
    :param g: coupling strength
    :param max_n: highest block
    :return: list of JcLevel
    """
    _check(omega, g)
    if max_n is None:
        max_n = jc_settings.DEFAULT_MAX_N
    levels = [JcLevel(0, 0.0, (SEPARABLE_VACUUM,))]
    for n in range(max_n + 1):
        root = math.sqrt(n + 1.0)
        base = omega * (n + 1)
        levels.append(JcLevel(-(n + 1), base - g * root, (ENTANGLED, n, -1)))
        levels.append(JcLevel(n + 1, base + g * root, (ENTANGLED, n, 1)))
    return sorted(levels, key=lambda level: (level.energy, level.index))


def jc_ground_index(omega, g):
    """
    Signed index of the unique ground state.

    :raise DegenerateError: g on a threshold (sqrt(n+1) + sqrt n) omega
    """
    _check(omega, g)
    window = jc_settings.THRESHOLD_ULPS * np.finfo(float).eps \
        * max(omega, g)

    # Thresholds solve sqrt(n) = (x - 1/x) / 2 with x = g / omega
    x = g / omega
    n = int(0.25 * (x - 1.0 / x) ** 2) if x > 1.0 else 0
    while n > 0 and crossing_threshold(omega, n - 1) >= g:
        n -= 1
    while crossing_threshold(omega, n) < g:
        n += 1

    # Now threshold(n - 1) < g <= threshold(n)
    for level in (n - 1, n):
        if level >= 0 and \
                abs(g - crossing_threshold(omega, level)) <= window:
            raise DegenerateError(
                'g={0!r} is on the crossing threshold of level {1}'.format(
                    g, level),
                level)
    return -n


def jc_numerical_spectrum(omega, g, max_n=None):
    """
    The same levels obtained by diagonalizing every 2x2 block.

    :return: ascending array of energies, vacuum included
    """
    _check(omega, g)
    if max_n is None:
        max_n = jc_settings.DEFAULT_MAX_N
    energies = [0.0]
    for n in range(max_n + 1):
        block = build_jaynes_cummings_block(omega, g, n)
        energies.extend(eigen_tridiagonal(block).eigenvalues)
    return np.sort(np.array(energies))
