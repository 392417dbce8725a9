# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

import logging
import math

import numpy as np

from core.ops import renormalize, renormalized_params
from core.params import ParameterError
from eigensolver.ops import eigen_adaptive
from hamiltonian.ops import build_full
from rabi.logger import StyleAdapter

from . import settings as pair_settings

logger = StyleAdapter(logging.getLogger(__name__))


class EquivalenceReport(object):
    """
    Comparison of the lowest levels of H_A2 and of its renormalized
    counterpart H(omega_a, eps, omega_g, g_tilde).
    """

    def __init__(self, levels_compared, max_abs_deviation, truncations,
                 deviations=None):
        self.levels_compared = levels_compared
        self.max_abs_deviation = max_abs_deviation
        self.truncations = truncations
        self.deviations = deviations

    def passes(self, tol):
        return self.max_abs_deviation <= \
            pair_settings.EQUIVALENCE_FACTOR * tol

    def __repr__(self):
        return ('EquivalenceReport(levels={0}, max_abs_deviation={1:.3e}, '
                'truncations={2})').format(self.levels_compared,
                                           self.max_abs_deviation,
                                           self.truncations)


def check_unitary_equivalence(p, levels, policy):
    """
    Diagonalize H_A2 directly and the renormalized Hamiltonian without A²
    term, each with its own adaptive truncation, and compare the first
    levels eigenvalues.

    :param p: ModelParams
    :param levels: number of levels compared
    :param policy: TruncationPolicy (m_levels is replaced by levels)
    :return: EquivalenceReport
    """
    if levels < 1:
        raise ParameterError('levels must be at least 1', levels)
    policy = policy.with_levels(levels)

    direct = eigen_adaptive(lambda N: build_full(p, N), policy)
    if p.has_a2_term:
        ren = renormalized_params(p)
        renormalized = eigen_adaptive(lambda N: build_full(ren, N), policy)
    else:
        renormalized = direct

    deviations = np.abs(direct.eigenvalues[:levels]
                        - renormalized.eigenvalues[:levels])
    report = EquivalenceReport(
        levels, float(deviations.max()),
        (direct.truncation_used, renormalized.truncation_used),
        deviations)
    logger.info('Equivalence at g={0}: {1!r}', p.g, report)
    return report


def ground_energy_bounds(p):
    """
    Two-sided estimate of the ground state energy

        -W/2 + w_g/2 - g~^2/w_g <= E_0 <= -(W/2) exp(-2 g~^2/w_g^2)
                                            + w_g/2 - g~^2/w_g

    with W = sqrt(omega_a^2 + eps^2).

    :param p: ModelParams
    :return: (lower, upper)
    """
    r = renormalize(p)
    half_gap = 0.5 * p.spin_splitting
    shift = 0.5 * r.omega_g - r.g_tilde ** 2 / r.omega_g
    decay = math.exp(-2.0 * (r.g_tilde / r.omega_g) ** 2)
    return -half_gap + shift, -half_gap * decay + shift
