# -*- coding: utf-8 -*-
"""
Ground state photon observables of H_A2 and the bounds they must respect.

Everything is computed in the renormalized representation, the A²-free
Hamiltonian H(omega_a, eps, omega_g, g_tilde); bare photon quantities come
from the Bogoliubov coefficients m1, m2.
"""
from __future__ import unicode_literals, print_function

import logging
import math
from collections import OrderedDict, namedtuple

import numpy as np

from core.ops import renormalize, renormalized_params
from core.params import ParameterError
from eigensolver.ops import eigen_model
from hamiltonian.matrices import TruncationPolicy
from hamiltonian.ops import rotate_spin
from pairtheory.ops import ground_energy_bounds
from rabi import RabiException
from rabi.logger import StyleAdapter

from . import settings as obs_settings
from .state import (
    displaced_vacuum, field_fluctuation, flip_spin, number_expectation,
    parity_expectation, quadrature_moments, spin_components, vacuum_weight,
)

logger = StyleAdapter(logging.getLogger(__name__))

PullThrough = namedtuple(
    'PullThrough',
    ['partial', 'tail', 'weights', 'transition_bound', 'certified_lower'])

EntanglementFlags = namedtuple(
    'EntanglementFlags',
    ['excited_component', 'n_star', 's_star', 'vacuum_weight',
     'vacuum_bound_ok'])


class InsufficientLevels(RabiException):
    """
    The spectrum holds fewer eigenpairs than the computation needs.
    """
    pass


def _ratio_exponent(r):
    # 2 g~^2 / w_g^2
    return 2.0 * (r.g_tilde / r.omega_g) ** 2


def ren_lower_function(p):
    """
    L(g) = g~/w_g - sqrt(W (1 - exp(-2 g~^2/w_g^2)) / (2 w_g)) with
    W = sqrt(omega_a^2 + eps^2). Can be negative.
    """
    r = renormalize(p)
    spread = math.sqrt(p.spin_splitting * -math.expm1(-_ratio_exponent(r))
                       / (2.0 * r.omega_g))
    return r.g_tilde / r.omega_g - spread


def ren_photon_bounds(p):
    """
    Bounds on the renormalized ground state photon number,
    max(L, 0)^2 <= N0_ren <= g~^2 / w_g^2.

    :param p: ModelParams
    :return: (upper, lower)
    """
    r = renormalize(p)
    upper = (r.g_tilde / r.omega_g) ** 2
    lower = max(ren_lower_function(p), 0.0) ** 2
    return upper, lower


def ren_photon_window(p):
    """
    Both roots of the quadratic inequality behind the lower bound:
    (g~/w_g -+ sqrt(W (1 - exp(-2 g~^2/w_g^2)) / (2 w_g)))^2, the lower
    one clipped at zero.

    :return: (low, high)
    """
    r = renormalize(p)
    centre = r.g_tilde / r.omega_g
    spread = centre - ren_lower_function(p)
    return max(centre - spread, 0.0) ** 2, (centre + spread) ** 2


def bare_correction(p):
    """
    Correction eps(g) subtracted from m2^2 in the bare photon lower bound,

        eps(g) = (w_g^2 - w_c^2) / (2 w_c w_g) * (g~^2/w_g^2 + g^-(ell+1))

    It tends to 1/(8 C w_c) for ell = 1 and to 0 for ell = 2.
    """
    if p.g == 0.0:
        return 0.0
    r = renormalize(p)
    spread = (r.omega_g ** 2 - p.omega_c ** 2) / (p.omega_c * r.omega_g)
    return 0.5 * spread * ((r.g_tilde / r.omega_g) ** 2
                           + p.g ** -(p.ell + 1))


def bare_lower_bound(p):
    """
    Lower bound m2^2 - eps(g) of the bare ground state photon number.

    :param p: ModelParams with C > 0 and ell in (1, 2)
    :return: float
    """
    if not p.has_a2_term:
        raise ParameterError('The bare photon bound needs C > 0', p.C)
    if p.ell not in (1, 2):
        raise ParameterError('The bare photon bound needs ell = 1 or 2',
                             p.ell)
    r = renormalize(p)
    return r.m2 ** 2 - bare_correction(p)


def bare_photon_number(n_ren, squeeze_moment, r):
    """
    <a^+ a> from renormalized expectations:
    (m1^2 + m2^2) N_ren + m2^2 + m1 m2 <b^2 + b^+2>.
    """
    return (r.m1 ** 2 + r.m2 ** 2) * n_ren + r.m2 ** 2 \
        + r.m1 * r.m2 * squeeze_moment


def transition_weights(spectrum):
    """
    |<E_nu| s_x |E_0>|^2 for every computed level. With known parities the
    weights between levels of equal parity are exactly zero.
    """
    vectors = spectrum.eigenvectors
    weights = np.dot(vectors.T, flip_spin(vectors[:, 0])) ** 2
    if spectrum.parities is not None:
        weights[spectrum.parities == spectrum.parities[0]] = 0.0
    return weights


def pull_through_reconstruction(spectrum, r, terms=None, omega_a=None):
    """
    Ground state photon number of the renormalized Hamiltonian from its
    spectrum,

        N0 = g~^2 sum_nu |<E_nu| s_x |E_0>|^2 / (E_nu - E_0 + w_g)^2

    summed over nu <= terms, plus a tail bounded with sum_nu w_nu = 1.

    :param spectrum: Spectrum with eigenvectors of H(omega_a, eps, w_g, g~)
    :param r: RenormalizedParams
    :param terms: highest level M included in the partial sum
    :param omega_a: atom frequency, enables the transition bound diagnostic
    :return: PullThrough(partial, tail, weights, transition_bound,
        certified_lower)
    """
    if terms is None:
        terms = obs_settings.PULL_THROUGH_TERMS
    if not spectrum.has_vectors:
        raise InsufficientLevels('Spectrum has no eigenvectors', 0)
    if len(spectrum) < terms + 1:
        raise InsufficientLevels(
            'Need {0} eigenpairs, spectrum has {1}'.format(
                terms + 1, len(spectrum)),
            len(spectrum))

    energies = spectrum.eigenvalues
    gaps = energies - energies[0]
    weights = transition_weights(spectrum)[:terms + 1]
    coupling = r.g_tilde ** 2
    denominators = (gaps[:terms + 1] + r.omega_g) ** 2

    partial = coupling * float(np.sum(weights / denominators))
    remaining = max(0.0, 1.0 - float(np.sum(weights)))
    # Next level when it was computed, else the last one (a weaker bound)
    edge = gaps[terms + 1] if len(spectrum) > terms + 1 else gaps[terms]
    tail = coupling * remaining / (edge + r.omega_g) ** 2

    certified = coupling * float(np.max(weights / denominators))

    transition = None
    if omega_a is not None:
        capped = weights.copy()
        excited = gaps[:terms + 1] > 0
        capped[excited] = np.minimum(
            weights[excited], omega_a ** 2 / gaps[:terms + 1][excited] ** 2)
        transition = coupling * float(np.sum(capped / denominators)) + tail

    return PullThrough(partial, tail, weights, transition, certified)


def coherent_overlap(ground_state, p, mapped=True):
    """
    Squared overlap of the ground state with the normalized displaced vacuum
    approximant (D(-g/w_c)|up,0> + D(g/w_c)|down,0>)/sqrt 2 of the original
    representation. With mapped set, the approximant is first brought back
    by U_xz^T to the representation of build_full, where the ground state
    lives; the overlap then tends to 1 as g grows.

    :param ground_state: interleaved vector of build_full coordinates
    :param p: ModelParams with epsilon = 0 and C = 0
    :param mapped: rotate the approximant back before comparing
    :return: float in [0, 1]
    """
    if p.epsilon != 0.0 or p.has_a2_term:
        raise ParameterError(
            'The coherent approximant needs epsilon = 0 and C = 0', p)
    up, _ = spin_components(ground_state)
    cutoff = up.shape[0] - 1
    alpha = p.g / p.omega_c

    approximant = np.empty(2 * (cutoff + 1))
    approximant[0::2] = displaced_vacuum(-alpha, cutoff)
    approximant[1::2] = displaced_vacuum(alpha, cutoff)
    if mapped:
        approximant = rotate_spin(approximant, inverse=True)
    approximant /= np.linalg.norm(approximant)

    return float(np.dot(approximant, ground_state) ** 2)


def entanglement_witness(ground_state, n_ren=None, threshold=None,
                         tol=None):
    """
    Coefficient-existence witnesses: an excited component <n*, s*|E0> with
    n* > 0, and the vacuum weight sum_s |<0, s|E0>|^2 >= 1 - N0_ren.

    :return: EntanglementFlags
    """
    if threshold is None:
        threshold = obs_settings.ENTANGLEMENT_THRESHOLD
    if tol is None:
        tol = obs_settings.BOUND_SLACK
    if n_ren is None:
        n_ren = number_expectation(ground_state)

    up, down = spin_components(ground_state)
    squared = np.vstack([up * up, down * down])
    squared[:, 0] = 0.0
    s_star, n_star = np.unravel_index(np.argmax(squared), squared.shape)
    excited = bool(squared[s_star, n_star] > threshold)

    weight = vacuum_weight(ground_state)
    return EntanglementFlags(
        excited_component=excited,
        n_star=int(n_star) if excited else None,
        s_star=('up', 'down')[s_star] if excited else None,
        vacuum_weight=weight,
        vacuum_bound_ok=weight >= 1.0 - n_ren - tol)


class GroundStateReport(object):
    """
    Ground state observables of one parameter point together with every
    bound that applies to it.
    """

    COLUMNS = ('E0', 'E1', 'N0_ren', 'N0_bare', 'upper_ren', 'lower_ren',
               'bare_lower', 'gse_lower', 'gse_upper', 'delta_phi_sq',
               'parity', 'coherent_overlap', 'vacuum_weight', 'sandwich_ok')

    def __init__(self, **kwargs):
        self.E0 = kwargs['E0']
        self.E1 = kwargs['E1']
        self.N0_ren = kwargs['N0_ren']
        self.N0_bare = kwargs['N0_bare']
        self.delta_phi_sq = kwargs['delta_phi_sq']
        self.parity = kwargs.get('parity')
        self.upper_bound_ren = kwargs['upper_bound_ren']
        self.lower_bound_ren = kwargs['lower_bound_ren']
        self.bare_lower_bound = kwargs.get('bare_lower_bound')
        self.gse_lower = kwargs['gse_lower']
        self.gse_upper = kwargs['gse_upper']
        self.coherent_overlap = kwargs.get('coherent_overlap')
        self.entanglement_flags = kwargs['entanglement_flags']
        self.truncation_used = kwargs.get('truncation_used')

    @property
    def vacuum_weight(self):
        return self.entanglement_flags.vacuum_weight

    def fluctuation_ok(self, omega_c, slack=None):
        if slack is None:
            slack = obs_settings.BOUND_SLACK
        return self.delta_phi_sq <= (2.0 * self.N0_bare + 1.0) / omega_c \
            + slack

    def sandwich_ok(self, tol, slack=None):
        """
        Photon number and ground energy inside their bounds.
        """
        if slack is None:
            slack = obs_settings.BOUND_SLACK
        photons = self.lower_bound_ren - slack <= self.N0_ren \
            <= self.upper_bound_ren + slack
        energy = self.gse_lower - tol <= self.E0 <= self.gse_upper + tol
        return bool(photons and energy)

    def as_row(self, tol):
        """
        Values in the order of COLUMNS. Quantities that do not apply are
        None.
        """
        return OrderedDict([
            ('E0', self.E0),
            ('E1', self.E1),
            ('N0_ren', self.N0_ren),
            ('N0_bare', self.N0_bare),
            ('upper_ren', self.upper_bound_ren),
            ('lower_ren', self.lower_bound_ren),
            ('bare_lower', self.bare_lower_bound),
            ('gse_lower', self.gse_lower),
            ('gse_upper', self.gse_upper),
            ('delta_phi_sq', self.delta_phi_sq),
            ('parity', self.parity),
            ('coherent_overlap', self.coherent_overlap),
            ('vacuum_weight', self.vacuum_weight),
            ('sandwich_ok', self.sandwich_ok(tol)),
        ])


def ground_state_report(p, policy=None):
    """
    Diagonalize the renormalized Hamiltonian of p and collect the ground
    state observables and bounds.

    :param p: ModelParams
    :param policy: TruncationPolicy, at least two levels are converged
    :return: GroundStateReport
    """
    policy = policy or TruncationPolicy()
    policy = policy.with_levels(max(2, policy.m_levels))
    r = renormalize(p)
    spectrum = eigen_model(renormalized_params(p), policy, want_vectors=True)
    state = spectrum.ground_state()

    n_ren = number_expectation(state)
    _, squeeze_moment = quadrature_moments(state)
    upper, lower = ren_photon_bounds(p)
    gse_lower, gse_upper = ground_energy_bounds(p)

    parity = None
    if p.epsilon == 0.0:
        parity = int(round(parity_expectation(state)))

    overlap = None
    if p.epsilon == 0.0 and not p.has_a2_term:
        overlap = coherent_overlap(state, p)

    bare_lower = None
    if p.has_a2_term and p.ell in (1, 2):
        bare_lower = bare_lower_bound(p)

    report = GroundStateReport(
        E0=float(spectrum.eigenvalues[0]),
        E1=float(spectrum.eigenvalues[1]),
        N0_ren=n_ren,
        N0_bare=bare_photon_number(n_ren, squeeze_moment, r),
        delta_phi_sq=field_fluctuation(state, r.omega_g),
        parity=parity,
        upper_bound_ren=upper,
        lower_bound_ren=lower,
        bare_lower_bound=bare_lower,
        gse_lower=gse_lower,
        gse_upper=gse_upper,
        coherent_overlap=overlap,
        entanglement_flags=entanglement_witness(state, n_ren),
        truncation_used=spectrum.truncation_used)
    logger.debug('Ground state report at g={0}: E0={1:.12g} N0_ren={2:.6g}',
                 p.g, report.E0, report.N0_ren)
    return report


def direct_bare_photon_number(p, policy=None):
    """
    <a^+ a> in the ground state of H_A2 diagonalized without the pair
    theory, as an independent check of the transform route.
    """
    policy = (policy or TruncationPolicy()).with_levels(1)
    spectrum = eigen_model(p, policy, want_vectors=True)
    return number_expectation(spectrum.ground_state())
