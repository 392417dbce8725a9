# -*- coding: utf-8 -*-
"""
Basis change between the Fock basis phi_n of the bare mode (frequency
omega_c) and the Fock basis psi_n of the physical mode (frequency omega_g),
related by a = m1 b + m2 b^+.

Column n of the overlaps O[m, n] = <psi_m | phi_n> is the eigenvector of

    a^+ a = (m1^2 + m2^2) b^+ b + m2^2 + m1 m2 (b^+ b^+ + b b)

for the eigenvalue n, written over the psi basis. The operator only couples
m to m +- 2, so each parity is a tridiagonal problem solved by inverse
iteration. Signs follow phi_n = a^+ phi_{n-1} / sqrt(n) with O[0, 0] > 0.
"""
from __future__ import unicode_literals, print_function

import math

import numpy as np

from eigensolver.tridiagonal import inverse_iteration
from rabi import RabiException

from . import settings as pair_settings


class TailMassError(RabiException):
    """
    The basis change did not keep the norm of its input. value is the norm
    that was lost (negative when norm was gained).
    """
    pass


def overlap_height(r, rows, cols):
    """
    Highest physical Fock level needed so that the bare levels up to cols
    are represented to machine precision.
    """
    ratio = abs(r.m2) / r.m1
    if ratio == 0.0:
        return max(rows, cols)
    spread = r.m1 ** 2 + r.m2 ** 2
    # Amplitudes decay like ratio^(m/2) beyond the bulk of the column
    margin = 2.0 * pair_settings.OVERLAP_DECADES * math.log(10.0) \
        / -math.log(ratio)
    return max(rows, int(math.ceil(spread * (cols + 1) + margin)) + 2)


def _number_bands(r, height, parity):
    m = np.arange(parity, height + 1, 2, dtype=float)
    diag = (r.m1 ** 2 + r.m2 ** 2) * m + r.m2 ** 2
    off = r.m1 * r.m2 * np.sqrt((m[:-1] + 1.0) * (m[:-1] + 2.0))
    return diag, off


def _raise_bare(r, column):
    # a^+ = m1 b^+ + m2 b over the psi basis
    root = np.sqrt(np.arange(1, column.shape[0], dtype=float))
    result = np.zeros_like(column)
    result[1:] += r.m1 * root * column[:-1]
    result[:-1] += r.m2 * root * column[1:]
    return result


def overlap_matrix(r, rows, cols):
    """
    O[m, n] = <psi_m | phi_n> for m <= rows and n <= cols.

    :param r: RenormalizedParams
    :param rows: highest physical Fock level
    :param cols: highest bare Fock level
    :return: (rows + 1, cols + 1) array
    """
    if r.m2 == 0.0:
        return np.eye(rows + 1, cols + 1)

    height = overlap_height(r, rows, cols)
    full = np.zeros((height + 1, cols + 1))
    for parity in (0, 1):
        levels = np.arange(parity, cols + 1, 2, dtype=float)
        if not levels.size:
            continue
        diag, off = _number_bands(r, height, parity)
        full[parity::2, parity::2] = inverse_iteration(diag, off, levels)

    if full[0, 0] < 0.0:
        full[:, 0] = -full[:, 0]
    for n in range(1, cols + 1):
        if np.dot(full[:, n], _raise_bare(r, full[:, n - 1])) < 0.0:
            full[:, n] = -full[:, n]
    return full[:rows + 1]


def _split(vector):
    vector = np.asarray(vector, dtype=float)
    if vector.ndim != 1 or vector.shape[0] % 2:
        raise ValueError('Expected an interleaved spin x Fock vector')
    return vector[0::2], vector[1::2]


def _join(up, down):
    result = np.empty(2 * up.shape[0])
    result[0::2] = up
    result[1::2] = down
    return result


def _check_tail(source, result, tolerance):
    lost = float(np.dot(source, source) - np.dot(result, result))
    if abs(lost) > tolerance:
        raise TailMassError(
            'Basis change lost norm {0:.3e}; raise the cutoff'.format(lost),
            lost)


def physical_from_bare(coeffs, r, cutoff=None, tolerance=None):
    """
    Coefficients over the physical Fock basis of a state given over the bare
    Fock basis, both in interleaved spin x Fock order.

    :param coeffs: interleaved vector, bare basis
    :param r: RenormalizedParams
    :param cutoff: highest physical Fock level kept (input cutoff if None)
    :param tolerance: allowed lost norm
    :return: interleaved vector, physical basis
    """
    if tolerance is None:
        tolerance = pair_settings.TAIL_MASS_TOLERANCE
    up, down = _split(coeffs)
    source_cutoff = up.shape[0] - 1
    cutoff = source_cutoff if cutoff is None else cutoff
    if r.m2 == 0.0:
        result = np.zeros(2 * (cutoff + 1))
        keep = min(cutoff, source_cutoff) + 1
        result[:2 * keep] = np.asarray(coeffs, dtype=float)[:2 * keep]
    else:
        overlap = overlap_matrix(r, cutoff, source_cutoff)
        result = _join(np.dot(overlap, up), np.dot(overlap, down))
    _check_tail(np.asarray(coeffs, dtype=float), result, tolerance)
    return result


def bare_from_physical(coeffs, r, cutoff=None, tolerance=None):
    """
    Inverse of physical_from_bare, through the transpose of the overlaps.
    """
    if tolerance is None:
        tolerance = pair_settings.TAIL_MASS_TOLERANCE
    up, down = _split(coeffs)
    source_cutoff = up.shape[0] - 1
    cutoff = source_cutoff if cutoff is None else cutoff
    if r.m2 == 0.0:
        result = np.zeros(2 * (cutoff + 1))
        keep = min(cutoff, source_cutoff) + 1
        result[:2 * keep] = np.asarray(coeffs, dtype=float)[:2 * keep]
    else:
        overlap = overlap_matrix(r, source_cutoff, cutoff)
        result = _join(np.dot(overlap.T, up), np.dot(overlap.T, down))
    _check_tail(np.asarray(coeffs, dtype=float), result, tolerance)
    return result
