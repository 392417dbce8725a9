# -*- coding: utf-8 -*-
"""
Builders for the truncated matrix representations.

Full spin x Fock basis is interleaved with the spin index running fastest:
index 2n + s, s = 0 for spin up and s = 1 for spin down. Every entry comes
from a closed formula, never from operator products.
"""
from __future__ import unicode_literals, print_function

import numpy as np

from core.ops import coupling_value
from core.params import ParameterError

from .matrices import (
    BasisLabel, FULL_SPIN_FOCK, JAYNES_CUMMINGS, PARITY_MINUS, PARITY_PLUS,
    SectorMatrix,
)

PLUS = '+'
MINUS = '-'

SQRT_HALF = np.sqrt(0.5)


def _check_cutoff(N):
    if int(N) != N or N < 1:
        raise ParameterError('Fock cutoff must be an integer >= 1', N)
    return int(N)


def _sector_kind(sector):
    if sector == PLUS:
        return PARITY_PLUS
    if sector == MINUS:
        return PARITY_MINUS
    raise ParameterError('Parity sector must be "+" or "-"', sector)


def _sector_diagonal(p, sector, n):
    # d_n +- (-1)**n Delta
    sign = 1.0 if sector == PLUS else -1.0
    alternating = np.where(n % 2 == 0, 1.0, -1.0)
    return p.omega_c * (n + 0.5) + sign * alternating * 0.5 * p.omega_a


def build_parity_sector(p, sector, N):
    """
    Tridiagonal Jacobi matrix of one parity sector of the plain quantum
    Rabi model.

    The + sector is spanned by |up,0>, |down,1>, |up,2>, ... and the - sector
    by |down,0>, |up,1>, ... so the parity (-1)**(a^+ a) s_z equals the
    sector sign.

    :param p: ModelParams with epsilon = 0 and C = 0
    :param sector: PLUS or MINUS
    :param N: Fock cutoff
    :return: SectorMatrix of dimension N + 1
    """
    N = _check_cutoff(N)
    kind = _sector_kind(sector)
    if p.epsilon != 0.0 or p.has_a2_term:
        raise ParameterError(
            'The tridiagonal parity form requires epsilon = 0 and C = 0',
            p)

    n = np.arange(N + 1, dtype=float)
    diag = _sector_diagonal(p, sector, n)
    band1 = p.g * np.sqrt(n[1:])
    return SectorMatrix([diag, band1], BasisLabel(kind, N))


def build_parity_sector_quadratic(p, sector, N):
    """
    Pentadiagonal parity sector including the A² term C_g g (a + a^+)^2.

    :param p: ModelParams with epsilon = 0
    :param sector: PLUS or MINUS
    :param N: Fock cutoff
    :return: SectorMatrix of dimension N + 1
    """
    N = _check_cutoff(N)
    kind = _sector_kind(sector)
    if p.epsilon != 0.0:
        raise ParameterError('Parity sectors require epsilon = 0', p)

    c_g_g = coupling_value(p.coupling_law, p.g) * p.g
    n = np.arange(N + 1, dtype=float)
    diag = _sector_diagonal(p, sector, n) + c_g_g * (2.0 * n + 1.0)
    band1 = p.g * np.sqrt(n[1:])
    band2 = c_g_g * np.sqrt(n[1:-1] * n[2:])
    return SectorMatrix([diag, band1, band2], BasisLabel(kind, N))


def _full_bands(N, spin_diag, photon_diag, spin_flip, one_step,
                two_step):
    """
    Assemble the interleaved bands from per-Fock-level pieces.

    spin_diag: (up, down) energy added to every Fock level
    photon_diag: array of length N + 1 added to both spins
    spin_flip: coupling between |up,n> and |down,n>
    one_step: (upup, downdown, updown) multipliers of sqrt(n+1) between
        Fock levels n and n+1 (updown couples |down,n> with |up,n+1> and
        |up,n> with |down,n+1>)
    two_step: array of length N - 1 coupling levels n and n+2, both spins
    """
    dim = 2 * (N + 1)
    root = np.sqrt(np.arange(1, N + 1, dtype=float))

    diag = np.empty(dim)
    diag[0::2] = photon_diag + spin_diag[0]
    diag[1::2] = photon_diag + spin_diag[1]

    # offset 1: (2n, 2n+1) spin flip, (2n+1, 2n+2) cross-spin photon step
    band1 = np.zeros(dim - 1)
    band1[0::2] = spin_flip
    band1[1::2] = one_step[2] * root

    # offset 2: same-spin photon step
    band2 = np.zeros(dim - 2)
    band2[0::2] = one_step[0] * root
    band2[1::2] = one_step[1] * root

    # offset 3: (2n, 2n+3) cross-spin photon step
    band3 = np.zeros(dim - 3)
    band3[0::2] = one_step[2] * root

    # offset 4: two photon steps, both spins
    band4 = np.zeros(dim - 4)
    band4[0::2] = two_step
    band4[1::2] = two_step

    return [diag, band1, band2, band3, band4]


def build_full(p, N):
    """
    Generalized quantum Rabi Hamiltonian with A² term in the interleaved
    basis |up,0>, |down,0>, |up,1>, |down,1>, ...

    :param p: ModelParams
    :param N: Fock cutoff
    :return: SectorMatrix of dimension 2(N + 1)
    """
    N = _check_cutoff(N)
    c_g_g = coupling_value(p.coupling_law, p.g) * p.g
    n = np.arange(N + 1, dtype=float)

    bands = _full_bands(
        N,
        spin_diag=(0.5 * p.omega_a, -0.5 * p.omega_a),
        photon_diag=p.omega_c * (n + 0.5) + c_g_g * (2.0 * n + 1.0),
        spin_flip=-0.5 * p.epsilon,
        one_step=(0.0, 0.0, p.g),
        two_step=c_g_g * np.sqrt(n[1:-1] * n[2:]))
    return SectorMatrix(bands, BasisLabel(FULL_SPIN_FOCK, N))


def build_original(p, N):
    """
    The same Hamiltonian before the spin rotation U_xz:

        -(w_a s_x + eps s_z)/2 + w_c (a^+ a + 1/2) + g s_z (a + a^+)
        + C_g g (a + a^+)^2

    Its spectrum equals that of build_full.
    """
    N = _check_cutoff(N)
    c_g_g = coupling_value(p.coupling_law, p.g) * p.g
    n = np.arange(N + 1, dtype=float)

    bands = _full_bands(
        N,
        spin_diag=(-0.5 * p.epsilon, 0.5 * p.epsilon),
        photon_diag=p.omega_c * (n + 0.5) + c_g_g * (2.0 * n + 1.0),
        spin_flip=-0.5 * p.omega_a,
        one_step=(p.g, -p.g, 0.0),
        two_step=c_g_g * np.sqrt(n[1:-1] * n[2:]))
    return SectorMatrix(bands, BasisLabel(FULL_SPIN_FOCK, N))


def build_jaynes_cummings_block(omega, g, n):
    """
    Jaynes-Cummings block in the basis (|up,n>, |down,n+1>). Its
    eigenvalues are omega (n+1) +- g sqrt(n+1).

    :return: 2x2 SectorMatrix
    """
    if int(n) != n or n < 0:
        raise ParameterError('Block level must be an integer >= 0', n)
    if not omega > 0:
        raise ParameterError('omega must be positive', omega)
    n = int(n)
    energy = omega * (n + 1)
    return SectorMatrix(
        [[energy, energy], [g * np.sqrt(n + 1.0)]],
        BasisLabel(JAYNES_CUMMINGS, n))


def sector_positions(sector, N):
    """
    Interleaved full-basis index of every state of a parity sector.
    """
    n = np.arange(N + 1)
    # spin up (s = 0) where the sector sign matches (-1)**n
    spin = n % 2 if sector == PLUS else 1 - n % 2
    return 2 * n + spin


def sector_to_full(vectors, sector, N=None):
    """
    Embed parity sector vectors into the interleaved spin x Fock basis.

    :param vectors: array (N_sector + 1,) or (N_sector + 1, k)
    :param sector: PLUS or MINUS
    :param N: cutoff of the target basis, at least the sector cutoff
    :return: array (2(N + 1),) or (2(N + 1), k)
    """
    _sector_kind(sector)
    vectors = np.asarray(vectors, dtype=float)
    source_cutoff = vectors.shape[0] - 1
    N = source_cutoff if N is None else N
    if N < source_cutoff:
        raise ParameterError('Target cutoff below the sector cutoff', N)

    full = np.zeros((2 * (N + 1),) + vectors.shape[1:])
    full[sector_positions(sector, source_cutoff)] = vectors
    return full


def rotate_spin(vectors, inverse=False):
    """
    Apply U_xz = (1/sqrt 2)(1 1; -1 1) to the spin factor of interleaved
    vectors, or its transpose when inverse is set. build_original equals
    U_xz build_full U_xz^T.
    """
    vectors = np.asarray(vectors, dtype=float)
    up = vectors[0::2]
    down = vectors[1::2]
    result = np.empty_like(vectors)
    if inverse:
        result[0::2] = SQRT_HALF * (up - down)
        result[1::2] = SQRT_HALF * (up + down)
    else:
        result[0::2] = SQRT_HALF * (up + down)
        result[1::2] = SQRT_HALF * (down - up)
    return result


def pad_full(vectors, N):
    """
    Extend interleaved vectors with zeros up to Fock cutoff N.
    """
    vectors = np.asarray(vectors, dtype=float)
    dim = 2 * (N + 1)
    if vectors.shape[0] > dim:
        raise ParameterError('Vectors longer than the target basis', N)
    padded = np.zeros((dim,) + vectors.shape[1:])
    padded[:vectors.shape[0]] = vectors
    return padded
