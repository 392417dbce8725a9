# -*- coding: utf-8 -*-
"""
Kernels for symmetric tridiagonal matrices given by their diagonal d and
off-diagonal e:

* Sturm counts through the LDL^T pivots q_i = d_i - s - e_{i-1}^2 / q_{i-1},
  evaluated for many shifts at once.
* Bisection on those counts for any subset of eigenvalues.
* Inverse iteration with a partially pivoted LU factorization for the
  eigenvectors, reorthogonalized inside clusters.

All loops run over the matrix rows; the work for several shifts or several
eigenvectors is vectorized with numpy.
"""
from __future__ import unicode_literals, print_function

import numpy as np

from . import settings as solver_settings
from .spectrum import SolverError

EPS = np.finfo(float).eps
TINY = np.finfo(float).tiny


def gershgorin_interval(diag, off):
    """
    Interval containing every eigenvalue.
    """
    radius = np.zeros_like(diag)
    if off.size:
        radius[:-1] += np.abs(off)
        radius[1:] += np.abs(off)
    lower = float(np.min(diag - radius))
    upper = float(np.max(diag + radius))
    pad = 2.0 * EPS * max(abs(lower), abs(upper)) + 2.0 * TINY
    return lower - pad, upper + pad


def pivot_floor(off):
    """
    Smallest pivot magnitude allowed in the Sturm recurrence.
    """
    largest = float(np.max(off * off)) if off.size else 0.0
    return TINY * max(1.0, largest)


def sturm_count(diag, off, shifts, pivmin=None):
    """
    Number of eigenvalues below each shift.

    :param diag: diagonal, length n
    :param off: off-diagonal, length n - 1
    :param shifts: scalar or array of shifts
    :return: integer array with the shape of shifts
    """
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    shifts = np.asarray(shifts, dtype=float)
    if pivmin is None:
        pivmin = pivot_floor(off)
    off2 = off * off

    q = diag[0] - shifts
    q = np.where(np.abs(q) <= pivmin, -pivmin, q)
    count = (q < 0).astype(int)
    for i in range(1, diag.shape[0]):
        q = diag[i] - shifts - off2[i - 1] / q
        q = np.where(np.abs(q) <= pivmin, -pivmin, q)
        count += q < 0
    return count


def bisect(diag, off, indices, max_iter=None):
    """
    Eigenvalues of given (0-based, ascending) indices by bisection.

    :return: array of eigenvalues, one per index
    """
    if max_iter is None:
        max_iter = solver_settings.BISECTION_MAX_ITER
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    indices = np.asarray(indices, dtype=int)
    if indices.size == 0:
        return np.zeros(0)

    pivmin = pivot_floor(off)
    low, high = gershgorin_interval(diag, off)
    scale = max(abs(low), abs(high), TINY)
    lower = np.full(indices.shape, low)
    upper = np.full(indices.shape, high)

    for _ in range(max_iter):
        width = upper - lower
        limit = np.maximum(
            2.0 * EPS * np.maximum(np.abs(lower), np.abs(upper)),
            EPS * scale) + 2.0 * pivmin
        active = width > limit
        if not np.any(active):
            break
        middle = 0.5 * (lower + upper)
        below = sturm_count(diag, off, middle, pivmin) > indices
        upper = np.where(active & below, middle, upper)
        lower = np.where(active & ~below, middle, lower)
    else:
        width = upper - lower
        limit = np.maximum(
            2.0 * EPS * np.maximum(np.abs(lower), np.abs(upper)),
            EPS * scale) + 2.0 * pivmin
        stuck = np.flatnonzero(width > limit)
        if stuck.size:
            raise SolverError(
                'Bisection did not converge in {0} steps'.format(max_iter),
                int(indices[stuck[0]]))

    return 0.5 * (lower + upper)


def _factor(diag, off, shifts, floor):
    """
    LU factorization with partial pivoting of T - s I for every shift s.
    Columns of the returned arrays belong to the shifts. U has two
    superdiagonals (du, du2) because of the row swaps.
    """
    n = diag.shape[0]
    m = shifts.shape[0]
    d = diag[:, None] - shifts[None, :]
    dl = np.repeat(off[:, None], m, axis=1)
    du = dl.copy()
    du2 = np.zeros((max(n - 2, 0), m))
    swap = np.zeros((max(n - 1, 0), m), dtype=bool)

    for i in range(n - 1):
        pivot = np.abs(d[i]) < np.abs(dl[i])
        swap[i] = pivot
        # Row i stays on top
        keep_fact = np.where(d[i] != 0.0,
                             dl[i] / np.where(d[i] != 0.0, d[i], 1.0),
                             0.0)
        # Row i + 1 moves on top
        swap_fact = d[i] / np.where(pivot, dl[i], 1.0)

        new_d = np.where(pivot, dl[i], d[i])
        new_dl = np.where(pivot, swap_fact, keep_fact)
        new_du = np.where(pivot, d[i + 1], du[i])
        next_d = np.where(pivot, du[i] - swap_fact * d[i + 1],
                          d[i + 1] - keep_fact * du[i])
        if i < n - 2:
            du2[i] = np.where(pivot, du[i + 1], 0.0)
            du[i + 1] = np.where(pivot, -swap_fact * du[i + 1], du[i + 1])
        d[i] = new_d
        dl[i] = new_dl
        du[i] = new_du
        d[i + 1] = next_d

    # Exact singularity means the shift is an eigenvalue: perturb the pivot
    small = np.abs(d) < floor
    d = np.where(small, np.where(d < 0.0, -floor, floor), d)
    return dl, d, du, du2, swap


def _solve(factors, rhs):
    dl, d, du, du2, swap = factors
    x = np.array(rhs, dtype=float)
    n = x.shape[0]

    # L y = P b
    for i in range(n - 1):
        top = x[i].copy()
        bottom = x[i + 1].copy()
        x[i] = np.where(swap[i], bottom, top)
        x[i + 1] = np.where(swap[i], top - dl[i] * bottom,
                            bottom - dl[i] * top)

    # U x = y
    x[n - 1] /= d[n - 1]
    if n > 1:
        x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i]
    return x


def _tridiagonal_product(diag, off, x):
    y = diag[:, None] * x
    if off.size:
        y[:-1] += off[:, None] * x[1:]
        y[1:] += off[:, None] * x[:-1]
    return y


def _orthogonalize(block, x):
    # Classical Gram-Schmidt applied twice
    for _ in range(2):
        x = x - np.dot(block, np.dot(block.T, x))
    return x


def _fix_sign(vectors):
    # Largest component positive, so results do not depend on the start
    rows = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[rows, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def inverse_iteration(diag, off, values, steps=None):
    """
    Eigenvectors for the given (ascending) eigenvalues.

    :param diag: diagonal, length n
    :param off: off-diagonal, length n - 1
    :param values: ascending eigenvalues
    :param steps: maximum number of inverse iteration steps
    :return: (n, len(values)) array of orthonormal columns
    """
    if steps is None:
        steps = solver_settings.INVERSE_ITERATION_STEPS
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    values = np.asarray(values, dtype=float)
    n = diag.shape[0]
    m = values.shape[0]
    if m == 0:
        return np.zeros((n, 0))

    low, high = gershgorin_interval(diag, off)
    norm = max(abs(low), abs(high), TINY)
    cluster_gap = solver_settings.CLUSTER_RTOL * norm
    perturbation = 10.0 * EPS * norm

    # Cluster boundaries and shifts separated by at least the perturbation
    cluster = np.zeros(m, dtype=int)
    shifts = values.copy()
    for j in range(1, m):
        if values[j] - values[j - 1] > cluster_gap:
            cluster[j] = j
        else:
            cluster[j] = cluster[j - 1]
            if shifts[j] - shifts[j - 1] < perturbation:
                shifts[j] = shifts[j - 1] + perturbation

    factors = _factor(diag, off, shifts, EPS * norm)
    # Deterministic start vectors
    start = np.random.RandomState(20240901).uniform(-1.0, 1.0, (n, m))
    x = start / np.linalg.norm(start, axis=0)

    target = solver_settings.RESIDUAL_TOL * np.maximum(1.0, np.abs(values))
    for _ in range(steps):
        x = _solve(factors, x)
        for j in range(m):
            column = x[:, j]
            if cluster[j] < j:
                column = _orthogonalize(x[:, cluster[j]:j], column)
            x[:, j] = column / np.linalg.norm(column)
        residual = np.linalg.norm(
            _tridiagonal_product(diag, off, x) - x * values, axis=0)
        if np.all(residual <= 1e-3 * target):
            break

    bad = np.flatnonzero(residual > target)
    if bad.size:
        raise SolverError(
            'Inverse iteration did not reach the residual target', int(bad[0]))
    return _fix_sign(x)
