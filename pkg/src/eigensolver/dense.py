# -*- coding: utf-8 -*-
"""
Brute-force dense symmetric eigensolver by cyclic Jacobi rotations.

Slow (O(n^3) per sweep, Python loop over pairs) and only meant as the
reference the production solvers are checked against, for n up to a couple
of hundred.
"""
from __future__ import unicode_literals, print_function

import numpy as np

from . import settings as solver_settings
from .spectrum import SolverError


def jacobi_eigensystem(matrix, max_sweeps=None):
    """
    Diagonalize a dense symmetric matrix.

    :param matrix: (n, n) symmetric array
    :param max_sweeps: cap on the number of cyclic sweeps
    :return: (ascending eigenvalues, eigenvectors as columns)
    """
    if max_sweeps is None:
        max_sweeps = solver_settings.JACOBI_MAX_SWEEPS

    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    if n < 2 or scale == 0.0:
        order = np.argsort(np.diag(a), kind='stable')
        return np.diag(a)[order], v[:, order]

    eps = np.finfo(float).eps
    target = eps * scale
    for sweep in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                # After a few sweeps, entries below round-off of both
                # diagonal entries are dropped instead of rotated
                small = 100.0 * abs(apq)
                if sweep > 3 and abs(app) + small == abs(app) \
                        and abs(aqq) + small == abs(aqq):
                    a[p, q] = a[q, p] = 0.0
                    continue

                # Rotation angle annihilating a[p, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                elif abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = np.sign(theta) / (abs(theta)
                                          + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q

                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off > target:
            raise SolverError(
                'Jacobi rotations did not converge in {0} sweeps'.format(
                    max_sweeps),
                int(np.argmax(np.max(np.abs(np.tril(a, -1)), axis=1))))

    values = np.diag(a)
    order = np.argsort(values, kind='stable')
    return values[order], v[:, order]


def jacobi_eigenvalues(matrix, max_sweeps=None):
    return jacobi_eigensystem(matrix, max_sweeps)[0]
