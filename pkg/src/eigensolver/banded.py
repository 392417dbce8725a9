# -*- coding: utf-8 -*-
"""
Orthogonal reduction of a symmetric matrix to tridiagonal form by
Householder reflections, Q^T A Q = T with Q = H_0 H_1 ... H_{n-3}.
"""
from __future__ import unicode_literals, print_function

import numpy as np


def householder_tridiagonalize(matrix):
    """
    Reduce a dense symmetric matrix to tridiagonal form.

    Columns that are already in tridiagonal form are skipped, so a
    tridiagonal input comes back unchanged.

    :param matrix: (n, n) symmetric array
    :return: (diagonal, off-diagonal, reflectors) where reflectors is a list
        of (k, v) with H_k = I - 2 v v^T acting on rows k+1..n-1
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    reflectors = []

    for k in range(n - 2):
        x = a[k + 1:, k]
        if not np.any(x[1:]):
            continue

        alpha = np.linalg.norm(x)
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        v /= np.linalg.norm(v)

        # H A H on the trailing block as a symmetric rank-2 update
        trailing = a[k + 1:, k + 1:]
        p = np.dot(trailing, v)
        w = p - np.dot(v, p) * v
        trailing -= 2.0 * (np.outer(v, w) + np.outer(w, v))

        a[k + 1, k] = a[k, k + 1] = alpha
        a[k + 2:, k] = 0.0
        a[k, k + 2:] = 0.0
        reflectors.append((k, v))

    diag = np.diag(a).copy()
    off = np.diag(a, 1).copy()
    return diag, off, reflectors


def apply_reflectors(reflectors, vectors):
    """
    Map eigenvectors of T back to eigenvectors of A, Q z.
    """
    y = np.array(vectors, dtype=float)
    for k, v in reversed(reflectors):
        block = y[k + 1:]
        block -= 2.0 * np.outer(v, np.dot(v, block))
    return y
