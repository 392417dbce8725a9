# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

from django.conf import settings

# Iteration caps
BISECTION_MAX_ITER = getattr(settings, 'RABI_BISECTION_MAX_ITER', 200)
INVERSE_ITERATION_STEPS = getattr(settings,
                                  'RABI_INVERSE_ITERATION_STEPS',
                                  6)
JACOBI_MAX_SWEEPS = getattr(settings, 'RABI_JACOBI_MAX_SWEEPS', 60)

# Residual accepted for an eigenpair: RESIDUAL_TOL * max(1, |lambda|)
RESIDUAL_TOL = getattr(settings, 'RABI_RESIDUAL_TOL', 1e-8)

# Eigenvalues closer than this fraction of the matrix norm are treated as
# a cluster and their vectors reorthogonalized
CLUSTER_RTOL = getattr(settings, 'RABI_CLUSTER_RTOL', 1e-3)

# Rows inspected by the growth diagnostics of the adaptive loop
GROWTH_TAIL = getattr(settings, 'RABI_GROWTH_TAIL', 8)
