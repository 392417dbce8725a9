# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

from django.conf import settings

# Default truncation policy
N_START = getattr(settings, 'RABI_TRUNCATION_N_START', 32)
N_MAX = getattr(settings, 'RABI_TRUNCATION_N_MAX', 4096)
TOL = getattr(settings, 'RABI_TRUNCATION_TOL', 1e-9)
