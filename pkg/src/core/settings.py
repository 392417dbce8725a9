# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

from django.conf import settings

# Exponents accepted for the coupling law C_g = C * g**ell
ALLOWED_ELL = getattr(settings, 'RABI_ALLOWED_ELL', (0, 1, 2))
