# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

from django.conf import settings

# Norm allowed to leave the retained Fock block in a basis change
TAIL_MASS_TOLERANCE = getattr(settings, 'RABI_TAIL_MASS_TOLERANCE', 1e-10)

# Equivalence checks fail above this multiple of the truncation tol
EQUIVALENCE_FACTOR = getattr(settings, 'RABI_EQUIVALENCE_FACTOR', 10.0)

# Decades of decay kept below the last retained overlap amplitude
OVERLAP_DECADES = getattr(settings, 'RABI_OVERLAP_DECADES', 20)
