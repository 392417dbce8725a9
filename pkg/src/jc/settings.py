# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

from django.conf import settings

# Distance to a crossing threshold (in units of omega * machine epsilon)
# treated as degenerate
THRESHOLD_ULPS = getattr(settings, 'RABI_JC_THRESHOLD_ULPS', 8)

# Blocks tabulated when no max_n is given
DEFAULT_MAX_N = getattr(settings, 'RABI_JC_DEFAULT_MAX_N', 20)

# Largest g / omega for which neighbouring thresholds stay apart in floating
# point
MAX_COUPLING_RATIO = getattr(settings, 'RABI_JC_MAX_COUPLING_RATIO', 1e7)
