# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

from django.conf import settings

# Weight allowed in the top Fock levels of a state before expectations are
# refused
TAIL_MASS_TOLERANCE = getattr(settings, 'RABI_TAIL_MASS_TOLERANCE', 1e-10)
TAIL_FRACTION = getattr(settings, 'RABI_TAIL_FRACTION', 0.125)

# Squared magnitude counted as a nonzero coefficient
ENTANGLEMENT_THRESHOLD = getattr(settings, 'RABI_ENTANGLEMENT_THRESHOLD',
                                 1e-8)

# Slack used when checking the bound sandwiches
BOUND_SLACK = getattr(settings, 'RABI_BOUND_SLACK', 1e-8)

# Number of excited levels used by the pull-through reconstruction
PULL_THROUGH_TERMS = getattr(settings, 'RABI_PULL_THROUGH_TERMS', 30)
