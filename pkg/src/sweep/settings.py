# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

from django.conf import settings

# Worker processes used when --workers is not given
WORKERS = getattr(settings, 'RABI_SWEEP_WORKERS', 1)

# CSV layout
FLOAT_FORMAT = getattr(settings, 'RABI_CSV_FLOAT_FORMAT', '%.12g')
LINE_TERMINATOR = '\n'

# Output directory when the configuration does not name one
DEFAULT_OUT_PATH = getattr(settings, 'RABI_DEFAULT_OUT_PATH', 'sweep_output')
