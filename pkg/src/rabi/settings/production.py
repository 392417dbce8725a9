# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import logging.config

from .base import *  # NOQA

DEBUG = False

# Production runs are batch jobs: log to the console only and let the job
# runner collect the stream.
LOGGING_CONFIG = None
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': "[%(asctime)s] %(levelname)s "
                      "[%(name)s:%(lineno)s] %(message)s",
            'datefmt': "%d/%b/%Y %H:%M:%S"
        },
    },
    'handlers': {
        'console': {
            'level': 'INFO',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose'
        }
    },
    'loggers': dict(
        (name, {'handlers': ['console'], 'level': LOG_LEVEL})
        for name in ('rabi', 'core', 'hamiltonian', 'eigensolver',
                     'pairtheory', 'observables', 'jc', 'sweep')
    ),
}

logging.config.dictConfig(LOGGING)
