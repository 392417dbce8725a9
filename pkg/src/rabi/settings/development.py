# -*- coding: utf-8 -*-
from __future__ import unicode_literals

import logging.config
import os

from .base import *  # NOQA

DEBUG = True

# Log everything to the logs directory at the top
if not exists(LOGFILE_ROOT):
    os.makedirs(LOGFILE_ROOT)

# Reset logging and configure it only once, here
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
        'simple': {
            'format': '%(levelname)s %(message)s'
        },
    },
    'handlers': {
        'proj_log_file': {
            'level': 'DEBUG',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': join(LOGFILE_ROOT, 'project.log'),
            'maxBytes': 5 * 1024 * 1024,
            'backupCount': 3,
            'formatter': 'verbose'
        },
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple'
        }
    },
    'loggers': {
        'rabi': {
            'handlers': ['proj_log_file', 'console'],
            'level': LOG_LEVEL,
        },
        'core': {
            'handlers': ['proj_log_file'],
            'level': LOG_LEVEL,
        },
        'hamiltonian': {
            'handlers': ['proj_log_file'],
            'level': LOG_LEVEL,
        },
        'eigensolver': {
            'handlers': ['proj_log_file'],
            'level': LOG_LEVEL,
        },
        'pairtheory': {
            'handlers': ['proj_log_file'],
            'level': LOG_LEVEL,
        },
        'observables': {
            'handlers': ['proj_log_file'],
            'level': LOG_LEVEL,
        },
        'jc': {
            'handlers': ['proj_log_file'],
            'level': LOG_LEVEL,
        },
        'sweep': {
            'handlers': ['proj_log_file', 'console'],
            'level': LOG_LEVEL,
        },
    }
}

logging.config.dictConfig(LOGGING)
