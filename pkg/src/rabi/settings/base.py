"""
Django settings for the rabi project.

The project has no database, no templates and no URL configuration. Django
provides the settings layer, the app registry, form validation of the run
configuration and the management commands.
"""
# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from os.path import dirname, join, exists

import environ

# 12factor style environment variables, read from a file when present
env = environ.Env(
    DEBUG=(bool, False),
    SECRET_KEY=(str, 'rabi-development-key-not-for-production'),
    LOG_LEVEL=(str, 'INFO'),
    LOG_FOLDER=(str, ''),
    SWEEP_WORKERS=(int, 1),
)

# Ideally the env file lives outside the repository
env_file = join(dirname(__file__), 'local.env')
if exists(env_file):
    environ.Env.read_env(str(env_file))

# Build paths inside the project like this: join(BASE_DIR(), "directory")
BASE_DIR = environ.Path(__file__) - 3
PROJECT_PATH = BASE_DIR()

SECRET_KEY = env('SECRET_KEY')
DEBUG = env('DEBUG')

# Application definition
INSTALLED_APPS = (
    'core.apps.CoreConfig',
    'hamiltonian.apps.HamiltonianConfig',
    'eigensolver.apps.EigensolverConfig',
    'pairtheory.apps.PairTheoryConfig',
    'observables.apps.ObservablesConfig',
    'jc.apps.JcConfig',
    'sweep.apps.SweepConfig',
)

# Pure numerical project, nothing is persisted
DATABASES = {}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

# Numerical defaults (each app reads them through its own settings.py)
RABI_TRUNCATION_N_START = 32
RABI_TRUNCATION_N_MAX = 4096
RABI_TRUNCATION_TOL = 1e-9
RABI_TAIL_MASS_TOLERANCE = 1e-10
RABI_SWEEP_WORKERS = env('SWEEP_WORKERS')

# Logging folder and level
LOG_LEVEL = env('LOG_LEVEL').upper()
LOGFILE_ROOT = env('LOG_FOLDER') or join(BASE_DIR(), '..', 'logs')
