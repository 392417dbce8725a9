# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.apps import AppConfig


class SweepConfig(AppConfig):
    name = 'sweep'
    verbose_name = 'Parameter sweeps and CSV output'
