# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.apps import AppConfig


class ObservablesConfig(AppConfig):
    name = 'observables'
    verbose_name = 'Ground state photon observables and bounds'
