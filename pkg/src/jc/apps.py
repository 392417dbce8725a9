# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.apps import AppConfig


class JcConfig(AppConfig):
    name = 'jc'
    verbose_name = 'Jaynes-Cummings oracle'
