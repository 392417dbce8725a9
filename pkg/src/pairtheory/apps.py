# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.apps import AppConfig


class PairTheoryConfig(AppConfig):
    name = 'pairtheory'
    verbose_name = 'Hopfield-Bogoliubov pair theory'
