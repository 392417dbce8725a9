# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.apps import AppConfig


class HamiltonianConfig(AppConfig):
    name = 'hamiltonian'
    verbose_name = 'Truncated Hamiltonian matrices'
