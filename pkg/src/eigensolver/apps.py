# -*- coding: utf-8 -*-
from __future__ import unicode_literals

from django.apps import AppConfig


class EigensolverConfig(AppConfig):
    name = 'eigensolver'
    verbose_name = 'Symmetric banded eigensolvers'
