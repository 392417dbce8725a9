# -*- coding: utf-8 -*-
"""
Configure Django before pytest collects the app tests.
"""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'rabi.settings.development')
django.setup()
