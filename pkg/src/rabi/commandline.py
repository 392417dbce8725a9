# -*- coding: utf-8 -*-
"""
Entry point used by manage.py. The project version replaces Django's in
--version; everything else goes to Django's management utility.
"""
from __future__ import unicode_literals, print_function

import sys

from django.core.management import execute_from_command_line

import rabi


def execute(argv=None):
    argv = sys.argv if argv is None else argv
    if argv[1:] == ['--version']:
        sys.stdout.write(rabi.__version__ + '\n')
        return
    execute_from_command_line(argv)
