# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

import pandas as pd
from django.core.management.base import BaseCommand, CommandError

import rabi
from core.params import ParameterError
from jc.ops import DegenerateError, jc_ground_index, jc_spectrum
from sweep import settings as sweep_settings
from sweep.ops import EXIT_CONFIG, EXIT_FAILED


def describe(level):
    if len(level.state_descriptor) == 1:
        return level.state_descriptor[0]
    kind, n, sign = level.state_descriptor
    return '{0}(n={1},{2})'.format(kind, n, '+' if sign > 0 else '-')


class Command(BaseCommand):
    help = 'Print the closed-form Jaynes-Cummings spectrum and ground state.'

    def get_version(self):
        return rabi.__version__

    def add_arguments(self, parser):
        parser.add_argument('--omega', type=float, required=True)
        parser.add_argument('--g', type=float, required=True)
        parser.add_argument('--max-n', type=int, default=None,
                            dest='max_n')

    def handle(self, *args, **options):
        omega = options['omega']
        g = options['g']
        try:
            levels = jc_spectrum(omega, g, options['max_n'])
        except ParameterError as exc:
            raise CommandError(exc.msg, returncode=EXIT_CONFIG)
        frame = pd.DataFrame(
            [(level.index, level.energy, describe(level))
             for level in levels],
            columns=['index', 'energy', 'state'])
        self.stdout.write(
            frame.to_csv(index=False,
                         float_format=sweep_settings.FLOAT_FORMAT,
                         lineterminator=sweep_settings.LINE_TERMINATOR),
            ending='')

        try:
            ground = jc_ground_index(omega, g)
        except DegenerateError as exc:
            raise CommandError(exc.msg, returncode=EXIT_FAILED)
        self.stdout.write('ground_index,{0}'.format(ground))
