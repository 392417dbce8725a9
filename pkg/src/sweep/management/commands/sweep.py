# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

import io

from django.core.management.base import BaseCommand, CommandError

import rabi
from sweep.forms import ConfigError, validate_config
from sweep.ops import EXIT_CONFIG, EXIT_IO, EXIT_OK, run_sweep


def read_config(path):
    """
    Raw bytes of a configuration file, I/O problems mapped to exit 4.
    """
    try:
        with io.open(path, 'rb') as handle:
            return handle.read()
    except (IOError, OSError) as exc:
        raise CommandError('Cannot read {0}: {1}'.format(path, exc),
                           returncode=EXIT_IO)


def load_spec(path):
    try:
        return validate_config(read_config(path))
    except ConfigError as exc:
        raise CommandError(exc.msg, returncode=EXIT_CONFIG)


class Command(BaseCommand):
    help = ('Sweep the coupling strength over the grid of a JSON '
            'configuration and write one CSV file per requested output.')

    def get_version(self):
        return rabi.__version__

    def add_arguments(self, parser):
        parser.add_argument('config', help='JSON run configuration')
        parser.add_argument(
            '--workers', type=int, default=None,
            help='Worker processes evaluating grid points')

    def handle(self, *args, **options):
        spec = load_spec(options['config'])
        status = run_sweep(spec, options['workers'])
        if status != EXIT_OK:
            raise CommandError(
                'Sweep finished with status {0}, see the failure column '
                'and the log'.format(status),
                returncode=status)
        self.stdout.write('Sweep written to {0}'.format(spec.out_path))
