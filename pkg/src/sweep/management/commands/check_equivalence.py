# -*- coding: utf-8 -*-
from __future__ import unicode_literals, print_function

from django.core.management.base import BaseCommand, CommandError

import rabi
from pairtheory import settings as pair_settings
from sweep import settings as sweep_settings
from sweep.management.commands.sweep import load_spec
from sweep.ops import (
    EXIT_FAILED, EXIT_NOT_CONVERGED, evaluate_grid, results_frame,
)


class Command(BaseCommand):
    help = ('Compare the spectrum of the Hamiltonian with A² term with that '
            'of its renormalized counterpart over the grid of a JSON '
            'configuration.')

    def get_version(self):
        return rabi.__version__

    def add_arguments(self, parser):
        parser.add_argument('config', help='JSON run configuration')
        parser.add_argument('--workers', type=int, default=None)

    def handle(self, *args, **options):
        spec = load_spec(options['config'])
        workers = options['workers'] or sweep_settings.WORKERS
        results = evaluate_grid('equivalence', spec, workers)
        self.stdout.write(
            results_frame(results).to_csv(
                index=False,
                float_format=sweep_settings.FLOAT_FORMAT,
                lineterminator=sweep_settings.LINE_TERMINATOR,
                na_rep=''),
            ending='')

        if any(failed for _, failed in results):
            raise CommandError('Some grid points did not converge',
                               returncode=EXIT_NOT_CONVERGED)
        limit = pair_settings.EQUIVALENCE_FACTOR * spec.policy.tol
        worst = max(row['max_abs_deviation'] for row, _ in results)
        if worst > limit:
            raise CommandError(
                'Largest deviation {0:.3e} exceeds {1:.3e}'.format(
                    worst, limit),
                returncode=EXIT_FAILED)
