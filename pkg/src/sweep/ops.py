# -*- coding: utf-8 -*-
"""
Execution of a SweepSpec: every grid point is evaluated independently
(optionally by a pool of worker processes) and the rows are written in grid
order as one CSV file per requested output.
"""
from __future__ import unicode_literals, print_function

import io
import logging
import math
import os
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import pandas as pd
from django.utils import timezone

import rabi
from core.ops import renormalize
from eigensolver.ops import eigen_model
from jc.ops import DegenerateError, jc_ground_index, jc_spectrum
from observables.ops import (
    GroundStateReport, bare_lower_bound, ground_state_report,
    ren_photon_bounds, ren_photon_window,
)
from pairtheory.ops import check_unitary_equivalence, ground_energy_bounds
from rabi import RabiException
from rabi.logger import StyleAdapter

from . import settings as sweep_settings

logger = StyleAdapter(logging.getLogger(__name__))

# Exit statuses of a sweep
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_NOT_CONVERGED = 3
EXIT_IO = 4

NAN = float('nan')


def _number(value):
    return NAN if value is None else value


def _failure(exc):
    return '{0}: {1}'.format(type(exc).__name__, exc)


def energies_row(params, levels, policy, x):
    """
    Lowest levels at g = x omega_c, raw and shifted by g^2/omega_c.
    """
    p = params.with_coupling(x * params.omega_c)
    row = OrderedDict([('g_over_omega', x)])
    try:
        spectrum = eigen_model(p, policy.with_levels(levels))
        energies = list(spectrum.eigenvalues[:levels])
        truncation = spectrum.truncation_used
        converged = True
        failure = ''
    except RabiException as exc:
        energies = [NAN] * levels
        truncation = getattr(exc, 'truncation', None)
        converged = False
        failure = _failure(exc)

    shift = p.g ** 2 / p.omega_c
    for index, energy in enumerate(energies):
        row['level_{0}'.format(index)] = energy
    row['truncation_N'] = _number(truncation)
    row['converged'] = converged
    for index, energy in enumerate(energies):
        row['shifted_level_{0}'.format(index)] = energy + shift
    row['failure'] = failure
    return row, not converged


def observables_row(params, levels, policy, x):
    """
    GroundStateReport at g = x omega_c.
    """
    p = params.with_coupling(x * params.omega_c)
    row = OrderedDict([('g_over_omega', x)])
    try:
        report = ground_state_report(p, policy)
        values = report.as_row(policy.tol)
        failure = ''
    except RabiException as exc:
        values = OrderedDict((name, None)
                             for name in GroundStateReport.COLUMNS)
        failure = _failure(exc)

    for name, value in values.items():
        row[name] = value if name == 'sandwich_ok' else _number(value)
    row['failure'] = failure
    return row, bool(failure)


def bounds_row(params, levels, policy, x):
    """
    Closed-form bounds at g = x omega_c; nothing is diagonalized.
    """
    p = params.with_coupling(x * params.omega_c)
    r = renormalize(p)
    gse_lower, gse_upper = ground_energy_bounds(p)
    upper, lower = ren_photon_bounds(p)
    bare_lower = None
    if p.has_a2_term and p.ell in (1, 2):
        bare_lower = bare_lower_bound(p)
    row = OrderedDict([
        ('g_over_omega', x),
        ('gse_lower', gse_lower),
        ('gse_upper', gse_upper),
        ('upper_ren', upper),
        ('lower_ren', lower),
        ('ren_window_upper', ren_photon_window(p)[1]),
        ('bare_lower', _number(bare_lower)),
        ('omega_g', r.omega_g),
        ('g_tilde', r.g_tilde),
        ('photon_mass', r.photon_mass),
    ])
    return row, False


def jc_row(params, levels, policy, x):
    """
    Closed-form Jaynes-Cummings levels with omega = omega_c.
    """
    omega = params.omega_c
    g = x * omega
    spectrum = jc_spectrum(omega, g, max_n=levels)
    row = OrderedDict([('g_over_omega', x)])
    for index, level in enumerate(spectrum[:levels]):
        row['level_{0}'.format(index)] = level.energy
    try:
        row['ground_index'] = jc_ground_index(omega, g)
    except DegenerateError:
        row['ground_index'] = NAN
    return row, False


def equivalence_row(params, levels, policy, x):
    """
    Direct versus renormalized spectrum at g = x omega_c.
    """
    p = params.with_coupling(x * params.omega_c)
    row = OrderedDict([('g_over_omega', x)])
    try:
        report = check_unitary_equivalence(p, levels, policy)
        row['levels_compared'] = report.levels_compared
        row['max_abs_deviation'] = report.max_abs_deviation
        row['N_direct'] = report.truncations[0]
        row['N_renormalized'] = report.truncations[1]
        row['failure'] = ''
    except RabiException as exc:
        row['levels_compared'] = levels
        row['max_abs_deviation'] = NAN
        row['N_direct'] = NAN
        row['N_renormalized'] = NAN
        row['failure'] = _failure(exc)
    return row, bool(row['failure'])


EVALUATORS = OrderedDict([
    ('energies', energies_row),
    ('observables', observables_row),
    ('bounds', bounds_row),
    ('jc', jc_row),
    ('equivalence', equivalence_row),
])


def evaluate_grid(output, spec, workers=1):
    """
    Rows of one output for every grid point, in grid order.

    :return: list of (row, failed)
    """
    evaluator = partial(EVALUATORS[output], spec.params, spec.levels,
                        spec.policy)
    grid = [float(x) for x in spec.grid()]
    if workers <= 1 or len(grid) == 1:
        return [evaluator(x) for x in grid]

    with ProcessPoolExecutor(max_workers=workers) as executor:
        # map keeps the grid order
        return list(executor.map(evaluator, grid))


def header_line():
    return '# generated by rabi {0} at {1}\n'.format(
        rabi.__version__, timezone.now().isoformat())


def write_csv(frame, path, no_timestamp=False):
    """
    Write a frame as UTF-8 CSV with LF line endings and 12 significant
    digits, preceded by a timestamp comment unless suppressed.
    """
    with io.open(path, 'w', encoding='utf-8', newline='') as handle:
        if not no_timestamp:
            handle.write(header_line())
        frame.to_csv(handle,
                     index=False,
                     float_format=sweep_settings.FLOAT_FORMAT,
                     lineterminator=sweep_settings.LINE_TERMINATOR,
                     na_rep='')


def results_frame(results):
    rows = [row for row, _ in results]
    return pd.DataFrame(rows, columns=list(rows[0].keys()))


def run_sweep(spec, workers=None):
    """
    Evaluate every requested output over the grid and write
    <out_path>/<output>.csv.

    :param spec: SweepSpec
    :param workers: worker processes (settings default when None)
    :return: EXIT_OK, EXIT_NOT_CONVERGED when a grid point failed (its row
        is still written, with the failure column filled) or EXIT_IO
    """
    if workers is None:
        workers = sweep_settings.WORKERS

    try:
        if not os.path.isdir(spec.out_path):
            os.makedirs(spec.out_path)
    except OSError as exc:
        logger.error('Cannot create output folder {0}: {1}',
                     spec.out_path, exc)
        return EXIT_IO

    status = EXIT_OK
    for output in spec.outputs:
        if output == 'jc':
            jc_frequency_check(spec.params)
        logger.info('Sweep {0}: {1} points with {2} worker(s)', output,
                    spec.g_grid.steps + 1, workers)
        results = evaluate_grid(output, spec, workers)
        failed = [row['g_over_omega'] for row, bad in results if bad]
        path = os.path.join(spec.out_path, output + '.csv')
        try:
            write_csv(results_frame(results), path, spec.no_timestamp)
        except (IOError, OSError) as exc:
            logger.error('Cannot write {0}: {1}', path, exc)
            return EXIT_IO
        logger.info('Wrote {0}', path)

        if failed:
            logger.warning('{0}: {1} grid point(s) failed, first at '
                           'g/omega={2}', output, len(failed), failed[0])
            status = EXIT_NOT_CONVERGED
    return status


def jc_frequency_check(params):
    """
    Warn when the Jaynes-Cummings table, computed at omega = omega_c, does
    not describe the configured atom.
    """
    if not math.isclose(params.omega_a, params.omega_c):
        logger.warning('jc output uses omega = omega_c = {0}; omega_a = {1} '
                       'is ignored', params.omega_c, params.omega_a)
