# -*- coding: utf-8 -*-
"""
Validation of the JSON run configuration of a sweep.

The nested document is flattened into the fields of a Django form
(coupling.ell becomes coupling_ell) so that every violation is collected
and reported with its dotted JSON path.
"""
from __future__ import unicode_literals, print_function

import json
from collections import namedtuple

import numpy as np
from django import forms

from core.params import CouplingLaw, ModelParams, ParameterError
from hamiltonian import settings as ham_settings
from hamiltonian.matrices import TruncationPolicy
from rabi import RabiException

from . import settings as sweep_settings

OUTPUTS = ('energies', 'observables', 'bounds', 'jc', 'equivalence')

# Nested sections of the document and the keys they accept
SECTIONS = {
    'coupling': ('C', 'ell'),
    'g_grid': ('start', 'stop', 'steps'),
    'truncation': ('n_start', 'n_max', 'tol'),
}
TOP_LEVEL = ('omega_a', 'epsilon', 'omega_c', 'levels', 'outputs',
             'out_path', 'no_timestamp')

GridSpec = namedtuple('GridSpec', ['start', 'stop', 'steps'])


class ConfigError(RabiException):
    """
    The configuration is not valid. value holds one message per violation.
    """
    pass


class SweepConfigForm(forms.Form):
    omega_a = forms.FloatField(min_value=0.0)
    epsilon = forms.FloatField(required=False)
    omega_c = forms.FloatField()

    coupling_C = forms.FloatField(required=False, min_value=0.0)
    coupling_ell = forms.IntegerField(required=False, min_value=0,
                                      max_value=2)

    g_grid_start = forms.FloatField(min_value=0.0)
    g_grid_stop = forms.FloatField(min_value=0.0)
    g_grid_steps = forms.IntegerField(min_value=1)

    levels = forms.IntegerField(min_value=1)

    truncation_n_start = forms.IntegerField(required=False, min_value=1)
    truncation_n_max = forms.IntegerField(required=False, min_value=1)
    truncation_tol = forms.FloatField(required=False)

    outputs = forms.MultipleChoiceField(
        required=False,
        choices=[(name, name) for name in OUTPUTS])
    out_path = forms.CharField(required=False, strip=True)
    no_timestamp = forms.BooleanField(required=False)

    def clean_omega_c(self):
        value = self.cleaned_data['omega_c']
        if value is not None and value <= 0:
            raise forms.ValidationError('Must be positive.')
        return value

    def clean_truncation_tol(self):
        value = self.cleaned_data['truncation_tol']
        if value is not None and value <= 0:
            raise forms.ValidationError('Must be positive.')
        return value

    def clean(self):
        data = super(SweepConfigForm, self).clean()

        start = data.get('g_grid_start')
        stop = data.get('g_grid_stop')
        if start is not None and stop is not None and start > stop:
            self.add_error('g_grid_stop', 'Must not be below start.')

        n_start = data.get('truncation_n_start')
        if n_start is None:
            n_start = ham_settings.N_START
        n_max = data.get('truncation_n_max')
        if n_max is None:
            n_max = ham_settings.N_MAX
        if 'truncation_n_start' not in self.errors \
                and 'truncation_n_max' not in self.errors \
                and n_start > n_max:
            self.add_error('truncation_n_max',
                           'Must not be below n_start ({0}).'.format(n_start))
        return data


def field_path(field):
    """
    Dotted JSON path of a form field name.
    """
    for section in SECTIONS:
        if field.startswith(section + '_'):
            return section + '.' + field[len(section) + 1:]
    return field


def flatten_config(document):
    """
    Flatten the JSON document into form data.

    :return: (data, violations) where violations lists structural problems
    """
    violations = []
    data = {}
    if not isinstance(document, dict):
        return data, ['(document): must be a JSON object']

    for key, value in document.items():
        if key in SECTIONS:
            if not isinstance(value, dict):
                violations.append('{0}: must be a JSON object'.format(key))
                continue
            for sub_key, sub_value in value.items():
                if sub_key not in SECTIONS[key]:
                    violations.append(
                        '{0}.{1}: unknown key'.format(key, sub_key))
                    continue
                data[key + '_' + sub_key] = sub_value
        elif key in TOP_LEVEL:
            data[key] = value
        else:
            violations.append('{0}: unknown key'.format(key))

    if 'outputs' in data and not isinstance(data['outputs'], list):
        violations.append('outputs: must be a JSON list')
        data.pop('outputs')
    for name in ('no_timestamp',):
        if name in data and not isinstance(data[name], bool):
            violations.append('{0}: must be true or false'.format(name))
            data.pop(name)
    return data, violations


class SweepSpec(object):
    """
    Validated sweep: model template, grid of g / omega_c, truncation
    policy and the outputs to write.
    """

    def __init__(self, params, g_grid, levels, policy, outputs, out_path,
                 no_timestamp=False):
        if g_grid.steps < 1 or g_grid.start > g_grid.stop:
            raise ParameterError('Invalid g grid', g_grid)
        if levels < 1:
            raise ParameterError('levels must be at least 1', levels)
        self.params = params
        self.g_grid = g_grid
        self.levels = levels
        self.policy = policy
        self.outputs = outputs
        self.out_path = out_path
        self.no_timestamp = no_timestamp

    def grid(self):
        """
        Values of g / omega_c, steps + 1 points including both ends.
        """
        return np.linspace(self.g_grid.start, self.g_grid.stop,
                           self.g_grid.steps + 1)


def _pick(data, key, default):
    value = data.get(key)
    return default if value is None or value == '' else value


def validate_config(raw):
    """
    Parse and validate the JSON run configuration.

    :param raw: bytes or str holding the JSON document
    :return: SweepSpec
    :raise ConfigError: with every violation found
    """
    try:
        if isinstance(raw, bytes):
            raw = raw.decode('utf-8')
        document = json.loads(raw)
    except (UnicodeDecodeError, ValueError) as exc:
        raise ConfigError('Configuration is not valid JSON: {0}'.format(exc),
                          ['(document): {0}'.format(exc)])

    data, violations = flatten_config(document)
    form = SweepConfigForm(data)
    if not form.is_valid():
        for field, messages in form.errors.items():
            path = '(document)' if field == '__all__' else field_path(field)
            violations.extend('{0}: {1}'.format(path, message)
                              for message in messages)
    if violations:
        raise ConfigError('Invalid configuration:\n' + '\n'.join(violations),
                          violations)

    values = form.cleaned_data
    levels = values['levels']
    try:
        params = ModelParams(
            values['omega_a'],
            _pick(values, 'epsilon', 0.0),
            values['omega_c'],
            0.0,
            CouplingLaw(_pick(values, 'coupling_C', 0.0),
                        _pick(values, 'coupling_ell', 0)))
        policy = TruncationPolicy(
            n_start=_pick(values, 'truncation_n_start', None),
            n_max=_pick(values, 'truncation_n_max', None),
            m_levels=levels,
            tol=_pick(values, 'truncation_tol', None))
    except ParameterError as exc:
        raise ConfigError('Invalid configuration: {0}'.format(exc.msg),
                          [exc.msg])

    requested = values.get('outputs') or ['energies']
    return SweepSpec(
        params=params,
        g_grid=GridSpec(values['g_grid_start'], values['g_grid_stop'],
                        values['g_grid_steps']),
        levels=levels,
        policy=policy,
        outputs=tuple(name for name in OUTPUTS if name in requested),
        out_path=_pick(values, 'out_path', sweep_settings.DEFAULT_OUT_PATH),
        no_timestamp=bool(values.get('no_timestamp')))
