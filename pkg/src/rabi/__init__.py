# -*- coding: utf-8 -*-
"""
Basic definitions shared by every app of the project: the version string and
the root of the exception hierarchy.
"""
from __future__ import unicode_literals, print_function

__version__ = '1.0.0'


class RabiException(Exception):
    """
    Generic class for the exceptions raised by the numerical apps. Every
    subclass carries a readable message and the value that triggered it.
    """

    def __init__(self, msg, value=None):
        super(RabiException, self).__init__(msg)
        self.msg = msg
        self.value = value

    def __str__(self):
        return self.msg
