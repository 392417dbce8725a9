# -*- coding: utf-8 -*-
"""
Logger adapter accepting str.format style messages:

    logger = StyleAdapter(logging.getLogger(__name__))
    logger.debug('Truncation {0}: deltas {1}', n, deltas)

The message is only formatted when the record is emitted, so large numpy
arrays passed as arguments cost nothing when the level is disabled. Keyword
names used by Logger._log (exc_info, extra, stack_info, stacklevel) are
passed to the logger and never used for substitution.
"""
from __future__ import unicode_literals

import logging

_LOG_KEYWORDS = ('exc_info', 'extra', 'stack_info', 'stacklevel')


class BraceMessage(object):
    def __init__(self, fmt, args, kwargs):
        self.fmt = fmt
        self.args = args
        self.kwargs = kwargs

    def __str__(self):
        return self.fmt.format(*self.args, **self.kwargs)


class StyleAdapter(logging.LoggerAdapter):
    def __init__(self, logger, extra=None):
        super(StyleAdapter, self).__init__(logger, extra or {})

    def log(self, level, msg, *args, **kwargs):
        if not self.isEnabledFor(level):
            return
        log_kwargs = dict((k, kwargs.pop(k)) for k in _LOG_KEYWORDS
                          if k in kwargs)
        self.logger._log(level, BraceMessage(msg, args, kwargs), (),
                         **log_kwargs)
