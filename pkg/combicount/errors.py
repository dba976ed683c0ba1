# -*- coding: utf-8 -*-

"""Exceptions raised by combicount.

Every error raised on purpose by the package derives from ``CountingError``,
so callers can catch the whole family at once. The command line maps
``UsageError`` to exit status 2 and every other ``CountingError`` to 1.
"""


class CountingError(Exception):
    pass


class InputError(CountingError, ValueError):
    """A precondition of the requested operation does not hold."""


class CapacityError(CountingError):
    """A configured size cap would be exceeded."""


class ConsistencyError(CountingError, AssertionError):
    """Two independent computations of the same count disagree."""


class UsageError(CountingError):
    """Malformed command line input, detected before any computation."""
