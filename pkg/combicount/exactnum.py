# -*- coding: utf-8 -*-

"""Exact arithmetic backbone.

Counts are Python integers (``Nat``), which grow as needed and never
overflow. Measures and inclusion-exclusion sums are ``fractions.Fraction``
values (``Rat``), which are always kept in canonical form.
"""

import re
from fractions import Fraction

from combicount.constants import NATURAL_REGEX, RATIONAL_REGEX
from combicount.errors import InputError


Nat = int
Rat = Fraction

# digits per chunk when converting between decimal text and Nat; keeps every
# single int/str conversion below the interpreter's digit limit
_CHUNK_DIGITS = 1000
_CHUNK = 10 ** _CHUNK_DIGITS


def check_index(name, value):
    """Raise ``InputError`` unless ``value`` is a nonnegative integer index."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError('{} must be an integer, got {!r}'.format(name, value))

    if value < 0:
        raise InputError('{} must be nonnegative, got {}'.format(name, value))

    return value


def factorial(n):
    """Compute ``n!`` iteratively, following ``(n + 1)! = (n + 1) n!``."""
    check_index('n', n)

    result = 1
    for k in range(2, n + 1):
        result *= k

    return result


def power(base, exp):
    """Compute ``base ** exp`` exactly by repeated squaring, with ``0 ** 0 = 1``."""
    check_index('base', base)
    check_index('exp', exp)

    result = 1
    square = base
    while exp:
        if exp & 1:
            result *= square

        exp >>= 1
        if exp:
            square *= square

    return result


def falling_factorial(n, m):
    """Compute ``n (n - 1) ... (n - m + 1)``.

    The product has ``m`` factors, so it is ``1`` when ``m == 0`` and it
    reaches the factor ``0`` whenever ``m > n``.
    """
    check_index('n', n)
    check_index('m', m)

    if m > n:
        return 0

    result = 1
    for factor in range(n - m + 1, n + 1):
        result *= factor

    return result


def render_nat(value):
    """Render a Nat as a full decimal string, whatever its size."""
    check_index('value', value)

    if value < _CHUNK:
        return str(value)

    chunks = []
    while value >= _CHUNK:
        value, chunk = divmod(value, _CHUNK)
        chunks.append(str(chunk).zfill(_CHUNK_DIGITS))

    chunks.append(str(value))
    return ''.join(reversed(chunks))


def parse_nat(text):
    """Parse a decimal string into a Nat. Inverse of ``render_nat``."""
    match = re.match(NATURAL_REGEX, text)
    if not match:
        raise InputError('{!r} is not a nonnegative decimal integer'.format(text))

    digits = match.group(1)
    head = len(digits) % _CHUNK_DIGITS or _CHUNK_DIGITS

    value = int(digits[:head])
    for start in range(head, len(digits), _CHUNK_DIGITS):
        value = value * _CHUNK + int(digits[start:start + _CHUNK_DIGITS])

    return value


def render_rat(value):
    """Render a Rat as ``"p/q"``, or as a plain integer when ``q == 1``."""
    value = Fraction(value)
    sign = '-' if value < 0 else ''
    numerator = render_nat(abs(value.numerator))

    if value.denominator == 1:
        return sign + numerator

    return '{}{}/{}'.format(sign, numerator, render_nat(value.denominator))


def parse_rat(text):
    """Parse ``"p/q"`` or an integer string into a canonical Rat."""
    match = re.match(RATIONAL_REGEX, text)
    if not match:
        raise InputError('{!r} is not an integer or a "p/q" fraction'.format(text))

    numerator, denominator = match.groups()
    sign = -1 if numerator.startswith('-') else 1
    numerator = sign * parse_nat(numerator.lstrip('-'))
    denominator = parse_nat(denominator) if denominator is not None else 1

    if denominator == 0:
        raise InputError('{!r} has a zero denominator'.format(text))

    return Fraction(numerator, denominator)
