# -*- coding: utf-8 -*-

"""Parsing and rendering helpers shared by the command line."""

import logging
from fractions import Fraction

import simplejson as json

from combicount.constants import FAMILY_UNIVERSE_CAP
from combicount.errors import CountingError, UsageError
from combicount.exactnum import parse_nat, parse_rat, render_nat, render_rat
from combicount.family import Measure, SetFamily

LOGGER = logging.getLogger(__name__)


def parse_int_list(text, signed=False):
    """Parse a comma separated list of decimal integers, such as ``"2,0,1"``."""
    values = []
    for item in text.split(','):
        item = item.strip()
        negative = signed and item.startswith('-')
        try:
            value = parse_nat(item[1:] if negative else item)
        except CountingError:
            raise UsageError('{!r} is not a comma separated list of {}integers'.format(
                text, '' if signed else 'nonnegative '))

        values.append(-value if negative else value)

    return values


def family_from_dict(data):
    """Build a ``(SetFamily, Measure)`` pair from the decoded family JSON.

    The format is ``{"universe": u, "sets": [[idx, ...], ...], "weights": [...]}``
    where indices are 0-based and the optional weights are strings holding an
    integer or a ``"p/q"`` fraction. Missing weights mean the counting measure.
    Any problem raises ``UsageError``.
    """
    if not isinstance(data, dict):
        raise UsageError('a family must be a JSON object')

    universe = data.get('universe')
    sets = data.get('sets')
    weights = data.get('weights')

    if isinstance(universe, bool) or not isinstance(universe, int) or universe < 0:
        raise UsageError('"universe" must be a nonnegative integer, got {!r}'.format(universe))

    if universe > FAMILY_UNIVERSE_CAP:
        raise UsageError('"universe" is capped at {} elements, got {}'.format(
            FAMILY_UNIVERSE_CAP, universe))

    if not isinstance(sets, list) or not all(isinstance(members, list) for members in sets):
        raise UsageError('"sets" must be a list of lists of element indices')

    for members in sets:
        for index in members:
            if isinstance(index, bool) or not isinstance(index, int):
                raise UsageError('element index {!r} is not an integer'.format(index))

            if not 0 <= index < universe:
                raise UsageError('element index {} is outside a universe of {}'.format(
                    index, universe))

    if weights is None:
        weights = ['1'] * universe

    if not isinstance(weights, list) or len(weights) != universe:
        raise UsageError('"weights" must be a list of {} strings'.format(universe))

    parsed = []
    for weight in weights:
        if not isinstance(weight, str):
            raise UsageError('weight {!r} must be a string such as "3" or "1/2"'.format(weight))

        try:
            value = parse_rat(weight)
        except CountingError as error:
            raise UsageError(str(error))

        if value < 0:
            raise UsageError('weight {!r} is negative'.format(weight))

        parsed.append(value)

    return SetFamily.from_indices(universe, sets), Measure(parsed)


def load_family(path):
    """Read a family JSON file. See ``family_from_dict`` for the format."""
    try:
        with open(path, 'r') as f:
            data = json.load(f)

    except (IOError, OSError) as error:
        raise UsageError('cannot read family file {}: {}'.format(path, error))

    except ValueError as error:
        raise UsageError('family file {} is not valid JSON: {}'.format(path, error))

    family, measure = family_from_dict(data)
    LOGGER.debug('Loaded %s sets over a universe of %s from %s',
                 len(family), family.universe_size, path)
    return family, measure


def to_jsonable(value):
    """Convert a result into plain JSON data.

    Naturals stay JSON integers, fractions become ``"p/q"`` strings and
    objects with a ``to_dict`` method are converted through it.
    """
    if isinstance(value, Fraction):
        return render_rat(value)

    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())

    if isinstance(value, dict):
        return {key: to_jsonable(item) for key, item in value.items()}

    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]

    return value


def render_json(value):
    return json.dumps(to_jsonable(value), sort_keys=True)


def render_plain(value):
    """Render a result for humans: full decimals, ``"p/q"`` and one row per line."""
    if isinstance(value, bool):
        return str(value).lower()

    if isinstance(value, int):
        return render_nat(value) if value >= 0 else '-' + render_nat(-value)

    if isinstance(value, Fraction):
        return render_rat(value)

    if isinstance(value, float):
        return repr(value)

    if hasattr(value, 'render'):
        return value.render()

    if hasattr(value, 'to_dict'):
        return '\n'.join('{}: {}'.format(key, render_plain(item))
                         for key, item in sorted(value.to_dict().items()))

    if isinstance(value, (list, tuple)):
        return '\n'.join(_render_row(row) for row in value)

    return str(value)


def _render_row(row):
    if isinstance(row, (list, tuple)):
        return ' '.join(render_plain(item) for item in row)

    return render_plain(row)
