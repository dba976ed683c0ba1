# -*- coding: utf-8 -*-

"""Configuration Module."""

import argparse

from combicount.constants import (
    BINET_MAX, IE_MAX_SETS, MAP_CAP, PARTITION_CAP, PASCAL_BOUND, SUBSET_CAP)


def _nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('{!r} is not an integer'.format(text))

    if value < 0:
        raise argparse.ArgumentTypeError('{} is negative'.format(value))

    return value


class Config(object):
    """
    Class which stores configuration for one aspect of combicount. Subclasses
    of Config should define the list of all configurable parameters as class
    attributes. Each attribute is either a help string, a ``(help, default)``
    tuple or a dict of keyword arguments for ``ArgumentParser.add_argument``.
    The object can be initialized with an ``argparse.Namespace`` or a dict;
    only keys that name a parameter will be used, so doing
    ``conf = EngineConfig(parser.parse_args())`` is safe.

    Subclasses do not need to define __init__ or any other methods.
    """
    _PREFIX = None

    @classmethod
    def _add_prefix(cls, name):
        if cls._PREFIX:
            return '{}_{}'.format(cls._PREFIX, name)
        else:
            return name

    @classmethod
    def _parameters(cls):
        return [
            (name, value)
            for name, value in vars(cls).items()
            if not name.startswith('_') and not callable(value)
            and not isinstance(value, (classmethod, staticmethod))
        ]

    @classmethod
    def _get_arg(cls, args, name):
        class_value = getattr(cls, name)
        key = cls._add_prefix(name)

        if isinstance(class_value, dict):
            required = 'default' not in class_value
            default = class_value.get('default')
        elif isinstance(class_value, tuple):
            required = False
            default = class_value[1]
        else:
            required = False
            default = None

        if required and key not in args:
            raise KeyError(key)

        value = args.get(key)
        return default if value is None else value

    def __init__(self, args=None):
        if isinstance(args, argparse.Namespace):
            args = vars(args)

        args = args or dict()
        for name, _ in self._parameters():
            setattr(self, name, self._get_arg(args, name))

    @classmethod
    def get_parser(cls):
        """Get an ArgumentParser for this config."""
        parser = argparse.ArgumentParser(add_help=False)

        # make sure the text for these arguments is formatted correctly
        # this allows newlines in the help strings
        parser.formatter_class = argparse.RawTextHelpFormatter

        for name, description in cls._parameters():
            arg_name = '--' + cls._add_prefix(name).replace('_', '-')

            if isinstance(description, dict):
                parser.add_argument(arg_name, **description)

            elif isinstance(description, tuple):
                description, default = description
                parser.add_argument(arg_name, help=description, default=default)

            else:
                parser.add_argument(arg_name, help=description)

        return parser

    def to_dict(self):
        """Get a dict representation of this configuration."""
        return {
            name: value
            for name, value in vars(self).items()
            if not name.startswith('_') and not callable(value)
        }

    def __repr__(self):
        return '{}({})'.format(self.__class__.__name__, self.to_dict())


class EngineConfig(Config):
    """Stores the size caps and cross-check bounds of a CountingEngine."""

    pascal_bound = {
        'help': 'largest n whose binomial coefficients are cross-checked against '
                'the memoised Pascal triangle',
        'default': PASCAL_BOUND,
        'type': _nonnegative_int,
    }
    ie_max_sets = {
        'help': 'largest number of sets accepted by the inclusion-exclusion formulas',
        'default': IE_MAX_SETS,
        'type': _nonnegative_int,
    }
    subset_cap = {
        'help': 'largest n accepted by the brute force subset enumeration',
        'default': SUBSET_CAP,
        'type': _nonnegative_int,
    }
    map_cap = {
        'help': 'largest number of maps n^m scanned by the brute force map enumeration',
        'default': MAP_CAP,
        'type': _nonnegative_int,
    }
    partition_cap = {
        'help': 'largest n accepted by the brute force partition enumeration',
        'default': PARTITION_CAP,
        'type': _nonnegative_int,
    }
    binet_max = {
        'help': 'largest n accepted by the Binet bound reports',
        'default': BINET_MAX,
        'type': _nonnegative_int,
    }
