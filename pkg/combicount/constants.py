# -*- coding: utf-8 -*-

"""Constants module."""


# Engine defaults. Every one of them can be overridden through EngineConfig.
PASCAL_BOUND = 1024
IE_MAX_SETS = 20
SUBSET_CAP = 20
MAP_SIDE_CAP = 8
MAP_CAP = 8 ** 8
PARTITION_CAP = 10
BINET_MAX = 10 ** 6

# Largest universe accepted from a family file, one weight is kept per element.
FAMILY_UNIVERSE_CAP = 10 ** 5

# p_n / n! is rounded to a double, and 171! no longer fits one.
RATIO_MAX = 170

# Machine epsilon of the 64-bit floats used by asymptotics.
FLOAT_EPSILON = 2.0 ** -52

VARIABLE_PREFIX = 'a'

RATIONAL_REGEX = r'^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$'
NATURAL_REGEX = r'^\s*(\d+)\s*$'


class MapKind(object):
    ALL = 'all'
    INJECTIVE = 'injective'
    SURJECTIVE = 'surjective'
    BIJECTIVE = 'bijective'
    DERANGEMENT = 'derangement'


MAP_KINDS = [
    MapKind.ALL,
    MapKind.INJECTIVE,
    MapKind.SURJECTIVE,
    MapKind.BIJECTIVE,
    MapKind.DERANGEMENT,
]


# these are the names of the inclusion-exclusion quantities, as used by the cli
class IEQuantity(object):
    UNION = 'union'
    SYLVESTER = 'sylvester'
    SYLVESTER_GROUPED = 'sylvester-grouped'
    SIEVE = 'sieve'


IE_QUANTITIES = [
    IEQuantity.UNION,
    IEQuantity.SYLVESTER,
    IEQuantity.SYLVESTER_GROUPED,
    IEQuantity.SIEVE,
]
