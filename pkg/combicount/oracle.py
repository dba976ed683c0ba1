# -*- coding: utf-8 -*-

"""Brute force enumerators.

Each function here counts by listing every candidate object and testing it,
and none of them calls into ``binomials``, ``mapscount`` or ``inclexcl``.
They are only meant for small instances, so each of them has a hard cap.
"""

import itertools
import logging
from fractions import Fraction

from combicount.constants import (
    MAP_CAP, MAP_KINDS, MAP_SIDE_CAP, PARTITION_CAP, SUBSET_CAP, MapKind)
from combicount.errors import CapacityError, InputError
from combicount.exactnum import check_index
from combicount.family import check_shared_universe

LOGGER = logging.getLogger(__name__)


def enum_subsets_k(n, k, cap=SUBSET_CAP):
    """Count the ``k`` element subsets of ``[n]`` by scanning every bitmask."""
    check_index('n', n)
    if n > cap:
        raise CapacityError('subset enumeration is capped at n = {}, got {}'.format(cap, n))

    count = 0
    for mask in range(1 << n):
        if bin(mask).count('1') == k:
            count += 1

    return count


def map_total(m, n):
    """``n ** m``, by repeated multiplication."""
    check_index('m', m)
    check_index('n', n)

    total = 1
    for _ in range(m):
        total *= n

    return total


def _is_injective(image):
    return len(set(image)) == len(image)


def _map_predicate(kind, n):
    if kind == MapKind.ALL:
        return lambda image: True

    if kind == MapKind.INJECTIVE:
        return _is_injective

    if kind == MapKind.SURJECTIVE:
        return lambda image: len(set(image)) == n

    if kind == MapKind.BIJECTIVE:
        return lambda image: len(image) == n and _is_injective(image)

    return lambda image: (
        _is_injective(image) and all(i != value for i, value in enumerate(image)))


def enum_maps(m, n, kind, cap=MAP_CAP):
    """Count the maps ``[m] -> [n]`` of the given ``kind``.

    Every one of the ``n ** m`` maps is generated as its image array
    ``image[i]`` and tested. ``kind`` is one of ``MAP_KINDS``; the
    ``derangement`` kind requires ``m == n``.
    """
    check_index('m', m)
    check_index('n', n)
    if kind not in MAP_KINDS:
        raise InputError('unknown map kind {!r}, expected one of {}'.format(kind, MAP_KINDS))

    if kind == MapKind.DERANGEMENT and m != n:
        raise InputError('derangements need m == n, got m = {} and n = {}'.format(m, n))

    if m > MAP_SIDE_CAP or n > MAP_SIDE_CAP or map_total(m, n) > cap:
        raise CapacityError('map enumeration is capped at {} maps with m, n <= {}'.format(
            cap, MAP_SIDE_CAP))

    LOGGER.debug('Scanning %s maps [%s] -> [%s] for kind %s', map_total(m, n), m, n, kind)

    accept = _map_predicate(kind, n)
    return sum(1 for image in itertools.product(range(n), repeat=m) if accept(image))


def _restricted_growth_strings(n):
    # a[0] = 0 and a[i] <= max(a[:i]) + 1; each string labels one set partition
    if n == 0:
        yield ()
        return

    def extend(prefix, blocks):
        if len(prefix) == n:
            yield prefix, blocks
            return

        for label in range(blocks + 1):
            for item in extend(prefix + (label, ), max(blocks, label + 1)):
                yield item

    for string, _ in extend((0, ), 1):
        yield string


def enum_partitions(n, p, cap=PARTITION_CAP):
    """Count the partitions of ``[n]`` into exactly ``p`` nonempty blocks."""
    check_index('n', n)
    if n > cap:
        raise CapacityError('partition enumeration is capped at n = {}, got {}'.format(cap, n))

    count = 0
    for string in _restricted_growth_strings(n):
        blocks = max(string) + 1 if string else 0
        if blocks == p:
            count += 1

    return count


def _multiplicities(family):
    multiplicity = [0] * family.universe_size
    for mask in family.subsets:
        for element in range(family.universe_size):
            if mask >> element & 1:
                multiplicity[element] += 1

    return multiplicity


def direct_union_measure(family, measure):
    """Measure of the union, summing the weights of the elements hit by some set."""
    check_shared_universe(family, measure)

    union = 0
    for mask in family.subsets:
        union |= mask

    total = Fraction(0)
    for element, weight in enumerate(measure.weights):
        if union >> element & 1:
            total += weight

    return total


def direct_exactly_p_measure(family, measure, p):
    """Measure of the elements lying in exactly ``p`` of the sets."""
    check_shared_universe(family, measure)
    check_index('p', p)
    if p > len(family):
        raise InputError('p = {} exceeds the number of sets {}'.format(p, len(family)))

    total = Fraction(0)
    for weight, multiplicity in zip(measure.weights, _multiplicities(family)):
        if multiplicity == p:
            total += weight

    return total
