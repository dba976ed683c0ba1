# -*- coding: utf-8 -*-

"""Weighted inclusion-exclusion over explicit set families.

All the sums run over index sets ``I`` of ``{1, ..., n}``, encoded as
bitmasks and visited in increasing numeric order. For the empty index set
the intersection is the whole universe ``X``. The formulas are exponential
in ``n``, so ``n`` is capped (``IE_MAX_SETS`` by default).
"""

import itertools
import logging
from fractions import Fraction

from combicount.binomials import DEFAULT_TABLE, binomial
from combicount.constants import IE_MAX_SETS
from combicount.errors import CapacityError, InputError
from combicount.exactnum import check_index, power
from combicount.family import Measure, SetFamily, check_shared_universe

LOGGER = logging.getLogger(__name__)


def _check_instance(family, measure, max_sets):
    check_shared_universe(family, measure)
    if len(family) > max_sets:
        raise CapacityError('{} sets exceed the inclusion-exclusion cap of {}'.format(
            len(family), max_sets))


def _intersection_measures(family, measure):
    """List ``m(intersection of A_i for i in I)`` indexed by the bitmask of ``I``."""
    subsets = family.subsets
    intersections = [family.universe] * (1 << len(subsets))
    for index_set in range(1, len(intersections)):
        lowest = (index_set & -index_set).bit_length() - 1
        intersections[index_set] = intersections[index_set & (index_set - 1)] & subsets[lowest]

    LOGGER.debug('Computed %s intersections over a universe of %s',
                 len(intersections), family.universe_size)
    return [measure.of(mask) for mask in intersections]


def _cardinality_sums(family, measure):
    """``sums[k]`` is the sum of intersection measures over index sets of size ``k``."""
    sums = [Fraction(0)] * (len(family) + 1)
    for index_set, value in enumerate(_intersection_measures(family, measure)):
        sums[bin(index_set).count('1')] += value

    return sums


def ie_union(family, measure, max_sets=IE_MAX_SETS):
    """Measure of the union of the family, by inclusion-exclusion.

    ``sum((-1)^(|I| - 1) m(intersection of A_i for i in I))`` over the nonempty
    index sets ``I``. It is ``0`` for an empty family and ``m(A_1)`` for a
    single set.

    Args:
        family (SetFamily):
            The sets ``A_1, ..., A_n``.
        measure (Measure):
            Weights over the same universe as ``family``.
        max_sets (int):
            Largest ``n`` accepted. Optional. Defaults to ``IE_MAX_SETS``.

    Returns:
        Fraction:
            The exact measure of the union.
    """
    _check_instance(family, measure, max_sets)

    total = Fraction(0)
    measures = _intersection_measures(family, measure)
    for index_set in range(1, len(measures)):
        if bin(index_set).count('1') % 2:
            total += measures[index_set]
        else:
            total -= measures[index_set]

    return total


def sylvester(family, measure, max_sets=IE_MAX_SETS):
    """Measure of the elements that belong to none of the sets.

    ``m(X) + sum((-1)^|I| m(intersection of A_i for i in I))`` over the
    nonempty index sets ``I``.
    """
    _check_instance(family, measure, max_sets)

    total = measure.total()
    measures = _intersection_measures(family, measure)
    for index_set in range(1, len(measures)):
        if bin(index_set).count('1') % 2:
            total -= measures[index_set]
        else:
            total += measures[index_set]

    return total


def sylvester_grouped(family, measure, max_sets=IE_MAX_SETS):
    """Sylvester's formula with the index sets grouped by cardinality.

    ``sum((-1)^k sum(m(intersection of A_i for i in I) for |I| = k) for k = 0..n)``.
    """
    _check_instance(family, measure, max_sets)

    total = Fraction(0)
    for k, value in enumerate(_cardinality_sums(family, measure)):
        total += -value if k % 2 else value

    return total


def sieve(family, measure, p, max_sets=IE_MAX_SETS, table=DEFAULT_TABLE):
    """Measure of the elements that belong to exactly ``p`` of the sets.

    ``sum((-1)^(k - p) C(k, p) sum(m(intersection of A_i for i in I) for |I| = k)
    for k = p..n)``. With ``p = 0`` this is Sylvester's formula.
    """
    _check_instance(family, measure, max_sets)
    check_index('p', p)
    if p > len(family):
        raise InputError('p = {} exceeds the number of sets {}'.format(p, len(family)))

    total = Fraction(0)
    sums = _cardinality_sums(family, measure)
    for k in range(p, len(family) + 1):
        term = binomial(k, p, table=table) * sums[k]
        total += -term if (k - p) % 2 else term

    return total


def complement_measure(family, measure, index):
    """``m(X - A_i) = m(X) - m(A_i)`` for the set at position ``index``."""
    check_shared_universe(family, measure)
    check_index('index', index)
    if index >= len(family):
        raise InputError('the family has no set at position {}'.format(index))

    return measure.total() - measure.of(family.subsets[index])


def surjection_family(n, p):
    """Family whose union is the set of non-surjective maps ``[n] -> [p]``.

    The universe holds all ``p^n`` maps; the map with index ``f`` sends ``j``
    to the ``j``-th base ``p`` digit of ``f``. ``A_i`` is the set of maps
    whose image misses ``i``. Returns the family with the counting measure.
    """
    check_index('n', n)
    check_index('p', p)

    size = power(p, n)
    masks = [0] * p
    for index in range(size):
        image = set()
        digits = index
        for _ in range(n):
            digits, value = divmod(digits, p)
            image.add(value)

        for i in range(p):
            if i not in image:
                masks[i] |= 1 << index

    return SetFamily(size, masks), Measure.counting(size)


def derangement_family(n):
    """Family whose elements in none of the sets are the derangements of ``[n]``.

    The universe holds all ``n!`` permutations in lexicographic order and
    ``A_i`` is the set of permutations fixing ``i``. Returns the family with
    the counting measure.
    """
    check_index('n', n)

    masks = [0] * n
    size = 0
    for index, permutation in enumerate(itertools.permutations(range(n))):
        for i, image in enumerate(permutation):
            if i == image:
                masks[i] |= 1 << index

        size = index + 1

    return SetFamily(size, masks), Measure.counting(size)
