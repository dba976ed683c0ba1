# -*- coding: utf-8 -*-

"""Counting structured maps between finite sets.

Permutations, functions, injections, surjections, Stirling numbers of the
second kind and derangements. Every count is an exact Python integer.
"""

import logging
from fractions import Fraction

from combicount.binomials import DEFAULT_TABLE, binomial
from combicount.errors import ConsistencyError
from combicount.exactnum import check_index, factorial, falling_factorial, power

LOGGER = logging.getLogger(__name__)


def count_permutations(n):
    """Number of permutations of an ``n`` element set, ``n!``."""
    return factorial(n)


def count_functions(m, n):
    """Number of functions from an ``m`` element set to an ``n`` element set, ``n ** m``."""
    check_index('m', m)
    return power(n, m)


def count_subsets(n):
    """Size of the power set of an ``n`` element set, ``2 ** n``.

    Subsets of ``A`` are in bijection with the functions ``A -> {0, 1}``.
    """
    return count_functions(n, 2)


def count_injections(m, n):
    """Number of injections from an ``m`` element set into an ``n`` element set."""
    return falling_factorial(n, m)


def count_surjections(n, p, table=DEFAULT_TABLE):
    """Number of surjections from an ``n`` element set onto a ``p`` element set.

    Uses the alternating sum ``sum((-1)^k C(p, k) (p - k)^n for k < p)``.
    The degenerate cases are ``S(0, 0) = 1``, ``S(n, 0) = 0`` for ``n >= 1``
    and ``S(n, p) = 0`` whenever ``p > n``.
    """
    check_index('n', n)
    check_index('p', p)

    if p == 0:
        return 1 if n == 0 else 0

    if p > n:
        return 0

    total = 0
    for k in range(p):
        term = binomial(p, k, table=table) * power(p - k, n)
        total += -term if k % 2 else term

    if total < 0:
        raise ConsistencyError('negative surjection count S({}, {}) = {}'.format(n, p, total))

    return total


def surjection_triangle(n_max):
    """Rows ``S(n, 0..n)`` for ``n = 0..n_max``, built from the recurrence only.

    ``S(n, p) = p (S(n - 1, p) + S(n - 1, p - 1))`` with ``S(0, 0) = 1``.
    """
    check_index('n_max', n_max)

    rows = [[1]]
    for n in range(1, n_max + 1):
        previous = rows[-1] + [0]
        row = [0]
        for p in range(1, n + 1):
            row.append(p * (previous[p] + previous[p - 1]))

        rows.append(row)

    return rows


def stirling2(n, p, table=DEFAULT_TABLE):
    """Stirling number of the second kind, the number of partitions of an
    ``n`` element set into ``p`` nonempty blocks.

    Computed as ``S(n, p) / p!``; the division is always exact.
    """
    quotient, remainder = divmod(count_surjections(n, p, table), factorial(p))
    if remainder:
        raise ConsistencyError('S({}, {}) is not divisible by {}!'.format(n, p, p))

    return quotient


def _derangements_by_factorials(n, table):
    # n! - C(n, 1) (n - 1)! + C(n, 2) (n - 2)! - ... + (-1)^n
    total = 0
    for k in range(n + 1):
        term = binomial(n, k, table=table) * factorial(n - k)
        total += -term if k % 2 else term

    return total


def _derangements_by_series(n):
    # n! (1 - 1/1! + 1/2! - ... + (-1)^n / n!), in exact rationals
    series = Fraction(0)
    for k in range(n + 1):
        term = Fraction(1, factorial(k))
        series += -term if k % 2 else term

    value = factorial(n) * series
    if value.denominator != 1:
        raise ConsistencyError('n! times the truncated series for 1/e is not an '
                               'integer for n = {}'.format(n))

    return value.numerator


def count_derangements(n, table=DEFAULT_TABLE):
    """Number of permutations of an ``n`` element set without fixed points.

    Both the alternating factorial sum and the exact rational evaluation of
    ``n! sum((-1)^k / k!)`` are computed and must agree. ``p_0 = 1``.
    """
    check_index('n', n)

    by_factorials = _derangements_by_factorials(n, table)
    by_series = _derangements_by_series(n)
    if by_factorials != by_series:
        raise ConsistencyError('derangements of {}: alternating sum {} but series {}'.format(
            n, by_factorials, by_series))

    LOGGER.debug('p_%s = %s confirmed by both formulas', n, by_factorials)
    return by_factorials
