# -*- coding: utf-8 -*-

"""Binomial and multinomial coefficients.

``binomial`` accepts any signed ``k`` and returns ``0`` outside ``[0, n]``,
so the recurrences and the inclusion-exclusion code never need range guards.
"""

import logging
import threading
from collections import namedtuple

from combicount.constants import PASCAL_BOUND
from combicount.errors import CapacityError, ConsistencyError, InputError
from combicount.exactnum import check_index, factorial

LOGGER = logging.getLogger(__name__)


class Composition(namedtuple('Composition', ['parts', 'total'])):
    """Ordered tuple of nonnegative integers ``parts`` adding up to ``total``."""
    __slots__ = ()

    def __new__(cls, parts, total=None):
        parts = tuple(parts)
        if not parts:
            raise InputError('a composition needs at least one part')

        if total is None:
            total = sum(parts)
        elif sum(parts) != total:
            raise InputError('parts {} do not add up to {}'.format(parts, total))

        return super(Composition, cls).__new__(cls, parts, total)


def _next_pascal_row(row):
    return [1] + [row[k - 1] + row[k] for k in range(1, len(row))] + [1]


def _pascal_rows(n_max):
    row = [1]
    yield row
    for _ in range(n_max):
        row = _next_pascal_row(row)
        yield row


class PascalTable(object):
    """Memoised Pascal triangle, grown on demand up to ``bound`` rows.

    Rows are only ever built with the recurrence
    ``C(n, k) = C(n - 1, k) + C(n - 1, k - 1)``. The table is a cache used to
    cross-check the closed form, so growing it is serialised with a lock and
    readers only look at rows that are fully built.
    """

    def __init__(self, bound=PASCAL_BOUND):
        self.bound = check_index('bound', bound)
        self._rows = [[1]]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._rows)

    def row(self, n):
        if n > self.bound:
            raise CapacityError('row {} is beyond the Pascal table bound {}'.format(
                n, self.bound))

        if n >= len(self._rows):
            with self._lock:
                rows = self._rows
                start = len(rows)
                while len(rows) <= n:
                    rows.append(_next_pascal_row(rows[-1]))

                if len(rows) > start:
                    LOGGER.debug('Pascal table grown from %s to %s rows', start, len(rows))

        return self._rows[n]

    def get(self, n, k):
        if k < 0 or k > n:
            return 0

        return self.row(n)[k]


DEFAULT_TABLE = PascalTable()


def _binomial_closed_form(n, k):
    k = min(k, n - k)
    result = 1
    for i in range(k):
        # exact at every step: result is C(n, i) * (n - i) / (i + 1) = C(n, i + 1)
        result = result * (n - i) // (i + 1)

    return result


def binomial(n, k, table=DEFAULT_TABLE):
    """Number of ``k`` element subsets of an ``n`` element set.

    The value comes from the multiplicative closed form
    ``n! / (k! (n - k)!)``. When ``n`` is within the bound of ``table`` it is
    also looked up in the memoised Pascal triangle and both values must agree.
    Passing ``table=None`` skips the cross-check.

    Args:
        n (int):
            Size of the set. Must be nonnegative.
        k (int):
            Size of the subsets. Any integer; the result is ``0`` outside
            ``0 <= k <= n``.
        table (PascalTable):
            Table used for the cross-check. Optional.

    Returns:
        int:
            The binomial coefficient ``C(n, k)``.
    """
    check_index('n', n)
    if k < 0 or k > n:
        return 0

    value = _binomial_closed_form(n, k)

    if table is not None and n <= table.bound:
        memo = table.get(n, k)
        if memo != value:
            raise ConsistencyError('C({}, {}): closed form {} but Pascal recurrence {}'.format(
                n, k, value, memo))

    return value


def pascal_triangle(n_max):
    """Rows ``0`` to ``n_max`` of Pascal's triangle, built from the recurrence only."""
    check_index('n_max', n_max)
    return [list(row) for row in _pascal_rows(n_max)]


def multinomial(n, ks):
    """Multinomial coefficient ``n! / (k_1! ... k_m!)``.

    It is ``0`` when the ``ks`` do not add up to ``n`` or when some ``k_i``
    lies outside ``[0, n]``.
    """
    check_index('n', n)
    ks = list(ks)
    if not ks:
        raise InputError('the multinomial coefficient needs at least one k')

    if sum(ks) != n or any(k < 0 or k > n for k in ks):
        return 0

    denominator = 1
    for k in ks:
        denominator *= factorial(k)

    return factorial(n) // denominator


def multiset_count(m, n, table=DEFAULT_TABLE):
    """Number of multisets of size ``n`` drawn from ``m`` elements.

    ``table`` is the Pascal table handed to ``binomial`` for the cross-check.
    """
    check_index('n', n)
    if check_index('m', m) < 1:
        raise InputError('multisets need at least one element to draw from')

    return binomial(m + n - 1, n, table=table)


def _descending_parts(m, n):
    if m == 1:
        yield (n, )
        return

    for first in range(n, -1, -1):
        for rest in _descending_parts(m - 1, n - first):
            yield (first, ) + rest


def compositions(m, n):
    """Stream every ``m``-tuple of nonnegative integers adding up to ``n``.

    Tuples come out in lexicographically descending order, so ``(n, 0, ..., 0)``
    is first and ``(0, ..., 0, n)`` is last.
    """
    check_index('n', n)
    if check_index('m', m) < 1:
        raise InputError('compositions need at least one part')

    return (Composition(parts, n) for parts in _descending_parts(m, n))
