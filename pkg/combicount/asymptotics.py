# -*- coding: utf-8 -*-

"""Floating point checks of Stirling's approximation and of the derangement limit.

Stirling's formula reads ``n! = sqrt(2 pi n) (n / e)^n exp(lambda_n)`` and
Binet's bounds state ``1 / (12n + 1) < lambda_n < 1 / (12n)``.

Taking ``lambda_n`` literally as ``ln n! - ln(sqrt(2 pi n) (n / e)^n)``
subtracts two numbers of size ``n ln n`` whose difference is about
``1 / (12n)``, and the distance from ``lambda_n`` to the upper bound is only
about ``1 / (360 n^3)``. Past a few hundred that distance is below the
rounding error of the subtraction, so ``lambda_n`` is instead accumulated from
``lambda_1 = 1 - ln(2 pi) / 2`` through the telescoping steps

    lambda_n - lambda_(n + 1) = (n + 1/2) ln(1 + 1/n) - 1
                              = sum(x^(2j) / (2j + 1) for j >= 1),  x = 1 / (2n + 1),

whose terms are all positive. The literal difference is still reported as
``lambda_direct``.
"""

import logging
import math
from collections import namedtuple
from fractions import Fraction

import numpy as np

from combicount.constants import BINET_MAX, FLOAT_EPSILON, RATIO_MAX
from combicount.errors import CapacityError, InputError
from combicount.exactnum import check_index, factorial
from combicount.binomials import DEFAULT_TABLE
from combicount.mapscount import count_derangements

LOGGER = logging.getLogger(__name__)

# Absolute error budget of the telescoped lambda_n. lambda_1 carries about one
# epsilon, each step carries a couple of epsilons relative to itself and the
# steps add up to less than lambda_1 < 0.1.
LAMBDA_BUDGET = 16 * FLOAT_EPSILON

LAMBDA_1 = 1.0 - 0.5 * math.log(2.0 * math.pi)


class CompensatedSum(object):
    """Running float sum with Neumaier's error compensation."""

    def __init__(self, value=0.0):
        self._sum = float(value)
        self._compensation = 0.0

    def add(self, value):
        total = self._sum + value
        if abs(self._sum) >= abs(value):
            self._compensation += (self._sum - total) + value
        else:
            self._compensation += (value - total) + self._sum

        self._sum = total

    @property
    def value(self):
        return self._sum + self._compensation


class BinetReport(namedtuple('BinetReport', [
        'n', 'lambda_n', 'lower', 'upper', 'log_factorial', 'lambda_direct', 'budget'])):
    """Binet's correction ``lambda_n`` for one ``n``, with its bounds.

    ``lower = 1 / (12n + 1)`` and ``upper = 1 / (12n)``. ``strict`` tells
    whether both inequalities hold with a margin larger than ``budget``.

    ``budget`` is ``LAMBDA_BUDGET``, the error bound of the telescoped
    ``lambda_n``. It stands in for a margin proportional to ``n`` epsilon, which
    the true distance ``1 / (360 n^3)`` to the upper bound cannot meet.
    """
    __slots__ = ()

    @property
    def lower_margin(self):
        return self.lambda_n - self.lower

    @property
    def upper_margin(self):
        return self.upper - self.lambda_n

    @property
    def strict(self):
        return self.lower_margin > self.budget and self.upper_margin > self.budget

    def to_dict(self):
        report = self._asdict()
        report['strict'] = self.strict
        return report


def _check_positive(n):
    if check_index('n', n) < 1:
        raise InputError('n must be at least 1, got {}'.format(n))

    return n


def _log_table(n_max):
    # ln k for k = 1..n_max, entry k - 1
    return np.log(np.arange(1, n_max + 1, dtype=np.float64))


def log_factorial(n):
    """``ln n!`` as the compensated sum of ``ln k`` for ``k = 2..n``, in increasing ``k``."""
    _check_positive(n)

    accumulator = CompensatedSum()
    for log_k in _log_table(n)[1:]:
        accumulator.add(float(log_k))

    return accumulator.value


def stirling_approx_log(n):
    """Logarithm of Stirling's approximation, ``ln(2 pi n) / 2 + n ln n - n``."""
    _check_positive(n)
    return 0.5 * math.log(2.0 * math.pi * n) + n * math.log(n) - n


def stirling_step(n):
    """``lambda_n - lambda_(n + 1)``, summed from its positive series."""
    _check_positive(n)

    x2 = 1.0 / (2 * n + 1) ** 2
    terms = []
    power = x2
    j = 1
    while True:
        term = power / (2 * j + 1)
        terms.append(term)
        if term < terms[0] * FLOAT_EPSILON:
            break

        power *= x2
        j += 1

    return math.fsum(terms)


def _report(n, lambda_n, log_fact):
    return BinetReport(
        n=n,
        lambda_n=lambda_n,
        lower=1.0 / (12 * n + 1),
        upper=1.0 / (12 * n),
        log_factorial=log_fact,
        lambda_direct=log_fact - stirling_approx_log(n),
        budget=LAMBDA_BUDGET,
    )


def binet_sweep(n_max, max_n=BINET_MAX):
    """Generate the ``BinetReport`` of every ``n`` from ``1`` to ``n_max``, in one pass."""
    _check_positive(n_max)
    if n_max > max_n:
        raise CapacityError('Binet reports are capped at n = {}, got {}'.format(max_n, n_max))

    return _binet_sweep(n_max)


def _binet_sweep(n_max):
    logs = _log_table(n_max)
    log_fact = CompensatedSum()
    lambda_n = CompensatedSum(LAMBDA_1)
    for n in range(1, n_max + 1):
        if n > 1:
            log_fact.add(float(logs[n - 1]))

        yield _report(n, lambda_n.value, log_fact.value)
        lambda_n.add(-stirling_step(n))


def binet_report(n, max_n=BINET_MAX):
    """``BinetReport`` for a single ``n``, ``1 <= n <= max_n``."""
    report = None
    for report in binet_sweep(n, max_n):
        pass

    if not report.strict:
        LOGGER.warning('Binet bounds not strict beyond the float budget at n = %s', n)

    return report


def inverse_e_partial_sum(n):
    """``sum((-1)^k / k! for k = 0..n)``, the truncated series of ``1 / e``."""
    check_index('n', n)

    total = Fraction(0)
    for k in range(n + 1):
        term = Fraction(1, factorial(k))
        total += -term if k % 2 else term

    return total


def derangement_ratio_bound(n):
    """``1 / (n + 1)!``, which bounds ``|p_n / n! - 1 / e|`` (alternating series remainder)."""
    check_index('n', n)
    return Fraction(1, factorial(n + 1))


def derangement_exact_ratio(n, table=DEFAULT_TABLE):
    """``p_n / n!`` as an exact fraction."""
    return Fraction(count_derangements(n, table), factorial(n))


def derangement_ratio(n, table=DEFAULT_TABLE):
    """``p_n / n!``, the probability that a random permutation has no fixed point.

    The ratio is computed exactly and rounded once to a float, so ``n`` must
    stay within ``1 <= n <= 170``.
    """
    _check_positive(n)
    if n > RATIO_MAX:
        raise CapacityError('{}! does not fit a float, the ratio is capped at n = {}'.format(
            n, RATIO_MAX))

    return float(derangement_exact_ratio(n, table))
