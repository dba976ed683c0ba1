# -*- coding: utf-8 -*-

"""Sparse multivariate polynomials with natural coefficients.

They hold the right hand sides of the binomial formula
``(a + b)^n = sum(C(n, k) a^(n - k) b^k)`` and of the multinomial formula
``(a_1 + ... + a_m)^n = sum(n! / (k_1! ... k_m!) a_1^k_1 ... a_m^k_m)``.
The variables commute, so a monomial is just its exponent vector.
"""

import logging
from collections import defaultdict

from combicount.binomials import DEFAULT_TABLE, binomial, compositions, multinomial
from combicount.constants import VARIABLE_PREFIX
from combicount.errors import InputError
from combicount.exactnum import check_index, power

LOGGER = logging.getLogger(__name__)


class Poly(object):
    """Immutable polynomial in ``variable_count`` commuting variables.

    ``terms`` maps exponent tuples (monomials) to nonzero natural coefficients.
    Iteration yields ``(monomial, coefficient)`` pairs in lexicographically
    descending monomial order.
    """

    __slots__ = ('_variable_count', '_terms')

    def __init__(self, variable_count, terms):
        if check_index('variable_count', variable_count) < 1:
            raise InputError('a polynomial needs at least one variable')

        collected = dict()
        for monomial, coefficient in dict(terms).items():
            monomial = tuple(monomial)
            if len(monomial) != variable_count:
                raise InputError('monomial {} does not have {} exponents'.format(
                    monomial, variable_count))

            for exponent in monomial:
                check_index('exponent', exponent)

            if check_index('coefficient', coefficient):
                collected[monomial] = coefficient

        self._variable_count = variable_count
        self._terms = tuple(sorted(collected.items(), reverse=True))

    @classmethod
    def constant(cls, value, variable_count=1):
        return cls(variable_count, {(0, ) * variable_count: value})

    @property
    def variable_count(self):
        return self._variable_count

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, monomial):
        return self.terms.get(tuple(monomial), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented

        return (self._variable_count, self._terms) == (other._variable_count, other._terms)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._variable_count, self._terms))

    def __repr__(self):
        return 'Poly({}, {})'.format(self._variable_count, self.render())

    def __str__(self):
        return self.render()

    def render(self):
        """Render as ``"<coeff>*a1^e1*a2^e2 + ..."``.

        Zero exponents are dropped, exponent one is written bare and unit
        coefficients are elided. The zero polynomial renders as ``"0"``.
        """
        if not self._terms:
            return '0'

        rendered = []
        for monomial, coefficient in self._terms:
            factors = []
            if coefficient != 1:
                factors.append(str(coefficient))

            for index, exponent in enumerate(monomial):
                if exponent == 1:
                    factors.append('{}{}'.format(VARIABLE_PREFIX, index + 1))
                elif exponent > 1:
                    factors.append('{}{}^{}'.format(VARIABLE_PREFIX, index + 1, exponent))

            rendered.append('*'.join(factors) or '1')

        return ' + '.join(rendered)

    def to_dict(self):
        return {
            'variables': self._variable_count,
            'terms': [
                {'coefficient': coefficient, 'exponents': list(monomial)}
                for monomial, coefficient in self._terms
            ]
        }


def binomial_expand(n, table=DEFAULT_TABLE):
    """Expand ``(a + b)^n``: the coefficient of ``a^(n - k) b^k`` is ``C(n, k)``."""
    check_index('n', n)
    terms = {(n - k, k): binomial(n, k, table=table) for k in range(n + 1)}
    return Poly(2, terms)


def multinomial_expand(m, n):
    """Expand ``(a_1 + ... + a_m)^n``, one term per composition of ``n`` into ``m`` parts."""
    terms = {
        composition.parts: multinomial(n, composition.parts)
        for composition in compositions(m, n)
    }
    LOGGER.debug('(a_1 + ... + a_%s)^%s has %s terms', m, n, len(terms))
    return Poly(m, terms)


def evaluate(poly, point):
    """Exact value of ``poly`` at ``point``, one natural number per variable."""
    point = list(point)
    if len(point) != poly.variable_count:
        raise InputError('point has {} coordinates but the polynomial has {} variables'.format(
            len(point), poly.variable_count))

    for value in point:
        check_index('coordinate', value)

    total = 0
    for monomial, coefficient in poly:
        term = coefficient
        for value, exponent in zip(point, monomial):
            term *= power(value, exponent)

        total += term

    return total


def _times_variable_sum(poly):
    # poly * (a_1 + ... + a_m), collecting equal monomials
    product = defaultdict(int)
    for monomial, coefficient in poly:
        for index in range(poly.variable_count):
            shifted = list(monomial)
            shifted[index] += 1
            product[tuple(shifted)] += coefficient

    return Poly(poly.variable_count, product)
