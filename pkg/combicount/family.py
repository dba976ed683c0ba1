# -*- coding: utf-8 -*-

"""Set families over a finite indexed universe, and additive measures on them.

A subset of the universe ``{0, ..., u - 1}`` is stored as an ``int`` bitmask
whose bit ``i`` is set when element ``i`` belongs to it.
"""

from fractions import Fraction

from combicount.errors import InputError
from combicount.exactnum import check_index


def bits_of(mask):
    """Indices of the bits set in ``mask``, in increasing order."""
    index = 0
    while mask:
        if mask & 1:
            yield index

        mask >>= 1
        index += 1


class SetFamily(object):
    """Ordered sequence ``A_1, ..., A_n`` of subsets of a universe of ``u`` elements.

    Subsets may be empty, may repeat and may equal the whole universe.
    """

    __slots__ = ('_universe_size', '_subsets')

    def __init__(self, universe_size, subsets):
        check_index('universe_size', universe_size)
        subsets = tuple(subsets)
        for mask in subsets:
            check_index('subset mask', mask)
            if mask >> universe_size:
                raise InputError('subset {} has elements outside a universe of {}'.format(
                    sorted(bits_of(mask)), universe_size))

        self._universe_size = universe_size
        self._subsets = subsets

    @classmethod
    def from_indices(cls, universe_size, sets):
        """Build a family from lists of element indices, 0-based."""
        check_index('universe_size', universe_size)
        masks = []
        for members in sets:
            mask = 0
            for index in members:
                check_index('element index', index)
                if index >= universe_size:
                    raise InputError('element {} is outside a universe of {}'.format(
                        index, universe_size))

                mask |= 1 << index

            masks.append(mask)

        return cls(universe_size, masks)

    @property
    def universe_size(self):
        return self._universe_size

    @property
    def subsets(self):
        return self._subsets

    @property
    def universe(self):
        """Bitmask of the whole universe, the intersection of no subsets."""
        return (1 << self._universe_size) - 1

    def members(self, index):
        return list(bits_of(self._subsets[index]))

    def __len__(self):
        return len(self._subsets)

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented

        return (self._universe_size, self._subsets) == (other._universe_size, other._subsets)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._universe_size, self._subsets))

    def __repr__(self):
        sets = [self.members(index) for index in range(len(self))]
        return 'SetFamily(universe_size={}, sets={})'.format(self._universe_size, sets)


class Measure(object):
    """Nonnegative rational weight for each element of the universe.

    The measure of a subset is the sum of the weights of its members, and the
    empty set has measure ``0``. All weights equal to one give the counting
    measure, under which the measure of a set is its cardinality.
    """

    __slots__ = ('_weights', '_counting')

    def __init__(self, weights):
        weights = tuple(Fraction(weight) for weight in weights)
        for index, weight in enumerate(weights):
            if weight < 0:
                raise InputError('element {} has negative weight {}'.format(index, weight))

        self._weights = weights
        self._counting = all(weight == 1 for weight in weights)

    @classmethod
    def counting(cls, universe_size):
        return cls([1] * check_index('universe_size', universe_size))

    @property
    def weights(self):
        return self._weights

    @property
    def universe_size(self):
        return len(self._weights)

    def is_counting(self):
        return self._counting

    def of(self, mask):
        """Measure of the subset encoded by ``mask``."""
        if mask >> len(self._weights):
            raise InputError('mask has elements outside a universe of {}'.format(
                len(self._weights)))

        if self._counting:
            return Fraction(bin(mask).count('1'))

        return sum((self._weights[index] for index in bits_of(mask)), Fraction(0))

    def total(self):
        """Measure of the whole universe, ``m(X)``."""
        return sum(self._weights, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, Measure):
            return NotImplemented

        return self._weights == other._weights

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._weights)

    def __repr__(self):
        return 'Measure({})'.format([str(weight) for weight in self._weights])


def check_shared_universe(family, measure):
    if family.universe_size != measure.universe_size:
        raise InputError('family universe has {} elements but the measure has {} weights'.format(
            family.universe_size, measure.universe_size))
