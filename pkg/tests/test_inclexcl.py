from fractions import Fraction

import numpy as np
import pytest

from combicount import inclexcl, oracle
from combicount.errors import CapacityError, InputError
from combicount.family import Measure, SetFamily
from combicount.mapscount import count_derangements, count_surjections


@pytest.fixture
def chain():
    # A_1 = {0, 1}, A_2 = {1, 2} over {0, 1, 2}
    return SetFamily.from_indices(3, [[0, 1], [1, 2]]), Measure.counting(3)


@pytest.fixture
def weighted():
    family = SetFamily.from_indices(4, [[0, 1], [1, 2], [2, 3]])
    measure = Measure([1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)])
    return family, measure


def random_instances(count=200, seed=0):
    random = np.random.RandomState(seed)
    for _ in range(count):
        universe_size = int(random.randint(0, 13))
        sets = []
        for _ in range(int(random.randint(0, 7))):
            members = random.rand(universe_size) < random.rand()
            sets.append([int(index) for index in np.flatnonzero(members)])

        weights = [
            Fraction(int(numerator), int(denominator))
            for numerator, denominator in zip(
                random.randint(0, 10, size=universe_size),
                random.randint(1, 9, size=universe_size))
        ]

        yield SetFamily.from_indices(universe_size, sets), Measure(weights)


def test_ie_union(chain, weighted):
    assert inclexcl.ie_union(*chain) == 3
    assert inclexcl.ie_union(*weighted) == Fraction(25, 12)


def test_ie_union_degenerate():
    # setup
    measure = Measure([2, 3, Fraction(1, 2)])
    empty = SetFamily(3, [])
    single = SetFamily.from_indices(3, [[0, 2]])
    disjoint = SetFamily.from_indices(3, [[0], [1], [2]])

    # run / assert
    assert inclexcl.ie_union(empty, measure) == 0
    assert inclexcl.ie_union(single, measure) == Fraction(5, 2)
    assert inclexcl.ie_union(disjoint, measure) == Fraction(11, 2)


def test_ie_union_universe_mismatch():
    family = SetFamily.from_indices(3, [[0]])

    with pytest.raises(InputError):
        inclexcl.ie_union(family, Measure.counting(4))


def test_ie_union_too_many_sets():
    family = SetFamily.from_indices(2, [[0]] * 21)
    small = SetFamily.from_indices(2, [[0], [1], [0, 1]])

    with pytest.raises(CapacityError):
        inclexcl.ie_union(family, Measure.counting(2))

    with pytest.raises(CapacityError):
        inclexcl.sieve(small, Measure.counting(2), 1, max_sets=2)


def test_sylvester():
    # setup
    family = SetFamily.from_indices(3, [[0], [0, 1]])
    measure = Measure.counting(3)
    covering = SetFamily.from_indices(3, [[0, 1], [2]])
    empties = SetFamily(3, [0, 0, 0])

    # run / assert
    assert inclexcl.sylvester(family, measure) == 1
    assert inclexcl.sylvester_grouped(family, measure) == 1
    assert inclexcl.sylvester(covering, Measure([5, 1, 2])) == 0
    assert inclexcl.sylvester(empties, Measure([5, 1, 2])) == 8
    assert inclexcl.sylvester_grouped(SetFamily(3, []), Measure([5, 1, 2])) == 8


def test_sieve(chain):
    assert inclexcl.sieve(chain[0], chain[1], 2) == 1
    assert inclexcl.sieve(chain[0], chain[1], 1) == 2
    assert inclexcl.sieve(chain[0], chain[1], 0) == 0


def test_sieve_p_too_large(chain):
    with pytest.raises(InputError):
        inclexcl.sieve(chain[0], chain[1], 3)


def test_random_families_against_direct_count():
    for family, measure in random_instances():
        union = inclexcl.ie_union(family, measure)
        assert union == oracle.direct_union_measure(family, measure)

        none = inclexcl.sylvester(family, measure)
        assert none == inclexcl.sylvester_grouped(family, measure)
        assert none == oracle.direct_exactly_p_measure(family, measure, 0)
        assert none == measure.total() - union

        sieved = [inclexcl.sieve(family, measure, p) for p in range(len(family) + 1)]
        assert sieved[0] == none
        for p, value in enumerate(sieved):
            assert value == oracle.direct_exactly_p_measure(family, measure, p)

        assert sum(sieved) == measure.total()


def test_complement_measure(weighted):
    assert inclexcl.complement_measure(weighted[0], weighted[1], 0) == Fraction(7, 12)

    with pytest.raises(InputError):
        inclexcl.complement_measure(weighted[0], weighted[1], 3)


def test_surjection_family():
    for n in range(6):
        for p in range(5):
            # run
            family, measure = inclexcl.surjection_family(n, p)

            # assert
            assert family.universe_size == p ** n
            not_surjective = inclexcl.ie_union(family, measure)
            assert p ** n - not_surjective == count_surjections(n, p)


def test_derangement_family():
    for n in range(7):
        family, measure = inclexcl.derangement_family(n)

        assert family.universe_size == len(measure.weights)
        assert inclexcl.sylvester(family, measure) == count_derangements(n)
