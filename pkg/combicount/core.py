# -*- coding: utf-8 -*-

"""Core combicount module.

This module contains the CountingEngine class, which gathers every counting
operation behind a single object configured with the engine size caps.
"""

import logging

from combicount import asymptotics, binomials, exactnum, expand, inclexcl, mapscount, oracle
from combicount.constants import (
    BINET_MAX, IE_MAX_SETS, MAP_CAP, PARTITION_CAP, PASCAL_BOUND, SUBSET_CAP)

LOGGER = logging.getLogger(__name__)


class CountingEngine(object):
    """Exact enumerative combinatorics, with configurable caps.

    Args:
        pascal_bound (int):
            Largest ``n`` whose binomial coefficients are cross-checked against
            the engine's own memoised Pascal triangle. Optional. Defaults to
            ``1024``.
        ie_max_sets (int):
            Largest number of sets accepted by the inclusion-exclusion formulas.
            Optional. Defaults to ``20``.
        subset_cap (int):
            Largest ``n`` of the brute force subset scan. Optional. Defaults to ``20``.
        map_cap (int):
            Largest number of maps scanned by the brute force map enumeration.
            Optional. Defaults to ``8 ** 8``.
        partition_cap (int):
            Largest ``n`` of the brute force partition enumeration. Optional.
            Defaults to ``10``.
        binet_max (int):
            Largest ``n`` accepted by the Binet reports. Optional. Defaults to ``10 ** 6``.
    """

    def __init__(
        self,
        pascal_bound=PASCAL_BOUND,
        ie_max_sets=IE_MAX_SETS,
        subset_cap=SUBSET_CAP,
        map_cap=MAP_CAP,
        partition_cap=PARTITION_CAP,
        binet_max=BINET_MAX,
    ):
        self.pascal_table = binomials.PascalTable(pascal_bound)
        self.ie_max_sets = ie_max_sets
        self.subset_cap = subset_cap
        self.map_cap = map_cap
        self.partition_cap = partition_cap
        self.binet_max = binet_max

    # exact numbers

    def factorial(self, n):
        return exactnum.factorial(n)

    def power(self, base, exp):
        return exactnum.power(base, exp)

    def falling_factorial(self, n, m):
        return exactnum.falling_factorial(n, m)

    # binomial and multinomial coefficients

    def binomial(self, n, k):
        return binomials.binomial(n, k, table=self.pascal_table)

    def pascal_triangle(self, n_max):
        return binomials.pascal_triangle(n_max)

    def multinomial(self, n, ks):
        return binomials.multinomial(n, ks)

    def multiset_count(self, m, n):
        return binomials.multiset_count(m, n, table=self.pascal_table)

    def compositions(self, m, n):
        return binomials.compositions(m, n)

    # maps

    def count_permutations(self, n):
        return mapscount.count_permutations(n)

    def count_functions(self, m, n):
        return mapscount.count_functions(m, n)

    def count_subsets(self, n):
        return mapscount.count_subsets(n)

    def count_injections(self, m, n):
        return mapscount.count_injections(m, n)

    def count_surjections(self, n, p):
        return mapscount.count_surjections(n, p, table=self.pascal_table)

    def surjection_triangle(self, n_max):
        return mapscount.surjection_triangle(n_max)

    def stirling2(self, n, p):
        return mapscount.stirling2(n, p, table=self.pascal_table)

    def count_derangements(self, n):
        return mapscount.count_derangements(n, table=self.pascal_table)

    # polynomial expansions

    def binomial_expand(self, n):
        return expand.binomial_expand(n, table=self.pascal_table)

    def multinomial_expand(self, m, n):
        return expand.multinomial_expand(m, n)

    def evaluate(self, poly, point):
        return expand.evaluate(poly, point)

    # inclusion-exclusion

    def ie_union(self, family, measure):
        return inclexcl.ie_union(family, measure, self.ie_max_sets)

    def sylvester(self, family, measure):
        return inclexcl.sylvester(family, measure, self.ie_max_sets)

    def sylvester_grouped(self, family, measure):
        return inclexcl.sylvester_grouped(family, measure, self.ie_max_sets)

    def sieve(self, family, measure, p):
        return inclexcl.sieve(family, measure, p, self.ie_max_sets, table=self.pascal_table)

    # brute force oracles

    def enum_subsets_k(self, n, k):
        return oracle.enum_subsets_k(n, k, self.subset_cap)

    def enum_maps(self, m, n, kind):
        return oracle.enum_maps(m, n, kind, self.map_cap)

    def enum_partitions(self, n, p):
        return oracle.enum_partitions(n, p, self.partition_cap)

    def direct_union_measure(self, family, measure):
        return oracle.direct_union_measure(family, measure)

    def direct_exactly_p_measure(self, family, measure, p):
        return oracle.direct_exactly_p_measure(family, measure, p)

    # asymptotics

    def log_factorial(self, n):
        return asymptotics.log_factorial(n)

    def stirling_approx_log(self, n):
        return asymptotics.stirling_approx_log(n)

    def binet_report(self, n):
        return asymptotics.binet_report(n, self.binet_max)

    def binet_sweep(self, n_max):
        return asymptotics.binet_sweep(n_max, self.binet_max)

    def derangement_ratio(self, n):
        return asymptotics.derangement_ratio(n, table=self.pascal_table)
