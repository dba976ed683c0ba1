# -*- coding: utf-8 -*-

"""Command Line Interface module."""

import argparse
import logging
import math
import sys
from contextlib import contextmanager

from tqdm import tqdm

from combicount.config import EngineConfig, _nonnegative_int
from combicount.constants import IE_QUANTITIES, MAP_KINDS, IEQuantity
from combicount.core import CountingEngine
from combicount.errors import ConsistencyError, CountingError, UsageError
from combicount.utilities import load_family, parse_int_list, render_json, render_plain

LOGGER = logging.getLogger(__name__)

DEFAULT_BINET_SWEEP = 5000


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors on a single line."""

    def error(self, message):
        self.exit(2, '{}: error: {}\n'.format(self.prog, message))


def _int_list(signed):
    def type_check(text):
        try:
            return parse_int_list(text, signed=signed)
        except UsageError as error:
            raise argparse.ArgumentTypeError(str(error))

    return type_check


def _get_engine(args):
    engine_conf = EngineConfig(args)
    return CountingEngine(**engine_conf.to_dict())


def _print(args, value):
    if getattr(args, 'json', False):
        print(render_json(value))
    else:
        print(render_plain(value))


def _count(args):
    """Run an engine operation whose arguments are all positional integers."""
    engine = _get_engine(args)
    LOGGER.info('Running %s', args.operation)
    operation = getattr(engine, args.operation)
    _print(args, operation(*[getattr(args, name) for name in args.arguments]))


def _pascal(args):
    engine = _get_engine(args)
    _print(args, engine.pascal_triangle(args.max))


def _surjtable(args):
    engine = _get_engine(args)
    _print(args, engine.surjection_triangle(args.max))


def _compositions(args):
    engine = _get_engine(args)
    _print(args, [list(composition.parts) for composition in engine.compositions(args.m, args.n)])


def _expand(args):
    engine = _get_engine(args)
    if args.vars is None:
        poly = engine.binomial_expand(args.power)
    else:
        poly = engine.multinomial_expand(args.vars, args.power)

    if args.eval is None:
        _print(args, poly)
    else:
        _print(args, engine.evaluate(poly, args.eval))


def _ie(args):
    family, measure = load_family(args.family)
    LOGGER.info('Computing %s over %s sets', args.quantity, len(family))
    engine = _get_engine(args)

    if args.quantity == IEQuantity.UNION:
        value = engine.ie_union(family, measure)
    elif args.quantity == IEQuantity.SYLVESTER:
        value = engine.sylvester(family, measure)
    elif args.quantity == IEQuantity.SYLVESTER_GROUPED:
        value = engine.sylvester_grouped(family, measure)
    else:
        value = engine.sieve(family, measure, args.p)

    _print(args, value)


def _approx_stirling(args):
    engine = _get_engine(args)
    log_factorial = engine.log_factorial(args.n)
    approx = engine.stirling_approx_log(args.n)
    _print(args, {
        'n': args.n,
        'log_factorial': log_factorial,
        'stirling_approx_log': approx,
        'ratio': math.exp(log_factorial - approx),
    })


def _check_binet(args):
    engine = _get_engine(args)
    if args.n is not None:
        _print(args, engine.binet_report(args.n))
        return

    n_max = args.max if args.max is not None else DEFAULT_BINET_SWEEP
    LOGGER.info('Checking Binet bounds for n = 1..%s', n_max)
    failures = []
    lower_margins = []
    upper_margins = []
    previous = None
    reports = engine.binet_sweep(n_max)
    for report in tqdm(reports, total=n_max, disable=not args.verbose, file=sys.stderr):
        # lambda_n must also decrease strictly
        if not report.strict or (previous is not None and report.lambda_n >= previous):
            failures.append(report.n)

        previous = report.lambda_n
        lower_margins.append(report.lower_margin)
        upper_margins.append(report.upper_margin)

    summary = {
        'n_max': n_max,
        'strict': not failures,
        'budget': report.budget,
        'min_lower_margin': min(lower_margins),
        'min_upper_margin': min(upper_margins),
    }
    _print(args, summary)

    if failures:
        raise ConsistencyError('Binet bounds or monotonicity fail at n = {}'.format(
            failures[:10]))


def _oracle_family(args):
    family, measure = load_family(args.family)
    engine = _get_engine(args)

    if args.p is None:
        _print(args, engine.direct_union_measure(family, measure))
    else:
        _print(args, engine.direct_exactly_p_measure(family, measure, args.p))


def _add_count(subparsers, name, operation, arguments, parents, description, signed=()):
    parser = subparsers.add_parser(name, parents=parents, help=description)
    parser.set_defaults(action=_count, operation=operation, arguments=arguments)
    for argument in arguments:
        parser.add_argument(argument, type=int if argument in signed else _nonnegative_int)

    return parser


def _get_parser():
    logging_args = argparse.ArgumentParser(add_help=False)
    logging_args.add_argument('-v', '--verbose', action='count', default=0)
    logging_args.add_argument('-l', '--logfile')

    output_args = argparse.ArgumentParser(add_help=False)
    output_args.add_argument('--json', action='store_true',
                             help='Print the result as a JSON document')

    parser = _Parser(prog='combicount', description='combicount Command Line Interface',
                     parents=[logging_args])

    subparsers = parser.add_subparsers(title='action', help='Action to perform')
    parser.set_defaults(action=None)

    # Common Arguments
    engine_args = EngineConfig.get_parser()
    parents = [logging_args, output_args, engine_args]

    # Exact numbers
    _add_count(subparsers, 'fact', 'factorial', ('n', ), parents, 'n!')
    _add_count(subparsers, 'power', 'power', ('base', 'exp'), parents, 'base^exp, with 0^0 = 1')
    _add_count(subparsers, 'falling', 'falling_factorial', ('n', 'm'), parents,
               'Falling factorial n (n - 1) ... (n - m + 1)')

    # Binomials
    _add_count(subparsers, 'binom', 'binomial', ('n', 'k'), parents,
               'Binomial coefficient C(n, k), 0 outside 0 <= k <= n', signed=('k', ))

    pascal = subparsers.add_parser('pascal', parents=parents, help="Pascal's triangle")
    pascal.set_defaults(action=_pascal)
    pascal.add_argument('--max', type=_nonnegative_int, required=True, help='Last row')

    multinom = subparsers.add_parser('multinom', parents=parents,
                                     help='Multinomial coefficient n! / (k_1! ... k_m!)')
    multinom.set_defaults(action=_count, operation='multinomial', arguments=('n', 'ks'))
    multinom.add_argument('n', type=_nonnegative_int)
    multinom.add_argument('ks', type=_int_list(signed=True), help='Comma separated k_1,...,k_m')

    _add_count(subparsers, 'multiset', 'multiset_count', ('m', 'n'), parents,
               'Number of size n multisets over m elements')

    compositions = subparsers.add_parser('compositions', parents=parents,
                                         help='List the m-tuples adding up to n')
    compositions.set_defaults(action=_compositions)
    compositions.add_argument('m', type=_nonnegative_int)
    compositions.add_argument('n', type=_nonnegative_int)

    # Maps
    _add_count(subparsers, 'subsets', 'count_subsets', ('n', ), parents,
               'Number of subsets of an n element set')
    _add_count(subparsers, 'func', 'count_functions', ('m', 'n'), parents,
               'Number of functions from m elements to n elements')
    _add_count(subparsers, 'inj', 'count_injections', ('m', 'n'), parents,
               'Number of injections from m elements to n elements')
    _add_count(subparsers, 'perm', 'count_permutations', ('n', ), parents,
               'Number of permutations of n elements')
    _add_count(subparsers, 'surj', 'count_surjections', ('n', 'p'), parents,
               'Number of surjections from n elements onto p elements')
    _add_count(subparsers, 'stirling2', 'stirling2', ('n', 'p'), parents,
               'Stirling number of the second kind')
    _add_count(subparsers, 'derange', 'count_derangements', ('n', ), parents,
               'Number of derangements of n elements')

    surjtable = subparsers.add_parser('surjtable', parents=parents,
                                      help='Surjection counts S(n, p) from their recurrence')
    surjtable.set_defaults(action=_surjtable)
    surjtable.add_argument('--max', type=_nonnegative_int, required=True, help='Last row')

    # Expansions
    expand = subparsers.add_parser('expand', parents=parents,
                                   help='Expand (a1 + a2)^n or (a1 + ... + am)^n')
    expand.set_defaults(action=_expand)
    expand.add_argument('--power', type=_nonnegative_int, required=True, help='Exponent n')
    expand.add_argument('--vars', type=_nonnegative_int,
                        help='Number of variables m; without it, the binomial formula is used')
    expand.add_argument('--eval', type=_int_list(signed=False),
                        help='Evaluate at the comma separated point v1,...,vm instead')

    # Inclusion-Exclusion
    family_args = argparse.ArgumentParser(add_help=False)
    family_args.add_argument('--family', required=True, help='Path to a family JSON file')

    ie = subparsers.add_parser('ie', help='Inclusion-exclusion over a set family')
    ie_subparsers = ie.add_subparsers(title='quantity', dest='quantity')
    ie_subparsers.required = True
    for quantity in IE_QUANTITIES:
        ie_quantity = ie_subparsers.add_parser(quantity, parents=parents + [family_args])
        ie_quantity.set_defaults(action=_ie)
        ie_quantity.add_argument('--p', type=_nonnegative_int,
                                 required=quantity == IEQuantity.SIEVE,
                                 help='Multiplicity, for the sieve formula')

    # Approximations
    approx = subparsers.add_parser('approx', help="Stirling's approximation and related floats")
    approx_subparsers = approx.add_subparsers(title='quantity', dest='quantity')
    approx_subparsers.required = True

    approx_stirling = approx_subparsers.add_parser('stirling', parents=parents)
    approx_stirling.set_defaults(action=_approx_stirling)
    approx_stirling.add_argument('n', type=_nonnegative_int)

    _add_count(approx_subparsers, 'logfact', 'log_factorial', ('n', ), parents, 'ln n!')
    _add_count(approx_subparsers, 'ratio', 'derangement_ratio', ('n', ), parents,
               'p_n / n!, the share of permutations without fixed points')

    # Checks
    check = subparsers.add_parser('check', help='Verify bounds over a range')
    check_subparsers = check.add_subparsers(title='check', dest='check')
    check_subparsers.required = True

    binet = check_subparsers.add_parser('binet', parents=parents,
                                        help="Binet's bounds 1/(12n+1) < lambda_n < 1/(12n)")
    binet.set_defaults(action=_check_binet)
    binet_range = binet.add_mutually_exclusive_group()
    binet_range.add_argument('n', type=_nonnegative_int, nargs='?',
                             help='Report a single n instead of sweeping')
    binet_range.add_argument('--max', type=_nonnegative_int,
                             help='Sweep n = 1..max. Defaults to {}'.format(DEFAULT_BINET_SWEEP))

    # Oracles
    oracle = subparsers.add_parser('oracle', help='Brute force enumeration')
    oracle_subparsers = oracle.add_subparsers(title='kind', dest='kind')
    oracle_subparsers.required = True

    _add_count(oracle_subparsers, 'subsets', 'enum_subsets_k', ('n', 'k'), parents,
               'Scan the subsets of [n] of size k', signed=('k', ))
    _add_count(oracle_subparsers, 'partitions', 'enum_partitions', ('n', 'p'), parents,
               'Scan the partitions of [n] into p blocks')

    maps = oracle_subparsers.add_parser('maps', parents=parents, help='Scan the maps [m] -> [n]')
    maps.set_defaults(action=_count, operation='enum_maps', arguments=('m', 'n', 'map_kind'))
    maps.add_argument('m', type=_nonnegative_int)
    maps.add_argument('n', type=_nonnegative_int)
    maps.add_argument('map_kind', choices=MAP_KINDS)

    union = oracle_subparsers.add_parser('union', parents=parents + [family_args],
                                         help='Measure of the union, element by element')
    union.set_defaults(action=_oracle_family, p=None)

    exactly = oracle_subparsers.add_parser('exactly', parents=parents + [family_args],
                                           help='Measure of the elements in exactly p sets')
    exactly.set_defaults(action=_oracle_family)
    exactly.add_argument('--p', type=_nonnegative_int, required=True)

    return parser


def _logging_setup(verbosity=1, logfile=None):
    logger = logging.getLogger()
    log_level = max(30 - verbosity * 10, logging.DEBUG)
    fmt = '%(asctime)s - %(process)d - %(levelname)s - %(module)s - %(message)s'
    formatter = logging.Formatter(fmt)
    logger.setLevel(log_level)
    logger.propagate = False

    if logfile:
        file_handler = logging.FileHandler(logfile)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    else:
        console_handler = logging.StreamHandler()
        console_handler.setLevel(log_level)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)


@contextmanager
def _lifted_int_digit_limit():
    # newer interpreters refuse to print integers with more than 4300 digits
    if not hasattr(sys, 'set_int_max_str_digits'):
        yield
        return

    previous = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(previous)


def main(argv=None):
    parser = _get_parser()
    args = parser.parse_args(argv)

    _logging_setup(args.verbose, args.logfile)

    if not args.action:
        parser.print_help()
        parser.exit()

    with _lifted_int_digit_limit():
        try:
            args.action(args)

        except UsageError as error:
            parser.exit(2, '{}: error: {}\n'.format(parser.prog, error))

        except CountingError as error:
            LOGGER.debug('Counting error', exc_info=True)
            parser.exit(1, '{}: error: {}\n'.format(parser.prog, error))
