import argparse

import pytest

from combicount.config import EngineConfig, _nonnegative_int
from combicount.constants import IE_MAX_SETS, PASCAL_BOUND


def test_engine_config_defaults():
    conf = EngineConfig()

    assert conf.pascal_bound == PASCAL_BOUND
    assert conf.ie_max_sets == IE_MAX_SETS
    assert set(conf.to_dict()) == {
        'pascal_bound', 'ie_max_sets', 'subset_cap', 'map_cap', 'partition_cap', 'binet_max'}


def test_engine_config_from_dict():
    # setup
    args = {'ie_max_sets': 8, 'binet_max': None, 'unrelated': 'ignored'}

    # run
    conf = EngineConfig(args)

    # assert
    assert conf.ie_max_sets == 8
    assert conf.binet_max == 10 ** 6
    assert not hasattr(conf, 'unrelated')


def test_engine_config_parser():
    # setup
    parser = EngineConfig.get_parser()

    # run
    args = parser.parse_args(['--ie-max-sets', '5', '--map-cap', '100'])
    conf = EngineConfig(args)

    # assert
    assert conf.ie_max_sets == 5
    assert conf.map_cap == 100
    assert conf.subset_cap == 20


def test_nonnegative_int():
    assert _nonnegative_int('12') == 12

    with pytest.raises(argparse.ArgumentTypeError):
        _nonnegative_int('-1')

    with pytest.raises(argparse.ArgumentTypeError):
        _nonnegative_int('twelve')


def test_engine_config_repr():
    assert repr(EngineConfig({'subset_cap': 3})).startswith('EngineConfig({')
