import sys

import pytest
import simplejson as json
from mock import Mock, call, patch

from combicount import cli
from combicount.constants import IEQuantity


@pytest.fixture
def family_path(tmpdir):
    path = tmpdir.join('family.json')
    path.write(json.dumps({'universe': 3, 'sets': [[0, 1], [1, 2]]}))
    return str(path)


def run(capsys, *argv):
    cli.main(list(argv))
    return capsys.readouterr().out.strip()


def run_failing(capsys, *argv):
    with pytest.raises(SystemExit) as error:
        cli.main(list(argv))

    return error.value.code, capsys.readouterr().err


@patch('combicount.cli._get_engine')
def test__count(mock__get_engine):
    # setup
    args_mock = Mock(json=False, operation='binomial', arguments=('n', 'k'), n=7, k=3)
    mock__get_engine.return_value.binomial.return_value = 35

    # run
    cli._count(args_mock)

    # assert
    mock__get_engine.assert_called_once_with(args_mock)
    mock__get_engine.return_value.binomial.assert_called_once_with(7, 3)


@patch('combicount.cli.load_family')
@patch('combicount.cli._get_engine')
def test__ie_sieve(mock__get_engine, mock_load_family):
    # setup
    args_mock = Mock(json=False, quantity=IEQuantity.SIEVE, family='f.json', p=2)
    mock_load_family.return_value = ('family', 'measure')
    mock__get_engine.return_value.sieve.return_value = 1

    # run
    cli._ie(args_mock)

    # assert
    mock_load_family.assert_called_once_with('f.json')
    mock__get_engine.return_value.sieve.assert_called_once_with('family', 'measure', 2)


@patch('combicount.cli._get_engine')
def test__expand_binomial(mock__get_engine):
    # setup
    args_mock = Mock(json=False, power=3, vars=None, eval=[2, 3])
    engine = mock__get_engine.return_value
    engine.evaluate.return_value = 125

    # run
    cli._expand(args_mock)

    # assert
    engine.binomial_expand.assert_called_once_with(3)
    engine.multinomial_expand.assert_not_called()
    engine.evaluate.assert_called_once_with(engine.binomial_expand.return_value, [2, 3])


def test_counting_commands(capsys):
    assert run(capsys, 'fact', '10') == '3628800'
    assert run(capsys, 'power', '0', '0') == '1'
    assert run(capsys, 'falling', '5', '2') == '20'
    assert run(capsys, 'binom', '7', '3') == '35'
    assert run(capsys, 'binom', '5', '-1') == '0'
    assert run(capsys, 'multinom', '5', '6,-1') == '0'
    assert run(capsys, 'multinom', '3', '1,1,1') == '6'
    assert run(capsys, 'multiset', '3', '2') == '6'
    assert run(capsys, 'subsets', '10') == '1024'
    assert run(capsys, 'func', '3', '2') == '8'
    assert run(capsys, 'inj', '2', '3') == '6'
    assert run(capsys, 'perm', '4') == '24'
    assert run(capsys, 'surj', '3', '2') == '6'
    assert run(capsys, 'stirling2', '3', '2') == '3'
    assert run(capsys, 'derange', '0') == '1'
    assert run(capsys, 'derange', '4') == '9'


def test_table_commands(capsys):
    assert run(capsys, 'pascal', '--max', '3') == '1\n1 1\n1 2 1\n1 3 3 1'
    assert run(capsys, 'surjtable', '--max', '2') == '1\n0 1\n0 1 2'
    assert run(capsys, 'compositions', '2', '2') == '2 0\n1 1\n0 2'


def test_json_output(capsys):
    assert json.loads(run(capsys, 'fact', '5', '--json')) == 120
    assert json.loads(run(capsys, 'pascal', '--max', '2', '--json')) == [[1], [1, 1], [1, 2, 1]]


def test_huge_output(capsys):
    text = run(capsys, 'fact', '2000')
    assert len(text) == 5736

    assert json.loads(run(capsys, 'fact', '2000', '--json')) > 0


def test_expand(capsys):
    assert run(capsys, 'expand', '--power', '2') == 'a1^2 + 2*a1*a2 + a2^2'
    assert run(capsys, 'expand', '--power', '3', '--eval', '2,3') == '125'
    assert run(capsys, 'expand', '--power', '4', '--vars', '3', '--eval', '1,2,3') == '1296'

    rendered = json.loads(run(capsys, 'expand', '--power', '1', '--vars', '2', '--json'))
    assert rendered['variables'] == 2
    assert len(rendered['terms']) == 2


def test_ie(capsys, family_path):
    assert run(capsys, 'ie', 'union', '--family', family_path) == '3'
    assert run(capsys, 'ie', 'sylvester', '--family', family_path) == '0'
    assert run(capsys, 'ie', 'sylvester-grouped', '--family', family_path) == '0'
    assert run(capsys, 'ie', 'sieve', '--family', family_path, '--p', '2') == '1'


def test_ie_weighted(capsys, tmpdir):
    path = tmpdir.join('weighted.json')
    path.write(json.dumps({
        'universe': 4,
        'sets': [[0, 1], [1, 2], [2, 3]],
        'weights': ['1', '1/2', '1/3', '1/4'],
    }))

    assert run(capsys, 'ie', 'union', '--family', str(path)) == '25/12'
    assert json.loads(run(capsys, 'ie', 'union', '--family', str(path), '--json')) == '25/12'


def test_oracle(capsys, family_path):
    assert run(capsys, 'oracle', 'subsets', '4', '2') == '6'
    assert run(capsys, 'oracle', 'maps', '4', '4', 'derangement') == '9'
    assert run(capsys, 'oracle', 'partitions', '3', '2') == '3'
    assert run(capsys, 'oracle', 'union', '--family', family_path) == '3'
    assert run(capsys, 'oracle', 'exactly', '--family', family_path, '--p', '1') == '2'


def test_approx(capsys):
    assert run(capsys, 'approx', 'logfact', '1') == '0.0'
    assert run(capsys, 'approx', 'ratio', '4') == '0.375'

    report = json.loads(run(capsys, 'approx', 'stirling', '1000', '--json'))
    assert report['n'] == 1000
    assert abs(report['ratio'] - 1) < 1e-4


def test_check_binet(capsys):
    summary = json.loads(run(capsys, 'check', 'binet', '--max', '500', '--json'))

    assert summary['n_max'] == 500
    assert summary['strict'] is True
    assert summary['min_upper_margin'] > summary['budget']

    report = json.loads(run(capsys, 'check', 'binet', '7', '--json'))
    assert report['n'] == 7
    assert report['strict'] is True


def test_check_binet_single_or_sweep(capsys):
    code, err = run_failing(capsys, 'check', 'binet', '7', '--max', '50')

    assert code == 2
    assert err.startswith('combicount check binet: error:')


def test_usage_errors(capsys, tmpdir):
    code, err = run_failing(capsys, 'binom', 'seven', '3')
    assert code == 2
    assert err.startswith('combicount binom: error:')
    assert len(err.strip().split('\n')) == 1

    code, err = run_failing(capsys, 'multinom', '5', '1,,2')
    assert code == 2

    code, err = run_failing(capsys, 'ie', 'union', '--family', str(tmpdir.join('missing.json')))
    assert code == 2
    assert 'cannot read family file' in err

    code, _ = run_failing(capsys, 'ie', 'sieve', '--family', 'f.json')
    assert code == 2


def test_domain_errors(capsys, tmpdir):
    # setup
    path = tmpdir.join('large.json')
    path.write(json.dumps({'universe': 2, 'sets': [[0]] * 21}))

    # run
    code, err = run_failing(capsys, 'ie', 'union', '--family', str(path))

    # assert
    assert code == 1
    assert err == 'combicount: error: 21 sets exceed the inclusion-exclusion cap of 20\n'

    code, _ = run_failing(capsys, 'oracle', 'maps', '3', '4', 'derangement')
    assert code == 1

    code, _ = run_failing(capsys, 'approx', 'ratio', '171')
    assert code == 1

    code, _ = run_failing(capsys, 'multiset', '0', '2')
    assert code == 1


def test_engine_flags(capsys, tmpdir):
    path = tmpdir.join('large.json')
    path.write(json.dumps({'universe': 2, 'sets': [[0]] * 3}))

    code, _ = run_failing(capsys, 'ie', 'union', '--family', str(path), '--ie-max-sets', '2')
    assert code == 1

    code, _ = run_failing(capsys, 'oracle', 'subsets', '5', '2', '--subset-cap', '4')
    assert code == 1


@patch('combicount.cli.sys.get_int_max_str_digits', create=True)
@patch('combicount.cli.sys.set_int_max_str_digits', create=True)
def test_main_restores_int_digit_limit(set_mock, get_mock, capsys):
    # setup
    get_mock.return_value = 4300

    # run
    run(capsys, 'fact', '3')
    code, _ = run_failing(capsys, 'approx', 'ratio', '171')

    # assert
    assert code == 1
    assert set_mock.call_args_list == [call(0), call(4300)] * 2


def test_huge_output_keeps_process_limit(capsys):
    if not hasattr(sys, 'get_int_max_str_digits'):
        pytest.skip('no integer string conversion limit')

    # setup
    previous = sys.get_int_max_str_digits()

    # run
    run(capsys, 'fact', '2000')

    # assert
    assert sys.get_int_max_str_digits() == previous


@patch('combicount.cli._logging_setup')
def test_main_logging(mock__logging_setup, capsys):
    # run
    run(capsys, 'fact', '3', '-v', '-l', 'combicount.log')

    # assert
    mock__logging_setup.assert_called_once_with(1, 'combicount.log')


def test_main_no_action(capsys):
    with pytest.raises(SystemExit) as error:
        cli.main([])

    assert error.value.code == 0
    assert 'usage: combicount' in capsys.readouterr().out
