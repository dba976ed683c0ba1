import numpy as np
import pytest

from combicount import expand
from combicount.binomials import binomial
from combicount.errors import InputError
from combicount.exactnum import power


def test_binomial_expand():
    # run
    square = expand.binomial_expand(2)
    constant = expand.binomial_expand(0)

    # assert
    assert square.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert square.render() == 'a1^2 + 2*a1*a2 + a2^2'
    assert constant == expand.Poly.constant(1, 2)
    assert constant.render() == '1'


def test_binomial_expand_evaluate():
    assert expand.evaluate(expand.binomial_expand(5), [1, 1]) == 32
    assert expand.evaluate(expand.binomial_expand(3), [2, 3]) == 125
    for n in range(21):
        assert expand.evaluate(expand.binomial_expand(n), [2, 3]) == 5 ** n


def test_binomial_expand_random_points():
    random = np.random.RandomState(7)
    for n in range(21):
        poly = expand.binomial_expand(n)
        for a, b in random.randint(0, 11, size=(50, 2)).tolist():
            assert expand.evaluate(poly, [a, b]) == power(a + b, n)


def test_multinomial_expand_two_variables():
    for n in range(31):
        assert expand.multinomial_expand(2, n) == expand.binomial_expand(n)


def test_multinomial_expand():
    # run
    poly = expand.multinomial_expand(3, 2)

    # assert
    assert poly.coefficient([1, 1, 0]) == 2
    assert poly.coefficient([2, 0, 0]) == 1
    assert poly.coefficient([1, 0, 0]) == 0
    assert expand.evaluate(expand.multinomial_expand(4, 3), [1, 1, 1, 1]) == 64
    assert expand.evaluate(expand.multinomial_expand(3, 4), [1, 2, 3]) == 1296


def test_multinomial_expand_random_points():
    random = np.random.RandomState(11)
    for m in range(1, 5):
        for n in range(9):
            poly = expand.multinomial_expand(m, n)
            for point in random.randint(0, 11, size=(50, m)).tolist():
                assert expand.evaluate(poly, point) == power(sum(point), n)


def test_multinomial_expand_term_count():
    for m in range(1, 6):
        for n in range(11):
            poly = expand.multinomial_expand(m, n)
            assert len(poly) == binomial(m + n - 1, n)
            assert expand.evaluate(poly, [1] * m) == m ** n


def test_multinomial_expand_recurrence():
    # (a_1 + ... + a_m)^(n + 1) = (a_1 + ... + a_m)^n (a_1 + ... + a_m)
    for m in range(1, 5):
        for n in range(7):
            product = expand._times_variable_sum(expand.multinomial_expand(m, n))
            assert product == expand.multinomial_expand(m, n + 1)


def test_poly_iteration_order():
    monomials = [monomial for monomial, _ in expand.multinomial_expand(3, 2)]

    assert monomials == sorted(monomials, reverse=True)
    assert monomials[0] == (2, 0, 0)


def test_poly_drops_zero_coefficients():
    poly = expand.Poly(2, {(1, 0): 0, (0, 1): 3})

    assert len(poly) == 1
    assert poly.render() == '3*a2'
    assert expand.Poly(2, {}).render() == '0'


def test_poly_invalid():
    with pytest.raises(InputError):
        expand.Poly(0, {})

    with pytest.raises(InputError):
        expand.Poly(2, {(1, 2, 3): 1})

    with pytest.raises(InputError):
        expand.Poly(2, {(1, -1): 1})


def test_evaluate_constant():
    assert expand.evaluate(expand.Poly.constant(1, 3), [4, 0, 9]) == 1


def test_evaluate_arity_mismatch():
    with pytest.raises(InputError):
        expand.evaluate(expand.binomial_expand(2), [1, 2, 3])


def test_poly_to_dict():
    poly = expand.binomial_expand(1)

    assert poly.to_dict() == {
        'variables': 2,
        'terms': [
            {'coefficient': 1, 'exponents': [1, 0]},
            {'coefficient': 1, 'exponents': [0, 1]},
        ]
    }
