from fractions import Fraction
from math import comb

import pytest

from coinduce.scalars import bernoulli, bernoulli_plus, c_coeff, factorial


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_odd_vanish():
    assert all(bernoulli(n) == 0 for n in range(3, 41, 2))


def test_bernoulli_recurrence_closure():
    # sum_{j=0}^{n} C(n+1, j) b_j = 0 for n >= 1
    for n in range(1, 30):
        assert sum(comb(n + 1, j) * bernoulli(j) for j in range(n + 1)) == 0


def test_bernoulli_plus_only_flips_b1():
    assert bernoulli_plus(1) == Fraction(1, 2)
    for n in (0, 2, 3, 4, 7, 10):
        assert bernoulli_plus(n) == bernoulli(n)


def test_c_coeff_values():
    assert c_coeff(0, 0) == 1
    assert c_coeff(1, 1) == 1
    # under b_1 = -1/2: b_1/1! + b_0/1! = 1/2
    assert c_coeff(0, 1) == Fraction(1, 2)
    assert c_coeff(0, 1, plus_convention=True) == Fraction(3, 2)


def test_c_coeff_diagonal_is_inverse_factorial():
    for n in range(12):
        assert c_coeff(n, n) == Fraction(1, factorial(n))


def test_c_coeff_domain_error():
    with pytest.raises(ValueError):
        c_coeff(3, 2)
    with pytest.raises(ValueError):
        c_coeff(-1, 2)


def test_factorial_exact():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(15) == 1307674368000


def test_exactness():
    x = Fraction(355, 113)
    assert x * (1 / x) == 1
