from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bhpdet.combinat import (HalfInteger, binom, factorial, inv_factorial, pochhammer_poly,
                             pochhammer_rat, superfactorial, superfactorial_sq)
from bhpdet.errors import NegativeArgument, NegativeFactorial, ZeroDivisor
from bhpdet.polynomial import X, RationalFunction

from strategies import rationals

F = Fraction


def test_pochhammer_examples():
    assert pochhammer_rat(F(1, 2), 3) == F(15, 8)
    assert pochhammer_rat(F(7, 3), 0) == 1
    assert pochhammer_rat(5, -2) == F(1, 12)
    with pytest.raises(ZeroDivisor):
        pochhammer_rat(2, -3)


def test_pochhammer_poly_examples():
    assert pochhammer_poly(X, 2) == RationalFunction(X * (X + 1))
    assert pochhammer_poly(X, 0) == RationalFunction(1)
    assert pochhammer_poly(X + 3, -1) == RationalFunction(1, X + 2)


def test_factorials():
    assert factorial(5) == 120
    assert factorial(0) == 1
    assert inv_factorial(-2) == 0
    with pytest.raises(NegativeFactorial):
        factorial(-1)


def test_binom_examples():
    assert binom(X + 1, 2) == (X * X + X) / 2
    assert binom(F(-1, 2), 1) == F(-1, 2)
    assert binom(F(1, 2), 3) == F(1, 16)
    assert binom(F(3), -1) == 0


def test_superfactorial_examples():
    assert superfactorial_sq(HalfInteger.of(3)) == 4
    assert superfactorial_sq(HalfInteger.of(0)) == 1
    assert superfactorial_sq(HalfInteger.of(F(5, 2))) == 2
    assert superfactorial(4) == 12
    with pytest.raises(NegativeArgument):
        superfactorial_sq(HalfInteger(-1))


@given(rationals, st.integers(min_value=0, max_value=8))
def test_pochhammer_recurrence(a, k):
    assert pochhammer_rat(a, k + 1) == pochhammer_rat(a, k) * (a + k)


@given(rationals, st.integers(min_value=1, max_value=8))
def test_negative_branch_inverts(a, k):
    # (a)_{-k} (a-k)_k = 1 whenever the reciprocal branch is defined
    assume(all(a - t != 0 for t in range(1, k + 1)))
    assert pochhammer_rat(a, -k) * pochhammer_rat(a - k, k) == 1


@given(rationals, st.integers(min_value=-3, max_value=8))
def test_pascal_rule(t, k):
    assert binom(t + 1, k) == binom(t, k) + binom(t, k - 1)


@given(rationals, st.integers(min_value=0, max_value=6))
def test_polynomial_binom_evaluates_consistently(t, k):
    assert binom(X, k)(t) == binom(t, k)


@given(st.integers(min_value=1, max_value=20))
def test_half_integer_square_is_product_of_neighbours(twice):
    s = HalfInteger(2 * twice - 1)
    hi, lo = twice, twice - 1
    assert superfactorial_sq(s) == superfactorial(hi) * superfactorial(lo)
