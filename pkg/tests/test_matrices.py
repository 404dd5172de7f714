from fractions import Fraction

import pytest

from bhpdet.combinat import binom
from bhpdet.errors import BadShape, RangeError
from bhpdet.matrices import (ExactMatrix, build_binomial_toeplitz, build_conjecture, build_delta,
                             build_delta1, build_delta2, build_delta3, build_delta_prime,
                             build_half_binomial, build_lowered_top, build_raised, delta1_in_range,
                             identity_matrix, raise_row_tops)
from bhpdet.polynomial import X

F = Fraction


def values(m, x=None):
    if x is None:
        return m.scalar_rows()
    return m.evaluate(x)


def test_delta_small_cases():
    assert build_delta(1, 1).to_lists() == [[1, 1], [2, 0]]
    assert build_delta(0, 0).rows == 0
    m = build_delta(3, 0)
    for i in range(3):
        for j in range(3):
            assert m[i, j] == binom(X + j, i)


def test_conjecture_matrix_is_delta_at_zero():
    assert values(build_conjecture(1, 1)) == [[1, 1], [2, 0]]
    # row 1: zero block, then binom(x+1, 1) and binom(2x+2, 1) at x = 0
    assert values(build_conjecture(2, 1))[1] == [0, 1, 2]
    for b, c in [(3, 1), (4, 2), (5, 3)]:
        assert values(build_conjecture(b, c)) == values(build_delta(b, c), 0)


def test_delta_prime_small_cases():
    assert build_delta_prime(1, 1).to_lists() == [[2]]
    # both rows lie in the top block i < c, so both carry the factor 2
    m = build_delta_prime(2, 2)
    assert m.to_lists() == [[2, 0], [4 * X + 4, 2]]
    m = build_delta_prime(4, 0)
    for i in range(4):
        for j in range(4):
                    assert m[i, j] == binom(X, i - j)


def test_lowered_top_first_row():
    assert build_lowered_top(1, 1).to_lists() == [[2]]
    # for b = c every column lies in the doubled block with top 2x+b-1
    assert build_lowered_top(2, 2).row(0) == [2 * binom(2 * X + 1, 2 - j) for j in (2, 3)]
    m = build_lowered_top(5, 2)
    assert m.row(1)[:3] == [binom(X + 1, 1 - j + 2) for j in (2, 3, 4)]


def test_row_raising_matches_closed_form():
    for b in range(1, 7):
        for c in range(b + 1):
            for e in range(c, b + 1):
                assert raise_row_tops(build_delta_prime(b, c), c, e).entries == \
                    build_raised(b, c, e).entries


def test_delta1_at_the_lower_end_is_delta_prime():
    for b, c in [(4, 2), (6, 2), (6, 4), (8, 4)]:
        e = c // 2
        if delta1_in_range(b, c, e):
            assert build_delta1(b, c, e).entries == build_delta_prime(b, c).entries


def test_delta2_with_empty_bands():
    # e = c and e = b - c both leave one of the two bands empty; shapes stay b x b
    for b, c in [(4, 1), (6, 2), (7, 3)]:
        for e in (c, b - c):
            assert build_delta2(b, c, e).is_square and build_delta2(b, c, e).rows == b


def test_delta3_shape():
    m = build_delta3(4, 2, 2)
    assert m.rows == m.cols == 4


def test_out_of_range_parameters_raise():
    with pytest.raises(RangeError):
        build_delta1(4, 2, 4)
    with pytest.raises(RangeError):
        build_delta2(6, 2, 5)
    with pytest.raises(BadShape):
        build_delta(2, 3)


def test_binomial_toeplitz_examples():
    assert build_binomial_toeplitz(1, 0).to_lists() == [[1]]
    assert build_binomial_toeplitz(2, 1).to_lists() == [[X, 1], [X * (X - 1) / 2, X]]
    assert build_binomial_toeplitz(0, 3).rows == 0


def test_half_binomial_examples():
    assert values(build_half_binomial(4, 2)) == [[F(-1, 2), 1], [F(1, 16), F(-1, 8)]]
    m = build_half_binomial(6, 2)
    assert m.rows == m.cols == 4
    assert values(m)[0] == [binom(F(-3, 2), 3 - j) for j in range(2, 6)]


def test_exact_matrix_shape_checks():
    with pytest.raises(BadShape):
        ExactMatrix.from_rows([[1, 2], [3]])
    assert identity_matrix(3).evaluate(5) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
