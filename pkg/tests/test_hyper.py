import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bhpdet.combinat import pochhammer_rat
from bhpdet.errors import DegenerateLower, NonTerminating, NumeratorPole, UnmatchedArguments
from bhpdet.hyper import (RULES, GammaRatio, HyperSeries, ThomaeRule, Zero, fixed_instances,
                          gamma_ratio_eval, pfq_sum, random_case, series_terms,
                          verify_binomial_1f0, verify_binomial_convolution,
                          verify_chu_vandermonde, verify_saalschutz,
                          verify_saalschutz_row_vanishing, verify_thomae, verify_watson,
                          watson_series)

from strategies import nonint_rationals, rationals

F = Fraction
n_small = st.integers(min_value=0, max_value=8)


def test_pfq_examples():
    assert pfq_sum(HyperSeries((2, 3, -1), (7, -2))) == F(10, 7)
    assert pfq_sum(HyperSeries((F(3, 7), 0), (F(5, 2),))) == 1
    assert pfq_sum(HyperSeries((-1, -1, F(-3, 2)), (F(-1, 2), -3))) == 0


def test_pfq_refusals():
    with pytest.raises(NonTerminating):
        pfq_sum(HyperSeries((F(1, 2),), (F(3, 2),)))
    with pytest.raises(DegenerateLower):
        pfq_sum(HyperSeries((-3,), (-1,)))
    # a term cap turns a non-terminating series into a partial sum
    assert pfq_sum(HyperSeries((1,), (), F(1, 2)), terms=3) == 1 + F(1, 2) + F(1, 4)


def test_gamma_ratio_examples():
    assert gamma_ratio_eval(GammaRatio((5,), (3,))) == 12
    assert gamma_ratio_eval(GammaRatio((F(5, 2),), (F(1, 2),))) == F(3, 4)
    assert gamma_ratio_eval(GammaRatio((3,), (-1,))) is Zero
    with pytest.raises(NumeratorPole):
        gamma_ratio_eval(GammaRatio((-1,), (3,)))
    with pytest.raises(UnmatchedArguments):
        gamma_ratio_eval(GammaRatio((F(1, 3),), (F(1, 2),)))


def test_fixed_denominator_pole_wins_over_perturbed_factors():
    # Gamma(0) below with slope 0; the unpaired Gamma(-1 + eps) above cannot rescue it
    gr = GammaRatio((F(1, 2), -1), (0, F(-1, 2)), (0, 1), (0, 1))
    assert gamma_ratio_eval(gr) is Zero


def test_rule_examples():
    assert verify_saalschutz(2, 3, 7, 1)
    assert verify_saalschutz(F(1, 3), F(2, 5), F(7, 4), 0)
    assert verify_saalschutz(F(1, 2), F(-1, 3), F(5, 4), 3)
    assert verify_chu_vandermonde(3, F(1, 2), 2)
    assert verify_thomae(ThomaeRule.TERMINATING,
                         {"A": F(1, 2), "B": 2, "D": 3, "E": F(7, 2), "n": 2})
    assert verify_thomae(ThomaeRule.TERMINATING,
                         {"A": F(1, 3), "B": F(2, 7), "D": F(9, 4), "E": F(7, 2), "n": 0})
    assert verify_thomae(ThomaeRule.KEEP_FIRST,
                         {"B": F(1, 3), "C": F(1, 5), "D": F(4, 3), "E": F(6, 5), "n": 2})
    assert verify_watson(-1, -1, F(-3, 2))
    assert pfq_sum(watson_series(-1, -1, F(-3, 2))) == 0
    assert verify_watson(-2, F(1, 2), 2)
    assert pfq_sum(watson_series(-2, F(1, 2), 2)) != 0
    assert verify_binomial_1f0(0) and verify_binomial_1f0(1) and verify_binomial_1f0(4)
    for b, c, i in [(4, 2, 3), (6, 2, 3), (6, 4, 5)]:
        assert verify_saalschutz_row_vanishing(b, c, i)


def test_fixed_instances_all_hold():
    for rule, params, lhs, rhs in fixed_instances():
        assert lhs == rhs, (rule, params)


@given(nonint_rationals, nonint_rationals, nonint_rationals, n_small)
def test_series_equals_termwise_sum(a, b, d, n):
    s = HyperSeries((a, b, -n), (d,))
    assert pfq_sum(s) == sum(series_terms(s))


@given(nonint_rationals, nonint_rationals, nonint_rationals, nonint_rationals, n_small,
       st.permutations([0, 1, 2]))
def test_parameter_permutation_invariance(a, b, d, e, n, perm):
    ups = (a, b, -n)
    s1 = HyperSeries(ups, (d, e))
    s2 = HyperSeries(tuple(ups[k] for k in perm), (e, d))
    assert pfq_sum(s1) == pfq_sum(s2)


@given(rationals, st.integers(min_value=-6, max_value=6))
def test_gamma_ratio_is_a_shifted_factorial(a, k):
    assume(a.denominator != 1 or (a > 0 and a + k > 0))
    assert gamma_ratio_eval(GammaRatio((a + k,), (a,))) == pochhammer_rat(a, k)


@given(nonint_rationals, nonint_rationals)
def test_saalschutz_at_n1_is_algebraic(a, c):
    # n = 1: a single nontrivial term, so both identities are plain algebra
    b = F(1, 3)
    assume(c != 0 and c - a - b != 0 and a + b - c != 0)
    assert verify_saalschutz(a, b, c, 1)
    assert verify_chu_vandermonde(a, c, 1)


@given(st.integers(min_value=0, max_value=8), nonint_rationals, st.integers(min_value=-2, max_value=12))
def test_binomial_convolution(p, r, m):
    assert verify_binomial_convolution(p, r, m)


@pytest.mark.parametrize("rule", RULES)
def test_random_instances_hold(rule):
    rng = random.Random(f"test:{rule}")
    for _ in range(50):
        params, lhs, rhs = random_case(rule, rng)
        assert lhs == rhs, params


def test_watson_vanishes_for_negative_odd_a():
    rng = random.Random(5)
    for _ in range(40):
        params, lhs, rhs = random_case("watson_odd", rng)
        assert params["A"] % 2 == 1 and params["A"] < 0
        assert lhs == 0 and rhs == 0


def test_row_vanishing_preconditions():
    with pytest.raises(ValueError):
        verify_saalschutz_row_vanishing(5, 2, 3)
    with pytest.raises(ValueError):
        verify_saalschutz_row_vanishing(6, 2, 2)
