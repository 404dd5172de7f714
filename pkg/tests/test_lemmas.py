import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bhpdet.closed_form import vanishes_by_parity
from bhpdet.det import det_poly_interp
from bhpdet.errors import ParityError, RangeError
from bhpdet.lemmas import (Extraction, KernelFamily, Regime, admissible, e_values,
                           extraction_admissible, integer_e_values, kernel_coeffs, kernel_rank,
                           kernel_residuals, m_formula, m_formula_all, multiplicity_support,
                           product_multiplicity, regime_applies, s_range, special_value_check,
                           staircase_ok, target_matrix, verify_divisibility,
                           verify_factor_extraction, verify_half_binomial_singular, verify_kernel,
                           verify_lowered_top, verify_row_raise_invariance,
                           verify_toeplitz_evaluation)
from bhpdet.matrices import build_delta_prime

F = Fraction
B_MAX = 8


def test_multiplicity_examples():
    assert product_multiplicity(4, 2, 2) == 4
    assert product_multiplicity(5, 2, -1) == 0
    assert product_multiplicity(3, 1, 1) == 1
    assert m_formula(Regime.L1, 4, 1, 1) == 1
    assert m_formula(Regime.L2, 3, 2, 1) == 1


def test_m_formula_outside_regime_raises():
    with pytest.raises(RangeError):
        m_formula(Regime.L2, 6, 1, 2)


def test_case_formulas_agree_with_product_everywhere():
    for b in range(B_MAX + 1):
        for c in range(b + 1):
            for regime in Regime:
                if not regime_applies(regime, b, c):
                    continue
                for e in integer_e_values(b, c):
                    for m in m_formula_all(regime, b, c, e).values():
                        assert m == product_multiplicity(b, c, e), (regime, b, c, e)


def test_multiplicities_add_up_to_the_degree():
    for b in range(B_MAX + 1):
        for c in range(b + 1):
            if vanishes_by_parity(b, c):
                continue
            support = multiplicity_support(b, c)
            assert all(product_multiplicity(b, c, e) > 0 for e in support)
            assert sum(product_multiplicity(b, c, e) for e in support) == c * (b - c)


def test_divisibility_and_extraction():
    for b in range(7):
        for c in range(b + 1):
            d = det_poly_interp(build_delta_prime(b, c))
            for e in multiplicity_support(b, c):
                assert verify_divisibility(b, c, e, d)
            for kind in Extraction:
                for e in range(b + 1):
                    if extraction_admissible(kind, b, c, e):
                        assert verify_factor_extraction(kind, b, c, e, d), (kind, b, c, e)


def test_row_operations_preserve_the_determinant():
    for b in range(6):
        for c in range(b + 1):
            assert verify_lowered_top(b, c)
            for e in range(c, b + 1):
                assert verify_row_raise_invariance(b, c, e)


@pytest.mark.parametrize("family", list(KernelFamily), ids=lambda f: f.value)
def test_every_kernel_family_annihilates_its_target(family):
    tuples = admissible(family, B_MAX)
    assert tuples, family
    for t in tuples:
        res = kernel_residuals(family, *t)
        assert res.ok, (family, t, res.first_failing)


@pytest.mark.parametrize("family", [f for f in KernelFamily if f is not KernelFamily.L4],
                         ids=lambda f: f.value)
def test_kernel_vectors_form_a_staircase(family):
    for b in range(B_MAX + 1):
        for c in range(b + 1):
            for e in e_values(family, b, c):
                assert staircase_ok(family, b, c, e)
                vecs = [kernel_coeffs(family, b, c, e, s) for s in s_range(family, b, c, e)]
                assert kernel_rank(vecs) == len(vecs)


def test_l4_example_vector():
    assert kernel_coeffs(KernelFamily.L4, 4, 2) == [1, F(1, 2)]


@given(st.sampled_from([f for f in KernelFamily if f is not KernelFamily.L4]),
       st.integers(min_value=0, max_value=2**32))
def test_perturbed_kernel_vector_is_caught(family, seed):
    # the residual check is not vacuous: a random nonzero change breaks it
    rng = random.Random(seed)
    b, c, e, s = rng.choice(admissible(family, 6))
    m = target_matrix(family, b, c, e)
    rows = m.evaluate(-e)
    v = list(kernel_coeffs(family, b, c, e, s))
    k = rng.randrange(b)
    v[k] += F(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    res = [sum((v[i] * rows[i][j] for i in range(b)), F(0)) for j in range(m.cols)]
    if any(rows[k][j] != 0 for j in range(m.cols)):
        assert any(r != 0 for r in res)


def test_toeplitz_evaluation():
    assert verify_toeplitz_evaluation(0, 3)
    for n in range(5):
        for c in range(5):
            assert verify_toeplitz_evaluation(n, c, symbolic=True)
            assert verify_toeplitz_evaluation(n, c, symbolic=False, rng=random.Random(n * 7 + c))
    with pytest.raises(RangeError):
        verify_toeplitz_evaluation(2, -1)


def test_half_binomial_matrix_is_singular():
    for b, c in [(4, 2), (6, 2), (6, 4), (8, 2), (8, 4), (8, 6)]:
        assert verify_half_binomial_singular(b, c)
        assert verify_kernel(KernelFamily.L4, b, c)
    with pytest.raises(ParityError):
        verify_half_binomial_singular(5, 2)


def test_special_values_and_decomposition():
    for b in range(1, B_MAX + 1):
        for c in range(b + 1):
            if b % 2 == 0 and c % 2 == 1:
                continue
            r = special_value_check(b, c)
            assert r.determinant == r.closed_form == r.via_toeplitz
            assert r.correction == 0
