"""Tests for the M/MO generating function routes and their agreements."""

from fractions import Fraction

import pytest

from conftest import brute_multisum
from macsums.divisors import eisenstein, sigma_series, theta_moment
from macsums.macmahon import (
    CLOSED_FORMS,
    M_FORMULAS,
    MO_FORMULAS,
    closed_form_check,
    coefficient_table,
    conjugate_chain_check,
    conjugate_chain_m_form,
    jacobi_product_side,
    jacobi_specialization_check,
    jacobi_theta_side,
    jacobi_weak_sum_side,
    m_conjugate_form,
    m_recurrence,
    m_single_sum,
    mo_andrews_rose,
    mo_from_m,
    mo_recurrence,
    mo_umbral,
    strict_multisum,
    symmetric_relation_check,
    weak_multisum,
)
from macsums.series import Series, geometric_pow


def two_size_partition_weight(n):
    """Direct count for the weak two-tuple family: over k1 <= k2 and
    s1, s2 >= 1 with s1 k1 + s2 k2 = n, add s1*s2."""
    total = 0
    for k1 in range(1, n + 1):
        for k2 in range(k1, n + 1):
            for s1 in range(1, n // k1 + 1):
                rest = n - s1 * k1
                if rest >= k2 and rest % k2 == 0:
                    total += s1 * (rest // k2)
    return total


def test_weak_multisum_matches_brute_force():
    for t in (1, 2, 3):
        assert weak_multisum(t, 14).coeffs == brute_multisum(t, 14)


def test_strict_multisum_matches_brute_force():
    for t in (1, 2, 3):
        assert strict_multisum(t, 14).coeffs == brute_multisum(t, 14, strict=True)


def test_m_2_4_is_14_via_all_four_routes():
    expected = two_size_partition_weight(4)
    assert expected == 14
    for name, formula in M_FORMULAS.items():
        assert formula(2, 10)[4] == 14, name


def test_t1_routes_give_divisor_sums():
    s = sigma_series(1, 30)
    for formula in M_FORMULAS.values():
        assert formula(1, 30) == s
    for formula in MO_FORMULAS.values():
        assert formula(1, 30) == s


def test_strict_family_small_values():
    u2 = strict_multisum(2, 12)
    assert u2.coeffs[:4] == [0, 0, 0, 1]  # first strict pair is (1, 2)
    for n in range(3):
        assert u2[n] == 0


def test_strict_family_mod5_progression():
    u2 = strict_multisum(2, 51)
    for n in range(11):
        assert u2[5 * n + 1] % 5 == 0


def test_excess_of_weak_over_strict():
    n = 40
    lhs = weak_multisum(2, n) - strict_multisum(2, n)
    rhs = Series.zero(n)
    for k in range(1, n // 2 + 1):
        rhs = rhs + geometric_pow(k, 4, n).shift(2 * k)
    assert lhs == rhs


def test_single_sum_small_coefficients():
    assert m_single_sum(1, 10)[6] == 12  # sigma_1(6)
    assert m_single_sum(2, 10)[4] == 14


def test_single_sum_equals_multisum_to_50():
    for t in (1, 2, 3, 4):
        assert m_single_sum(t, 50) == weak_multisum(t, 50)


def test_conjugate_form_equals_multisum():
    for t in (1, 2, 3):
        assert m_conjugate_form(t, 40) == weak_multisum(t, 40)


def test_conjugate_form_values():
    assert m_conjugate_form(2, 10)[4] == 14
    assert m_conjugate_form(1, 30) == sigma_series(1, 30)


def test_andrews_rose_matches_multisum():
    for t in (1, 2, 3, 4):
        assert mo_andrews_rose(t, 50) == strict_multisum(t, 50)


def test_andrews_rose_prefix():
    assert mo_andrews_rose(1, 6).coeffs == [0, 1, 3, 4, 7, 6, 12]


def test_andrews_rose_mod11_progression():
    u4 = mo_andrews_rose(4, 11 * 8 + 7)
    for n in range(9):
        assert u4[11 * n + 6] % 11 == 0


def test_umbral_route_matches_multisum():
    for t in (1, 2, 3):
        assert mo_umbral(t, 40) == strict_multisum(t, 40)


def test_umbral_route_t1_theta_quotient():
    # -(J_3 - J_1) / (24 J_1) is the divisor-sum series
    n = 30
    j1 = theta_moment(1, n)
    j3 = theta_moment(3, n)
    lhs = (j3 - j1) * j1.invert() * Fraction(-1, 24)
    assert lhs == sigma_series(1, n)
    assert lhs == mo_umbral(1, n)


def test_umbral_minimal_coefficient_is_one():
    for t in (1, 2, 3, 4):
        assert mo_umbral(t, t * (t + 1) // 2)[t * (t + 1) // 2] == 1


def test_recurrence_routes():
    for t in (1, 2, 3, 4):
        assert mo_recurrence(t, 50) == strict_multisum(t, 50)
        assert m_recurrence(t, 50) == weak_multisum(t, 50)
    assert mo_recurrence(2, 10)[3] == 1
    for t in (1, 2, 3):
        assert mo_from_m(t, 40) == strict_multisum(t, 40)


def test_u4_closed_form_to_40():
    assert closed_form_check("U4_sigma", 40).passed


def test_symmetric_relation():
    for t in (1, 2, 3, 4):
        assert symmetric_relation_check(t, 40).passed


def test_weak_recurrence_restated():
    # the weak series is also (1 - E2)/24 at t = 1
    n = 40
    assert weak_multisum(1, n) == (Series.one(n) - eisenstein("E2", n)) * Fraction(1, 24)


def test_all_closed_forms_pass_at_50():
    for which in CLOSED_FORMS:
        assert closed_form_check(which, 50).passed, which


def test_sigma1_convolution_value_at_4():
    # 12*(s1(1)s1(3) + s1(2)^2 + s1(3)s1(1)) = 204 = 5*73 + 7 - 24*7
    s = sigma_series(1, 6)
    conv4 = sum(s[j] * s[4 - j] for j in range(1, 4))
    assert 12 * conv4 == 204
    assert 5 * 73 + 7 - 24 * 7 == 204


def test_excess_coefficient_q2():
    r = closed_form_check("excess_V2U2", 10)
    assert r.passed
    lhs = weak_multisum(2, 4) - strict_multisum(2, 4)
    assert lhs[2] == 1  # (sigma_3(2) - sigma_1(2))/6 = 1


def test_jacobi_specializations():
    for c in (4, 2, 1):
        assert jacobi_specialization_check(c, 30).passed


def test_jacobi_sides_are_nontrivial():
    prod = jacobi_product_side(4, 12)
    assert not prod.is_zero() and prod[0] == 1
    assert jacobi_theta_side(2, 12)[0] == 1
    assert jacobi_weak_sum_side(1, 12)[0] == 1


def test_conjugate_chain_supports_weak_family():
    for t in (1, 2, 3):
        assert conjugate_chain_m_form(t, 30) == weak_multisum(t, 30)
        r = conjugate_chain_check(t, 30)
        assert r.passed and "weak" in r.note


def test_coefficient_table_basics():
    tab = coefficient_table("M", 2, 20)
    assert tab[4] == 14
    assert tab.provenance == "single-sum"
    # cached: same object back
    assert coefficient_table("M", 2, 20) is tab
    with pytest.raises(ValueError):
        coefficient_table("X", 1, 5)
    with pytest.raises(ValueError):
        coefficient_table("M", 1, 5, "made-up")


def test_coefficient_tables_nonnegative_and_ordered():
    for t in (1, 2, 3):
        m = coefficient_table("M", t, 40, "multisum")
        mo = coefficient_table("MO", t, 40, "multisum")
        for n in range(41):
            assert m[n] >= mo[n] >= 0


def test_support_windows():
    mo = coefficient_table("MO", 3, 20)
    assert all(mo[n] == 0 for n in range(6))
    assert mo[6] == 1
    m = coefficient_table("M", 3, 20)
    assert all(m[n] == 0 for n in range(3))
    assert m[3] == 1
