"""Tests for the finite identity catalog: the triplet, the Dilcher-type
sums, the rational specializations, and the certificate checks."""

from fractions import Fraction

import pytest

from macsums.identities import (
    atid_b_check,
    atid_b_sides,
    certify_rational_equality,
    cor52_check,
    cor53_check,
    dilcher_check,
    dilcher_sides,
    harmonic_multisum,
    harmonic_paired_sum,
    harmonic_single_sum,
    harmonic_single_sum_alt,
    master_lemma_sides,
    mss_check,
    mss_precursor_check,
    mss_precursor_sides,
    mss_sides,
    one_minus_q_pow,
    qbin_difference_check,
    rational_hypothesis_check,
    rational_master_check,
    rational_master_sides,
    rational_triplet_check,
    single_sum_forms_check,
    triplet_check,
    triplet_degree_bound,
    triplet_recurrence_check,
    wz_cor32_check,
    wz_cor52_check,
    wz_cor53_check,
    wz_lemma51_check,
    wz_master_check,
)
from macsums.macmahon import weak_multisum
from macsums.series import Series

HALF = Fraction(1, 2)
SEVEN_THIRDS = Fraction(7, 3)


def test_initial_values_vanish():
    for t in (1, 2, 3):
        assert harmonic_multisum(t, 0, 20).is_zero()
        assert harmonic_single_sum(t, 0, 20).is_zero()
        assert harmonic_paired_sum(t, 0, 20).is_zero()


def test_initial_values_at_n1_are_monomials():
    # all three sums collapse to the plain monomial q^t at n = 1, since
    # every q-integer involved is [1]_q = 1 or cancels
    for t in (1, 2, 3):
        mono = Series.monomial(1, t, 20)
        assert harmonic_multisum(t, 1, 20) == mono
        assert harmonic_single_sum(t, 1, 20) == mono
        assert harmonic_paired_sum(t, 1, 20) == mono


def test_triplet_equality_grid():
    for t in (1, 2, 3):
        for n in (1, 2, 3, 4):
            assert triplet_check(t, n, 40).passed


def test_triplet_recurrences():
    for which in ("multisum", "single-sum", "paired-sum"):
        for t in (1, 2):
            for n in (1, 2, 3):
                assert triplet_recurrence_check(which, t, n, 30).passed


def test_single_sum_two_forms_agree():
    for t in (1, 2, 3):
        for n in (1, 2, 3):
            assert single_sum_forms_check(t, n, 40).passed


def test_multisum_converges_to_weak_family():
    # dividing out (1-q)^(2t) recovers the infinite weak multisum up to q^n
    t, n, order = 2, 12, 12
    f = harmonic_multisum(t, n, order)
    v = weak_multisum(t, order)
    recovered = f * one_minus_q_pow(2 * t).to_series(order).invert()
    assert recovered.agrees(v, upto=n)


def test_certify_rational_equality():
    t, n = 1, 1
    # both sides are q/(1-q)^2 after clearing, so bound 2 is honest
    f = harmonic_multisum(t, n, 5)
    g = harmonic_single_sum(t, n, 5)
    assert certify_rational_equality(f, g, 2)

    b = triplet_degree_bound(2, 2)
    order = 2 * b + 1
    assert certify_rational_equality(
        harmonic_multisum(2, 2, order), harmonic_single_sum(2, 2, order), b
    )


def test_certify_requires_enough_coefficients():
    with pytest.raises(ValueError):
        certify_rational_equality(Series.one(5), Series.one(5), 10)


def test_certify_adversarial_bound():
    # two series that differ only beyond 2B+1 are accepted at bound B:
    # that is the caller's contract, not a defect of the check
    b = 3
    good = Series.one(2 * b + 2)
    bad = Series.one(2 * b + 2) + Series.monomial(1, 2 * b + 2, 2 * b + 2)
    assert certify_rational_equality(good, bad, b)
    assert not good.agrees(bad)


def test_dilcher_identity_grid():
    for t in (1, 2, 3, 4):
        for n in (1, 2, 3, 4):
            assert dilcher_check(t, n, 50).passed


def test_dilcher_t1_n1_is_q():
    lhs, rhs = dilcher_sides(1, 1, 10)
    assert lhs == Series.monomial(1, 1, 10)
    assert rhs == Series.monomial(1, 1, 10)


def test_dilcher_rational_specialization():
    # at q = 1: alternating sum of C(n,k)/k^t equals the multiple harmonic sum
    from itertools import combinations_with_replacement
    from math import comb

    for t in (1, 2, 3):
        for n in range(1, 7):
            lhs = Fraction(0)
            for k in range(1, n + 1):
                term = Fraction(comb(n, k), k**t)
                lhs += term if k % 2 else -term
            rhs = Fraction(0)
            for tup in combinations_with_replacement(range(1, n + 1), t):
                den = 1
                for k in tup:
                    den *= k
                rhs += Fraction(1, den)
            assert lhs == rhs


def test_mss_identity_grid():
    for t in (1, 2, 3):
        for n in (1, 2, 3):
            for x in (0, 1, 2):
                assert mss_check(t, n, x, 40).passed


def test_mss_x0_reduces_to_dilcher():
    for t in (1, 2):
        for n in (1, 2, 3):
            m_lhs, m_rhs = mss_sides(t, n, 0, 30)
            d_lhs, d_rhs = dilcher_sides(t, n, 30)
            assert m_lhs == d_lhs
            assert m_rhs == d_rhs


def test_mss_precursor_inverse_pair_reading():
    r = mss_precursor_check(1, 2, 1, 40)
    assert r.passed
    assert "fails" in r.note  # the literal printed form does not hold
    for t in (1, 2):
        for n in (1, 2, 3):
            for x in (0, 1, 2):
                assert mss_precursor_check(t, n, x, 40).passed


def test_mss_precursor_printed_form_fails():
    lhs, rhs = mss_precursor_sides(1, 2, 1, 40, reading="printed")
    assert not lhs.agrees(rhs)


def test_atid_b_grid():
    assert atid_b_check(1, 2, 0, 40).passed
    for t in (1, 2, 3):
        for n in (1, 2, 3):
            for x in (0, 1, 2):
                assert atid_b_check(t, n, x, 40).passed


def test_atid_b_x0_reduces_to_paired_structure():
    # at x = 0 the right side is the 2t-fold multisum with plain q-integers
    lhs, rhs = atid_b_sides(2, 3, 0, 30)
    assert lhs == rhs


def test_cor52_grid():
    assert cor52_check(1, 2, 1, 1, 40).passed
    for t in (1, 2):
        for n in (1, 2, 3):
            for x in (0, 1):
                for z in (0, 1):
                    assert cor52_check(t, n, x, z, 40).passed


def test_cor53_grid():
    assert cor53_check(2, 3, 1, 40).passed
    for t in (1, 2, 3):
        for n in (1, 2, 3):
            for z in (0, 1, 2):
                assert cor53_check(t, n, z, 40).passed


def test_cor53_z0_matches_mss_x0():
    for t in (1, 2):
        for n in (1, 2, 3):
            from macsums.identities import cor53_sides

            c_lhs, c_rhs = cor53_sides(t, n, 0, 30)
            m_lhs, m_rhs = mss_sides(t, n, 0, 30)
            assert c_lhs == m_lhs
            assert c_rhs == m_rhs


# ---------------------------------------------------------------------------
# rational identities


def test_rational_master_reduces_at_zero():
    assert rational_master_check(2, 3, 0, 0).passed


def test_rational_master_single_term():
    lhs, rhs = rational_master_sides(1, 1, HALF, Fraction(1, 3))
    assert lhs == rhs
    # explicit value: a_1/(z+1) with a_1 = 1/(x+1)
    assert lhs == Fraction(1) / ((HALF + 1) * (Fraction(1, 3) + 1))


def test_rational_master_grid():
    for t in (1, 2, 3, 4):
        for n in (1, 2, 4, 6, 8):
            for z in (0, 1, 2, HALF, SEVEN_THIRDS):
                for x in (0, 1, HALF, SEVEN_THIRDS):
                    assert rational_master_check(t, n, z, x).passed


def test_rational_master_pole_detection():
    r = rational_master_check(1, 3, -2, 0)
    assert not r.passed and "pole" in r.note


def test_master_lemma_with_random_sequences():
    import random

    rng = random.Random(5150)
    for _ in range(100):
        n = rng.randrange(1, 7)
        t = rng.randrange(1, 4)
        z = Fraction(rng.randrange(0, 5), rng.choice((1, 2, 3)))
        a = [Fraction(rng.randrange(-6, 7), rng.randrange(1, 4)) for _ in range(n)]
        lhs, rhs = master_lemma_sides(t, n, z, a)
        assert lhs == rhs


def test_rational_hypothesis():
    for n in range(1, 7):
        for x in (HALF, 2, SEVEN_THIRDS):
            assert rational_hypothesis_check(n, x).passed


def test_rational_triplet_limit():
    for t in (1, 2, 3):
        for n in range(1, 7):
            assert rational_triplet_check(t, n).passed


# ---------------------------------------------------------------------------
# certificates


def test_wz_master():
    for z in (0, 1, HALF):
        assert wz_master_check(z, 6).passed


def test_wz_cor32():
    for x in (HALF, 2, SEVEN_THIRDS):
        assert wz_cor32_check(x, 6).passed


def test_wz_lemma51():
    for z in (0, 1, 2):
        assert wz_lemma51_check(z, 4, 40).passed


def test_wz_cor52():
    for x in (0, 1, 2):
        assert wz_cor52_check(x, 3, 40).passed


def test_wz_cor53():
    for z in (0, 1, 2):
        assert wz_cor53_check(z, 3, 40).passed


def test_qbin_difference_lemma():
    assert qbin_difference_check(5, 40).passed
