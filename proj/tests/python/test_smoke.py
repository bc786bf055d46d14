"""Smoke tests for the python bindings."""

import os
from fractions import Fraction

import pytest

import siegelhecke as sh

FIXTURES = os.environ.get("SIEGELHECKE_FIXTURES", "tests/fixtures")


def test_q_binomial():
    assert sh.q_binomial(2, 1, 3) == 4
    assert sh.q_binomial(4, 2, 2) == 35
    assert sh.q_binomial(2, 5, 2) == 0


def test_relation_coefficients():
    assert sh.relation_coefficient(2, 2) == 14
    assert sh.relation_coefficients(2, 2) == [2, 14]
    assert sh.gauss_binomial_identity_holds(6, 7)
    assert sh.solved_relation(2, 2) == "T(p^2) = T(p)^2 - 2*T_1(p^2) - 14*T_2(p^2)"
    # big integers survive the boundary: c_12 at p = 11 via the product form
    expected = 1
    for i in range(1, 13):
        expected *= 11**i + 1
    assert sh.relation_coefficient(12, 11) == expected - 1


def test_main_relation_text():
    text = sh.main_relation(1, 3)
    assert text == "T(p)^2 - 1*T_0(p^2) - 4*T_1(p^2)"


def test_tn_eigenvalue_roundtrip():
    value = sh.tn_eigenvalue([4, 4], 3)
    assert value == Fraction(9)
    assert sh.weight_sum_from_tn(value, 3, 2) == 8
    assert sh.tn_eigenvalue([1, 0], 2) == Fraction(1, 32)
    with pytest.raises(ValueError):
        sh.weight_sum_from_tn(Fraction(10), 3, 2)


def test_hecke_powers():
    powers = sh.hecke_powers(2, 3)
    assert powers[0] == "1"
    assert powers[1] == "T(p)"
    assert powers[2] == "T_0(p^2) + 1*T_1(p^2) + 1*T_2(p^2)"
    assert sh.odd_powers_vanish(3, 5)
    assert sh.generating_identity_roundtrip(5, 12)
    assert sh.identity_residual("p3", 10, 10, 2) == "0"
    assert sh.identity_residual("p6", 6, 3, 2) == "0"


def test_eigenvalue_power_table():
    table = sh.eigenvalue_power_table([10, 10], 2, Fraction(3), Fraction(5), r_max=3)
    assert table[:3] == [Fraction(1), Fraction(3), Fraction(5)]
    assert table[3] == Fraction(589827)


def test_quadratic_form_utilities():
    assert sh.class_number(-4) == 1
    assert sh.class_number(-23) == 3
    assert sh.is_fundamental_discriminant(-7)
    assert not sh.is_fundamental_discriminant(-12)
    assert sh.kronecker_symbol(-4, 3) == -1
    ok, failures = sh.arakawa_preconditions(1, 0, 1, 3, 1)
    assert ok and failures == []
    ok, failures = sh.arakawa_preconditions(1, 0, 1, 5, 1)
    assert not ok and "inert" in failures[0]


def test_verdicts_on_fixture_files():
    verdict = sh.compare_profile_files(
        f"{FIXTURES}/profile_consistent_F.txt", f"{FIXTURES}/profile_distinguished_G.txt"
    )
    assert verdict.outcome == "distinguished"
    assert verdict.witness == "T(p^2)"

    verdict = sh.compare_tpr_files(f"{FIXTURES}/tpr_F.txt", f"{FIXTURES}/tpr_inconsistent_G.txt")
    assert verdict.outcome == "inconsistent"

    verdict = sh.distinguish_by_fourier_files(
        f"{FIXTURES}/fourier_hypothesis_F.txt", f"{FIXTURES}/fourier_hypothesis_G.txt"
    )
    assert verdict.outcome == "hypothesis-not-met"


def test_certified_bounds():
    lo, hi = sh.theta3(10)
    assert lo < hi
    assert Fraction(30445, 10000) < lo and hi < Fraction(30446, 10000)

    prime, certified = sh.smallest_prime_not_dividing(30)
    assert (prime, certified) == (7, True)
    prime, certified = sh.smallest_prime_3mod4_not_dividing(231)
    assert (prime, certified) == (19, True)

    lo, hi = sh.m_bound(1)
    assert lo == hi == 64
    lo, hi = sh.det_bound(1)
    assert lo == hi == 16777216

    holds, detail = sh.check_theta3_lemma(Fraction(544, 100))
    assert holds
    holds, detail = sh.check_theta3_lemma(10000)
    assert not holds
    assert "counterexample x = 6" in detail


def test_symplectic():
    j = sh.standard_j(1)
    assert j == [[0, 1], [-1, 0]]
    assert sh.similitude([[1, 0], [0, 1]]) == 1
    assert sh.similitude([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 3, 0], [0, 0, 0, 3]]) == 3
    assert sh.similitude([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]]) is None
