from fractions import Fraction

import pytest

from tilewalks.closedforms import (
    asymptotic_ratio,
    binet_identity_check,
    explicit_form_coeffs,
    fib,
    v_fibonacci_form,
    w_domino_ceiling,
    w_domino_even_form,
    w_domino_explicit,
    w_domino_fibonacci_form,
    w_domino_odd_form,
)
from tilewalks.qsqrt5 import QSqrt5
from tilewalks.recurrences import domino_only_recurrence, eval_recurrence
from tilewalks.walks import brute_v, brute_w_by_line


def test_v_fibonacci_form_examples():
    assert v_fibonacci_form(0) == 1
    assert v_fibonacci_form(3) == 10


def test_v_fibonacci_form_matches_oracle():
    for n in range(21):
        assert v_fibonacci_form(n) == brute_v(n)


def test_divisibility_by_five_holds_far_out():
    for n in range(501):
        assert (2 * (n + 2) * fib(n + 1) + (n + 1) * fib(n + 2)) % 5 == 0


def test_w_domino_fibonacci_form_initial():
    assert [w_domino_fibonacci_form(n) for n in range(6)] == [1, 2, 6, 12, 26, 50]


def test_split_forms_agree_with_general():
    for k in range(26):
        assert w_domino_even_form(k) == w_domino_fibonacci_form(2 * k)
        assert w_domino_odd_form(k) == w_domino_fibonacci_form(2 * k + 1)


def test_explicit_coeffs_values():
    k = explicit_form_coeffs()
    assert k.A == Fraction(1, 2) and k.B == Fraction(1, 2)
    assert k.C == QSqrt5(0, Fraction(3, 25))
    assert k.D == QSqrt5(Fraction(2, 5), Fraction(1, 5))
    assert k.E == -k.C
    assert k.F == k.D.conjugate()


def test_explicit_form_examples():
    assert w_domino_explicit(0) == 1
    assert w_domino_explicit(5) == 50


def test_four_routes_agree():
    rec = eval_recurrence(domino_only_recurrence(), 50).values
    for n in range(51):
        assert w_domino_fibonacci_form(n) == rec[n]
        assert w_domino_explicit(n) == rec[n]
        assert w_domino_ceiling(n) == rec[n]


def test_routes_match_oracle():
    for n in range(13):
        assert w_domino_fibonacci_form(n) == brute_w_by_line(n, squares_allowed=False).w2


def test_ceiling_examples():
    assert w_domino_ceiling(0) == 1
    assert w_domino_ceiling(4) == 26


def test_binet_identities():
    report = binet_identity_check(100)
    assert report.passed


def test_binet_sample_values():
    # F(10) = 55 and 2F(11) - F(10) = 123 (a Lucas number)
    assert fib(10) == 55
    assert 2 * fib(11) - fib(10) == 123


def test_asymptotic_ratio_converges():
    assert abs(asymptotic_ratio(5) - 1) < Fraction(1, 100)
    assert abs(asymptotic_ratio(20) - 1) < Fraction(1, 10**8)
    assert asymptotic_ratio(1) > 0


def test_asymptotic_ratio_rejects_zero():
    with pytest.raises(ValueError):
        asymptotic_ratio(0)
