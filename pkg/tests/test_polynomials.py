from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from dellac.polynomials import (
    D_poly,
    L_seq,
    P_poly,
    P_via_cf,
    P_via_pistols,
    Poly,
    R_seq,
    c_triangle,
    cf_coefficient,
    cf_series,
    l_seq,
    pistol_stats,
    r_seq,
)

from anchors import L_SMALL, L_VALUES, P_POLYS, R_SMALL, R_VALUES, SP2_STATS

coeff_lists = st.lists(st.integers(-9, 9), max_size=6)


@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_ring_ops_agree_with_evaluation(a, b, v):
    p, q = Poly.of(a), Poly.of(b)
    assert (p + q).eval_int(v) == p.eval_int(v) + q.eval_int(v)
    assert (p - q).eval_int(v) == p.eval_int(v) - q.eval_int(v)
    assert (p * q).eval_int(v) == p.eval_int(v) * q.eval_int(v)


@given(coeff_lists, st.integers(-4, 4), st.integers(-5, 5))
def test_shift_compose(a, s, v):
    p = Poly.of(a)
    assert p.shift_compose(s).eval_int(v) == p.eval_int(v + s)


def test_eval_rational():
    p = Poly((1, 2, 4))  # 4x^2 + 2x + 1
    assert p.eval_rational(Fraction(1, 2)) == 3


def test_d_family_base_cases():
    assert D_poly(0).coeffs == (1,)
    assert D_poly(1).coeffs == (2, 2)                # 2x + 2
    assert D_poly(2).coeffs == (12, 20, 8)           # 4(x+1)(2x+3)


def test_d_is_scaled_p():
    # D_n(x) = 2^n (x+1) P_n(x+1)
    for n in range(1, 7):
        lhs = D_poly(n)
        rhs = (Poly((1, 1)) * P_poly(n).shift_compose(1)).scale(2 ** n)
        assert lhs == rhs


def test_p_displays():
    for n, coeffs in P_POLYS.items():
        assert P_poly(n).coeffs == coeffs


def test_value_sequences():
    assert tuple(L_seq(n) for n in range(5)) == L_VALUES
    assert tuple(R_seq(n) for n in range(4)) == R_VALUES
    assert tuple(l_seq(n) for n in range(5)) == L_SMALL
    assert tuple(r_seq(n) for n in range(5)) == R_SMALL


def test_small_value_identities():
    for n in range(1, 9):
        assert l_seq(n) == P_poly(n).eval_int(1)
        assert r_seq(n) == 2 * P_poly(n).eval_int(2)
        assert r_seq(n) == 2 * P_poly(n + 1).eval_int(0)


def test_c_triangle():
    tri = c_triangle(8)
    assert tri[0] == [1]
    assert tri[1] == [1, 2]
    assert tri[2] == [5, 10, 6]
    # rows coincide with the polynomial coefficients
    for n in range(1, 9):
        assert tri[n - 1] == list(P_poly(n).coeffs)
    # last entry of each row is n!
    for n in range(1, 9):
        assert tri[n - 1][-1] == factorial(n)


def test_cf_coefficients():
    got = [cf_coefficient(d) for d in range(1, 7)]
    x = Poly((0, 1))
    expected = [x, x + 1, (x + 2) * 2, (x + 3) * 2, (x + 4) * 3, (x + 5) * 3]
    assert got == expected


def test_cf_series_matches_generating_series():
    series = cf_series(7)
    assert series[0] == Poly((1,))
    x = Poly((0, 1))
    for n in range(1, 8):
        assert series[n] == x * P_poly(n)


def test_p_via_cf():
    for n in range(1, 6):
        assert P_via_cf(n) == P_poly(n)


def test_pistol_stats_examples():
    for f, (mx, fd) in SP2_STATS:
        assert pistol_stats(f) == (mx, fd)


def test_p_via_pistols():
    for n in range(1, 6):
        assert P_via_pistols(n) == P_poly(n)


def test_str_is_readable():
    assert str(Poly((1, 2, 6))) == "6*x^2 + 2*x + 1"
    assert str(Poly(())) == "0"
