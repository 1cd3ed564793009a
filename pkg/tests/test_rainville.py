from fractions import Fraction

import pytest

from opgf.errors import ZeroAlpha
from opgf.exact_arith import Poly, poch
from opgf.families import chebyshev_u, family_sequence, hermite, jacobi, laguerre, ultraspherical
from opgf.fps import Series, series_exp, series_log, series_powq
from opgf.rainville import (
    akn_table,
    compute_S_R,
    expand_gf,
    hermite_convolution,
    verify_corollaries,
    verify_prop1,
    verify_prop2,
    verify_prop3,
)
from math import factorial

H = Fraction(1, 2)
Q = Fraction(1, 4)
N = 12


def h1_data(order=N + 2):
    A = Series.one(order)
    R = Series([0, 0, Q], order)
    F = series_exp(Series.t(order))
    return A, R, F


def l2_data(a, order=N + 2):
    A = Series.one(order) / Series([1, -1], order)
    R = series_log(Series([1, -1], order)) * (-a)
    F = series_exp(Series([0, -1], order))
    return A, R, F


def table_for(A, R, F, spec, n_max):
    return akn_table(compute_S_R(A, R), F.coeffs, spec, n_max)


def test_s_r_examples():
    A, R, _ = h1_data(6)
    rc = compute_S_R(A, R)
    assert all(s == 0 for s in rc.S)
    assert rc.Rc[:3] == (0, H, 0) and not any(rc.Rc[2:])
    a = Fraction(2, 3)
    A, R, _ = l2_data(a, 6)
    rc = compute_S_R(A, R)
    assert all(s == 1 for s in rc.S)
    assert rc.Rc[0] == a and not any(rc.Rc[1:])
    lam = Fraction(3, 2)
    rc = compute_S_R(series_powq(Series([1, 0, -Q], 6), -1 / lam), Series([0], 6))
    assert rc.s(1) == 1 / (2 * lam) and rc.s(2) == 0


def test_symmetric_case_even_coefficients_vanish():
    lam = Fraction(5, 2)
    A = series_powq(Series([1, 0, -Q], 14), -1 / lam)
    R = Series([1, 0, Q], 14) * A - 1
    rc = compute_S_R(A, R)
    assert all(rc.s(k) == 0 and rc.r(k) == 0 for k in range(0, 13, 2))


def test_hermite_table_spot_values():
    A, R, F = h1_data()
    table = table_for(A, R, F, hermite(), 11)
    assert all(table[1, n] == Fraction(n, 2) for n in range(2, 12))
    assert all(table[0, n] == 0 and table[2, n] == 0 for n in range(1, 12))


def test_laguerre_table_spot_values():
    a = Fraction(1, 3)
    A, R, F = l2_data(a)
    table = table_for(A, R, F, laguerre(a), 11)
    assert all(table[0, n + 1] == n + a + 1 for n in range(11))


def test_jacobi_table_spot_values():
    # J1 data: P^(alpha, alpha+1)
    a = Fraction(1, 2)
    b = a + 1
    A = series_powq(Series([1, -H], N + 2), Fraction(-2) / (2 * a + 1))
    R = Series([1, 0, Q], N + 2) * A - 1
    F = series_powq(Series([1, -1], N + 2), -(a + Fraction(3, 2)))
    table = table_for(A, R, F, jacobi(a, b), 11)
    for n in range(11):
        assert table[0, n + 1] == (b - a) / (2 * n + a + b + 2)


@pytest.mark.parametrize(
    "spec,data",
    [(hermite(), "H1"), (laguerre(Fraction(1, 2)), "L2"), (ultraspherical(2), "Ultra2")],
)
def test_omega_recovered_from_relation_ii(spec, data):
    if data == "H1":
        A, R, F = h1_data()
    elif data == "L2":
        A, R, F = l2_data(Fraction(1, 2))
    else:
        A = series_powq(Series([1, 0, -Q], N + 2), -H)
        R = Series([1, 0, Q], N + 2) * A - 1
        F = series_powq(Series([1, -1], N + 2), -3)
    table = table_for(A, R, F, spec, 11)
    for n in range(1, 11):
        w = Fraction(n, 2) * table[1, n + 1] - Fraction(n - 1, 2) * table[1, n] - Fraction(n, 2 * (n + 1)) * (spec.beta(n) - table[0, n]) ** 2
        assert w == spec.omega(n)


def test_prop1_hermite_and_mutation():
    A, R, F = h1_data()
    polys = family_sequence(hermite(), N)
    assert verify_prop1(A, R, F, polys, 10)
    R_bad = R + Series([0, 0, 0, 1], R.order)
    result = verify_prop1(A, R_bad, F, polys, 5)
    assert not result and result.first_failure == 3


def test_prop2_hand_case_and_mutation():
    A, R, F = h1_data()
    polys = family_sequence(hermite(), N)
    table = table_for(A, R, F, hermite(), 11)
    assert table[1, 2] == 1
    assert verify_prop2(table, polys, 2)
    bad = table.copy()
    bad.values[(1, 2)] += 1
    assert not verify_prop2(bad, polys, 2)


def test_prop3_and_corollaries():
    A, R, F = h1_data()
    table = table_for(A, R, F, hermite(), 11)
    assert verify_prop3(table, hermite(), 10)
    assert verify_corollaries(table, True, 10, hermite())
    a = Fraction(1, 2)
    A, R, F = l2_data(a)
    table = table_for(A, R, F, laguerre(a), 11)
    assert verify_prop3(table, laguerre(a), 10)
    assert verify_corollaries(table, False, 10)


def test_ultra2_corollaries_at_lambda_two():
    lam = Fraction(2)
    A = series_powq(Series([1, 0, -Q], N + 2), -1 / lam)
    R = Series([1, 0, Q], N + 2) * A - 1
    F = series_powq(Series([1, -1], N + 2), -lam - 1)
    spec = ultraspherical(lam)
    table = table_for(A, R, F, spec, 11)
    assert all(table[3, n] == 0 for n in range(4, 12))
    assert verify_corollaries(table, True, 10, spec)


def test_zero_alpha_is_refused():
    A, R, _ = h1_data()
    with pytest.raises(ZeroAlpha):
        akn_table(compute_S_R(A, R), [1, 1, 0, 1, 1], hermite(), 3)


def test_expand_examples(x):
    A, R, F = h1_data(4)
    exp = expand_gf(A, F, R, 1, 0, 4)
    assert exp.coeff_polys[2] == (x * x - H) / 2
    assert exp.coeff_polys[0] == Poly([1])
    lam = Fraction(3, 2)
    F = series_powq(Series([1, -1], 4), -lam)
    exp = expand_gf(Series.one(4), F, R, 1, 0, 4)
    c2 = family_sequence(ultraspherical(lam), 2)[2]
    assert exp.coeff_polys[2] == c2 * (poch(lam, 2) / 2)
    assert c2 == x * x - 1 / (2 * (1 + lam))


def test_expand_derivative_route_chebyshev(x):
    # U-type generating function differentiated once gives C^(2)
    A, R = Series.one(8), Series([0, 0, Q], 8)
    F = Series.one(9) / Series([1, -1], 9)
    exp = expand_gf(A, F, R, 2, 1, 7)
    c2 = family_sequence(ultraspherical(2), 7)
    assert all(exp.coeff_polys[n] == c2[n] * (n + 1) for n in range(8))
    base = expand_gf(A, F.truncate(8), R, 1, 0, 8).coeff_polys
    assert all(base[n] == family_sequence(chebyshev_u(), 8)[n] for n in range(9))


def test_expand_rejects_short_input():
    with pytest.raises(ValueError):
        expand_gf(Series.one(5), Series.one(5), Series([0], 5), 1, 2, 5)


@pytest.mark.parametrize("m", range(1, 9))
def test_hermite_convolution(m):
    assert hermite_convolution(m)
