from fractions import Fraction

import pytest
from hypothesis import given, settings

from opgf.errors import DenominatorParameterPole, InnerConstantTermNonzero, NonUnitConstantTerm
from opgf.exact_arith import Poly
from opgf.fps import (
    Series,
    erfi_kernel,
    hypergeometric_series,
    series_compose,
    series_derivative,
    series_div,
    series_exp,
    series_integrate,
    series_log,
    series_mul,
    series_powq,
)

from conftest import series

H = Fraction(1, 2)
Q = Fraction(1, 4)


def S(*c, order=None):
    return Series(list(c), order)


def test_mul_examples():
    assert series_mul(S(1, 1, order=3), S(1, -1, order=3)) == S(1, 0, -1, 0)
    f = S(1, 2, 3)
    assert f * Series.one(2) == f
    assert series_mul(S(1, 1, 1), S(1, 1, order=2)) == S(1, 2, 2)


def test_mixed_orders_truncate_to_minimum():
    assert (S(1, 1, 1, 1) * S(1, 1)).order == 1


def test_div_examples():
    assert series_div(Series.one(3), S(1, -1, order=3)) == S(1, 1, 1, 1)
    f = S(2, 3, 5)
    assert f / f == Series.one(2)
    A = Series.one(3) / S(1, -1, order=3)
    assert series_div(series_derivative(A), A.truncate(2)) == S(1, 1, 1)


def test_div_by_non_unit():
    with pytest.raises(NonUnitConstantTerm):
        Series.one(2) / S(0, 1, order=2)


def test_compose_examples():
    f = S(3, 1, 4, 1)
    assert series_compose(f, Series.t(3)) == f
    assert series_compose(S(1, 1, 1, order=4), S(0, 0, 1, order=4)) == S(1, 0, 1, 0, 1)
    e = series_exp(Series.t(2))
    assert series_compose(e, S(0, 2, -1)) == S(1, 2, 1)


def test_compose_requires_zero_constant():
    with pytest.raises(InnerConstantTermNonzero):
        series_compose(S(1, 1), S(1, 1))


def test_exp_examples():
    assert series_exp(Series.t(3)) == S(1, 1, H, Fraction(1, 6))
    assert series_exp(Series([0], 3)) == Series.one(3)
    u = Series([Poly(), Poly([0, 1]), Poly([-Q])], 2)
    assert series_exp(u)[2] == Poly([-Q, 0, H])


def test_log_examples():
    assert series_log(Series.one(3)) == Series([0], 3)
    assert -series_log(S(1, -1, order=3)) == S(0, 1, H, Fraction(1, 3))
    u = Series([Poly([1]), Poly([0, -1]), Poly([Q])], 2)
    assert -series_log(u)[2] == Poly([-Q, 0, H])


def test_powq_examples():
    assert series_powq(S(1, -1, order=2), -H) == S(1, H, Fraction(3, 8))
    assert series_powq(S(1, 5, order=3), 0) == Series.one(3)
    assert series_powq(S(1, 0, -1, order=4), -H) == S(1, 0, H, 0, Fraction(3, 8))


def test_integrate_examples():
    assert series_integrate(Series.one(1)) == S(0, 1)
    rho = Fraction(3, 2)
    assert series_integrate(S(2, -4 * rho, order=2)) == S(0, 2, -2 * rho)
    f = S(5, 1, 2, 3)
    # the derivative loses one order, so compare through t^2
    assert series_integrate(series_derivative(f)) == (f - 5).truncate(2)


def test_hypergeometric_examples():
    assert hypergeometric_series([Fraction(3, 2), 1], [2], 3)[1] == Fraction(3, 4)
    assert hypergeometric_series([], [], 4) == series_exp(Series.t(4))
    assert hypergeometric_series([Fraction(3, 2), 1], [], 3)[2] == Fraction(15, 4)


def test_hypergeometric_pole_names_index():
    with pytest.raises(DenominatorParameterPole) as info:
        hypergeometric_series([1], [-2], 5)
    assert info.value.index == 2


def test_hypergeometric_terminates_on_numerator_zero():
    f = hypergeometric_series([-2], [1], 6)
    assert all(c == 0 for c in f.coeffs[3:])


def test_erfi_kernel_examples():
    assert erfi_kernel(Fraction(0), 3) == S(0, 2, 0, Fraction(2, 3))
    for rho in (Fraction(0), H, Fraction(-7, 3)):
        assert erfi_kernel(rho, 4)[1] == 2
    assert erfi_kernel(Fraction(1), 3)[2] == -2


@settings(max_examples=60)
@given(series(order=5), series(order=5), series(order=5))
def test_ring_laws(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=60)
@given(series(order=5, unit=True))
def test_exp_log_inverse(f):
    assert series_exp(series_log(f)) == f


@settings(max_examples=60)
@given(series(order=5, unit=True))
def test_powq_consistency(f):
    half = series_powq(f, H)
    assert half * half == f
    assert series_powq(f, 3) == f * f * f


@settings(max_examples=60)
@given(series(order=5), series(order=5, zero_constant=True))
def test_chain_rule(f, u):
    lhs = series_derivative(series_compose(f, u))
    rhs = series_compose(series_derivative(f), u.truncate(4)) * series_derivative(u)
    assert lhs == rhs
