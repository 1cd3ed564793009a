from fractions import Fraction

import pytest
from hypothesis import given

from opgf.exact_arith import Poly, as_rational, binom, poch, poly_add, poly_derivative, poly_eval, poly_mul

from conftest import polys

H = Fraction(1, 2)


def test_as_rational_accepts_exact_inputs_only():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(4) == 4
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_reduced_form():
    f = as_rational(Fraction(4, -6))
    assert (f.numerator, f.denominator) == (-2, 3)
    assert as_rational("6/8") == Fraction(3, 4)


def test_add_examples(x):
    assert poly_add(x * x - H, Poly([H])) == x * x
    p = Poly([1, 2, 3])
    assert p + Poly() == p
    assert x + x == Poly([0, 2])


def test_mul_examples(x):
    assert poly_mul(x - H, x + H) == x * x - Fraction(1, 4)
    p = Poly([1, -2, 5])
    assert p * Poly([1]) == p
    assert (x * x - H) * x == x**3 - x * H


def test_derivative_examples(x):
    p = x * x - H
    assert poly_derivative(p, 0) == p
    assert poly_derivative(p) == 2 * x
    h3 = x**3 - Fraction(3, 2) * x
    assert poly_derivative(h3, 2) == 6 * x


def test_eval_examples(x):
    assert poly_eval(x * x - Fraction(1, 4), 1) == Fraction(3, 4)
    assert poly_eval(Poly(), 7) == 0
    assert poly_eval(x**3 - Fraction(3, 2) * x, H) == Fraction(-5, 8)


def test_zero_polynomial_shape():
    z = Poly([0, 0])
    assert z.coeffs == () and z.degree == -1 and not z


def test_render_is_ascending_and_exact(x):
    assert (x * x - H).render() == "-1/2 + x^2"
    assert Poly([0, Fraction(-3, 2), 0, 1]).render() == "-3/2*x + x^3"
    assert Poly().render() == "0"


def test_compose_shift(x):
    assert (x * x).compose(x + 1) == x * x + 2 * x + 1


def test_pochhammer_and_binomial():
    assert poch(H, 3) == Fraction(15, 8)
    assert poch(5, 0) == 1
    assert binom(-H, 2) == Fraction(3, 8)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly()


@given(polys(), polys())
def test_leibniz(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(polys(), polys())
def test_eval_is_a_homomorphism(p, q):
    v = Fraction(2, 3)
    assert poly_eval(p * q, v) == poly_eval(p, v) * poly_eval(q, v)
