from fractions import Fraction

import pytest

from opgf.errors import InvalidParameters
from opgf.exact_arith import Poly
from opgf.families import (
    FamilySpec,
    associated_hermite,
    bessel,
    chebyshev_u,
    derivative_shift_check,
    family_sequence,
    hermite,
    hermite_sign_flipped,
    hypergeometric_oracle,
    jacobi,
    laguerre,
    ultraspherical,
)

from conftest import family_grid

H = Fraction(1, 2)


def test_family_sequence_examples(x):
    assert family_sequence(hermite(), 2)[2] == x * x - H
    assert family_sequence(chebyshev_u(), 2)[2] == x * x - Fraction(1, 4)
    for spec in family_grid():
        assert family_sequence(spec, 0)[0] == Poly([1])


def test_oracle_examples(x):
    assert hypergeometric_oracle(hermite(), 2) == x * x - H
    assert hypergeometric_oracle(ultraspherical(Fraction(3, 2)), 1) == x
    a = Fraction(2, 3)
    assert hypergeometric_oracle(laguerre(a), 1) == x - (a + 1)


@pytest.mark.parametrize("spec", family_grid(), ids=lambda s: s.label)
def test_recurrence_matches_closed_form(spec):
    seq = family_sequence(spec, 12)
    for n in range(13):
        assert seq[n] == hypergeometric_oracle(spec, n), n


@pytest.mark.parametrize("spec", family_grid(), ids=lambda s: s.label)
def test_monic_and_degree(spec):
    for n, p in enumerate(family_sequence(spec, 8)):
        assert p.degree == n and p.lead() == 1


def test_oracle_pole_at_lambda_minus_half():
    from opgf.errors import DenominatorParameterPole

    spec = ultraspherical(-H)
    assert family_sequence(spec, 3)[2].degree == 2
    with pytest.raises(DenominatorParameterPole):
        hypergeometric_oracle(spec, 2)


def test_symmetric_families_have_zero_beta():
    for spec in family_grid():
        if spec.symmetric:
            assert all(spec.beta(n) == 0 for n in range(12))


def test_associated_hermite_examples(x):
    c = Fraction(2, 5)
    assert associated_hermite(2, c) == x * x - (1 + c) / 2
    assert associated_hermite(1, c) == x
    for n in range(8):
        assert associated_hermite(n, 0) == family_sequence(hermite(), n)[n]


def test_sign_flipped_hermite(x):
    assert hermite_sign_flipped(2) == x * x + H
    assert hermite_sign_flipped(1) == x
    assert hermite_sign_flipped(3) == x**3 + Fraction(3, 2) * x


def test_derivative_shift_examples():
    assert derivative_shift_check(hermite(), 3, 1)
    assert derivative_shift_check(jacobi(H, 2), 4, 0)
    assert derivative_shift_check(chebyshev_u(), 2, 1)


@pytest.mark.parametrize(
    "spec", [s for s in family_grid() if s.kind != "AssociatedHermite"], ids=lambda s: s.label
)
def test_derivative_shift_all(spec):
    for n in range(1, 9):
        for m in range(0, min(n, 3) + 1):
            assert derivative_shift_check(spec, n, m), (n, m)


def test_recurrence_coefficients_spot_values():
    a, b = Fraction(1, 2), Fraction(3, 2)
    J = jacobi(a, b)
    for n in range(10):
        assert J.beta(n) == (b * b - a * a) / ((2 * n + a + b) * (2 * n + a + b + 2)) if n else J.beta(0) == (b - a) / (a + b + 2)
    L = laguerre(a)
    assert [L.beta(n) for n in range(4)] == [2 * n + a + 1 for n in range(4)]
    assert [L.omega(n) for n in range(1, 4)] == [n * (n + a) for n in range(1, 4)]
    assert [hermite().omega(n) for n in range(1, 4)] == [Fraction(n, 2) for n in range(1, 4)]
    assert bessel(3).beta(0) == Fraction(-2, 3)


def test_jacobi_zero_sum_parameters_use_limit_forms():
    J = jacobi(0, 0)
    assert J.beta(0) == 0 and J.omega(1) == Fraction(1, 3)


@pytest.mark.parametrize(
    "kind,params",
    [("Ultraspherical", ("-1",)), ("Ultraspherical", ("0",)), ("Laguerre", ("-2",)), ("Bessel", ("0",)), ("Jacobi", ("-1", "-1"))],
)
def test_invalid_parameters(kind, params):
    with pytest.raises(InvalidParameters):
        FamilySpec(kind, params)
