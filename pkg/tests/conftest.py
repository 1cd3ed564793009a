from fractions import Fraction

import pytest
from hypothesis import strategies as st

from opgf.exact_arith import Poly
from opgf.fps import Series

small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def polys(draw, max_degree=3):
    return Poly(draw(st.lists(small_rationals, max_size=max_degree + 1)))


@st.composite
def series(draw, order=None, unit=False, zero_constant=False):
    n = draw(st.integers(0, 6)) if order is None else order
    coeffs = draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1))
    if unit:
        coeffs[0] = Fraction(1)
    if zero_constant:
        coeffs[0] = Fraction(0)
    return Series(coeffs, n)


@pytest.fixture
def x():
    return Poly.x()


def family_grid():
    """Parameter grid for the polynomial families, avoiding excluded values."""
    from opgf import families as fam

    out = [fam.hermite(), fam.chebyshev_t(), fam.chebyshev_u()]
    out += [fam.associated_hermite_family(c) for c in ("0", "1/2", "1")]
    out += [fam.ultraspherical(v) for v in ("1/2", "1", "3/2", "2", "5/2", "-1/3")]
    out += [fam.jacobi(a, b) for a, b in (("0", "0"), ("0", "1"), ("1/2", "3/2"), ("-1", "0"), ("2", "1/3"), ("1", "-1/2"), ("-1/2", "-1/2"))]
    out += [fam.laguerre(a) for a in ("0", "1/2", "1", "2", "-1/2")]
    out += [fam.bessel(a) for a in ("1/2", "2", "3", "5", "7")]
    return out
