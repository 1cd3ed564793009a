"""
Differentiating a generating function in x
==========================================

Differentiating sum alpha_n U_n(x) t^n m times in x gives a new generating
function for the ultraspherical family with lambda = m + 1.  We compare the
x-derivatives of the expanded coefficients with the registered derived
identity.
"""

from fractions import Fraction

from opgf import verify_identity
from opgf.exact_arith import poly_derivative
from opgf.identities import get_identity
from opgf.rainville import expand_gf

rho, alpha1, m, N = Fraction(5, 3), Fraction(1, 2), 2, 8

base = get_identity("U1")
p = base.check_params({"rho": rho, "alpha1": alpha1, "s1": Fraction(1, 2)})
coeffs = expand_gf(base.A(p, N), base.F(p, N), base.R(p, N), 1, 0, N).coeff_polys

derived = get_identity("U22")
q = derived.check_params({"rho": rho, "alpha1": alpha1, "m": m})
target = expand_gf(derived.A(q, N), derived.F(q, N + m), derived.R(q, N), m + 1, m, N - m).coeff_polys

for n in range(N - m + 1):
    d = poly_derivative(coeffs[n + m], m)
    print(f"n={n}: d^{m}/dx^{m} base == {m}! * derived: {d == target[n] * 2}")

# the same comparison as a report
print(verify_identity("U22", q, N).checks["derivative-route"])
