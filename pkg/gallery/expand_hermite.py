"""
Expanding a generating function exactly
=======================================

The exponential generating function of the monic Hermite polynomials is
exp(x t - t^2/4).  Here we build it as a truncated series with polynomial
coefficients and read the polynomials back off.
"""

from fractions import Fraction
from math import factorial

from opgf import Series, expand_gf, family_sequence
from opgf.families import hermite

N = 6

# The triple (A, R, F): A = 1, R = t^2/4 and F = exp
A = Series.one(N)
R = Series([0, 0, Fraction(1, 4)], N)
F = Series([Fraction(1, factorial(n)) for n in range(N + 1)], N)

exp = expand_gf(A, F, R, k_power=1, m_deriv=0, N=N)

# each coefficient of t^n is H_n(x) / n!
H = family_sequence(hermite(), N)
for n, coeff in enumerate(exp.coeff_polys):
    print(f"t^{n}: {coeff.render():<40} n! * coeff == H_{n}: {coeff * factorial(n) == H[n]}")
