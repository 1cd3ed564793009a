"""
Recovering the recurrence from a generating function
=====================================================

The coefficients S_n of A'/A and R_n of R'/A determine a table A^k_n, and
two entries of that table already pin down the three-term recurrence.  We do
it for the ultraspherical polynomials with lambda = 3/2.
"""

from fractions import Fraction

from opgf import Series, akn_table, compute_S_R, series_powq
from opgf.families import ultraspherical
from opgf.identities import alpha_builders

lam = Fraction(3, 2)
N = 10

# A(t) = (1 - t^2/4)^(-1/lambda),  R = (1 + t^2/4) A - 1
A = series_powq(Series([1, 0, Fraction(-1, 4)], N + 2), -1 / lam)
R = Series([1, 0, Fraction(1, 4)], N + 2) * A - 1
rc = compute_S_R(A, R)
print("S_n:", [str(s) for s in rc.S[:6]])
print("R_n:", [str(r) for r in rc.Rc[:6]])

spec = ultraspherical(lam)
table = akn_table(rc, alpha_builders("Ultra2", {"lambda": lam}, N), spec, N)

# beta_n from A^0, omega_n from A^1 (beta vanishes for a symmetric family)
for n in range(1, 6):
    beta = (n + 1) * table[0, n + 1] - n * table[0, n]
    omega = Fraction(n, 2) * table[1, n + 1] - Fraction(n - 1, 2) * table[1, n]
    print(f"n={n}  beta={beta}  omega={omega}  expected omega={spec.omega(n)}")
