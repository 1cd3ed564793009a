"""Classical monic orthogonal polynomial families.

Every family is built two independent ways: the three-term recurrence

    P_{n+1} = (x - beta_n) P_n - omega_n P_{n-1},   P_{-1} = 0, P_0 = 1,

driven by the Jacobi-Szego parameters of :class:`FamilySpec`, and a finite
hypergeometric sum (:func:`hypergeometric_oracle`).  The two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import DenominatorParameterPole, InvalidParameters, ParameterPole
from .exact_arith import Poly, as_rational, poch, poly_derivative

__all__ = [
    "FamilySpec",
    "hermite",
    "associated_hermite_family",
    "ultraspherical",
    "chebyshev_t",
    "chebyshev_u",
    "jacobi",
    "laguerre",
    "bessel",
    "family_sequence",
    "hypergeometric_oracle",
    "associated_hermite",
    "hermite_sign_flipped",
    "derivative_shift_check",
    "SYMMETRIC_KINDS",
]

SYMMETRIC_KINDS = frozenset(
    {"Hermite", "AssociatedHermite", "Ultraspherical", "ChebyshevT", "ChebyshevU"}
)
_PARAM_NAMES = {
    "Hermite": (),
    "AssociatedHermite": ("c",),
    "Ultraspherical": ("lambda",),
    "ChebyshevT": (),
    "ChebyshevU": (),
    "Jacobi": ("alpha", "beta"),
    "Laguerre": ("alpha",),
    "Bessel": ("alpha",),
}


def _div(num: Fraction, den: Fraction, n: int, what: str) -> Fraction:
    if den == 0:
        raise ParameterPole(f"{what} is singular at n={n}", n=n)
    return num / den


@dataclass(frozen=True)
class FamilySpec:
    """A family id plus its rational parameters.

    ``beta(n)`` and ``omega(n)`` are the recurrence coefficients; both raise
    :class:`ParameterPole` where the closed-form rule has a pole.
    """

    kind: str
    params: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in _PARAM_NAMES:
            raise ValueError(f"unknown family {self.kind!r}")
        names = _PARAM_NAMES[self.kind]
        if len(self.params) != len(names):
            raise ValueError(f"{self.kind} takes parameters {names}")
        object.__setattr__(self, "params", tuple(as_rational(p) for p in self.params))
        problem = self.invalid_reason()
        if problem:
            raise InvalidParameters(f"{self.label}: {problem}")

    @property
    def param_dict(self) -> dict:
        return dict(zip(_PARAM_NAMES[self.kind], self.params))

    @property
    def label(self) -> str:
        if not self.params:
            return self.kind
        inner = ", ".join(f"{k}={v}" for k, v in self.param_dict.items())
        return f"{self.kind}({inner})"

    @property
    def symmetric(self) -> bool:
        return self.kind in SYMMETRIC_KINDS

    def invalid_reason(self) -> str | None:
        """Return why the parameters are unusable, or None."""
        p = self.params
        if self.kind == "Ultraspherical":
            lam = p[0]
            if lam < Fraction(-1, 2):
                return "lambda must be >= -1/2"
            if lam == 0:
                return "lambda = 0 is ChebyshevT (omega_1 is 0/0 here)"
        elif self.kind == "Laguerre":
            a = p[0]
            if a.denominator == 1 and a <= -1:
                return "alpha must not be a negative integer"
        elif self.kind == "Bessel":
            a = p[0]
            if a.denominator == 1 and a <= 0:
                return "alpha must not be a non-positive integer"
        elif self.kind == "Jacobi":
            a, b = p
            s = a + b
            if s.denominator == 1 and s <= -2:
                return "alpha + beta must not be an integer <= -2"
            if a.denominator == 1 and b.denominator == 1 and a <= -1 and b <= -1:
                return "alpha and beta cannot both be negative integers"
        return None

    # Jacobi-Szego parameters ---------------------------------------------

    def beta(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("beta_n needs n >= 0")
        k, p = self.kind, self.params
        if k in SYMMETRIC_KINDS:
            return Fraction(0)
        if k == "Jacobi":
            a, b = p
            s = a + b
            if n == 0:
                # (b^2-a^2)/((a+b)(a+b+2)) with the common factor a+b cancelled
                return _div(b - a, s + 2, n, "Jacobi beta")
            return _div(b * b - a * a, (2 * n + s) * (2 * n + s + 2), n, "Jacobi beta")
        if k == "Laguerre":
            return 2 * n + p[0] + 1
        if k == "Bessel":
            a = p[0]
            if n == 0:
                return _div(Fraction(-2), a, n, "Bessel beta")
            return _div(2 * (2 - a), (2 * n + a) * (2 * n + a - 2), n, "Bessel beta")
        raise AssertionError(k)

    def omega(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("omega_n needs n >= 1")
        k, p = self.kind, self.params
        if k == "Hermite":
            return Fraction(n, 2)
        if k == "AssociatedHermite":
            return (n + p[0]) / 2
        if k == "ChebyshevT":
            return Fraction(1, 2) if n == 1 else Fraction(1, 4)
        if k == "ChebyshevU":
            return Fraction(1, 4)
        if k == "Ultraspherical":
            lam = p[0]
            return _div(n * (n - 1 + 2 * lam), 4 * (n + lam) * (n - 1 + lam), n, "omega")
        if k == "Jacobi":
            a, b = p
            s = a + b
            if n == 1:
                # the factor (1+a+b) is shared by numerator and denominator
                return _div(4 * (1 + a) * (1 + b), (2 + s) ** 2 * (3 + s), n, "Jacobi omega")
            num = n * (n + a) * (n + b) * (n + s)
            den = 4 * (n + (s - 1) / 2) * (n + (s + 1) / 2) * (n + s / 2) ** 2
            return _div(num, den, n, "Jacobi omega")
        if k == "Laguerre":
            return n * (n + p[0])
        if k == "Bessel":
            a = p[0]
            num = -4 * n * (n + a - 2)
            den = (2 * n + a - 1) * (2 * n + a - 3) * (2 * n + a - 2) ** 2
            return _div(num, den, n, "Bessel omega")
        raise AssertionError(k)

    def shifted(self, m: int) -> "FamilySpec":
        """Family of the m-th derivative: d^m P_n = n!/(n-m)! Q_{n-m}."""
        if m == 0:
            return self
        k, p = self.kind, self.params
        if k == "Hermite":
            return self
        if k == "Ultraspherical":
            return FamilySpec(k, (p[0] + m,))
        if k == "ChebyshevT":
            return FamilySpec("Ultraspherical", (Fraction(m),))
        if k == "ChebyshevU":
            return FamilySpec("Ultraspherical", (Fraction(1 + m),))
        if k == "Jacobi":
            return FamilySpec(k, (p[0] + m, p[1] + m))
        if k == "Laguerre":
            return FamilySpec(k, (p[0] + m,))
        if k == "Bessel":
            return FamilySpec(k, (p[0] + 2 * m,))
        raise ValueError(f"no derivative rule for {k}")


def hermite() -> FamilySpec:
    return FamilySpec("Hermite")


def associated_hermite_family(c) -> FamilySpec:
    return FamilySpec("AssociatedHermite", (c,))


def ultraspherical(lam) -> FamilySpec:
    return FamilySpec("Ultraspherical", (lam,))


def chebyshev_t() -> FamilySpec:
    return FamilySpec("ChebyshevT")


def chebyshev_u() -> FamilySpec:
    return FamilySpec("ChebyshevU")


def jacobi(a, b) -> FamilySpec:
    return FamilySpec("Jacobi", (a, b))


def laguerre(a) -> FamilySpec:
    return FamilySpec("Laguerre", (a,))


def bessel(a) -> FamilySpec:
    return FamilySpec("Bessel", (a,))


# recurrence route ------------------------------------------------------------


@lru_cache(maxsize=512)
def _sequence(spec: FamilySpec, n_max: int) -> tuple:
    x = Poly.x()
    prev, cur = Poly(), Poly([1])
    out = [cur]
    for n in range(n_max):
        nxt = (x - spec.beta(n)) * cur
        if n >= 1:
            w = spec.omega(n)
            if w:
                nxt = nxt - w * prev
        prev, cur = cur, nxt
        out.append(cur)
    return tuple(out)


def family_sequence(spec: FamilySpec, n_max: int) -> list:
    """[P_0, ..., P_{n_max}] from the three-term recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return list(_sequence(spec, n_max))


# hypergeometric route ----------------------------------------------------------


def _half_one_minus_x_powers(n: int) -> list:
    base = Poly([Fraction(1, 2), Fraction(-1, 2)])
    out = [Poly([1])]
    for _ in range(n):
        out.append(out[-1] * base)
    return out


def _f21_in_half_one_minus_x(n: int, b, c) -> Poly:
    """2F1(-n, b; c; (1-x)/2) as a polynomial in x."""
    powers = _half_one_minus_x_powers(n)
    acc = Poly()
    for k in range(n + 1):
        den = poch(c, k)
        if den == 0:
            raise DenominatorParameterPole(f"(c)_{k} = 0 for c = {c}", index=k)
        coef = poch(-n, k) * poch(b, k) / (den * factorial(k))
        acc = acc + powers[k] * coef
    return acc


def _hermite_explicit(n: int) -> Poly:
    # x^n 2F0(-n/2, -(n-1)/2; ; -1/x^2)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        term = poch(Fraction(-n, 2), k) * poch(Fraction(-(n - 1), 2), k) / factorial(k)
        coeffs[n - 2 * k] = term * (-1) ** k
    return Poly(coeffs)


def _jacobi_explicit(n: int, a: Fraction, b: Fraction) -> Poly:
    if (a + 1).denominator == 1 and a + 1 <= 0:
        # lower parameter a+1 hits a pole; use P^(a,b)(x) = (-1)^n P^(b,a)(-x)
        q = _jacobi_explicit(n, b, a)
        return Poly([c * (-1) ** (j + n) for j, c in enumerate(q.coeffs)])
    s1 = a + b + 1
    norm_den = poch(n + s1, n)
    if norm_den == 0:
        raise DenominatorParameterPole(f"(n+a+b+1)_n = 0 at n={n}", index=n)
    scale = Fraction(2) ** n * poch(a + 1, n) / norm_den
    return _f21_in_half_one_minus_x(n, n + s1, a + 1) * scale


def hypergeometric_oracle(spec: FamilySpec, n: int) -> Poly:
    """Monic P_n from its explicit finite-sum definition (no recurrence)."""
    k, p = spec.kind, spec.params
    if n == 0:
        return Poly([1])
    if k == "Hermite":
        return _hermite_explicit(n)
    if k == "AssociatedHermite":
        return associated_hermite(n, p[0])
    if k in ("Ultraspherical", "ChebyshevU"):
        lam = p[0] if k == "Ultraspherical" else Fraction(1)
        den = 2**n * poch(lam, n)
        if den == 0:
            raise DenominatorParameterPole(f"(lambda)_{n} = 0", index=n)
        scale = poch(2 * lam, n) / den
        return _f21_in_half_one_minus_x(n, n + 2 * lam, lam + Fraction(1, 2)) * scale
    if k == "ChebyshevT":
        # lambda -> 0 limit of (2 lambda)_n / (lambda)_n is 2
        scale = Fraction(2, 2**n)
        return _f21_in_half_one_minus_x(n, Fraction(n), Fraction(1, 2)) * scale
    if k == "Jacobi":
        return _jacobi_explicit(n, p[0], p[1])
    if k == "Laguerre":
        a = p[0]
        coeffs = []
        for j in range(n + 1):
            den = poch(a + 1, j)
            if den == 0:
                raise DenominatorParameterPole(f"(alpha+1)_{j} = 0", index=j)
            coeffs.append(poch(-n, j) / (den * factorial(j)))
        return Poly(coeffs) * ((-1) ** n * poch(a + 1, n))
    if k == "Bessel":
        a = p[0]
        den = poch(n + a - 1, n)
        if den == 0:
            raise DenominatorParameterPole(f"(n+alpha-1)_n = 0 at n={n}", index=n)
        coeffs = [comb(n, j) * poch(n + a - 1, j) / Fraction(2) ** j for j in range(n + 1)]
        return Poly(coeffs) * (Fraction(2) ** n / den)
    raise AssertionError(k)


def associated_hermite(n: int, c) -> Poly:
    """H_n(x, c) by the explicit sum over Hermite polynomials.

    H_n(x,c) = sum_k (-2)^{-k} (c)_k (n-k)! / (k! (n-2k)!) H_{n-2k}(x)
    """
    c = as_rational(c)
    acc = Poly()
    for k in range(n // 2 + 1):
        coef = Fraction(-2) ** (-k) * poch(c, k) * factorial(n - k) / (
            factorial(k) * factorial(n - 2 * k)
        )
        acc = acc + _hermite_explicit(n - 2 * k) * coef
    return acc


def hermite_sign_flipped(n: int) -> Poly:
    """i^{-n} H_n(i x): monic Hermite with every second coefficient negated."""
    h = _hermite_explicit(n)
    return Poly([c * (-1) ** ((n - j) // 2) for j, c in enumerate(h.coeffs)])


def derivative_shift_check(spec: FamilySpec, n: int, m: int) -> bool:
    """d^m P_n == n!/(n-m)! * Q_{n-m} with Q the shifted family."""
    if m > n:
        raise ValueError("need m <= n")
    p_n = family_sequence(spec, n)[n]
    if m == 0:
        return True
    q = family_sequence(spec.shifted(m), n - m)[n - m]
    return poly_derivative(p_n, m) == q * (factorial(n) // factorial(n - m))
