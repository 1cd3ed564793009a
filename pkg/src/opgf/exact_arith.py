"""Exact rational scalars and dense univariate polynomials in ``x``.

``Rational`` is :class:`fractions.Fraction`; it is always stored reduced with a
positive denominator and division by zero raises.  :class:`Poly` is an
immutable dense coefficient tuple (index ``j`` holds the coefficient of
``x**j``) with trailing zeros stripped, so the zero polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "Poly",
    "as_rational",
    "poly_add",
    "poly_mul",
    "poly_derivative",
    "poly_eval",
    "poch",
    "binom",
]


def as_rational(value) -> Fraction:
    """Coerce int / Fraction / ``"p/q"`` strings to a Fraction.

    Floats are refused: they would smuggle binary rounding into exact work.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational parameter")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense polynomial in ``x`` over the rationals."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _strip([as_rational(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # coeffs must already be stripped Fractions
        p = cls.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, j: int, c: Scalar = 1) -> "Poly":
        return cls([0] * j + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.render()!r})"

    def render(self) -> str:
        """Canonical ascending-power form, e.g. ``-1/2 + x^2``."""
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mono = "x" if j == 1 else f"x^{j}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    # ring operations -----------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return poly_add(self, other)
        if isinstance(other, (int, Fraction)):
            return poly_add(self, Poly._raw(_strip([Fraction(other)])))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (Poly, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw(())
            return Poly._raw(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial divided by zero scalar")
            inv = 1 / Fraction(other)
            return Poly._raw(tuple(c * inv for c in self.coeffs))
        return NotImplemented

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("Poly powers must be non-negative integers")
        out = Poly._raw((Fraction(1),))
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __call__(self, v):
        return poly_eval(self, v)

    def derivative(self, m: int = 1) -> "Poly":
        return poly_derivative(self, m)

    def compose(self, q: "Poly") -> "Poly":
        """``p(q(x))``; used for the shift ``x -> x + 1``."""
        return poly_eval(self, q)

    def is_even(self) -> bool:
        return all(not c for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(not c for c in self.coeffs[0::2])


def poly_add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for j, c in enumerate(b):
        out[j] = out[j] + c
    return Poly._raw(_strip(out))


def poly_mul(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return Poly._raw(())
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    # leading product of nonzero leads is nonzero; inner zeros are kept
    return Poly._raw(tuple(out))


def poly_derivative(p: Poly, m: int = 1) -> Poly:
    """m-th derivative in ``x``."""
    if m < 0:
        raise ValueError("derivative order must be non-negative")
    if m == 0:
        return p
    c = p.coeffs
    if len(c) <= m:
        return Poly._raw(())
    return Poly._raw(
        tuple(c[j] * (factorial(j) // factorial(j - m)) for j in range(m, len(c)))
    )


def poly_eval(p: Poly, v):
    """Horner evaluation at ``v``.

    ``v`` may be a rational, another :class:`Poly` (composition) or any ring
    element supporting ``*`` and ``+`` with rationals, such as a series.
    """
    c = p.coeffs
    if not c:
        return v * 0 if not isinstance(v, (int, Fraction)) else Fraction(0)
    acc = v * 0 + c[-1]
    for coef in reversed(c[:-1]):
        acc = acc * v + coef
    return acc


def poch(a: Scalar, n: int) -> Fraction:
    """Rising factorial (a)_n."""
    out = Fraction(1)
    a = Fraction(a)
    for k in range(n):
        out *= a + k
    return out


def binom(a: Scalar, k: int) -> Fraction:
    """Generalized binomial coefficient C(a, k) for rational ``a``."""
    out = Fraction(1)
    a = Fraction(a)
    for j in range(k):
        out = out * (a - j) / (j + 1)
    return out

