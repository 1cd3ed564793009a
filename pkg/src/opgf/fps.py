"""Truncated formal power series in ``t``.

A :class:`Series` holds the coefficients of ``t**0 .. t**order`` over either
the rationals or :class:`~opgf.exact_arith.Poly` (series in ``t`` whose
coefficients are polynomials in ``x``).  Arithmetic is exact modulo
``t**(order+1)``; mixing orders truncates to the smaller one.

Nothing here ever looks at convergence: divergent series such as 2F0 are
plain coefficient sequences.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ConstantTermNotOne,
    DenominatorParameterPole,
    InnerConstantTermNonzero,
    NonUnitConstantTerm,
)
from .exact_arith import Poly, as_rational

__all__ = [
    "Series",
    "series_mul",
    "series_div",
    "series_compose",
    "series_exp",
    "series_log",
    "series_powq",
    "series_integrate",
    "series_derivative",
    "hypergeometric_series",
    "erfi_kernel",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)
_POLY_ZERO = Poly()


def _is_poly_ring(coeffs) -> bool:
    return any(isinstance(c, Poly) for c in coeffs)


def _normalize(coeffs, poly: bool) -> tuple:
    if poly:
        return tuple(c if isinstance(c, Poly) else Poly.constant(c) for c in coeffs)
    return tuple(as_rational(c) for c in coeffs)


def _unit_inverse(c) -> Fraction:
    if isinstance(c, Poly):
        if c.degree != 0:
            raise NonUnitConstantTerm(f"constant term {c.render()} is not a unit")
        return 1 / c[0]
    if not c:
        raise NonUnitConstantTerm("constant term is zero")
    return 1 / Fraction(c)


class Series:
    """Element of R[[t]] / (t**(order+1)), R = Q or Q[x]."""

    __slots__ = ("coeffs", "poly")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        poly = _is_poly_ring(coeffs)
        zero = _POLY_ZERO if poly else _ZERO
        coeffs = coeffs[: order + 1] + [zero] * (order + 1 - len(coeffs))
        self.coeffs = _normalize(coeffs, poly)
        self.poly = poly

    @classmethod
    def _raw(cls, coeffs: tuple, poly: bool) -> "Series":
        s = cls.__new__(cls)
        s.coeffs = coeffs
        s.poly = poly
        return s

    # constructors --------------------------------------------------------

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def t(cls, order: int) -> "Series":
        return cls([0, 1], order)

    @classmethod
    def from_function(cls, fn, order: int) -> "Series":
        return cls([fn(n) for n in range(order + 1)], order)

    # basic protocol ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def zero(self):
        return _POLY_ZERO if self.poly else _ZERO

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        body = ", ".join(c.render() if isinstance(c, Poly) else str(c) for c in self.coeffs)
        return f"Series([{body}], order={self.order})"

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series._raw(self.coeffs[: order + 1], self.poly)

    def lift(self) -> "Series":
        """View a rational series as a series with constant-Poly coefficients."""
        if self.poly:
            return self
        return Series._raw(tuple(Poly.constant(c) for c in self.coeffs), True)

    def valuation(self) -> int:
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.order + 1

    def rescale(self, c) -> "Series":
        """f(c*t)."""
        c = as_rational(c)
        out, p = [], Fraction(1)
        for a in self.coeffs:
            out.append(a * p)
            p *= c
        return Series._raw(tuple(out), self.poly)

    def shift_up(self, k: int) -> "Series":
        """t**k * f, keeping the order."""
        z = self.zero
        return Series._raw(((z,) * k + self.coeffs)[: self.order + 1], self.poly)

    def is_even(self) -> bool:
        return all(not c for c in self.coeffs[1::2])

    def is_odd(self) -> bool:
        return all(not c for c in self.coeffs[0::2])

    # arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Series | None":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return Series([other], self.order)
        return None

    def __neg__(self) -> "Series":
        return Series._raw(tuple(-c for c in self.coeffs), self.poly)

    def __add__(self, other) -> "Series":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        poly = self.poly or o.poly
        coeffs = _normalize([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)], poly)
        return Series._raw(coeffs, poly)

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, Poly)):
            poly = self.poly or isinstance(other, Poly)
            return Series._raw(_normalize([c * other for c in self.coeffs], poly), poly)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series":
        if isinstance(other, Series):
            return series_div(self, other)
        if isinstance(other, (int, Fraction)):
            inv = 1 / Fraction(other)
            return Series._raw(tuple(c * inv for c in self.coeffs), self.poly)
        return NotImplemented

    def __rtruediv__(self, other) -> "Series":
        return series_div(Series([other], self.order), self)

    def __pow__(self, e) -> "Series":
        if isinstance(e, int) and e >= 0:
            out = Series.one(self.order)
            if self.poly:
                out = out.lift()
            base = self
            while e:
                if e & 1:
                    out = out * base
                e >>= 1
                if e:
                    base = base * base
            return out
        return series_powq(self, as_rational(e))

    def __call__(self, inner: "Series") -> "Series":
        return series_compose(self, inner)

    def derivative(self) -> "Series":
        return series_derivative(self)

    def integrate(self) -> "Series":
        return series_integrate(self)

    def exp(self) -> "Series":
        return series_exp(self)

    def log(self) -> "Series":
        return series_log(self)


def series_mul(f: Series, g: Series, order: int | None = None) -> Series:
    """Cauchy product truncated at ``min(f.order, g.order)`` (or ``order``)."""
    n = min(f.order, g.order)
    if order is not None:
        n = min(n, order)
    poly = f.poly or g.poly
    a, b = f.coeffs, g.coeffs
    # skip leading zeros cheaply; inner series of compositions start at t^1
    va = next((i for i in range(n + 1) if a[i]), n + 1)
    vb = next((i for i in range(n + 1) if b[i]), n + 1)
    zero = _POLY_ZERO if poly else _ZERO
    out = [zero] * (n + 1)
    for i in range(va, n + 1 - vb):
        ai = a[i]
        if not ai:
            continue
        for j in range(vb, n + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return Series._raw(_normalize(out, poly), poly)


def series_div(f: Series, g: Series) -> Series:
    """h with h*g == f mod t**(N+1); g(0) must be a unit."""
    n = min(f.order, g.order)
    inv = _unit_inverse(g.coeffs[0])
    poly = f.poly or g.poly
    a, b = f.coeffs, g.coeffs
    h = []
    for k in range(n + 1):
        acc = a[k]
        for j in range(1, k + 1):
            if b[j]:
                acc = acc - b[j] * h[k - j]
        h.append(acc * inv)
    return Series._raw(_normalize(h, poly), poly)


def series_derivative(f: Series) -> Series:
    """d/dt; the result has order N-1 (order-0 input gives the zero series)."""
    if f.order == 0:
        return Series._raw((f.zero,), f.poly)
    return Series._raw(tuple(f.coeffs[n] * n for n in range(1, f.order + 1)), f.poly)


def series_integrate(f: Series) -> Series:
    """Antiderivative with zero constant term, kept at order N."""
    if f.order < 1:
        raise ValueError("integration needs order >= 1")
    out = [f.zero] + [f.coeffs[n] / (n + 1) for n in range(f.order)]
    return Series._raw(tuple(out), f.poly)


def series_compose(f: Series, u: Series) -> Series:
    """f(u(t)) mod t**(N+1) for u(0) == 0, by truncated Horner.

    The j-th Horner partial sum is multiplied by u another j times, so only
    its first N-j+1 coefficients can survive; each step is truncated to that.
    """
    if u.coeffs[0]:
        raise InnerConstantTermNonzero("inner series must have zero constant term")
    n = min(f.order, u.order)
    poly = f.poly or u.poly
    zero = _POLY_ZERO if poly else _ZERO
    fc = f.coeffs
    acc = Series._raw(_normalize([fc[n]], poly), poly)
    for j in range(n - 1, -1, -1):
        # acc is exact through t^(n-j-1); u(0) == 0 so that is all the
        # product needs through t^(n-j)
        acc = Series._raw(acc.coeffs + (zero,), poly)
        acc = series_mul(acc, u, order=n - j)
        c = list(acc.coeffs)
        c[0] = c[0] + fc[j]
        acc = Series._raw(_normalize(c, poly), poly)
    return acc


def series_exp(u: Series) -> Series:
    """exp(u) via n*y_n = sum_k k*u_k*y_{n-k}."""
    if u.coeffs[0]:
        raise InnerConstantTermNonzero("exp needs u(0) == 0")
    poly = u.poly
    one = Poly.constant(1) if poly else _ONE
    uc = u.coeffs
    du = [k * uc[k] for k in range(u.order + 1)]
    y = [one]
    for n in range(1, u.order + 1):
        acc = _POLY_ZERO if poly else _ZERO
        for k in range(1, n + 1):
            if du[k]:
                acc = acc + du[k] * y[n - k]
        y.append(acc / n)
    return Series._raw(tuple(y), poly)


def _check_one(f: Series, what: str):
    c = f.coeffs[0]
    if not (c == 1):
        raise ConstantTermNotOne(f"{what} needs f(0) == 1")


def series_log(f: Series) -> Series:
    """log f = integral of f'/f; f(0) must be 1."""
    _check_one(f, "log")
    if f.order == 0:
        return Series._raw((f.zero,), f.poly)
    q = series_div(series_derivative(f), f.truncate(f.order - 1))
    # q has order N-1; integrating lands back on order N
    out = [f.zero] + [q.coeffs[n] / (n + 1) for n in range(f.order)]
    return Series._raw(tuple(out), f.poly)


def series_powq(f: Series, e) -> Series:
    """f**e = exp(e*log f) for any rational e; f(0) must be 1."""
    _check_one(f, "rational power")
    e = as_rational(e)
    if not e:
        one = Poly.constant(1) if f.poly else _ONE
        return Series._raw((one,) + (f.zero,) * f.order, f.poly)
    return series_exp(series_log(f) * e)


def hypergeometric_series(num: Sequence, den: Sequence, order: int, scale=1) -> Series:
    """pFq(num; den; scale*t) truncated at ``order``.

    Uses the term ratio c_{n+1}/c_n = prod(mu+n) / (prod(nu+n) (n+1)).
    """
    num = [as_rational(a) for a in num]
    den = [as_rational(b) for b in den]
    scale = as_rational(scale)
    c = [_ONE]
    for n in range(order):
        top = Fraction(1)
        for a in num:
            top *= a + n
        bot = Fraction(n + 1)
        for b in den:
            if b + n == 0:
                raise DenominatorParameterPole(
                    f"lower parameter {b} vanishes at index {n}", index=n
                )
            bot *= b + n
        c.append(c[-1] * top * scale / bot)
    return Series._raw(tuple(c), False)


def erfi_kernel(rho, order: int) -> Series:
    """G(t) = sqrt(pi) e^{-rho^2} [erfi(rho) - erfi(rho - t)].

    Materialized as the unique series with G(0) = 0 and
    G'(t) = 2 exp(-2 rho t + t^2); every coefficient is rational.
    ``rho`` may be a rational or a Poly.
    """
    if order < 1:
        return Series([0], 0) if not isinstance(rho, Poly) else Series([Poly()], 0)
    inner = Series([0, -2 * rho, 1], order)
    return series_integrate(2 * series_exp(inner))
