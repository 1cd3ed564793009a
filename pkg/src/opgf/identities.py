"""Catalog of generating-function identities.

Each :class:`GFIdentity` carries builders for the series (A, R, F), the power
``k`` of A in front, how many times F is differentiated, the target family,
the coefficient sequence alpha_n, and an independent closed-form route for
the right-hand side.  Parameters are exact rationals passed as a dict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .errors import InvalidParameters, UnknownIdentity
from .exact_arith import Poly, as_rational, poch, poly_eval
from .families import (
    FamilySpec,
    associated_hermite_family,
    bessel,
    chebyshev_t,
    chebyshev_u,
    family_sequence,
    hermite,
    jacobi,
    laguerre,
    ultraspherical,
)
from .fps import (
    Series,
    erfi_kernel,
    hypergeometric_series,
    series_compose,
    series_exp,
    series_log,
    series_powq,
)

__all__ = ["GFIdentity", "REGISTRY", "get_identity", "registry_list", "alpha_builders"]

Params = dict

_H = Fraction(1, 2)


# small series helpers --------------------------------------------------------


def _s(coeffs, order) -> Series:
    return Series(coeffs, order)


def _one(order) -> Series:
    return Series.one(order)


def _zero(order) -> Series:
    return Series([0], order)


def _pow(coeffs, e, order) -> Series:
    """(c0 + c1 t + ...)^e for a polynomial in t with c0 == 1."""
    base = _s(coeffs, order)
    e = as_rational(e)
    if e.denominator == 1 and e >= 0:
        return base ** int(e)
    return series_powq(base, e)


def _exp_series(order, scale=1) -> Series:
    scale = as_rational(scale)
    return Series([scale**n / factorial(n) for n in range(order + 1)], order)


def _x_poly_series(rows, order) -> Series:
    """Series<Poly> from rows of Poly coefficient lists."""
    return Series([Poly(r) for r in rows], order)


def _z_hermite(rho, order) -> Series:
    """z = (rho - x t) / sqrt(1 - t^2) with Poly coefficients."""
    num = _x_poly_series([[rho], [0, -1]], order)
    return num * _pow([1, 0, -1], -_H, order).lift()


def _hermite_val(n: int, rho) -> Fraction:
    if n < 0:
        return Fraction(0)
    return poly_eval(family_sequence(hermite(), n)[n], rho)


def _assoc1_val(n: int, rho) -> Fraction:
    if n < 0:
        return Fraction(0)
    return poly_eval(family_sequence(associated_hermite_family(1), n)[n], rho)


def _assoc1_poly(n: int) -> Poly:
    if n < 0:
        return Poly()
    return family_sequence(associated_hermite_family(1), n)[n]


def _cheb_u_scaled(n: int, y, w) -> Fraction:
    """sum_j u_{n,j} w^j y^{n-2j} for monic U_n = sum_j u_{n,j} x^{n-2j}.

    With w = 2*S1 this is (8 S1)^{n/2} 2^{-n} U_n(y / sqrt(2 S1)), a rational
    quantity even when sqrt(2 S1) is not.
    """
    if n < 0:
        return Fraction(0)
    u = family_sequence(chebyshev_u(), n)[n]
    return sum((u[n - 2 * j] * w**j * y ** (n - 2 * j) for j in range(n // 2 + 1)), Fraction(0))


def _rational_sqrt(q: Fraction):
    from math import isqrt

    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


# the identity record -----------------------------------------------------------


@dataclass
class GFIdentity:
    """One registered generating-function identity.

    The expansion checked is ``A^k_power * F^{(m_deriv)}(x t A - R)`` against
    ``alpha_n * P_n(x)``.  ``kind`` is ``"rainville"`` for the ordinary
    bivariate case, ``"univariate"`` for the t-only limits and ``"convolution"``
    for the Hermite convolution identity.
    """

    id: str
    equation: str
    derived: bool
    params: tuple
    default_grid: list
    family: Callable[[Params], FamilySpec] | None = None
    A: Callable | None = None
    R: Callable | None = None
    F: Callable | None = None
    alpha: Callable | None = None
    k_power: Callable[[Params], Fraction] = lambda p: Fraction(1)
    m_deriv: Callable[[Params], int] = lambda p: 0
    closed_form: Callable | None = None
    closed_factor: Callable | None = None
    validity: Callable[[Params], str | None] = lambda p: None
    shift_x: bool = False
    normalized: bool = True
    formal_only: bool = False
    kind: str = "rainville"
    derivative_pairs: Callable[[Params], list] = lambda p: []
    notes: str = ""

    def check_params(self, params: Params) -> Params:
        """Coerce to Fractions and enforce the domain; raises InvalidParameters."""
        missing = [n for n in self.params if n not in params]
        extra = [n for n in params if n not in self.params]
        if missing or extra:
            raise InvalidParameters(
                f"{self.id} takes parameters {list(self.params)}; missing {missing}, unexpected {extra}"
            )
        try:
            p = {k: as_rational(v) for k, v in params.items()}
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidParameters(f"{self.id}: {exc}") from None
        reason = self.validity(p)
        if reason:
            raise InvalidParameters(f"{self.id}{_fmt(p)}: {reason}")
        return p

    def describe(self) -> dict:
        return {
            "id": self.id,
            "equation": self.equation,
            "derived": self.derived,
            "params": list(self.params),
            "defaults": [{k: str(v) for k, v in g.items()} for g in self.default_grid],
            "formal_only": self.formal_only,
            "kind": self.kind,
            "notes": self.notes,
        }


def _fmt(p: Params) -> str:
    if not p:
        return ""
    return "(" + ", ".join(f"{k}={v}" for k, v in p.items()) + ")"


def _need_int(name, lo=0):
    def check(p):
        v = p[name]
        if v.denominator != 1 or v < lo:
            return f"{name} must be an integer >= {lo}"
        return None

    return check


def _all(*checks):
    def run(p):
        for c in checks:
            r = c(p)
            if r:
                return r
        return None

    return run


def _g(**kw) -> dict:
    return {k: as_rational(v) for k, v in kw.items()}


# base identities: ultraspherical / Chebyshev -------------------------------------------


def _ultra_valid(p):
    lam = p["lambda"]
    if lam < -_H:
        return "lambda must be >= -1/2"
    if lam == 0:
        return "lambda != 0 (A(t) = (1 - t^2/4)^(-1/lambda) is undefined)"
    if lam.denominator == 1 and lam < 0:
        return "lambda must not be a negative integer"
    return None


def _ultra_pairs(p):
    return [("Ultra1", {"lambda": p["lambda"] + m}, m, False) for m in (1, 2, 3)]


def _ultra2_pairs(p):
    return [("Ultra2", {"lambda": p["lambda"] + m}, m, False) for m in (1, 2, 3)]


def _ultra1_closed(p, N):
    lam = p["lambda"]
    return series_powq(_x_poly_series([[1], [0, -1], [Fraction(1, 4)]], N), -lam)


def _ultra2_closed(p, N):
    lam = p["lambda"]
    base = series_powq(_x_poly_series([[1], [0, -1], [Fraction(1, 4)]], N), -lam - 1)
    return base * _s([1, 0, Fraction(-1, 4)], N).lift()


def _quarter_R(order) -> Series:
    return _s([0, 0, Fraction(1, 4)], order)


def _coupled_R(A: Series) -> Series:
    """R = (1 + t^2/4) A - 1."""
    return _s([1, 0, Fraction(1, 4)], A.order) * A - 1


def _ultra2_A(p, o):
    return _pow([1, 0, Fraction(-1, 4)], -1 / p["lambda"], o)


def _u3_A(p, o):
    w = int(p["witness"])
    if w == 0:
        return _one(o)
    if w == 1:
        return _one(o) / _s([1, -1], o)
    return _exp_series(o)


def _u3_valid(p):
    w = p["witness"]
    if w not in (0, 1, 2):
        return "witness selects A(t): 0 -> 1, 1 -> 1/(1-t), 2 -> exp(t)"
    return None


def _cheb_u_closed(p, N):
    return _one(N).lift() / _x_poly_series([[1], [0, -1], [Fraction(1, 4)]], N)


def _u4_alpha(p, n_max):
    rho, a1 = p["rho"], p["alpha1"]
    return [Fraction(1)] + [a1 * (2 * rho) ** (n - 1) for n in range(1, n_max + 1)]


def _u4_closed(p, N):
    rho, a1 = p["rho"], p["alpha1"]
    num = _x_poly_series([[1], [0, a1 - 2 * rho], [-(a1 - 2 * rho) * rho / 2]], N)
    den = _x_poly_series([[1], [0, -2 * rho], [rho * rho]], N)
    return num / den


def _u4_valid(p):
    if p["rho"] == 0 or p["alpha1"] == 0:
        return "rho and alpha1 must be nonzero (alpha_n != 0)"
    return None


def _u1_A(p, o):
    return _s([2], o) / _s([2, 0, -p["s1"]], o)


def _u1_R(p, o):
    return _s([0, 0, p["rho"]], o) / _s([2, 0, -p["s1"]], o)


def _u1_F(p, o):
    rho, a1, s1 = p["rho"], p["alpha1"], p["s1"]
    return _s([1, a1 - 2 * rho], o) / _s([1, -2 * rho, 2 * s1], o)


def _u1_alpha(p, n_max):
    rho, a1, s1 = p["rho"], p["alpha1"], p["s1"]
    w = 2 * s1
    out = [Fraction(1)]
    for n in range(1, n_max + 1):
        out.append(
            2**n * _cheb_u_scaled(n, rho, w)
            + (a1 - 2 * rho) * 2 ** (n - 1) * _cheb_u_scaled(n - 1, rho, w)
        )
    return out


def _u1_den(p, N):
    rho, s1 = p["rho"], p["s1"]
    return _x_poly_series(
        [[4], [0, -8 * rho], [4 * (rho * rho - s1), 0, 8 * s1], [0, -4 * rho * s1], [s1 * s1]], N
    )


def _u1_closed(p, N):
    rho, a1, s1 = p["rho"], p["alpha1"], p["s1"]
    k = a1 - 2 * rho
    num = _x_poly_series([[4], [0, 4 * k], [-2 * s1 - 2 * k * rho]], N)
    return num / _u1_den(p, N)


def _u1_valid(p):
    if p["s1"] == 0:
        return "s1 must be nonzero"
    return None


def _u2a_p(p):
    return {"rho": p["rho"], "alpha1": 2 * p["rho"], "s1": _H}


def _u2b_F(p, o):
    rho = p["rho"]
    return _s([0, 2], o) / _s([1, -2 * rho, 1], o)


def _u2b_alpha(p, n_max):
    rho = p["rho"]
    return [Fraction(0)] + [2**n * _cheb_u_scaled(n - 1, rho, 1) for n in range(1, n_max + 1)]


def _u2b_closed(p, N):
    rho = p["rho"]
    num = _x_poly_series([[0], [0, 8], [-4 * rho]], N)
    return num / _u1_den({"rho": rho, "s1": _H}, N)


def _t1_alpha(p, n_max):
    return [Fraction(1)] + [Fraction(1, n) for n in range(1, n_max + 1)]


def _t1_closed(p, N):
    return 1 - series_log(_x_poly_series([[1], [0, -1], [Fraction(1, 4)]], N))


# Hermite -----------------------------------------------------------------------


def _h2_A(p, o):
    return _pow([1, 0, -1], -_H, o)


def _h2_R(p, o):
    return (_h2_A(p, o) - 1) * p["rho"]


def _gauss_factor(rho, o) -> Series:
    """exp(t (2 rho - t))."""
    return series_exp(_s([0, 2 * rho, -1], o))


def _h2_F(p, o):
    rho, a1 = p["rho"], p["alpha1"]
    return (1 + (a1 / 2 - rho) * erfi_kernel(rho, o)) * _gauss_factor(rho, o)


def _h2_alpha(p, n_max):
    rho, a1 = p["rho"], p["alpha1"]
    return [
        Fraction(2**n, factorial(n)) * (_hermite_val(n, rho) + (a1 / 2 - rho) * _assoc1_val(n - 1, rho))
        for n in range(n_max + 1)
    ]


def _hermite_blocks(rho, N):
    """(z, kernel block G(rho - z) e^{rho^2 - z^2}, gaussian block e^{rho^2 - z^2})."""
    z = _z_hermite(rho, N)
    gauss = series_exp(rho * rho - z * z)
    G = erfi_kernel(rho, N)
    kernel = series_compose(G, rho - z) * gauss
    return z, kernel, gauss


def _h2_closed(p, N):
    rho, a1 = p["rho"], p["alpha1"]
    _, kernel, gauss = _hermite_blocks(rho, N)
    pre = _pow([1, 0, -1], -_H, N).lift()
    return pre * (gauss + kernel * (a1 / 2 - rho))


def _mehler_F(p, o):
    return _gauss_factor(p["rho"], o)


def _mehler_alpha(p, n_max):
    rho = p["rho"]
    return [Fraction(2**n, factorial(n)) * _hermite_val(n, rho) for n in range(n_max + 1)]


def _mehler_closed(p, N):
    _, _, gauss = _hermite_blocks(p["rho"], N)
    return _pow([1, 0, -1], -_H, N).lift() * gauss


def _h44_F(p, o):
    rho = p["rho"]
    return erfi_kernel(rho, o) * _gauss_factor(rho, o)


def _h44_alpha(p, n_max):
    rho = p["rho"]
    return [Fraction(2**n, factorial(n)) * _assoc1_val(n - 1, rho) for n in range(n_max + 1)]


def _h44_closed(p, N):
    _, kernel, _ = _hermite_blocks(p["rho"], N)
    return _pow([1, 0, -1], -_H, N).lift() * kernel


def _nonzero_rho(p):
    if p["rho"] == 0:
        return "rho = 0 makes alpha_n vanish for odd n"
    return None


# Jacobi ------------------------------------------------------------------------


def _j1_A(p, o):
    return _pow([1, -_H], Fraction(-2) / (2 * p["alpha"] + 1), o)


def _j1_F(p, o):
    return _pow([1, -1], -(p["alpha"] + Fraction(3, 2)), o)


def _j1_alpha(p, n_max):
    a = p["alpha"] + Fraction(3, 2)
    return [poch(a, n) / factorial(n) for n in range(n_max + 1)]


def _j1_closed(p, N):
    base = series_powq(_x_poly_series([[1], [0, -1], [Fraction(1, 4)]], N), -(p["alpha"] + Fraction(3, 2)))
    return base * _s([1, -_H], N).lift()


def _j1_valid(p):
    a = p["alpha"]
    if a == -_H:
        return "alpha != -1/2 (A(t) exponent -2/(2 alpha + 1))"
    b = a + Fraction(3, 2)
    if b.denominator == 1 and b <= 0:
        return "alpha + 3/2 must not be a non-positive integer"
    if a + 1 == 0:
        return "alpha = -1 is registered separately as GF3"
    return None


def _j2_A(p, o):
    return _pow([1, _H], -2, o)


def _j2_F(p, o):
    return hypergeometric_series([Fraction(3, 2), 1], [2], o)


def _j2_alpha(p, n_max):
    return [poch(Fraction(3, 2), n) / factorial(n + 1) for n in range(n_max + 1)]


def _j2_closed(p, N):
    # 2 ((1 + t/2)(1 - x t + t^2/4)^(-1/2) - 1), to be matched by t (x+1) * LHS
    root = series_powq(_x_poly_series([[1], [0, -1], [Fraction(1, 4)]], N), -_H)
    return (root * _s([1, _H], N).lift() - 1) * 2


def _j2_factor(p, N):
    return _x_poly_series([[0], [1, 1]], N)


def _j3_c(p):
    return Fraction(3, 2) + (2 * p["alpha"] - 1) / (2 * p["R0"])


def _j3_A(p, o):
    return _pow([1, -1], -2, o)


def _j3_R(p, o):
    r0 = p["R0"]
    return _s([1, 0, 1], o) * _j3_A(p, o) * (r0 / 2) - r0 / 2


def _j3_F(p, o):
    return hypergeometric_series([Fraction(3, 2), 1], [_j3_c(p)], o, 2 / p["R0"])


def _j3_alpha(p, n_max):
    c, r0 = _j3_c(p), p["R0"]
    return [poch(Fraction(3, 2), n) * (2 / r0) ** n / poch(c, n) for n in range(n_max + 1)]


def _j3_closed(p, N):
    r0 = p["R0"]
    # 2 t (x - R0) / (R0 (1 - t)^2)
    inner = _x_poly_series([[0], [-2, 2 / r0]], N) * _pow([1, -1], -2, N).lift()
    f = hypergeometric_series([Fraction(3, 2), 1], [_j3_c(p)], N)
    return series_compose(f, inner) * _pow([1, -1], -2, N).lift()


def _j3_valid(p):
    r0 = p["R0"]
    if r0 not in (1, -1):
        return "R0 must be 1 or -1 (the omega relation forces R0^2 = 1)"
    c = _j3_c(p)
    if c.denominator == 1 and c <= 0:
        return "3/2 + (2 alpha - 1)/(2 R0) must not be a non-positive integer"
    a = p["alpha"]
    if a.denominator == 1 and a <= -1 and (1 - a) <= -1:
        return "alpha out of range"
    return None


def _gf3_p(p):
    return {"alpha": Fraction(-1)}


def _gf3_A(p, o):
    return _pow([1, -_H], 2, o)


def _gf3_F(p, o):
    return _pow([1, -1], -_H, o)


def _gf3_alpha(p, n_max):
    return [poch(_H, n) / factorial(n) for n in range(n_max + 1)]


def _gf3_closed(p, N):
    base = series_powq(_x_poly_series([[1], [0, -1], [Fraction(1, 4)]], N), -_H)
    return base * _s([1, -_H], N).lift()


# Laguerre / Bessel ----------------------------------------------------------------


def _lag_valid(p):
    a = p["alpha"]
    if a.denominator == 1 and a <= -1:
        return "alpha must not be a negative integer"
    return None


def _geo(p, o):
    return _one(o) / _s([1, -1], o)


def _l2_R(p, o):
    return series_log(_s([1, -1], o)) * (-p["alpha"])


def _l2_alpha(p, n_max):
    return [Fraction((-1) ** n, factorial(n)) for n in range(n_max + 1)]


def _l2_closed(p, N):
    a = p["alpha"]
    inner = _x_poly_series([[0], [0, -1]], N) / _s([1, -1], N).lift()
    return series_exp(inner) * _pow([1, -1], -a - 1, N).lift()


def _l1_F(p, o):
    return hypergeometric_series([1], [p["alpha"] + 1], o, -1)


def _l1_alpha(p, n_max):
    a = p["alpha"]
    return [Fraction((-1) ** n) / poch(a + 1, n) for n in range(n_max + 1)]


def _l1_closed(p, N):
    inner = _x_poly_series([[0], [0, -1]], N) / _s([1, -1], N).lift()
    f = hypergeometric_series([1], [p["alpha"] + 1], N)
    return series_compose(f, inner) / _s([1, -1], N).lift()


def _l2_pairs(p):
    return [("L2", {"alpha": p["alpha"] + m}, m, False) for m in (1, 2, 3)]


def _b1_A(p, o):
    return _pow([1, -1], -2, o)


def _b1_F(p, o):
    return hypergeometric_series([Fraction(3, 2), 1], [], o, 2)


def _b1_alpha(p, n_max):
    return [poch(Fraction(3, 2), n) * 2**n for n in range(n_max + 1)]


def _b1_closed(p, N):
    inner = _x_poly_series([[0], [0, 2]], N) * _pow([1, -1], -2, N).lift()
    f = hypergeometric_series([Fraction(3, 2), 1], [], N)
    return series_compose(f, inner) * _pow([1, -1], -2, N).lift()


# derived identities ---------------------------------------------------------------------


def _m(p) -> int:
    return int(p["m"])


def _u22_p(p):
    return {"rho": p["rho"], "alpha1": p["alpha1"], "s1": _H}


def _u22_F(p, o):
    return _u1_F(_u22_p(p), o) / factorial(_m(p))


def _u22_alpha(p, n_max):
    m = _m(p)
    base = _u1_alpha(_u22_p(p), n_max + m)
    return [Fraction(factorial(n + m), factorial(n) * factorial(m)) * base[n + m] for n in range(n_max + 1)]


def _u22_roots(p):
    rho, a1 = p["rho"], p["alpha1"]
    r = _rational_sqrt(rho * rho - 1)
    if r is None or r == 0:
        return None
    t1, t2 = rho - r, rho + r
    k = a1 - 2 * rho
    # partial fractions of (1 + k t)/((t1 - t)(t2 - t)); note the + sign on k
    c1 = (1 + k * t1) / (t2 - t1)
    c2 = (1 + k * t2) / (t1 - t2)
    return t1, t2, c1, c2


def _u22_closed(p, N):
    roots = _u22_roots(p)
    if roots is None:
        return None
    t1, t2, c1, c2 = roots
    rho, m = p["rho"], _m(p)
    out = None
    for ti, ci in ((t1, c1), (t2, c2)):
        den = _x_poly_series([[ti], [0, -1], [-(ti / 4 - rho / 2)]], N)
        term = (_one(N).lift() / den) ** (m + 1) * ci
        out = term if out is None else out + term
    return out


def _u22_valid(p):
    return _need_int("m")(p)


def _u22_pairs(p):
    return [("U1", _u22_p(p), _m(p), False)]


def _h30_F(p, o):
    return _gauss_factor(p["rho"], o) / 2 ** _m(p)


def _h30_alpha(p, n_max):
    rho, m = p["rho"], _m(p)
    return [Fraction(2**n, factorial(n)) * _hermite_val(n + m, rho) for n in range(n_max + 1)]


def _h30_closed(p, N):
    rho, m = p["rho"], _m(p)
    z, _, gauss = _hermite_blocks(rho, N)
    hm = poly_eval(family_sequence(hermite(), m)[m], z)
    return _pow([1, 0, -1], -Fraction(m + 1, 2), N).lift() * gauss * hm


def _h32_F(p, o):
    return _h44_F(p, o) / 2 ** _m(p)


def _h32_alpha(p, n_max):
    rho, m = p["rho"], _m(p)
    return [Fraction(2**n, factorial(n)) * _assoc1_val(n + m - 1, rho) for n in range(n_max + 1)]


def _h32_closed(p, N):
    rho, m = p["rho"], _m(p)
    z, kernel, _ = _hermite_blocks(rho, N)
    hm = poly_eval(family_sequence(hermite(), m)[m], z)
    assoc = poly_eval(_assoc1_poly(m - 1), z)
    return _pow([1, 0, -1], -Fraction(m + 1, 2), N).lift() * (assoc + kernel * hm)


def _h31_closed(p, N):
    rho, m = p["rho"], _m(p)
    shifted = _s([rho, -1], N)
    hm = poly_eval(family_sequence(hermite(), m)[m], shifted)
    return hm * _gauss_factor(rho, N)


def _h33_closed(p, N):
    rho, m = p["rho"], _m(p)
    shifted = _s([rho, -1], N)
    hm = poly_eval(family_sequence(hermite(), m)[m], shifted)
    assoc = poly_eval(_assoc1_poly(m - 1), shifted)
    return assoc + erfi_kernel(rho, N) * _gauss_factor(rho, N) * hm


def _j22_F(p, o):
    m = _m(p)
    return hypergeometric_series([Fraction(3, 2) + m, 1 + m], [2 + m], o)


def _j22_alpha(p, n_max):
    m = _m(p)
    return [
        poch(Fraction(3, 2) + m, n) * poch(1 + m, n) / (poch(2 + m, n) * factorial(n))
        for n in range(n_max + 1)
    ]


def _j22_closed(p, N):
    m = _m(p)
    # (x + 1) t / (1 + t/2)^2
    inner = _x_poly_series([[0], [1, 1]], N) * _pow([1, _H], -2, N).lift()
    f = hypergeometric_series([Fraction(3, 2) + m, 1 + m], [2 + m], N)
    return series_compose(f, inner) * _pow([1, _H], -2 - 2 * m, N).lift()


def _j333_F(p, o):
    a, b = p["alpha"], p["beta"]
    return hypergeometric_series([(a + b + 2) / 2, (a + b + 1) / 2], [a + 1], o, 2)


def _j333_alpha(p, n_max):
    a, b = p["alpha"], p["beta"]
    return [
        poch((a + b + 2) / 2, n) * poch((a + b + 1) / 2, n) * 2**n / (poch(a + 1, n) * factorial(n))
        for n in range(n_max + 1)
    ]


def _j333_closed(p, N):
    a, b = p["alpha"], p["beta"]
    inner = _x_poly_series([[0], [0, 2]], N) * _pow([1, -1], -2, N).lift()
    f = hypergeometric_series([(a + b + 2) / 2, (a + b + 1) / 2], [a + 1], N)
    return series_compose(f, inner) * _pow([1, -1], -(a + b + 1), N).lift()


def _j333_valid(p):
    a, b = p["alpha"], p["beta"]
    if (a + 1).denominator == 1 and a + 1 <= 0:
        return "alpha + 1 must not be a non-positive integer"
    s = a + b
    if s.denominator == 1 and s <= -1:
        return "alpha + beta must not be an integer <= -1"
    return None


def _j333_pairs(p):
    a, b = p["alpha"], p["beta"]
    twice_m = a + b - 1
    if twice_m.denominator != 1 or twice_m < 0 or twice_m % 2:
        return []
    m = int(twice_m) // 2
    base = {"alpha": a - m, "R0": Fraction(1)}
    if _j3_valid(base):
        return []
    return [("J3", base, m, True)]


def _l11_F(p, o):
    a, m = p["alpha"], _m(p)
    return hypergeometric_series([1 + m], [a + m + 1], o, -1)


def _l11_alpha(p, n_max):
    a, m = p["alpha"], _m(p)
    return [poch(1 + m, n) * (-1) ** n / (poch(a + m + 1, n) * factorial(n)) for n in range(n_max + 1)]


def _l11_closed(p, N):
    a, m = p["alpha"], _m(p)
    inner = _x_poly_series([[0], [0, -1]], N) / _s([1, -1], N).lift()
    f = hypergeometric_series([1 + m], [a + m + 1], N)
    return series_compose(f, inner) * _pow([1, -1], -1 - m, N).lift()


def _b11_F(p, o):
    m = _m(p)
    return hypergeometric_series([Fraction(3, 2) + m, 1 + m], [], o, 2)


def _b11_alpha(p, n_max):
    m = _m(p)
    return [poch(Fraction(3, 2) + m, n) * poch(1 + m, n) * 2**n / factorial(n) for n in range(n_max + 1)]


def _b11_closed(p, N):
    m = _m(p)
    inner = _x_poly_series([[0], [0, 2]], N) * _pow([1, -1], -2, N).lift()
    f = hypergeometric_series([Fraction(3, 2) + m, 1 + m], [], N)
    return series_compose(f, inner) * _pow([1, -1], -2 - 2 * m, N).lift()


# registry ----------------------------------------------------------------------

_M_GRID = (0, 1, 2, 3)


def _build_registry() -> dict:
    reg = {}

    def add(ident: GFIdentity):
        reg[ident.id] = ident

    lam_grid = [_g(**{"lambda": v}) for v in ("1/2", "1", "3/2", "2", "5/2")]

    add(GFIdentity(
        "Ultra1", "Ultra1", False, ("lambda",), lam_grid,
        family=lambda p: ultraspherical(p["lambda"]),
        A=lambda p, o: _one(o), R=lambda p, o: _quarter_R(o),
        F=lambda p, o: _pow([1, -1], -p["lambda"], o),
        alpha=lambda p, n: [poch(p["lambda"], k) / factorial(k) for k in range(n + 1)],
        closed_form=_ultra1_closed, validity=_ultra_valid, derivative_pairs=_ultra_pairs,
    ))
    add(GFIdentity(
        "Ultra2", "Ultra2", False, ("lambda",), lam_grid,
        family=lambda p: ultraspherical(p["lambda"]),
        A=_ultra2_A, R=lambda p, o: _coupled_R(_ultra2_A(p, o)),
        F=lambda p, o: _pow([1, -1], -p["lambda"] - 1, o),
        alpha=lambda p, n: [poch(p["lambda"] + 1, k) / factorial(k) for k in range(n + 1)],
        closed_form=_ultra2_closed, validity=_ultra_valid, derivative_pairs=_ultra2_pairs,
    ))
    add(GFIdentity(
        "T1", "T1", False, (), [{}],
        family=lambda p: chebyshev_t(),
        A=lambda p, o: _one(o), R=lambda p, o: _quarter_R(o),
        F=lambda p, o: 1 - series_log(_s([1, -1], o)),
        alpha=_t1_alpha, closed_form=_t1_closed,
        derivative_pairs=lambda p: [("Ultra1", {"lambda": Fraction(m)}, m, False) for m in (1, 2, 3)],
    ))
    add(GFIdentity(
        "U3", "U3", False, ("witness",), [_g(witness=w) for w in (0, 1, 2)],
        family=lambda p: chebyshev_u(),
        A=_u3_A, R=lambda p, o: _coupled_R(_u3_A(p, o)),
        F=lambda p, o: _one(o) / _s([1, -1], o),
        alpha=lambda p, n: [Fraction(1)] * (n + 1),
        closed_form=_cheb_u_closed, validity=_u3_valid,
        derivative_pairs=lambda p: [("Ultra1", {"lambda": Fraction(m + 1)}, m, False) for m in (1, 2, 3)],
        notes="A(t) arbitrary; witness 0 -> 1, 1 -> 1/(1-t), 2 -> exp(t)",
    ))
    add(GFIdentity(
        "U4", "U4", False, ("rho", "alpha1"),
        [_g(rho=r, alpha1=a) for r, a in (("1/2", "1"), ("1", "2"), ("3/2", "1/3"), ("1", "-1/2"))],
        family=lambda p: chebyshev_u(),
        A=lambda p, o: _one(o), R=lambda p, o: _s([0, 0, p["rho"] / 2], o),
        F=lambda p, o: _s([1, p["alpha1"] - 2 * p["rho"]], o) / _s([1, -2 * p["rho"]], o),
        alpha=_u4_alpha, closed_form=_u4_closed, validity=_u4_valid,
    ))
    add(GFIdentity(
        "U1", "U1", False, ("rho", "alpha1", "s1"),
        [_g(rho=r, alpha1=a, s1=s) for r, a, s in (
            ("1", "2", "1/2"), ("3/2", "1/5", "1/2"), ("3/2", "3", "1/2"), ("5/4", "1", "1/2"),
            ("3/2", "1/3", "1"), ("2", "1", "1"),
        )],
        family=lambda p: chebyshev_u(),
        A=_u1_A, R=_u1_R, F=_u1_F, alpha=_u1_alpha, closed_form=_u1_closed, validity=_u1_valid,
        notes="s1 is S_1; 1/2 and 1 give two normalizations with their own A, R, F and alpha_n",
    ))
    add(GFIdentity(
        "U2a", "U2 (first)", False, ("rho",), [_g(rho=r) for r in ("1", "3/2", "5/4")],
        family=lambda p: chebyshev_u(),
        A=lambda p, o: _u1_A(_u2a_p(p), o), R=lambda p, o: _u1_R(_u2a_p(p), o),
        F=lambda p, o: _u1_F(_u2a_p(p), o),
        alpha=lambda p, n: _u1_alpha(_u2a_p(p), n),
        closed_form=lambda p, N: _u1_closed(_u2a_p(p), N),
    ))
    add(GFIdentity(
        "U2b", "U2 (second)", False, ("rho",), [_g(rho=r) for r in ("1", "3/2", "5/4")],
        family=lambda p: chebyshev_u(),
        A=lambda p, o: _u1_A(_u2a_p(p), o), R=lambda p, o: _u1_R(_u2a_p(p), o),
        F=_u2b_F, alpha=_u2b_alpha, closed_form=_u2b_closed, normalized=False,
        notes="sum starts at n = 1 (alpha_0 = 0); proposition suite not applicable",
    ))
    add(GFIdentity(
        "H1", "H1", False, (), [{}],
        family=lambda p: hermite(),
        A=lambda p, o: _one(o), R=lambda p, o: _quarter_R(o),
        F=lambda p, o: _exp_series(o),
        alpha=lambda p, n: [Fraction(1, factorial(k)) for k in range(n + 1)],
        closed_form=lambda p, N: series_exp(_x_poly_series([[0], [0, 1], [Fraction(-1, 4)]], N)),
        derivative_pairs=lambda p: [("H1", {}, m, False) for m in (1, 2, 3)],
    ))
    rho_a1 = [_g(rho=r, alpha1=a) for r, a in (("1/2", "1/3"), ("1", "2"), ("3/2", "1"), ("1", "5"))]
    add(GFIdentity(
        "H2", "H2", False, ("rho", "alpha1"), rho_a1,
        family=lambda p: hermite(), A=_h2_A, R=_h2_R, F=_h2_F, alpha=_h2_alpha,
        closed_form=_h2_closed, validity=_nonzero_rho,
    ))
    rho_grid = [_g(rho=r) for r in ("1/2", "1", "3/2")]
    add(GFIdentity(
        "Mehler", "Mehler", False, ("rho",), rho_grid,
        family=lambda p: hermite(), A=_h2_A, R=_h2_R, F=_mehler_F, alpha=_mehler_alpha,
        closed_form=_mehler_closed, validity=_nonzero_rho,
    ))
    add(GFIdentity(
        "H44", "H44", False, ("rho",), rho_grid,
        family=lambda p: hermite(), A=_h2_A, R=_h2_R, F=_h44_F, alpha=_h44_alpha,
        closed_form=_h44_closed, normalized=False,
        notes="sum starts at n = 1 (alpha_0 = 0); proposition suite not applicable",
    ))
    add(GFIdentity(
        "J1", "J1", False, ("alpha",), [_g(alpha=a) for a in ("0", "1/2", "1", "2", "-1/3")],
        family=lambda p: jacobi(p["alpha"], p["alpha"] + 1),
        A=_j1_A, R=lambda p, o: _coupled_R(_j1_A(p, o)), F=_j1_F, alpha=_j1_alpha,
        closed_form=_j1_closed, validity=_j1_valid,
        derivative_pairs=lambda p: [("J1", {"alpha": p["alpha"] + m}, m, False) for m in (1, 2, 3)],
    ))
    add(GFIdentity(
        "J2", "J2", False, (), [{}],
        family=lambda p: jacobi(0, 1),
        A=_j2_A, R=lambda p, o: _coupled_R(_j2_A(p, o)), F=_j2_F, alpha=_j2_alpha,
        closed_form=_j2_closed, closed_factor=_j2_factor,
        notes="A(t) = (1 + t/2)^(-2)",
    ))
    add(GFIdentity(
        "J3", "J3", False, ("alpha", "R0"),
        [_g(alpha=a, R0=r) for a, r in (("0", "1"), ("1/2", "1"), ("2", "1"), ("0", "-1"), ("1/2", "-1"), ("1/3", "1"))],
        family=lambda p: jacobi(p["alpha"], 1 - p["alpha"]),
        A=_j3_A, R=_j3_R, F=_j3_F, alpha=_j3_alpha, closed_form=_j3_closed, validity=_j3_valid,
    ))
    add(GFIdentity(
        "GF3", "GF3", False, (), [{}],
        family=lambda p: jacobi(-1, 0),
        A=_gf3_A, R=lambda p, o: _coupled_R(_gf3_A(p, o)), F=_gf3_F, alpha=_gf3_alpha,
        closed_form=_gf3_closed,
    ))
    lag_grid = [_g(alpha=a) for a in ("0", "1/2", "1", "2")]
    add(GFIdentity(
        "L1", "L1", False, ("alpha",), lag_grid,
        family=lambda p: laguerre(p["alpha"]),
        A=_geo, R=lambda p, o: _zero(o), F=_l1_F, alpha=_l1_alpha, closed_form=_l1_closed,
        validity=_lag_valid,
    ))
    add(GFIdentity(
        "L2", "L2", False, ("alpha",), lag_grid,
        family=lambda p: laguerre(p["alpha"]),
        A=_geo, R=_l2_R, F=lambda p, o: _exp_series(o, -1), alpha=_l2_alpha, closed_form=_l2_closed,
        validity=_lag_valid, derivative_pairs=_l2_pairs,
    ))
    add(GFIdentity(
        "B1", "B1", False, (), [{}],
        family=lambda p: bessel(3),
        A=_b1_A, R=lambda p, o: _zero(o), F=_b1_F, alpha=_b1_alpha, closed_form=_b1_closed,
        formal_only=True, notes="2F0 is divergent; equality is of formal coefficient sequences",
    ))

    # derived identities
    add(GFIdentity(
        "U22", "U22", True, ("rho", "alpha1", "m"),
        [_g(rho=r, alpha1=a, m=m) for r, a in (("5/4", "1/2"), ("5/3", "2"), ("3/2", "1"), ("1/2", "1/3")) for m in _M_GRID],
        family=lambda p: ultraspherical(_m(p) + 1),
        A=lambda p, o: _u1_A(_u22_p(p), o), R=lambda p, o: _u1_R(_u22_p(p), o),
        F=_u22_F, alpha=_u22_alpha, k_power=lambda p: Fraction(_m(p) + 1), m_deriv=_m,
        closed_form=_u22_closed, validity=_u22_valid, derivative_pairs=_u22_pairs,
        notes="closed form needs rational sqrt(rho^2 - 1); other rho are covered by the derivative route",
    ))
    hm_grid = [_g(rho=r, m=m) for r in ("1/2", "1", "3/2") for m in _M_GRID]
    add(GFIdentity(
        "H30", "H30", True, ("rho", "m"), hm_grid,
        family=lambda p: hermite(), A=_h2_A, R=_h2_R, F=_h30_F, alpha=_h30_alpha,
        k_power=lambda p: Fraction(_m(p) + 1), m_deriv=_m, closed_form=_h30_closed,
        validity=_need_int("m"),
        derivative_pairs=lambda p: [("Mehler", {"rho": p["rho"]}, _m(p), False)] if _m(p) else [],
    ))
    add(GFIdentity(
        "H31", "H31", True, ("rho", "m"), hm_grid,
        alpha=_h30_alpha, closed_form=_h31_closed, validity=_need_int("m"), kind="univariate",
        notes="t-only limit of H30 (x -> x/t, t -> 0)",
    ))
    add(GFIdentity(
        "H32", "H32", True, ("rho", "m"), hm_grid,
        family=lambda p: hermite(), A=_h2_A, R=_h2_R, F=_h32_F, alpha=_h32_alpha,
        k_power=lambda p: Fraction(_m(p) + 1), m_deriv=_m, closed_form=_h32_closed,
        validity=_need_int("m"),
        derivative_pairs=lambda p: [("H44", {"rho": p["rho"]}, _m(p), False)] if _m(p) else [],
    ))
    add(GFIdentity(
        "H33", "H33", True, ("rho", "m"), hm_grid,
        alpha=_h32_alpha, closed_form=_h33_closed, validity=_need_int("m"), kind="univariate",
        notes="t-only limit of H32 (x -> x/t, t -> 0)",
    ))
    add(GFIdentity(
        "J22", "J22", True, ("m",), [_g(m=m) for m in _M_GRID],
        family=lambda p: jacobi(_m(p), _m(p) + 1),
        A=_j2_A, R=lambda p, o: _coupled_R(_j2_A(p, o)), F=_j22_F, alpha=_j22_alpha,
        k_power=lambda p: Fraction(_m(p) + 1), closed_form=_j22_closed, validity=_need_int("m"),
        derivative_pairs=lambda p: [("J2", {}, _m(p), False)] if _m(p) else [],
    ))
    add(GFIdentity(
        "J333", "J333", True, ("alpha", "beta"),
        [_g(alpha=a, beta=b) for a, b in (("1", "0"), ("3/2", "1/2"), ("2", "1"), ("5/2", "3/2"), ("1/2", "1/3"), ("1", "1"))],
        family=lambda p: jacobi(p["alpha"], p["beta"]),
        A=_j3_A, R=lambda p, o: _zero(o), F=_j333_F, alpha=_j333_alpha,
        k_power=lambda p: (p["alpha"] + p["beta"] + 1) / 2, closed_form=_j333_closed,
        validity=_j333_valid, shift_x=True, derivative_pairs=_j333_pairs,
        notes="polynomials are P^(alpha,beta)(x + 1)",
    ))
    add(GFIdentity(
        "L11", "L11", True, ("alpha", "m"), [_g(alpha=a, m=m) for a in ("0", "1/2", "2") for m in _M_GRID],
        family=lambda p: laguerre(p["alpha"] + _m(p)),
        A=_geo, R=lambda p, o: _zero(o), F=_l11_F, alpha=_l11_alpha,
        k_power=lambda p: Fraction(_m(p) + 1), closed_form=_l11_closed,
        validity=_all(_need_int("m"), _lag_valid),
        derivative_pairs=lambda p: [("L1", {"alpha": p["alpha"]}, _m(p), False)] if _m(p) else [],
    ))
    add(GFIdentity(
        "B11", "B11", True, ("m",), [_g(m=m) for m in _M_GRID],
        family=lambda p: bessel(3 + 2 * _m(p)),
        A=_b1_A, R=lambda p, o: _zero(o), F=_b11_F, alpha=_b11_alpha,
        k_power=lambda p: Fraction(_m(p) + 1), closed_form=_b11_closed, validity=_need_int("m"),
        formal_only=True,
        derivative_pairs=lambda p: [("B1", {}, _m(p), False)] if _m(p) else [],
    ))
    add(GFIdentity(
        "F415", "Hermite convolution", True, ("m",), [_g(m=m) for m in range(1, 9)],
        validity=_need_int("m", 1), kind="convolution",
        notes="H_{m-1}(r,1) = sum_k (-1)^(k-1) C(m,k) Hc_{k-1}(r) H_{m-k}(r), Hc_n(r) = i^-n H_n(i r)",
    ))
    return reg


REGISTRY = _build_registry()


def get_identity(identity_id: str) -> GFIdentity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {identity_id!r}") from None


def registry_list() -> list:
    """Descriptors of every registered identity."""
    return [ident.describe() for ident in REGISTRY.values()]


def alpha_builders(identity_id: str, params: Params, n_max: int) -> list:
    """The exact coefficient sequence alpha_0..alpha_{n_max} of an identity."""
    ident = get_identity(identity_id)
    p = ident.check_params(params)
    if ident.alpha is None:
        raise ValueError(f"{identity_id} has no coefficient sequence")
    return ident.alpha(p, n_max)
