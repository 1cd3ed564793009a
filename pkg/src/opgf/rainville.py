"""Rainville-type generating functions  A(t)^k F^{(m)}(x t A(t) - R(t)).

This module holds the coefficient machinery that links a generating triple
(A, R, F) to the recurrence of the generated monic family:

* S_n, R_n: coefficients of A'/A and R'/A;
* the table A^k_n expressing x P_n' - n P_n in the basis {P'_{n-k}};
* the five compatibility relations between that table and (beta_n, omega_n),
  the vanishing corollaries and their symmetric forms;
* the bivariate expansion of the generating function itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import ZeroAlpha
from .exact_arith import Poly, poly_derivative
from .families import FamilySpec, family_sequence, hermite, associated_hermite_family
from .families import hermite_sign_flipped
from .fps import Series, series_compose, series_derivative, series_div, series_powq

__all__ = [
    "RainvilleCoeffs",
    "AknTable",
    "GFExpansion",
    "CheckResult",
    "compute_S_R",
    "akn_table",
    "verify_prop1",
    "verify_prop2",
    "verify_prop3",
    "verify_corollaries",
    "expand_gf",
    "coefficient_match",
    "hermite_convolution",
]

_ZERO = Fraction(0)


@dataclass
class CheckResult:
    """Outcome of one verification; falsy on failure.

    ``first_failure`` is the smallest index ``n`` at which the check broke,
    ``detail`` a short human-readable reason.
    """

    name: str
    ok: bool
    first_failure: int | None = None
    detail: str = ""
    expected: str | None = None
    actual: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RainvilleCoeffs:
    S: tuple
    Rc: tuple

    @property
    def order(self) -> int:
        return len(self.S) - 1

    def s(self, k: int) -> Fraction:
        return self.S[k] if k >= 0 else _ZERO

    def r(self, k: int) -> Fraction:
        return self.Rc[k] if k >= 0 else _ZERO


def compute_S_R(A: Series, R: Series) -> RainvilleCoeffs:
    """A'/A = sum S_n t^n and R'/A = sum R_n t^n."""
    if A[0] != 1:
        raise ValueError("A(0) must be 1")
    if R[0] != 0:
        raise ValueError("R(0) must be 0")
    n = min(A.order, R.order)
    a = A.truncate(n - 1)
    S = series_div(series_derivative(A.truncate(n)), a)
    Rc = series_div(series_derivative(R.truncate(n)), a)
    return RainvilleCoeffs(tuple(S.coeffs), tuple(Rc.coeffs))


@dataclass
class AknTable:
    """A^k_n for 0 <= k < n <= n_max; entries with n <= k read as zero."""

    values: dict
    n_max: int

    def __getitem__(self, key) -> Fraction:
        k, n = key
        if k < 0 or n <= k:
            return _ZERO
        if n > self.n_max:
            raise KeyError(f"A^{k}_{n} outside table (n_max={self.n_max})")
        return self.values[(k, n)]

    def copy(self) -> "AknTable":
        return AknTable(dict(self.values), self.n_max)


def akn_table(rc: RainvilleCoeffs, alpha: Sequence, spec: FamilySpec, n_max: int) -> AknTable:
    """Build A^k_n from S, R, alpha and the family's (beta_n, omega_n)."""
    if rc.order < n_max - 1:
        raise ValueError(f"need S, R through index {n_max - 1}, have {rc.order}")
    if len(alpha) <= n_max:
        raise ValueError("alpha sequence too short")
    for n in range(n_max + 1):
        if alpha[n] == 0:
            raise ZeroAlpha(n)
    beta = [spec.beta(n) for n in range(n_max + 1)]
    omega = [None] + [spec.omega(n) for n in range(1, n_max + 1)]
    S, Rk = rc.s, rc.r
    values = {}
    for n in range(1, n_max + 1):
        an = alpha[n]
        for k in range(n):
            v = -S(k) * (alpha[n - k - 1] if n - k - 1 >= 0 else 0)
            if k >= 1:
                v -= S(k - 1) * alpha[n - k] * beta[n - k]
            if k >= 2:
                v -= S(k - 2) * alpha[n - k + 1] * omega[n - k + 1]
            v += Rk(k) * alpha[n - k]
            values[(k, n)] = v / an
    return AknTable(values, n_max)


# Propositions -----------------------------------------------------------------


def _poly_mismatch(name, n, lhs: Poly, rhs: Poly) -> CheckResult:
    return CheckResult(name, False, n, f"identity fails at n={n}", rhs.render(), lhs.render())


def verify_prop1(A: Series, R: Series, F: Series, polys: Sequence[Poly], n_max: int) -> CheckResult:
    """alpha_n (x P_n' - n P_n) = -sum S_k alpha_{n-k-1} (x P'_{n-k-1} + P_{n-k-1})
    + sum R_k alpha_{n-k} P'_{n-k}, checked for 1 <= n <= n_max."""
    name = "prop1"
    rc = compute_S_R(A, R)
    alpha = F.coeffs
    x = Poly.x()
    d = [poly_derivative(p) for p in polys[: n_max + 1]]
    for n in range(1, n_max + 1):
        lhs = (x * d[n] - polys[n] * n) * alpha[n]
        rhs = Poly()
        for k in range(n):
            m = n - k - 1
            if rc.s(k):
                rhs = rhs - (x * d[m] + polys[m]) * (rc.s(k) * alpha[m])
            if rc.r(k):
                rhs = rhs + d[n - k] * (rc.r(k) * alpha[n - k])
        if lhs != rhs:
            return _poly_mismatch(name, n, lhs, rhs)
    return CheckResult(name, True)


def verify_prop2(table: AknTable, polys: Sequence[Poly], n_max: int) -> CheckResult:
    """x P_n' - n P_n = sum_{k<n} A^k_n P'_{n-k} for 1 <= n <= n_max."""
    name = "prop2"
    x = Poly.x()
    d = [poly_derivative(p) for p in polys[: n_max + 1]]
    for n in range(1, n_max + 1):
        lhs = x * d[n] - polys[n] * n
        rhs = Poly()
        for k in range(n):
            rhs = rhs + d[n - k] * table[k, n]
        if lhs != rhs:
            return _poly_mismatch(name, n, lhs, rhs)
    return CheckResult(name, True)


def _relations(table: AknTable, spec: FamilySpec, n_max: int):
    """Yield (label, n, lhs, rhs) for the five compatibility relations."""
    A = table
    b = spec.beta
    w = spec.omega
    top = min(n_max, A.n_max - 1)
    for n in range(0, top + 1):
        yield "i", n, b(n), (n + 1) * A[0, n + 1] - n * A[0, n]
    for n in range(1, top + 1):
        rhs = (
            Fraction(n, 2) * A[1, n + 1]
            - Fraction(n - 1, 2) * A[1, n]
            - Fraction(n, 2 * (n + 1)) * (b(n) - A[0, n]) ** 2
        )
        yield "ii", n, w(n), rhs
    for n in range(2, top + 1):
        lhs = A[2, n + 1] - Fraction(n - 2, n - 1) * A[2, n]
        rhs = w(n) * (
            Fraction(1, n + 1) * b(n)
            + Fraction(2, n) * b(n - 1)
            - Fraction(n + 2, n) * A[0, n - 1]
            + Fraction(n, n + 1) * A[0, n]
        ) + A[1, n] * (
            -Fraction(n + 2, n + 1) * b(n)
            + Fraction(n - 1, n) * b(n - 1)
            + Fraction(1, n + 1) * A[0, n]
            + Fraction(1, n) * A[0, n - 1]
        )
        yield "iii", n, lhs, rhs
    for n in range(3, top + 1):
        lhs = Fraction(2, n) * w(n) * w(n - 1)
        rhs = (
            A[3, n + 1]
            - Fraction(n - 3, n - 2) * A[3, n]
            + Fraction(n + 2, n) * w(n) * A[1, n - 1]
            - Fraction(n - 1, n) * w(n - 1) * A[1, n]
            - Fraction(1, n) * A[1, n] * A[1, n - 1]
            - (
                -Fraction(n + 2, n + 1) * b(n)
                + Fraction(n - 2, n - 1) * b(n - 2)
                + Fraction(1, n + 1) * A[0, n]
                + Fraction(1, n - 1) * A[0, n - 2]
            )
            * A[2, n]
        )
        yield "iv", n, lhs, rhs
    for k in range(4, top + 1):
        for n in range(k, top + 1):
            lhs = (
                A[k, n + 1]
                - Fraction(n - k, n - k + 1) * A[k, n]
                + (Fraction(n + 2, n + 1) * b(n) - Fraction(n - k + 1, n - k + 2) * b(n - k + 1))
                * A[k - 1, n]
                + Fraction(n + 2, n) * w(n) * A[k - 2, n - 1]
                - Fraction(n - k + 2, n - k + 3) * w(n - k + 2) * A[k - 2, n]
            )
            rhs = sum(
                (A[k - l - 1, n] * A[l, n - k + l + 1] / (n - k + l + 2) for l in range(k)),
                _ZERO,
            )
            yield f"v(k={k})", n, lhs, rhs


def verify_prop3(table: AknTable, spec: FamilySpec, n_max: int) -> CheckResult:
    """Check the relations (i)-(v) linking A^k_n to beta_n and omega_n.

    Relation (v) runs over 4 <= k <= n.  Indices needing A^k_{n+1} beyond the
    table are skipped, so build the table one step past ``n_max``.
    """
    for label, n, lhs, rhs in _relations(table, spec, n_max):
        if lhs != rhs:
            return CheckResult("prop3", False, n, f"relation {label} fails at n={n}", str(lhs), str(rhs))
    return CheckResult("prop3", True)


def verify_corollaries(table: AknTable, symmetric: bool, n_max: int, spec: FamilySpec | None = None) -> CheckResult:
    """Vanishing corollary and, for symmetric families, the even-k forms.

    If A^2_n = 0 (n >= 3) and A^3_n = 0 (n >= 4) throughout the table then
    every A^k_n with k >= 4 must vanish.  For symmetric families all even-k
    entries must vanish and, given ``spec``, the reduced relations for
    omega_n must hold.
    """
    name = "corollaries"
    A = table
    top = min(n_max, A.n_max)
    low_vanish = all(A[2, n] == 0 for n in range(3, top + 1)) and all(
        A[3, n] == 0 for n in range(4, top + 1)
    )
    if low_vanish:
        for k in range(4, top):
            for n in range(k + 1, top + 1):
                if A[k, n] != 0:
                    return CheckResult(name, False, n, f"A^{k}_{n} = {A[k, n]} should vanish")
    if not symmetric:
        return CheckResult(name, True)
    for k in range(0, top, 2):
        for n in range(k + 1, top + 1):
            if A[k, n] != 0:
                return CheckResult(name, False, n, f"symmetric family but A^{k}_{n} = {A[k, n]}")
    if spec is None:
        return CheckResult(name, True)
    w = spec.omega
    inner = min(top, A.n_max - 1)
    for n in range(1, inner + 1):
        rhs = Fraction(n, 2) * A[1, n + 1] - Fraction(n - 1, 2) * A[1, n]
        if w(n) != rhs:
            return CheckResult(name, False, n, f"reduced omega relation fails at n={n}", str(w(n)), str(rhs))
    for n in range(3, inner + 1):
        lhs = Fraction(2, n) * w(n) * w(n - 1)
        rhs = (
            A[3, n + 1]
            - Fraction(n - 3, n - 2) * A[3, n]
            + Fraction(n + 2, n) * w(n) * A[1, n - 1]
            - Fraction(n - 1, n) * w(n - 1) * A[1, n]
            - Fraction(1, n) * A[1, n] * A[1, n - 1]
        )
        if lhs != rhs:
            return CheckResult(name, False, n, f"reduced omega-product relation fails at n={n}")
    for k in range(2, inner):
        for n in range(2 * k + 1, inner + 1):
            j = 2 * k + 1
            lhs = (
                A[j, n + 1]
                - Fraction(n - j, n - j + 1) * A[j, n]
                + Fraction(n + 2, n) * w(n) * A[j - 2, n - 1]
                - Fraction(n - j + 2, n - j + 3) * w(n - j + 2) * A[j - 2, n]
            )
            rhs = sum(
                (
                    A[j - 2 * l - 2, n] * A[2 * l + 1, n - j + 2 * l + 2] / (n - j + 2 * l + 3)
                    for l in range(k)
                ),
                _ZERO,
            )
            if lhs != rhs:
                return CheckResult(name, False, n, f"odd-k reduced relation fails at k={j}, n={n}")
    return CheckResult(name, True)


# Generating-function expansion ---------------------------------------------------


@dataclass
class GFExpansion:
    """Coefficient polynomials of a bivariate generating function.

    ``coeff_polys[n]`` is the coefficient of t^n; ``alpha`` is the target
    coefficient sequence when known.
    """

    coeff_polys: list
    alpha: list | None = None
    meta: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.coeff_polys) - 1


def inner_argument(A: Series, R: Series) -> Series:
    """u(t) = x t A(t) - R(t) as a series with Poly coefficients."""
    n = min(A.order, R.order)
    coeffs = [Poly()]
    for j in range(1, n + 1):
        coeffs.append(Poly([-R[j], A[j - 1]]))
    return Series(coeffs, n)


def expand_gf(A: Series, F: Series, R: Series, k_power=1, m_deriv: int = 0, N: int | None = None) -> GFExpansion:
    """Expand A(t)^k F^{(m)}(x t A(t) - R(t)) to order N.

    F must carry at least N + m coefficients past the constant term, since
    each derivative costs one order.
    """
    if N is None:
        N = min(A.order, R.order, F.order - m_deriv)
    if A[0] != 1 or R[0] != 0:
        raise ValueError("need A(0) = 1 and R(0) = 0")
    if F.order < N + m_deriv or A.order < N or R.order < N:
        raise ValueError(f"inputs too short for order {N} with m = {m_deriv}")
    G = F.truncate(N + m_deriv)
    for _ in range(m_deriv):
        G = series_derivative(G)
    u = inner_argument(A.truncate(N), R.truncate(N))
    body = series_compose(G, u)
    k = Fraction(k_power)
    if k != 0:
        B = A.truncate(N) ** k if k.denominator == 1 and k > 0 else series_powq(A.truncate(N), k)
        body = body * B.lift()
    return GFExpansion(list(body.coeffs))


def coefficient_match(exp: GFExpansion, alpha: Sequence, polys: Sequence[Poly], name: str = "coefficient-match") -> CheckResult:
    """coeff_polys[n] == alpha[n] * P_n for every n of the expansion."""
    for n, got in enumerate(exp.coeff_polys):
        want = polys[n] * alpha[n]
        if got != want:
            return CheckResult(name, False, n, f"coefficient of t^{n} differs", want.render(), got.render())
    return CheckResult(name, True)


def hermite_convolution(m: int) -> bool:
    """H_{m-1}(r,1) = sum_{k=1}^m (-1)^{k-1} C(m,k) Hc_{k-1}(r) H_{m-k}(r) in Q[r].

    Hc is the sign-flipped Hermite polynomial i^{-n} H_n(i r).
    """
    if m < 1:
        raise ValueError("m >= 1")
    lhs = family_sequence(associated_hermite_family(1), m - 1)[m - 1]
    H = family_sequence(hermite(), m)
    rhs = Poly()
    for k in range(1, m + 1):
        term = hermite_sign_flipped(k - 1) * H[m - k] * comb(m, k)
        rhs = rhs + (term if k % 2 == 1 else -term)
    return lhs == rhs
