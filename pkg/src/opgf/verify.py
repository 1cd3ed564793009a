"""Verification driver: one job per (identity, parameter point, order).

``verify_identity`` runs every applicable check and returns a
:class:`Report`; ``run_all`` fans a whole configuration out over a worker pool
and aggregates the reports.  Reports serialize to JSON deterministically
apart from the ``elapsed`` field.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .errors import ConfigError, InvalidParameters
from .exact_arith import Poly, as_rational, poly_derivative
from .families import family_sequence
from .fps import Series
from .identities import REGISTRY, GFIdentity, get_identity
from .rainville import (
    CheckResult,
    GFExpansion,
    akn_table,
    coefficient_match,
    compute_S_R,
    expand_gf,
    hermite_convolution,
    verify_corollaries,
    verify_prop1,
    verify_prop2,
    verify_prop3,
)

__all__ = [
    "DEFAULT_ORDER",
    "Report",
    "RunConfig",
    "verify_identity",
    "parse_config",
    "load_config",
    "run_all",
    "exit_code",
    "dump_reports",
]

DEFAULT_ORDER = 12
_X1 = Poly([1, 1])


@dataclass
class Report:
    """Result of one verification job."""

    id: str
    params: dict
    order: int
    status: str
    checks: dict
    first_mismatch: dict | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# building blocks ---------------------------------------------------------------


def _perturbed(series: Series, name: str, perturb) -> Series:
    if perturb is None or perturb[0] != name:
        return series
    _, index, delta = perturb
    if index >= len(series):
        return series
    coeffs = list(series.coeffs)
    coeffs[index] = coeffs[index] + as_rational(delta)
    return Series(coeffs, series.order)


def _inputs(ident: GFIdentity, p: dict, N: int, perturb=None):
    o = N + ident.m_deriv(p) + 2
    A = _perturbed(ident.A(p, o), "A", perturb)
    R = _perturbed(ident.R(p, o), "R", perturb)
    F = _perturbed(ident.F(p, o), "F", perturb)
    return A, R, F


def _family_polys(ident: GFIdentity, p: dict, N: int) -> list:
    polys = family_sequence(ident.family(p), N)
    if ident.shift_x:
        polys = [q.compose(_X1) for q in polys]
    return polys


def _expansion(ident: GFIdentity, p: dict, N: int, perturb=None) -> list:
    A, R, F = _inputs(ident, p, N, perturb)
    return expand_gf(A, F, R, ident.k_power(p), ident.m_deriv(p), N).coeff_polys


def _series_match(name: str, got: Series, want: Series) -> CheckResult:
    for n, (g, w) in enumerate(zip(got.coeffs, want.coeffs)):
        if g != w:
            render = (lambda c: c.render()) if isinstance(g, Poly) else str
            return CheckResult(name, False, n, f"coefficient of t^{n} differs", render(w), render(g))
    return CheckResult(name, True)


def _closed_form_check(ident: GFIdentity, p: dict, lhs: Series, N: int) -> CheckResult | None:
    rhs = ident.closed_form(p, N)
    if rhs is None:
        return None
    if ident.closed_factor is not None:
        lhs = ident.closed_factor(p, N) * lhs
    return _series_match("closed-form", lhs, rhs)


def _f_consistency(F: Series, alpha: list, N: int) -> CheckResult:
    for n in range(N + 1):
        if F[n] != alpha[n]:
            return CheckResult("f-consistency", False, n, f"F coefficient {n} is not alpha_{n}", str(alpha[n]), str(F[n]))
    return CheckResult("f-consistency", True)


def _is_even(s: Series) -> bool:
    return all(not c for c in s.coeffs[1::2])


def _parity_check(A: Series, R: Series, N: int) -> CheckResult:
    rc = compute_S_R(A, R)
    for k in range(0, min(N, rc.order) + 1, 2):
        if rc.s(k) or rc.r(k):
            return CheckResult("symmetric-SR", False, k, f"S_{k} = {rc.s(k)}, R_{k} = {rc.r(k)}")
    return CheckResult("symmetric-SR", True)


def _derivative_route(base: list, derived: list, m: int, shift: bool, label: str) -> CheckResult:
    """derived[n] == c * d^m/dx^m base[n + m] for one nonzero constant c."""
    name = "derivative-route"
    D = [poly_derivative(base[n + m], m) for n in range(len(derived))]
    if shift:
        D = [d.compose(_X1) for d in D]
    ratio = None
    for n, (d, e) in enumerate(zip(D, derived)):
        if ratio is None and (d or e):
            if not (d and e):
                return CheckResult(name, False, n, f"{label}: one side vanishes", e.render(), d.render())
            ratio = d.lead() / e.lead()
        if ratio is not None and d != e * ratio:
            return CheckResult(name, False, n, f"{label}: termwise mismatch", (e * ratio).render(), d.render())
    return CheckResult(name, True, detail=f"{label}: constant {ratio}")


def _combine_routes(results: list) -> CheckResult:
    for r in results:
        if not r.ok:
            return r
    return CheckResult("derivative-route", True, detail="; ".join(r.detail for r in results))


def _fmt_params(p: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in p.items())


# the job -----------------------------------------------------------------------


def _rainville_checks(ident: GFIdentity, p: dict, N: int, perturb) -> list:
    A, R, F = _inputs(ident, p, N, perturb)
    m = ident.m_deriv(p)
    expansion = expand_gf(A, F, R, ident.k_power(p), m, N).coeff_polys
    polys = _family_polys(ident, p, N)
    alpha = ident.alpha(p, N + 1)
    checks = [coefficient_match(GFExpansion(expansion), alpha, polys)]
    closed = _closed_form_check(ident, p, Series(expansion, N), N)
    if closed is not None:
        checks.append(closed)

    if not ident.derived:
        spec = ident.family(p)
        family = family_sequence(spec, N + 1)
        checks.append(_f_consistency(F, alpha, N))
        # prop1 never divides by alpha_n, so it also covers sums starting at n = 1
        checks.append(verify_prop1(A, R, F, family, N))
    if not ident.derived and ident.normalized:
        table = akn_table(compute_S_R(A, R), alpha, spec, N + 1)
        checks.append(verify_prop2(table, family, N))
        checks.append(verify_prop3(table, spec, N))
        checks.append(verify_corollaries(table, spec.symmetric, N, spec))
        o = N + 2
        if spec.symmetric and _is_even(ident.A(p, o)) and _is_even(ident.R(p, o)):
            checks.append(_parity_check(A, R, N))

    routes = []
    for other_id, other_p, mm, shift in ident.derivative_pairs(p):
        if mm > N:
            continue
        other = get_identity(other_id)
        op = other.check_params(other_p)
        label = f"{other_id}({_fmt_params(op)}), m={mm}"
        if ident.derived:
            base = _expansion(other, op, N)
            routes.append(_derivative_route(base, expansion[: N - mm + 1], mm, shift, label))
        else:
            derived = _expansion(other, op, N - mm)
            routes.append(_derivative_route(expansion, derived, mm, shift, label))
    if routes:
        checks.append(_combine_routes(routes))
    return checks


_LIMIT_SOURCE = {"H31": "H30", "H33": "H32"}


def _univariate_checks(ident: GFIdentity, p: dict, N: int, perturb) -> list:
    source = get_identity(_LIMIT_SOURCE[ident.id])
    expansion = _expansion(source, p, N, perturb)
    # x -> x/t, t -> 0 keeps only the top coefficient of each t^n polynomial
    limit = Series([q[n] for n, q in enumerate(expansion)], N)
    alpha = ident.alpha(p, N)
    checks = [_series_match("coefficient-match", limit, Series(alpha, N))]
    checks.append(_series_match("closed-form", limit, ident.closed_form(p, N)))
    return checks


def _convolution_checks(ident: GFIdentity, p: dict) -> list:
    m = int(p["m"])
    ok = hermite_convolution(m)
    return [CheckResult("hermite-convolution", ok, None if ok else m, "" if ok else f"fails at m={m}")]


def _check_alpha(ident: GFIdentity, p: dict, N: int):
    if ident.kind != "rainville" or ident.derived or not ident.normalized:
        return
    for n, a in enumerate(ident.alpha(p, N + 1)):
        if a == 0:
            raise InvalidParameters(f"{ident.id}({_fmt_params(p)}): alpha_{n} = 0")


def verify_identity(identity_id: str, params: dict | None = None, N: int = DEFAULT_ORDER, perturb=None) -> Report:
    """Run every applicable check for one identity at one parameter point.

    ``perturb`` is a testing hook ``(series, index, delta)`` with series in
    ``"A"``, ``"R"``, ``"F"``: the coefficient is shifted before any check
    runs, which must make the job fail.
    """
    ident = get_identity(identity_id)
    if N < 0:
        raise ValueError("order must be >= 0")
    p = ident.check_params(dict(params or {}))
    _check_alpha(ident, p, N)
    start = time.perf_counter()
    if ident.kind == "rainville":
        results = _rainville_checks(ident, p, N, perturb)
    elif ident.kind == "univariate":
        results = _univariate_checks(ident, p, N, perturb)
    else:
        results = _convolution_checks(ident, p)
    elapsed = time.perf_counter() - start

    checks = {}
    first = None
    for r in results:
        entry = {"ok": r.ok}
        if r.first_failure is not None:
            entry["n"] = r.first_failure
        if r.detail:
            entry["detail"] = r.detail
        checks[r.name] = entry
        if not r.ok and first is None and r.first_failure is not None:
            first = {"check": r.name, "n": r.first_failure, "expected": r.expected, "actual": r.actual}
    status = "pass" if all(r.ok for r in results) else "fail"
    return Report(
        id=identity_id,
        params={k: str(v) for k, v in p.items()},
        order=N,
        status=status,
        checks=checks,
        first_mismatch=first,
        elapsed=round(elapsed, 6),
    )


# configuration -----------------------------------------------------------------


@dataclass
class RunConfig:
    """Batch settings: which identities, at which points, to which order."""

    order: int = DEFAULT_ORDER
    jobs: int = 1
    identities: list = field(default_factory=lambda: list(REGISTRY))
    grids: dict = field(default_factory=dict)

    def job_list(self) -> list:
        out = []
        for ident_id in self.identities:
            ident = REGISTRY[ident_id]
            points = self.grids.get(ident_id, ident.default_grid)
            for point in points:
                out.append((ident_id, {k: str(v) for k, v in point.items()}, self.order))
        return out


def _parse_point(text: str) -> dict:
    point = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise ConfigError(f"expected name=value, got {item!r}")
        name, value = (s.strip() for s in item.split("=", 1))
        try:
            point[name] = as_rational(value)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"{name}: {value!r} is not a rational p/q") from None
    return point


def parse_config(text: str) -> RunConfig:
    """Parse the key/value config format (see README).

    Recognized keys: ``order``, ``jobs``, ``identities`` (comma list or
    ``all``) and ``grid.<ID>`` (points separated by ``;``, each a comma list
    of ``name=p/q``).  Every grid point is validated here, so a bad config
    fails before any job runs.
    """
    cfg = RunConfig()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in ("order", "jobs"):
            try:
                n = int(value)
            except ValueError:
                raise ConfigError(f"line {lineno}: {key} must be an integer") from None
            if n < (0 if key == "order" else 1):
                raise ConfigError(f"line {lineno}: {key} out of range")
            setattr(cfg, key, n)
        elif key == "identities":
            ids = [s.strip() for s in value.split(",") if s.strip()]
            if ids == ["all"]:
                ids = list(REGISTRY)
            for i in ids:
                if i not in REGISTRY:
                    raise ConfigError(f"line {lineno}: unknown identity {i!r}")
            cfg.identities = ids
        elif key.startswith("grid."):
            ident_id = key[5:]
            if ident_id not in REGISTRY:
                raise ConfigError(f"line {lineno}: unknown identity {ident_id!r}")
            points = [_parse_point(s) for s in value.split(";") if s.strip()]
            cfg.grids[ident_id] = points
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    for ident_id, points in cfg.grids.items():
        for point in points:
            try:
                REGISTRY[ident_id].check_params(point)
            except InvalidParameters as exc:
                raise ConfigError(str(exc)) from None
    return cfg


def load_config(path) -> RunConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_config(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None


def _run_job(job) -> dict:
    ident_id, params, order = job
    return verify_identity(ident_id, params, order).to_dict()


def run_all(config: RunConfig | None = None) -> dict:
    """Run every (identity, grid point) job and aggregate.

    Returns ``{"jobs": [report dicts], "summary": {...}}``; job order follows
    the configuration regardless of the worker count.
    """
    cfg = config or RunConfig()
    jobs = cfg.job_list()
    for ident_id, params, order in jobs:
        ident = REGISTRY[ident_id]
        try:
            _check_alpha(ident, ident.check_params(params), order)
        except InvalidParameters as exc:
            raise ConfigError(str(exc)) from None
    start = time.perf_counter()
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(_run_job, jobs))
    else:
        reports = [_run_job(j) for j in jobs]
    passed = sum(r["status"] == "pass" for r in reports)
    summary = {
        "total": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
        "order": cfg.order,
        "elapsed": round(time.perf_counter() - start, 6),
    }
    return {"jobs": reports, "summary": summary}


def exit_code(result: dict) -> int:
    return 0 if result["summary"]["failed"] == 0 else 1


def dump_reports(result: dict) -> str:
    return json.dumps(result, indent=2, sort_keys=True)
