"""Command-line front end: ``opgf list | verify | run-all``.

Exit codes: 0 all checks passed, 1 a mathematical mismatch, 2 a usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ConfigError, InvalidParameters, UnknownIdentity
from .identities import registry_list
from .verify import DEFAULT_ORDER, RunConfig, dump_reports, exit_code, load_config, run_all, verify_identity


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _param(text: str):
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected name=p/q, got {text!r}")
    name, value = text.split("=", 1)
    return name.strip(), value.strip()


def _perturb(text: str):
    # hidden mutation-testing hook: SERIES:INDEX:DELTA, e.g. R:3:1
    try:
        series, index, delta = text.split(":")
        if series not in ("A", "R", "F"):
            raise ValueError
        return series, int(index), delta
    except ValueError:
        raise argparse.ArgumentTypeError("expected A|R|F:index:p/q") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="opgf", description="Exact verification of generating functions for monic orthogonal polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("list", help="list registered identities")

    v = sub.add_parser("verify", help="verify one identity at one parameter point")
    v.add_argument("--id", required=True, dest="identity")
    v.add_argument("--param", action="append", type=_param, default=[], metavar="NAME=P/Q")
    v.add_argument("--order", type=int, default=DEFAULT_ORDER)
    v.add_argument("--report", metavar="OUT.json")
    v.add_argument("--perturb", type=_perturb, help=argparse.SUPPRESS)

    r = sub.add_parser("run-all", help="verify every identity over its parameter grid")
    r.add_argument("--config", metavar="FILE")
    r.add_argument("--jobs", type=int)
    r.add_argument("--order", type=int)
    r.add_argument("--report", metavar="OUT.json")
    return parser


def _write(path, text):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _cmd_list(args) -> int:
    for d in registry_list():
        params = ", ".join(d["params"]) or "-"
        flag = "  [formal]" if d["formal_only"] else ""
        print(f"{d['id']:<8} {params:<24} {d['equation']}{flag}")
    return 0


def _cmd_verify(args) -> int:
    params = dict(args.param)
    if args.order < 0:
        raise ConfigError("--order must be >= 0")
    report = verify_identity(args.identity, params, args.order, perturb=args.perturb)
    result = {"jobs": [report.to_dict()], "summary": {"total": 1, "passed": int(report.passed), "failed": int(not report.passed), "order": args.order, "elapsed": report.elapsed}}
    print(f"{report.id} {json.dumps(report.params, sort_keys=True)} N={report.order}: {report.status}")
    for name, entry in report.checks.items():
        mark = "ok" if entry["ok"] else "FAIL"
        print(f"  {name:<18} {mark}  {entry.get('detail', '')}".rstrip())
    if report.first_mismatch:
        fm = report.first_mismatch
        print(f"  first mismatch at n={fm['n']} ({fm['check']}): expected {fm['expected']}, got {fm['actual']}")
    _write(args.report, dump_reports(result))
    return exit_code(result)


def _cmd_run_all(args) -> int:
    cfg = load_config(args.config) if args.config else RunConfig()
    if args.jobs is not None:
        if args.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        cfg.jobs = args.jobs
    if args.order is not None:
        if args.order < 0:
            raise ConfigError("--order must be >= 0")
        cfg.order = args.order
    result = run_all(cfg)
    for job in result["jobs"]:
        if job["status"] != "pass":
            print(f"FAIL {job['id']} {json.dumps(job['params'], sort_keys=True)}: {job['first_mismatch']}")
    s = result["summary"]
    print(f"{s['passed']}/{s['total']} jobs passed at order {s['order']} ({s['elapsed']:.2f}s)")
    _write(args.report, dump_reports(result))
    return exit_code(result)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"list": _cmd_list, "verify": _cmd_verify, "run-all": _cmd_run_all}[args.command]
    try:
        return handler(args)
    except (ConfigError, InvalidParameters) as exc:
        print(f"opgf: error: {exc}", file=sys.stderr)
        return 2
    except UnknownIdentity as exc:
        print(f"opgf: error: {exc.args[0]}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
