"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 resource bound exceeded,
3 internal inconsistency or unregistered discrepancy.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import prod

from . import __version__
from .abgroup import render
from .arith import euler_phi, iterated_phi
from .equations import (
    DEFAULT_K3_READING,
    K3_READINGS,
    DiscrepancyReport,
    classify_k2,
    classify_k3,
    cross_verify,
    enumerate_solutions,
    published_claims_report,
    solve_phik_eq_one,
)
from .errors import BoundExceeded, DomainError, InconsistencyError
from .oracle import DEFAULT_BOUND, oracle_uk
from .phik import phi_k
from .phiproduct import phi_product_general
from .units import uk_closed_form, uk_decomposition

EXIT_OK, EXIT_DOMAIN, EXIT_BOUND, EXIT_INCONSISTENT = 0, 1, 2, 3

MAX_SWEEP = 10**7
METHODS = {"closed": "closed-form", "iter": "iteration", "oracle": "oracle"}
SUITES = ("agreement", "inequality", "cyclicity", "classifiers", "published", "all")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def envelope(command: str, inputs: dict, result, provenance: list[str], **extra) -> dict:
    out = {"command": command, "inputs": inputs, "result": result, "provenance": provenance,
           "version": __version__}
    out.update(extra)
    return out


def _emit(args, env: dict, text: str) -> None:
    if args.json:
        print(json.dumps(env, sort_keys=True))
    else:
        print(text)


def _methods(spec: str) -> list[str]:
    names = [m.strip() for m in spec.split(",") if m.strip()]
    bad = [m for m in names if m not in METHODS]
    if bad or not names:
        raise DomainError(f"unknown method(s) {bad}; choose from {sorted(METHODS)}")
    return names


def cmd_phik(args) -> int:
    values = {}
    for m in _methods(args.method):
        if m == "closed":
            values[m] = phi_k(args.n, args.k)
        elif m == "iter":
            values[m] = uk_decomposition(args.n, args.k).order
        else:
            values[m] = oracle_uk(args.n, args.k, args.bound).order
    distinct = set(values.values())
    env = envelope("phik", {"k": args.k, "n": args.n, "method": list(values)},
                   values if len(values) > 1 else next(iter(values.values())),
                   [METHODS[m] for m in values])
    if len(values) == 1:
        _emit(args, env, str(next(iter(values.values()))))
    else:
        _emit(args, env, "\n".join(f"{m}: {v}" for m, v in values.items()))
    if len(distinct) > 1:
        print(f"methods disagree: {values}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_decompose(args) -> int:
    m = _methods(args.method)
    if len(m) != 1:
        raise DomainError("decompose takes a single --method")
    if m[0] == "closed":
        group = uk_closed_form(args.n, args.k)
    elif m[0] == "oracle":
        group = oracle_uk(args.n, args.k, args.bound)
    else:
        group = uk_decomposition(args.n, args.k)
    orders = group.orders if args.form == "primary" else group.invariant_factors()
    env = envelope("decompose", {"k": args.k, "n": args.n, "form": args.form, "method": m[0]},
                   {"orders": list(orders), "text": render(orders), "order": group.order},
                   [METHODS[m[0]]])
    _emit(args, env, render(orders))
    return EXIT_OK


def cmd_iphi(args) -> int:
    value = iterated_phi(args.n, args.k)
    _emit(args, envelope("iphi", {"k": args.k, "n": args.n}, value, ["direct"]), str(value))
    return EXIT_OK


def cmd_phiproduct(args) -> int:
    if not args.values:
        raise DomainError("phiproduct needs at least one integer")
    expansion = phi_product_general(args.values)
    direct = euler_phi(prod(args.values))
    env = envelope("phiproduct", {"values": args.values},
                   {"expansion": expansion, "direct": direct}, ["expansion", "direct"])
    _emit(args, env, str(expansion) if expansion == direct else f"expansion {expansion} != direct {direct}")
    if expansion != direct:
        return EXIT_INCONSISTENT
    return EXIT_OK


def _check_max(value: int) -> int:
    if value < 1:
        raise DomainError("--max must be >= 1")
    if value > MAX_SWEEP:
        raise BoundExceeded(f"--max {value} exceeds the sweep limit {MAX_SWEEP}")
    return value


def cmd_solve(args) -> int:
    max_n = _check_max(args.max)
    if args.equation == "phik-one":
        solutions = solve_phik_eq_one(args.k, max_n)
        summary = None
        if args.k == 2:
            expected = [n for n in range(1, max_n + 1) if 24 % n == 0]
            summary = {"claim": "divisors of 24", "agrees": solutions == expected}
        inputs = {"equation": args.equation, "k": args.k, "max": max_n}
    else:
        k = 2 if args.equation == "eq-k2" else 3
        solutions = enumerate_solutions(k, max_n)
        if k == 2:
            claimed = [n for n in range(1, max_n + 1) if classify_k2(n)]
        else:
            claimed = [n for n in range(1, max_n + 1) if classify_k3(n, args.reading)]
        missing = sorted(set(solutions) - set(claimed))
        extra = sorted(set(claimed) - set(solutions))
        summary = {"classifier_agrees": not missing and not extra,
                   "not_classified": missing, "classified_non_solutions": extra}
        if k == 3:
            summary["reading"] = args.reading
        inputs = {"equation": args.equation, "max": max_n}
    env = envelope("solve", inputs, {"solutions": solutions, "count": len(solutions), "comparison": summary},
                   ["enumeration"])
    text = f"{len(solutions)} solutions: " + " ".join(map(str, solutions))
    if summary is not None:
        text += "\n" + json.dumps(summary, sort_keys=True)
    _emit(args, env, text)
    return EXIT_OK


def _suite_reports(suite: str, args) -> list[DiscrepancyReport]:
    if suite == "agreement":
        return [cross_verify("agreement", args.max, max_k=args.k, bound=args.bound)]
    if suite == "inequality":
        return [cross_verify("gr-inequality", args.max)]
    if suite == "cyclicity":
        return [cross_verify(t, args.max) for t in ("u2-cyclic", "k2-u-cyclic", "k3-u2-cyclic")]
    if suite == "classifiers":
        return [cross_verify(t, args.max) for t in ("k2", "k3-divisor-closed", "k3-literal", "phik-one-k2")]
    if suite == "published":
        return [published_claims_report()]
    raise DomainError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    from . import manifest

    if args.max is not None:
        _check_max(args.max)
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    reports, lines, unregistered_total = [], [], 0
    for suite in suites:
        for report in _suite_reports(suite, args):
            data = report.to_dict()
            known = [manifest.explain(report, m) for m in report.mismatches]
            for item, entry in zip(data["mismatches"], known):
                item["known"] = entry
            data["unregistered"] = sum(e is None for e in known)
            unregistered_total += data["unregistered"]
            reports.append(data)
            status = "ok" if not known else f"{len(known)} mismatches, {data['unregistered']} unregistered"
            lines.append(f"{report.equation:<20} n<={report.bound:<9} {status}")
    env = envelope("verify", {"suite": args.suite, "max": args.max, "k": args.k, "bound": args.bound},
                   {"ok": unregistered_total == 0, "unregistered": unregistered_total},
                   ["closed-form", "iteration", "oracle", "enumeration"], reports=reports)
    _emit(args, env, "\n".join(lines))
    return EXIT_OK if unregistered_total == 0 else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genphi", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, bound=False):
        p.add_argument("--json", action="store_true", help="emit the JSON envelope")
        if bound:
            p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="oracle element bound per level")
        return p

    p = common(sub.add_parser("phik", help="generalized totient phi^k(n)"), bound=True)
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", default="closed", help="closed, iter, oracle, or a comma list to cross-check")
    p.set_defaults(func=cmd_phik)

    p = common(sub.add_parser("decompose", help="group structure of U^k(Z_n)"), bound=True)
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--form", choices=("primary", "invariant"), default="primary")
    p.add_argument("--method", default="iter", help="iter, closed or oracle")
    p.set_defaults(func=cmd_decompose)

    p = common(sub.add_parser("iphi", help="iterated totient Phi^k(n)"))
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_iphi)

    p = common(sub.add_parser("phiproduct", help="phi of a product via the block expansion"))
    p.add_argument("values", type=int, nargs="*")
    p.set_defaults(func=cmd_phiproduct)

    p = common(sub.add_parser("solve", help="enumerate solutions up to --max"))
    p.add_argument("equation", choices=("eq-k2", "eq-k3", "phik-one"))
    p.add_argument("--k", type=int, default=2, help="level for phik-one")
    p.add_argument("--max", type=int, default=10**5)
    p.add_argument("--reading", choices=K3_READINGS, default=DEFAULT_K3_READING)
    p.set_defaults(func=cmd_solve)

    p = common(sub.add_parser("verify", help="cross-check suites against the known-discrepancy manifest"),
               bound=True)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max", type=int, default=None, help="sweep bound (default depends on the suite)")
    p.add_argument("--k", type=int, default=4, help="highest k for the agreement suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_DOMAIN
    try:
        return args.func(args)
    except (DomainError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
