"""Command-line front end.

Subcommands: hooks, degrees, count, verify-an, verify-lie, lie-pair,
ctbl.  Single queries print JSON, verification grids print CSV (or
JSON rows with --format json).  Exit codes: 0 success, 1 bad usage or
precondition failure (a structured error record goes to stderr), 2 a
verification run found a contract violation -- the violating tuple is
emitted so the failure can be reproduced in one command.

Output for a given invocation is byte-identical across runs: fixed
orderings, no timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import ctbl as ctbl_mod
from . import hooks as hooks_mod
from . import lie as lie_mod
from .degrees import degree, degree_valuation
from .partitions import Partition, enumerate_partitions

__all__ = ["main"]


class CliError(Exception):
    """Usage or precondition failure; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from exiting on its own
        raise CliError(message)


def _emit(line: str, stream) -> None:
    print(line, file=stream)


def _emit_json(obj, stream) -> None:
    print(json.dumps(obj), file=stream)


def _fail(record: dict) -> None:
    print(json.dumps(record), file=sys.stderr)


def _parse_primes(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise CliError(f"bad prime list {text!r}") from None
    if not primes:
        raise CliError("empty prime list")
    return primes


def _fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _bool_str(flag: bool) -> str:
    return "true" if flag else "false"


# -- subcommands --------------------------------------------------------------


def cmd_hooks(args, out) -> int:
    hooks = hooks_mod.list_pprime_hooks(args.n, args.p)
    formula = hooks_mod.count_pprime_hooks_formula(args.n, args.p)
    record = {
        "n": args.n,
        "p": args.p,
        "count": len(hooks),
        "formula": formula,
        "hooks": [lam.to_list() for lam in hooks],
    }
    _emit_json(record, out)
    if formula != len(hooks):
        _fail({"violation": "hook-count", "n": args.n, "p": args.p,
               "formula": formula, "enumerated": len(hooks)})
        return 2
    return 0


def _degree_row(lam: Partition, p: int) -> dict:
    v = degree_valuation(lam, p)
    return {
        "partition": lam.to_list(),
        "degree": str(degree(lam)),
        "valuation": v,
        "pprime": v == 0,
    }


def cmd_degrees(args, out) -> int:
    if (args.partition is None) == (not args.all):
        raise CliError("choose exactly one of --all or --partition")
    if args.partition is not None:
        lam = Partition.from_string(args.partition)
        if args.n is not None and args.n != lam.n:
            raise CliError(f"--n {args.n} does not match |{lam}| = {lam.n}")
        row = _degree_row(lam, args.p)
        if args.format == "csv":
            _emit(",".join(['"' + str(lam) + '"', row["degree"],
                            str(row["valuation"]), _bool_str(row["pprime"])]), out)
        else:
            _emit_json(row, out)
        return 0
    if args.n is None:
        raise CliError("--all needs --n")
    for lam in enumerate_partitions(args.n):
        row = _degree_row(lam, args.p)
        if args.format == "csv":
            _emit(",".join(['"' + str(lam) + '"', row["degree"],
                            str(row["valuation"]), _bool_str(row["pprime"])]), out)
        else:
            _emit_json(row, out)
    return 0


def cmd_count(args, out) -> int:
    formula = hooks_mod.count_pprime_hooks_formula(args.n, args.p)
    xs = hooks_mod.pprime_hook_xs(args.n, args.p)
    layered = hooks_mod._layered_first_parts(args.n, args.p)
    sets_match = [args.n - x for x in reversed(xs)] == list(layered)
    agree = formula == len(xs) == len(layered) and sets_match
    _emit_json({"formula": formula, "enumerated": len(xs), "agree": agree}, out)
    if not agree:
        _fail({"violation": "hook-count", "n": args.n, "p": args.p,
               "formula": formula, "enumerated": len(xs), "layered": len(layered)})
        return 2
    return 0


def cmd_verify_an(args, out) -> int:
    primes = _parse_primes(args.primes)
    exact_bound = args.exact_bound if args.exact_bound is not None else hooks_mod.scan_bound()
    violations = []
    rows = []
    for n in range(7, args.n_max + 1):
        exact_sets = hooks_mod.scan_ext_degree_sets(n, primes) if n <= exact_bound else None
        for p in primes:
            formula = hooks_mod.count_pprime_hooks_formula(n, p)
            enum = len(hooks_mod.pprime_hook_xs(n, p))
            result = hooks_mod.verify_An_bound(n, p)
            if exact_sets is not None:
                ext_found = len(exact_sets[p])
                bound_ok = (
                    result.ok
                    and ext_found >= 3
                    and ext_found >= hooks_mod.halved_count_lower_bound(n, p)
                )
            else:
                ext_found = len(hooks_mod.ext_pprime_degree_set(n, p, bound=exact_bound))
                bound_ok = result.ok
            if formula != enum or not bound_ok:
                violations.append({"n": n, "p": p, "formula": formula,
                                   "enumerated": enum, "bound_ok": bound_ok,
                                   "witnesses": list(result.witnesses)})
            rows.append((n, p, formula, enum, ext_found, bound_ok))
    for n, p, formula, enum, ext_found, bound_ok in rows:
        if args.format == "json":
            _emit_json({"n": n, "p": p, "count_formula": formula,
                        "count_enum": enum, "ext_degrees_found": ext_found,
                        "bound_ok": bound_ok}, out)
        else:
            _emit(f"{n},{p},{formula},{enum},{ext_found},{_bool_str(bound_ok)}", out)
    if violations:
        _fail({"violation": "an-bound", "first": violations[0],
               "total": len(violations)})
        return 2
    return 0


def cmd_verify_lie(args, out) -> int:
    families = args.families.split(",") if args.families else None
    try:
        rows = lie_mod.classical_grid(args.q_max, args.p_max, families, args.rank_max)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    bad = None
    for row in rows:
        d1 = _fraction_str(row["d1"])
        d2 = _fraction_str(row["d2"])
        if args.format == "json":
            _emit_json({"family": row["family"], "n": row["n"], "q": row["q"],
                        "p": row["p"], "d1": d1, "d2": d2, "ok": row["ok"]}, out)
        else:
            _emit(f"{row['family']},{row['n']},{row['q']},{row['p']},{d1},{d2},{_bool_str(row['ok'])}", out)
        if not row["ok"] and bad is None:
            bad = row
    if bad is not None:
        _fail({"violation": "lie-not-both-divisible", "family": bad["family"],
               "n": bad["n"], "q": bad["q"], "p": bad["p"],
               "d1": _fraction_str(bad["d1"]), "d2": _fraction_str(bad["d2"])})
        return 2
    return 0


def cmd_lie_pair(args, out) -> int:
    record = lie_mod.exceptional_pair_record(args.family, args.q, args.p)
    d1, d2 = record.degrees
    payload = {
        "family": record.family,
        "q": record.q,
        "p": record.p,
        "case": record.case,
        "degrees": [d1, d2],
        "chi1": {
            "degree": d1,
            "origin": record.chi1.origin,
            "extends_to_aut": record.chi1.extends_to_aut,
            "p_group_invariant": record.chi1.p_group_invariant,
        },
        "chi2": {
            "degree": d2,
            "origin": record.chi2.origin,
            "extends_to_aut": record.chi2.extends_to_aut,
            "p_group_invariant": record.chi2.p_group_invariant,
        },
        "nondivisibility_ok": lie_mod.nondivisibility_check(d1, d2, record.p),
        "contract_regime": lie_mod.in_contract_regime(record.family, record.q, record.p),
    }
    _emit_json(payload, out)
    if payload["contract_regime"] and not payload["nondivisibility_ok"]:
        _fail({"violation": "nondivisibility", "family": record.family,
               "q": record.q, "p": record.p, "d1": d1, "d2": d2})
        return 2
    return 0


def cmd_ctbl(args, out) -> int:
    if (args.file is None) == (args.bundled is None):
        raise CliError("choose exactly one of --file or --bundled")
    if args.file is not None:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                document = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc}") from None
        table = ctbl_mod.load_degree_table(document)
    else:
        table = ctbl_mod.bundled_table(args.bundled)
    full = sorted(ctbl_mod.cd(table))
    coprime = sorted(ctbl_mod.cd_pprime(table, args.p))
    _emit_json({
        "name": table.name,
        "p": args.p,
        "cd": full,
        "cd_pprime": coprime,
        "sizes": {"cd": len(full), "cd_pprime": len(coprime)},
    }, out)
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="ppcd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_hooks = sub.add_parser("hooks", help="list the p'-degree hook partitions of n")
    p_hooks.add_argument("--n", type=int, required=True)
    p_hooks.add_argument("--p", type=int, required=True)
    p_hooks.set_defaults(func=cmd_hooks)

    p_deg = sub.add_parser("degrees", help="character degrees and p-valuations")
    p_deg.add_argument("--n", type=int)
    p_deg.add_argument("--p", type=int, required=True)
    p_deg.add_argument("--all", action="store_true")
    p_deg.add_argument("--partition", type=str)
    p_deg.add_argument("--format", choices=("json", "csv"), default="json")
    p_deg.set_defaults(func=cmd_degrees)

    p_count = sub.add_parser("count", help="p'-hook count: formula vs enumeration")
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--p", type=int, required=True)
    p_count.set_defaults(func=cmd_count)

    p_van = sub.add_parser("verify-an", help="alternating-group degree bound grid")
    p_van.add_argument("--n-max", type=int, required=True)
    p_van.add_argument("--primes", type=str, default="5,7,11,13")
    p_van.add_argument("--exact-bound", type=int, default=None)
    p_van.add_argument("--format", choices=("csv", "json"), default="csv")
    p_van.set_defaults(func=cmd_verify_an)

    p_vlie = sub.add_parser("verify-lie", help="classical-family divisibility grid")
    p_vlie.add_argument("--q-max", type=int, default=27)
    p_vlie.add_argument("--p-max", type=int, default=97)
    p_vlie.add_argument("--families", type=str, default=None)
    p_vlie.add_argument("--rank-max", type=int, default=10)
    p_vlie.add_argument("--format", choices=("csv", "json"), default="csv")
    p_vlie.set_defaults(func=cmd_verify_lie)

    p_pair = sub.add_parser("lie-pair", help="degree pair for a small Lie-type family")
    p_pair.add_argument("--family", type=str, required=True)
    p_pair.add_argument("--q", type=int, required=True)
    p_pair.add_argument("--p", type=int, required=True)
    p_pair.set_defaults(func=cmd_lie_pair)

    p_ctbl = sub.add_parser("ctbl", help="degrees of an ingested character table")
    p_ctbl.add_argument("--file", type=str)
    p_ctbl.add_argument("--bundled", type=str)
    p_ctbl.add_argument("--p", type=int, required=True)
    p_ctbl.set_defaults(func=cmd_ctbl)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, sys.stdout)
    except CliError as exc:
        _fail({"error": str(exc)})
        return 1
    except (ValueError, ArithmeticError) as exc:
        _fail({"error": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
