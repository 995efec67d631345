"""Command-line front end.

Subcommands:

* ``value t|tstar --args a1,a2,...``   one string/tuple value
* ``sum T|Tstar --m M --n N --k K``    one composition sum
* ``euler --max N``                    Euler number table
* ``table --m M --nmax N --kind ...``  tables in plain/csv/json form
* ``verify --suite NAME``              identity verification suites

Exit codes: 0 success (and all verifications passed), 1 verification
failure, 2 usage or domain errors.  All data output is deterministic:
same inputs give byte-identical stdout, with or without a cache file.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import ceil
from typing import List, Optional, Tuple

from . import cache
from .closed_forms import closed_sum
from .errors import ConsistencyError, MtvError, UnsupportedExactError
from .euler import euler_numbers, table_snapshot
from .exact import PiValue, format_pi_value, format_rational
from .series import BallReal, decimal_str, radius_str, sum_numeric, t_numeric
from .symfun import power_sum_snapshot, t_string_oracle, tstar_string_oracle
from .verify import SUITE_NAMES, run_suite


def _composition_arg(text: str) -> Tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("argument parts must be positive integers")
    return parts


def _add_numeric_flags(sub: argparse.ArgumentParser):
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact closed form (default)")
    mode.add_argument("--numeric", action="store_true", help="rigorous ball arithmetic")
    sub.add_argument("--prec", type=int, default=128, metavar="BITS",
                     help="numeric precision in bits (default 128)")
    sub.add_argument("--terms", type=int, default=None, metavar="J",
                     help="truncation index for numeric sums (default: automatic)")
    sub.add_argument("--format", choices=("plain", "json"), default="plain")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mtv", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p_value = subs.add_parser("value", help="evaluate one t/t* value")
    p_value.add_argument("kind", choices=("t", "tstar"))
    p_value.add_argument("--args", type=_composition_arg, required=True, metavar="A1,A2,...")
    _add_numeric_flags(p_value)
    p_value.set_defaults(handler=_cmd_value)

    p_sum = subs.add_parser("sum", help="evaluate one composition sum T/T*")
    p_sum.add_argument("kind", choices=("T", "Tstar"))
    p_sum.add_argument("--m", type=int, required=True)
    p_sum.add_argument("--n", type=int, required=True)
    p_sum.add_argument("--k", type=int, required=True)
    _add_numeric_flags(p_sum)
    p_sum.set_defaults(handler=_cmd_sum)

    p_euler = subs.add_parser("euler", help="print Euler numbers E_0..E_2N")
    p_euler.add_argument("--max", type=int, required=True, metavar="N")
    p_euler.set_defaults(handler=_cmd_euler)

    p_table = subs.add_parser("table", help="tables of exact values")
    p_table.add_argument("--m", type=int, required=True)
    p_table.add_argument("--nmax", type=int, required=True)
    p_table.add_argument("--kind", choices=("t", "tstar", "T", "Tstar"), required=True)
    p_table.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p_table.set_defaults(handler=_cmd_table)

    p_verify = subs.add_parser("verify", help="run identity verification suites")
    p_verify.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    p_verify.add_argument("--m", type=int, default=None)
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--prec", type=int, default=128, metavar="BITS")
    p_verify.add_argument("--terms", type=int, default=None, metavar="J")
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def _emit_exact(v: PiValue, fmt: str):
    if fmt == "json":
        payload = {"kind": "exact", "rational": format_rational(v.coef), "pi_power": v.weight}
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(format_pi_value(v))


def _emit_numeric(ball: BallReal, bits: int, fmt: str):
    digits = max(8, ceil(bits * 0.30103) + 2)
    if ball.tail_capped:
        print(
            "warning: automatic term count hit the cap; the ball is wider "
            "than the requested precision (still a valid enclosure)",
            file=sys.stderr,
        )
    if fmt == "json":
        payload = {
            "kind": "numeric",
            "center": decimal_str(ball.center, digits),
            "radius": radius_str(ball),
            "bits": bits,
        }
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(f"{decimal_str(ball.center, digits)} +- {radius_str(ball)} ({bits} bits)")


def _cmd_value(args) -> int:
    star = args.kind == "tstar"
    if args.numeric:
        ball = t_numeric(args.args, star, args.prec, args.terms)
        _emit_numeric(ball, args.prec, args.format)
        return 0
    parts = args.args
    if any(p != parts[0] for p in parts) or parts[0] % 2 or parts[0] < 2:
        raise UnsupportedExactError(
            f"no exact closed form for arguments {','.join(map(str, parts))}; use --numeric"
        )
    fn = tstar_string_oracle if star else t_string_oracle
    _emit_exact(fn(parts[0], len(parts)), args.format)
    return 0


def _cmd_sum(args) -> int:
    star = args.kind == "Tstar"
    if args.numeric:
        ball = sum_numeric(args.m, args.n, args.k, star, args.prec, args.terms)
        _emit_numeric(ball, args.prec, args.format)
        return 0
    try:
        sv = closed_sum(args.m, args.n, args.k, star)
    except UnsupportedExactError as exc:
        raise UnsupportedExactError(f"{exc}; use --numeric") from None
    _emit_exact(sv.value, args.format)
    return 0


def _cmd_euler(args) -> int:
    if args.max < 0:
        raise MtvError(f"--max must be >= 0, got {args.max}")
    table = euler_numbers(args.max)
    for n, v in enumerate(table.values):
        print(f"E_{2 * n} = {v}")
    return 0


def _table_rows(args) -> List[Tuple[str, int, int, int, PiValue]]:
    rows = []
    if args.kind in ("t", "tstar"):
        fn = tstar_string_oracle if args.kind == "tstar" else t_string_oracle
        for n in range(1, args.nmax + 1):
            rows.append((args.kind, args.m, n, n, fn(args.m, n)))
    else:
        star = args.kind == "Tstar"
        for n in range(1, args.nmax + 1):
            for k in range(1, n + 1):
                rows.append((args.kind, args.m, n, k, closed_sum(args.m, n, k, star).value))
    return rows


def _cmd_table(args) -> int:
    if args.nmax < 1:
        raise MtvError(f"--nmax must be >= 1, got {args.nmax}")
    try:
        rows = _table_rows(args)
    except UnsupportedExactError as exc:
        raise UnsupportedExactError(f"{exc}; tables cover exact values only") from None
    if args.format == "csv":
        print("kind,m,n,k,rational,pi_power")
        for kind, m, n, k, v in rows:
            print(f"{kind},{m},{n},{k},{format_rational(v.coef)},{v.weight}")
    elif args.format == "json":
        payload = [
            {"kind": kind, "m": m, "n": n, "k": k,
             "rational": format_rational(v.coef), "pi_power": v.weight}
            for kind, m, n, k, v in rows
        ]
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for kind, m, n, k, v in rows:
            if kind in ("t", "tstar"):
                label = f"{'t*' if kind == 'tstar' else 't'}({{{m}}}^{n})"
            else:
                label = f"{'T*' if kind == 'Tstar' else 'T'}({m * n},{k})"
            print(f"{label} = {format_pi_value(v)}")
    return 0


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, m=args.m, nmax=args.nmax,
                        precision_bits=args.prec, terms=args.terms)
    payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
    print(json.dumps(payload, separators=(",", ":")))
    return 0 if all(r.passed for r in reports) else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    path = cache.cache_path()
    state = cache.load_cache(path)
    if state.rejected:
        print("warning: cache file failed validation and was ignored", file=sys.stderr)

    try:
        rc = args.handler(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    except MtvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    euler_max = max(state.euler_max_n, len(table_snapshot()) - 1)
    power_max = max(state.power_max_k, len(power_sum_snapshot()))
    cache.save_cache(path, euler_max, power_max)
    return rc


if __name__ == "__main__":
    sys.exit(main())
