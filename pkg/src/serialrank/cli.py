"""Command-line front end.

    serialrank count   --family permutation --n 4
    serialrank unrank  --family setpartition --n 5 --serial 26 --stylized
    serialrank rank    --family permutation --vector 3,2,4,1
    serialrank range   --family subset --n 2 --from 1 --to 4
    serialrank list    --family ksubset --n 4 --k 2
    serialrank selftest

Exit status: 0 on success, 1 when a self-test check fails, 2 on bad input.
"""

import argparse
import json
import sys
from typing import Iterable, Optional, Sequence

from .families import FAMILIES, Family, check_params, get_family
from .numerics import check_serial
from .selftest import run_selftest
from .setpartition import parse_stylized, stylize


class UsageError(Exception):
    pass


def format_vector(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


def parse_vector(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse vector {text!r}: expected comma-separated integers")


def _record(fam: Family, n: int, k: Optional[int], s: int, v: Sequence[int],
            fmt: str, stylized: bool) -> str:
    if fmt == "json":
        obj = {"family": fam.name, "n": n, "k": k, "serial": s, "vector": list(v)}
        if fam.name == "setpartition":
            obj["stylized"] = stylize(v)
        return json.dumps(obj)
    if stylized:
        return stylize(v)
    return format_vector(v)


def _selector(args) -> tuple[Family, int, Optional[int]]:
    fam = get_family(args.family)
    check_params(fam, args.n, args.k)
    if args.stylized and fam.name != "setpartition":
        raise UsageError("--stylized only applies to setpartition")
    return fam, args.n, args.k


def cmd_count(args) -> Iterable[str]:
    fam, n, k = _selector(args)
    total = fam.count(n, k)
    if args.format == "json":
        yield json.dumps({"family": fam.name, "n": n, "k": k, "count": total})
    else:
        yield str(total)


def cmd_unrank(args) -> Iterable[str]:
    fam, n, k = _selector(args)
    if args.serial is None:
        raise UsageError("unrank needs --serial")
    v = fam.unrank(args.serial, n, k)
    yield _record(fam, n, k, args.serial, v, args.format, args.stylized)


def cmd_rank(args) -> Iterable[str]:
    fam = get_family(args.family)
    if args.vector is None:
        raise UsageError("rank needs --vector")
    if args.stylized:
        if fam.name != "setpartition":
            raise UsageError("--stylized only applies to setpartition")
        v = parse_stylized(args.vector)
    else:
        v = parse_vector(args.vector)
    n_implied, k_implied = fam.infer(v)
    for flag, given, implied in (("--n", args.n, n_implied), ("--k", args.k, k_implied)):
        if given is not None and implied is not None and given != implied:
            raise ValueError(f"{flag}={given} disagrees with the vector, which implies {implied}")
    n = args.n if args.n is not None else n_implied
    k = args.k if args.k is not None else k_implied
    check_params(fam, n, k)
    s = fam.rank(v, n, k)
    if args.format == "json":
        yield _record(fam, n, k, s, v, "json", False)
    else:
        yield str(s)


def _emit_range(args, start: int, stop: int) -> Iterable[str]:
    fam, n, k = _selector(args)
    total = fam.count(n, k)
    check_serial(start, total)
    check_serial(stop, total)
    if start > stop:
        raise ValueError(f"--from {start} is after --to {stop}")
    for s in range(start, stop + 1):
        yield _record(fam, n, k, s, fam.unrank(s, n, k), args.format, args.stylized)


def cmd_range(args) -> Iterable[str]:
    if args.start is None or args.stop is None:
        raise UsageError("range needs --from and --to")
    return _emit_range(args, args.start, args.stop)


def cmd_list(args) -> Iterable[str]:
    fam, n, k = _selector(args)
    return _emit_range(args, 1, fam.count(n, k))


COMMANDS = {
    "count": cmd_count,
    "unrank": cmd_unrank,
    "rank": cmd_rank,
    "range": cmd_range,
    "list": cmd_list,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", required=True, choices=sorted(FAMILIES))
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--stylized", action="store_true",
                        help="setpartition only: print/read blocks like (1, 4, 5)(2, 3)")

    parser = argparse.ArgumentParser(
        prog="serialrank",
        description="Rank and unrank permutations, compositions, set partitions, "
                    "k-subsets and subsets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("count", parents=[common], help="number of objects in the family")
    p = sub.add_parser("unrank", parents=[common], help="object at a serial")
    p.add_argument("--serial", type=int)
    p = sub.add_parser("rank", parents=[common], help="serial of an object")
    p.add_argument("--vector")
    p = sub.add_parser("range", parents=[common], help="objects for serials from..to")
    p.add_argument("--from", dest="start", type=int)
    p.add_argument("--to", dest="stop", type=int)
    sub.add_parser("list", parents=[common], help="every object in serial order")
    sub.add_parser("selftest", help="run the bundled golden checks")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        return run_selftest(sys.stdout)
    out = sys.stdout
    try:
        for line in COMMANDS[args.command](args):
            out.write(line + "\n")
    except (UsageError, ValueError, TypeError) as exc:
        print(f"serialrank {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
