"""Command-line front end (``minuscule-lab``)."""
from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .minuscule import (
    InvariantViolation,
    degrees_poincare,
    dynkin_even,
    dynkin_sum,
    fixed_weight_count,
    freeness_split,
    is_minuscule,
    list_minuscule,
)
from .polyarith import eval_ratio_at_minus1, eval_ratio_at_one
from .realforms.tables import instantiate, tables_document, tables_markdown
from .rootsys import SimpleType, fundamental_weight
from .suites import run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _simple_type(family: str, rank: int) -> SimpleType:
    try:
        return SimpleType(family.upper(), rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(text: str, out: str | None = None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_list_minuscule(args) -> int:
    t = _simple_type(args.type, args.rank)
    nodes = [w.coords.index(1) + 1 for w in list_minuscule(t)]
    if args.format == "json":
        _emit(json.dumps({"type": str(t), "nodes": nodes}) + "\n")
    else:
        _emit(f"{t}: " + (", ".join(map(str, nodes)) if nodes else "none") + "\n")
    return EXIT_OK


def _parse_number(text: str) -> int | Fraction:
    try:
        v = Fraction(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse evaluation point {text!r}") from exc
    return int(v) if v.denominator == 1 else v


def cmd_dynkin(args) -> int:
    t = _simple_type(args.type, args.rank)
    if not 1 <= args.node <= t.rank:
        raise UsageError(f"node {args.node} out of range for {t}")
    lam = fundamental_weight(t, args.node)
    if not is_minuscule(lam):
        raise UsageError(f"node {args.node} of {t} is not minuscule: "
                         "some positive coroot pairs with it to a value above 1")
    d = dynkin_sum(lam)
    if args.eval is not None:
        _emit(f"{d(_parse_number(args.eval))}\n")
        return EXIT_OK
    ev = dynkin_even(lam)
    dp = degrees_poincare(lam)
    fixed = fixed_weight_count(lam)
    free = freeness_split(lam)
    if not (d(-1) == fixed == ev(1) == eval_ratio_at_minus1(dp.full)
            and d(1) == eval_ratio_at_one(dp.full)):
        raise InvariantViolation("cross-check of evaluations failed")
    uni = args.unicode
    data = {
        "type": str(t), "node": args.node,
        "dynkin": d.render(uni), "dynkin_even": ev.render(uni),
        "at_minus_one": d(-1), "at_one": d(1),
        "even_at_one": ev(1), "even_at_minus_one": ev(-1),
        "degrees": str(dp.full), "degrees_even": str(dp.even),
        "fixed": fixed, "freeness": free,
    }
    if args.format == "json":
        _emit(json.dumps(data, ensure_ascii=False, indent=2) + "\n")
    else:
        width = max(map(len, data))
        _emit("".join(f"{k:<{width}}  {str(v).lower() if isinstance(v, bool) else v}\n"
                      for k, v in data.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_rank < 1:
        raise UsageError("--max-rank must be at least 1")
    rep = run_suite(args.suite, args.max_rank)
    if args.timestamps:
        rep.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    _emit(rep.to_json() if args.format == "json" else rep.to_text(), args.out)
    return rep.exit_code


def _instantiate_arg(text: str) -> int:
    key, sep, value = text.partition("=")
    if key != "n" or not sep or not value.isdigit() or int(value) < 1:
        raise argparse.ArgumentTypeError("expected n=K with K >= 1")
    return int(value)


def cmd_tables(args) -> int:
    rows = instantiate(args.instantiate) if args.instantiate is not None else None
    if args.format == "json":
        text = json.dumps(tables_document(rows), ensure_ascii=False, indent=2) + "\n"
    else:
        text = tables_markdown(rows)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minuscule-lab",
                                description="Exact checks for minuscule weights and "
                                            "adapted real forms.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    lm = sub.add_parser("list-minuscule", help="nodes of minuscule fundamental weights")
    lm.add_argument("--type", required=True)
    lm.add_argument("--rank", type=int, required=True)
    lm.add_argument("--format", choices=("text", "json"), default="text")
    lm.set_defaults(func=cmd_list_minuscule)

    dy = sub.add_parser("dynkin", help="Dynkin polynomial data for a minuscule node")
    dy.add_argument("--type", required=True)
    dy.add_argument("--rank", type=int, required=True)
    dy.add_argument("--node", type=int, required=True)
    dy.add_argument("--eval", metavar="X", help="print only the value at q = X")
    dy.add_argument("--format", choices=("text", "json"), default="text")
    style = dy.add_mutually_exclusive_group()
    style.add_argument("--ascii", dest="unicode", action="store_false",
                       help="render powers as q^4 (default)")
    style.add_argument("--unicode", dest="unicode", action="store_true",
                       help="render powers with superscripts")
    dy.set_defaults(func=cmd_dynkin, unicode=False)

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("--suite", choices=("identities", "tables", "all"), default="all")
    ve.add_argument("--max-rank", type=int, default=8)
    ve.add_argument("--format", choices=("text", "json"), default="text")
    ve.add_argument("--out", metavar="FILE")
    ve.add_argument("--timestamps", action="store_true")
    ve.set_defaults(func=cmd_verify)

    ta = sub.add_parser("tables", help="emit the adapted real form tables")
    ta.add_argument("--format", choices=("json", "md"), default="md")
    ta.add_argument("--instantiate", type=_instantiate_arg, metavar="n=K")
    ta.add_argument("--out", metavar="FILE")
    ta.set_defaults(func=cmd_tables)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"minuscule-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
