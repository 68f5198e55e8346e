"""Command-line front end.

Exit codes: 0 success (an empty isomorphism set is a success and prints
``EMPTY``), 1 usage or parse error, 2 verification failure, 3 budget
exhausted.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .calculus import check_string
from .chain import StabilizerChain, block_system_stabilizer, enumerate_elements, pointwise_stabilizer, schreier_sims
from .formats import FormatError, encode_strings, format_expression, format_perm, load_expression, load_group, load_string
from .orbits import NotTransitive, minimal_blocks, orbits
from .perm import DegreeMismatch, check_perm
from .solver import DEFAULT_BUDGET, BudgetExceeded, iso

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _chain(path) -> StabilizerChain:
    spec = load_group(path)
    return schreier_sims(spec.generators, spec.degree)


def _strings(chain, xpath, ypath):
    x, y = encode_strings(load_string(xpath), load_string(ypath))
    return check_string(x, chain.degree), check_string(y, chain.degree)


def _print_chain(chain: StabilizerChain, out) -> None:
    print(f"order {chain.order}", file=out)
    for g in chain.strong_generators:
        print("gen " + format_perm(g), file=out)


def cmd_order(args, out) -> int:
    print(_chain(args.group).order, file=out)
    return EXIT_OK


def cmd_member(args, out) -> int:
    chain = _chain(args.group)
    g = check_perm(tuple(args.perm))
    if len(g) != chain.degree:
        raise DegreeMismatch(f"permutation has {len(g)} entries, group degree is {chain.degree}")
    print("yes" if g in chain else "no", file=out)
    return EXIT_OK


def cmd_orbits(args, out) -> int:
    spec = load_group(args.group)
    for orb in orbits(spec.generators, spec.degree).orbits:
        print(" ".join(map(str, orb)), file=out)
    return EXIT_OK


def cmd_blocks(args, out) -> int:
    spec = load_group(args.group)
    system = minimal_blocks(spec.generators, spec.degree)
    if system is None:
        print("primitive", file=out)
    else:
        for blk in system.blocks:
            print(" ".join(map(str, blk)), file=out)
    return EXIT_OK


def _parse_blocks(text: str) -> list[list[int]]:
    return [[int(t) for t in part.split()] for part in text.split("|") if part.strip()]


def cmd_stab(args, out) -> int:
    chain = _chain(args.group)
    if (args.points is None) == (args.blocks is None):
        raise UsageError("give exactly one of --points or --blocks")
    if args.points is not None:
        if any(not 0 <= p < chain.degree for p in args.points):
            raise UsageError("point out of range")
        sub = pointwise_stabilizer(chain, args.points)
    else:
        blocks = _parse_blocks(args.blocks)
        pts = sorted(p for b in blocks for p in b)
        if pts != list(range(chain.degree)):
            raise UsageError("blocks must partition the points")
        try:
            sub = block_system_stabilizer(chain, blocks)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _print_chain(sub, out)
    return EXIT_OK


def cmd_solve(args, out) -> int:
    chain = _chain(args.group)
    x, y = _strings(chain, args.x, args.y)
    res = iso(chain, x, y, budget=args.budget)
    if res.coset.is_empty:
        print("EMPTY", file=out)
    else:
        print(f"order {res.coset.order}", file=out)
        print("rep " + format_perm(res.coset.rep), file=out)
        for g in res.coset.group.strong_generators:
            print("gen " + format_perm(g), file=out)
    print(f"atoms {res.stats.atom_count}", file=out)
    if args.emit_expr:
        with open(args.emit_expr, "w") as fh:
            fh.write(format_expression(res.expr))
    return EXIT_OK


def cmd_verify_expr(args, out) -> int:
    from .catalog import brute_iso_set, expression_matches

    expr = load_expression(args.expr)
    chain = _chain(args.group)
    x, y = _strings(chain, args.x, args.y)
    if expr.degree != chain.degree:
        print(f"FAIL degree {expr.degree} != {chain.degree}", file=out)
        return EXIT_VERIFY
    target = brute_iso_set(list(enumerate_elements(chain)), x, y)
    ok = expression_matches(expr, target)
    print("PASS" if ok else "FAIL", file=out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_constants(args, out) -> int:
    from . import cost_model as cm

    cfsg = args.mode == "cfsg"
    reports = cm.constants_suite(cfsg, k2_shift=args.perturb_k2)
    out.write(cm.format_reports(reports, args.format, args.mode))
    if args.figures:
        from .plotting import plot_constants

        for p in plot_constants(reports, args.figures, args.mode):
            print(f"# wrote {p}", file=sys.stderr)
    return EXIT_OK if cm.all_passed(reports) else EXIT_VERIFY


def cmd_catalog(args, out) -> int:
    from .catalog import run_catalog

    summary = run_catalog(args.max_degree, args.seed, args.pairs)
    out.write(summary.text(args.verbose))
    if args.figures:
        from .plotting import plot_catalog

        for p in plot_catalog(summary, args.figures):
            print(f"# wrote {p}", file=sys.stderr)
    return EXIT_OK if summary.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    from .catalog import DEFAULT_PAIRS, DEFAULT_SEED

    p = _Parser(prog="stringiso", description="String isomorphism over permutation groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("order", help="order of a group")
    s.add_argument("group")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("member", help="membership test")
    s.add_argument("group")
    s.add_argument("perm", type=int, nargs="+", help="image list")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("orbits", help="orbits, one per line")
    s.add_argument("group")
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("blocks", help="a minimal block system, or 'primitive'")
    s.add_argument("group")
    s.set_defaults(func=cmd_blocks)

    s = sub.add_parser("stab", help="pointwise stabilizer or block-system stabilizer")
    s.add_argument("group")
    s.add_argument("--points", type=int, nargs="+")
    s.add_argument("--blocks", help="blocks separated by '|', e.g. '0 1|2 3'")
    s.set_defaults(func=cmd_stab)

    s = sub.add_parser("solve", help="Iso_G(x, y) as a coset")
    s.add_argument("group")
    s.add_argument("x")
    s.add_argument("y")
    s.add_argument("--emit-expr", metavar="PATH")
    s.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify-expr", help="check an expression against brute force")
    s.add_argument("expr")
    s.add_argument("group")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_verify_expr)

    s = sub.add_parser("constants", help="recompute the cost-analysis constants")
    s.add_argument("--mode", choices=("cfsg", "nocfsg"), default="cfsg")
    s.add_argument("--format", choices=("text", "table"), default="text")
    s.add_argument("--figures", metavar="DIR")
    s.add_argument("--perturb-k2", type=float, default=0.0, help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("catalog", help="oracle-equivalence run over the group catalog")
    s.add_argument("--max-degree", type=_positive, default=8)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--pairs", type=_positive, default=DEFAULT_PAIRS)
    s.add_argument("--verbose", action="store_true", help="one line per instance")
    s.add_argument("--figures", metavar="DIR")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FormatError, UsageError, DegreeMismatch, NotTransitive, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
