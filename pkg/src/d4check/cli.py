"""Command-line front end.

Exit codes: 0 all selected checks pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import pontsolve, report, rootsys
from .obstruct import CHECK_IDS, VerificationReport, theorem_pipeline


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="d4check",
        description=(
            "Exact-arithmetic verifier for the nonexistence of isoparametric "
            "foliations of R^52 with D4 diagram and uniform multiplicity 4."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--window", type=int, default=20, metavar="N",
                       help="half-width of the finite bundle-check window (>= 4)")
        p.add_argument("--no-symmetry-constraint", action="store_true",
                       help="diagnostic: drop the focal-symmetry constraint")
        p.add_argument("--skip-window-checks", action="store_true",
                       help="diagnostic: skip the finite-window bundle checks")
        p.add_argument("--out", metavar="PATH", help="also write the report to a file")

    p_all = sub.add_parser("verify-all", help="run every check and the theorem pipeline")
    add_common(p_all)

    p_one = sub.add_parser("verify", help="run the pipeline, report a single check")
    p_one.add_argument("check_id", metavar="CHECK_ID", help=f"one of: {', '.join(CHECK_IDS)}")
    add_common(p_one)

    p_rep = sub.add_parser("report", help="alias for verify-all")
    add_common(p_rep)

    p_roots = sub.add_parser("roots", help="print the positive roots")

    p_weyl = sub.add_parser("weyl", help="Weyl group information")
    p_weyl.add_argument("--order", action="store_true", help="print only the group order")

    p_tab = sub.add_parser("tables", help="print the symbolic orbit-class tables")
    p_tab.add_argument("--which", choices=("4-2", "4-3"), default="4-2")

    return parser


def _render_symbol_row(symbols) -> str:
    terms = []
    for i, s in enumerate(symbols):
        sign = "-" if s.startswith("-") else "+"
        name = s.lstrip("-")
        terms.append((sign, f"{name}*t{i + 1}"))
    text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, term in terms[1:]:
        text += f" {sign} {term}"
    return text


def _cmd_roots() -> int:
    rs = rootsys.build_d4(4)
    for i, root in enumerate(rs.positive_roots, start=1):
        coords = ", ".join(str(c) for c in root.coords)
        print(f"alpha_{i:<2} = ({coords})")
    print(f"simple indices: {rs.simple_indices}")
    return 0


def _cmd_weyl(order_only: bool) -> int:
    rs = rootsys.build_d4(4)
    group = rootsys.enumerate_group(rootsys.simple_generators(rs).values())
    if order_only:
        print(len(group))
        return 0
    print(f"group order: {len(group)}")
    by_len: dict[int, int] = {}
    for w in group:
        by_len[len(w.word)] = by_len.get(len(w.word), 0) + 1
    for length in sorted(by_len):
        print(f"  elements of word length {length}: {by_len[length]}")
    return 0


def _cmd_tables(which: str) -> int:
    table = pontsolve.TABLE_AFTER_LEAF if which == "4-2" else pontsolve.TABLE_FOCAL
    for idx in sorted(table):
        print(f"class for root {idx:>2}: {_render_symbol_row(table[idx])}")
    return 0


def _emit(rep: VerificationReport, args) -> int:
    text = report.render(rep, args.format)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if rep.theorem_status == "OBSTRUCTED" and rep.all_passed():
        return 0
    if rep.theorem_status == "INCONCLUSIVE" and rep.all_passed():
        return 0
    return 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "roots":
        return _cmd_roots()
    if args.command == "weyl":
        return _cmd_weyl(args.order)
    if args.command == "tables":
        return _cmd_tables(args.which)

    if args.command in ("verify-all", "report", "verify"):
        if args.window < 4:
            parser.error(f"--window must be >= 4, got {args.window}")
        if args.command == "verify" and args.check_id not in CHECK_IDS:
            parser.error(f"unknown check-id: {args.check_id}")
        rep = theorem_pipeline(
            window=args.window,
            disable_symmetry=args.no_symmetry_constraint,
            skip_window=args.skip_window_checks,
        )
        if args.command == "verify":
            selected = VerificationReport(
                checks=[c for c in rep.checks if c.id == args.check_id],
                theorem_status=rep.theorem_status,
            )
            text = report.render(selected, args.format)
            print(text)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            return 0 if selected.checks and selected.all_passed() else 1
        return _emit(rep, args)

    parser.error(f"unknown command: {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
