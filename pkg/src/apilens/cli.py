"""Command line entry point: ``apilens laws | todo | fs-demo``."""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

EXIT_OK = 0
EXIT_LAW_FAILURE = 1
EXIT_USAGE = 2
EXIT_EFFECT_ERROR = 3


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apilens", description="Container morphisms for API design.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    laws = sub.add_parser("laws", help="check the algebraic laws on the finite corpus")
    laws.add_argument("--depth", type=_positive, default=3, help="Kleene-star depth (default 3)")
    laws.add_argument("--report", metavar="PATH", help="also write the report (JSON if PATH ends in .json)")
    laws.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    laws.add_argument("-q", "--quiet", action="store_true", help="print failures and the summary only")

    todo = sub.add_parser("todo", help="the to-do REPL on stdin/stdout")
    where = todo.add_mutually_exclusive_group()
    where.add_argument("--db", metavar="PATH", default="todo.db", help="SQLite file (default todo.db)")
    where.add_argument("--memory", action="store_true", help="keep the store in memory")

    fs = sub.add_parser("fs-demo", help="run one of the file sessions")
    fs.add_argument("--file", default="file.txt", help="file to append to (default file.txt)")
    fs.add_argument("--session", choices=("none", "once", "twice"), default="once")
    return parser


def cmd_laws(args) -> int:
    from .lawcheck.laws import SUITES, check_all_laws
    from .lawcheck.report import summary, to_text, write_report

    unknown = [s for s in args.suite or () if s not in SUITES]
    if unknown:
        print(f"error: unknown suite {unknown[0]!r} (choose from {', '.join(SUITES)})", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    reports = check_all_laws(star_depth=args.depth, suites=args.suite)
    elapsed = time.perf_counter() - start
    shown = [r for r in reports if not r.passed] if args.quiet else reports
    text = to_text(shown) if shown else ""
    if args.quiet:
        s = summary(reports)
        text = "".join(r.line() + "\n" for r in shown)
        text += f"{s['reports'] - s['failed']}/{s['reports']} laws hold ({s['checked']} cases)\n"
    sys.stdout.write(text)
    print(f"elapsed {elapsed:.1f}s")
    if args.report:
        try:
            write_report(reports, args.report, depth=args.depth, seconds=round(elapsed, 3))
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return EXIT_EFFECT_ERROR
    return EXIT_OK if all(r.passed for r in reports) else EXIT_LAW_FAILURE


def cmd_todo(args) -> int:
    from .apps.repl import repl
    from .apps.todo import exec_db, handler
    from .persistence import StoreError, open_store

    try:
        store = open_store(None if args.memory else args.db)
    except StoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EFFECT_ERROR
    with store:
        repl(handler(exec_db(store))).run()
    return EXIT_OK


def cmd_fs_demo(args) -> int:
    from .apps.fs import SESSIONS, run_session
    from .combinators import Inr

    result = run_session(SESSIONS[args.session], args.file)
    if isinstance(result, Inr):
        lines = {"none": 0, "once": 1, "twice": 2}[args.session]
        print(f"ok: {lines} line(s) written to {args.file}")
        return EXIT_OK
    print(f"error: {result.value}", file=sys.stderr)
    return EXIT_EFFECT_ERROR


COMMANDS = {"laws": cmd_laws, "todo": cmd_todo, "fs-demo": cmd_fs_demo}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
