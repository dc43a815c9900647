"""Command line: ``dualform run SCRIPT`` and ``dualform selftest``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .acceptance import CRITERIA, Settings, render, run_criteria
from .script import run_text


def _criteria(text: str) -> tuple[int, ...]:
    chosen = set()
    for part in text.split(","):
        lo, _, hi = part.partition("-")
        try:
            a, b = int(lo), int(hi or lo)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad criterion range {part!r}") from None
        chosen.update(range(a, b + 1))
    if not chosen <= set(CRITERIA):
        raise argparse.ArgumentTypeError(f"criteria are numbered {CRITERIA[0]}..{CRITERIA[-1]}")
    return tuple(sorted(chosen))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dualform", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    run = sub.add_parser("run", help="execute a script")
    run.add_argument("script", help="script file, or - for standard input")
    run.add_argument("--format", choices=("text", "json"), default="text")
    run.add_argument("--fail-fast", action="store_true")

    st = sub.add_parser("selftest", help="run the acceptance suite")
    st.add_argument("--max-order", type=int, default=24, help="largest group order used (default 24)")
    st.add_argument("--seed", type=int, default=1)
    st.add_argument("--format", choices=("text", "json"), default="text")
    st.add_argument("--fail-fast", action="store_true")
    st.add_argument("--criteria", type=_criteria, default=CRITERIA, help="e.g. 1-5,7")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.verb == "run":
        text = sys.stdin.read() if args.script == "-" else Path(args.script).read_text(encoding="utf-8")
        code, out = run_text(text, fmt=args.format, fail_fast=args.fail_fast)
        sys.stdout.write(out)
        return code
    settings = Settings(max_order=args.max_order, seed=args.seed)
    ok = True
    for result in run_criteria(settings, args.criteria, args.fail_fast):
        print(render(result, args.format), flush=True)
        ok = ok and result.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
