#!/usr/bin/env python3
"""Run every verification suite and write one JSON report per suite.

Usage:
    python3 scripts/verify_all.py [--d D] [--seed N] [--out DIR]

Exit code 0 iff every suite passes.  The affine relation suite
(relations-Mhat) contains a known-failing relation family, so a full run
is expected to exit 1; see the README.
"""

import argparse
import pathlib
import sys

from zzeval.cli import main as cli_main, SUITES


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="reports")
    args = ap.parse_args()

    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for suite in SUITES:
        path = out / f"{suite}-d{args.d}.json"
        code = cli_main([
            "verify", suite, "--d", str(args.d), "--seed", str(args.seed),
            "--json", str(path),
        ])
        status = "ok" if code == 0 else f"exit {code}"
        print(f"{suite:20s} -> {path}  [{status}]")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
