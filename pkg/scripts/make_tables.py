#!/usr/bin/env python3
"""Regenerate the numeric degree tables for all supported families.

Writes one CSV per family under out/ (created next to this script's parent)
and prints a short summary.  Equivalent to looping the `bistrata table`
command; kept as a script so a full regeneration is one invocation.
"""

import argparse
import io
import pathlib
import sys

from bistrata.cli import main as cli_main

FAMILIES = [
    ("two-omp", ["--p-range", "1..6", "--q-range", "1..3"]),
    ("omp", ["--p-range", "1..8"]),
    ("cusp", ["--p-range", "2..8"]),
    ("cusp-node", ["--p-range", "2..6"]),
]


def run(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d", type=int, default=12, help="curve degree (default 12)")
    parser.add_argument("--out-dir", default="out")
    args = parser.parse_args(argv)
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for family, ranges in FAMILIES:
        buffer = io.StringIO()
        code = cli_main(["table", "--family", family, *ranges, "--d", str(args.d)],
                        stdout=buffer)
        if code != 0:
            return code
        target = out_dir / f"{family}_d{args.d}.csv"
        target.write_text(buffer.getvalue())
        rows = buffer.getvalue().count("\n") - 1
        print(f"{target}: {rows} rows")
    return 0


if __name__ == "__main__":
    sys.exit(run())
