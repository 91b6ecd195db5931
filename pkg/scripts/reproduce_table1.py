"""Recompute the n in [-60, 60] table for K_{5n} and diff it against tests/data/table1.csv."""

import csv
import sys
from pathlib import Path

from lehmer_polya.cli import cmd_table, table_rows

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "data" / "table1.csv"


def main():
    rows = table_rows(-60, 60)
    with open(GOLDEN, newline="") as fh:
        golden = {int(r["n"]): (int(r["m"]), int(r["cube_part"]), int(r["po_order"])) for r in csv.DictReader(fh)}
    mismatches = [r for r in rows if golden.get(r.n) != (r.m, r.cube_part, r.po_order_exponent)]
    sys.stdout.write(cmd_table(-60, 60, "md")[0])
    print(f"\n{len(rows)} rows, {len(mismatches)} mismatches against {GOLDEN.name}")
    for r in mismatches:
        print("  mismatch:", r, "expected", golden.get(r.n))
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
