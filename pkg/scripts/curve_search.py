"""Exhaustive integral-point search on Y^2 = X^4 + 5X^3 + 15X^2 + 25X + 25 up to the Masser bound."""

import argparse
import time

from lehmer_polya.analytics import curve_integral_points, masser_bound
from lehmer_polya.polyring import LEHMER_QUARTIC

parser = argparse.ArgumentParser()
parser.add_argument("--workers", type=int, default=1)
args = parser.parse_args()

bound = masser_bound(LEHMER_QUARTIC)
start = time.perf_counter()
points = curve_integral_points(LEHMER_QUARTIC, bound, args.workers)
elapsed = time.perf_counter() - start
print(f"scanned x in [-{bound}, {bound}] ({2 * bound + 1} values) in {elapsed:.2f}s")
for p in points:
    print(f"  (x, y) = ({p.x}, +-{p.y})")
