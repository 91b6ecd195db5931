"""Cube-free density of g(k) = m_{5k}/25 against truncated Euler products, for growing limits."""

import argparse

from lehmer_polya.analytics import cubefree_density

parser = argparse.ArgumentParser()
parser.add_argument("--limits", type=int, nargs="+", default=[1000, 5000, 10000, 20000])
parser.add_argument("--cutoff", type=int, default=1000)
parser.add_argument("--workers", type=int, default=1)
args = parser.parse_args()

print(f"{'limit':>8} {'cube-free':>10} {'density':>9} {'product':>9} {'c_prime':>9}")
for limit in args.limits:
    rep = cubefree_density(limit, args.cutoff, args.workers)
    print(
        f"{limit:>8} {rep.cubefree_count:>10} {float(rep.empirical_density):>9.5f} "
        f"{float(rep.truncated_product):>9.5f} {float(rep.helfgott_constant):>9.5f}"
    )
