"""Mean omega(m_{5p}) over primes p <= X next to mean log log p, for several X."""

import argparse

from lehmer_polya.analytics import omega_over_primes

parser = argparse.ArgumentParser()
parser.add_argument("--limits", type=int, nargs="+", default=[100, 1000, 10000, 50000])
args = parser.parse_args()

print(f"{'X':>8} {'primes':>7} {'mean omega':>11} {'mean loglog':>12} {'max omega':>10}")
for limit in args.limits:
    s = omega_over_primes(limit)
    print(
        f"{limit:>8} {len(s.samples):>7} {float(s.mean_omega):>11.4f} {s.mean_loglog:>12.4f} "
        f"{max(w for _, w in s.samples):>10}"
    )
