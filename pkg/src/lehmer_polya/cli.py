"""Command-line interface.

    lehmer-polya classify 5
    lehmer-polya --format csv table --from -60 --to 60
    lehmer-polya curve --poly 1,0,0,0,1
    lehmer-polya density --limit 10000 --cutoff 100
    lehmer-polya omega --limit 1000

Exit codes: 0 success, 1 usage error, 2 computational failure.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import analytics, lehmer, polya
from .errors import ConsistencyError, FactorizationError, MagnitudeError, PerfectSquareError
from .polyring import LEHMER_QUARTIC, IntPolynomial

EXIT_USAGE = 1
EXIT_COMPUTE = 2

FORMATS = {
    "classify": ("text", "json"),
    "table": ("md", "csv", "json"),
    "curve": ("text", "json"),
    "density": ("text", "json"),
    "omega": ("text", "csv", "json"),
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class TableRow:
    n: int
    m: int
    cube_part: int
    po_order_exponent: int


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, list):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    return obj


def _dumps(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2) + "\n"


# -- classify ----------------------------------------------------------------

def classify_data(n: int) -> dict:
    fac = lehmer.m_factorization(n)
    return {
        "n": n,
        "m": fac.value,
        "factorization": [list(pe) for pe in fac.factors],
        "decomposition": asdict(lehmer.decompose_m(n, fac)),
        "field": asdict(lehmer.field_invariants(n, fac)),
        "polya": asdict(polya.classify(n)),
        "monogenicity": asdict(polya.monogenicity_report(n)),
    }


def cmd_classify(n: int, fmt: str = "text") -> str:
    d = classify_data(n)
    if fmt == "json":
        return _dumps(d)
    dec, fld, rep, mono = d["decomposition"], d["field"], d["polya"], d["monogenicity"]
    fac = " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in d["factorization"]) or "1"
    verdict = "Polya" if rep["is_polya"] else "non-Polya"
    if not rep["theorem1_applies"]:
        verdict += " (m not cube-free; conductor formula)"
    lines = [
        f"n                    {n}",
        f"m_n                  {d['m']} = {fac}",
        f"5^b * A * B^2        b={dec['b']} A={dec['A']} B={dec['B']}",
        f"cube part            {dec['cube']} ({'cube-free' if dec['is_cube_free'] else 'not cube-free'})",
        f"conductor            {fld['conductor']}",
        f"field discriminant   {fld['field_disc']}",
        f"ramified primes      {', '.join(map(str, fld['ramified_primes']))}",
        f"|Po(K_n)|            {rep['po_order']} = 5^{rep['po_rank']}",
        f"Po(K_n)              (Z/5Z)^{rep['po_rank']}",
        f"verdict              {verdict}",
        f"genus number         {rep['genus_number']}",
        f"Polya number bound   {rep['polya_number_bound']}",
        f"theta index          {mono['theta_index']}",
        f"non-monogenic        {'yes' if mono['non_monogenic'] else 'undetermined'}",
        f"field index one      {'yes' if mono['field_index_one'] else 'no'}",
    ]
    return "\n".join(lines) + "\n"


# -- table -------------------------------------------------------------------

def table_rows(start: int, stop: int, raw: bool = False) -> list[TableRow | tuple[int, str]]:
    rows: list[TableRow | tuple[int, str]] = []
    for n in range(start, stop + 1):
        if n == 0 and not raw:
            continue
        field_n = n if raw else 5 * n
        try:
            rep = polya.classify(field_n)
            cube = lehmer.decompose_m(field_n).cube
        except (FactorizationError, MagnitudeError, ConsistencyError) as exc:
            rows.append((n, str(exc)))
            continue
        rows.append(TableRow(n=n, m=rep.m, cube_part=cube, po_order_exponent=rep.po_rank))
    return rows


def cmd_table(start: int, stop: int, fmt: str = "md", raw: bool = False) -> tuple[str, bool]:
    """Rendered table and whether every row succeeded."""
    if start > stop:
        raise UsageError("--from must not exceed --to")
    rows = table_rows(start, stop, raw)
    ok = all(isinstance(r, TableRow) for r in rows)
    if fmt == "json":
        return _dumps([asdict(r) if isinstance(r, TableRow) else {"n": r[0], "error": r[1]} for r in rows]), ok
    if not ok:
        bad = next(r for r in rows if not isinstance(r, TableRow))
        raise RuntimeError(f"row n={bad[0]}: {bad[1]}")
    out = io.StringIO()
    if fmt == "csv":
        out.write("n,m,cube_part,po_order\n")
        for r in rows:
            out.write(f"{r.n},{r.m},{r.cube_part},{r.po_order_exponent}\n")
    else:
        label = "n" if raw else "5n"
        out.write(f"| n | m_{{{label}}} | C_{{m_{{{label}}}}} | #Po(K_{{{label}}}) |\n")
        out.write("|---:|---:|---:|:---:|\n")
        for r in rows:
            out.write(f"| {r.n} | {r.m} | {r.cube_part} | 5^{r.po_order_exponent} |\n")
    return out.getvalue(), ok


# -- curve, density, omega ---------------------------------------------------

def parse_poly(text: str) -> IntPolynomial:
    try:
        coeffs = [int(c) for c in text.split(",")]
    except ValueError:
        raise UsageError(f"--poly expects comma-separated integers, got {text!r}") from None
    if len(coeffs) != 5:
        raise UsageError("--poly expects five coefficients c4,c3,c2,c1,c0")
    return IntPolynomial(coeffs)


def cmd_curve(f: IntPolynomial = LEHMER_QUARTIC, fmt: str = "text", workers: int = 1) -> str:
    bound = analytics.masser_bound(f)
    points = analytics.curve_integral_points(f, bound, workers)
    if fmt == "json":
        return _dumps({
            "polynomial": list(f.coefficients),
            "bound": bound,
            "points": [asdict(p) for p in points],
        })
    lines = [f"curve    Y^2 = {f}", f"bound    |x| <= {bound}", f"points   {len(points)} (y >= 0; each (x, y) also gives (x, -y))"]
    lines += [f"  ({p.x}, {p.y})" for p in points]
    return "\n".join(lines) + "\n"


def cmd_density(limit: int, cutoff: int, fmt: str = "text", workers: int = 1) -> str:
    rep = analytics.cubefree_density(limit, cutoff, workers)
    if fmt == "json":
        d = asdict(rep)
        d["empirical_density_float"] = float(rep.empirical_density)
        d["truncated_product_float"] = float(rep.truncated_product)
        d["helfgott_constant_float"] = float(rep.helfgott_constant)
        return _dumps(d)
    lines = [
        f"g(k) = 25k^4 + 25k^3 + 15k^2 + 5k + 1, k in [1, {rep.limit}]",
        f"cube-free            {rep.cubefree_count} / {rep.tested}",
        f"empirical density    {float(rep.empirical_density):.6f}",
        f"Euler product p<={rep.prime_cutoff:<6} {float(rep.truncated_product):.6f}",
        f"prime-argument c'    {float(rep.helfgott_constant):.6f}",
        "rho(p^3) nonzero at  " + (", ".join(f"{p}:{r}" for p, r in rep.root_counts if r) or "none"),
        "not cube-free at k   " + (", ".join(map(str, rep.non_cubefree)) or "none"),
    ]
    return "\n".join(lines) + "\n"


def cmd_omega(prime_limit: int, fmt: str = "text", workers: int = 1) -> str:
    stats = analytics.omega_over_primes(prime_limit, workers)
    if fmt == "json":
        d = asdict(stats)
        d["mean_omega_float"] = float(stats.mean_omega)
        return _dumps(d)
    if fmt == "csv":
        return "p,omega\n" + "".join(f"{p},{w}\n" for p, w in stats.samples)
    lines = [f"omega(m_5p) for primes p <= {prime_limit}"]
    lines += [f"  {p:>8} {w}" for p, w in stats.samples]
    lines.append(f"mean omega       {float(stats.mean_omega):.6f}")
    lines.append(f"mean log log p   {stats.mean_loglog:.6f}")
    if stats.failures:
        lines.append("failed primes    " + ", ".join(map(str, stats.failures)))
    return "\n".join(lines) + "\n"


# -- entry point -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "md", "csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS)

    parser = _Parser(prog="lehmer-polya", description="Polya groups of Lehmer quintic fields.")
    parser.add_argument("--format", choices=("text", "md", "csv", "json"), default=None)
    parser.add_argument("--workers", type=int, default=1, help="worker processes for sweeps")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="invariants of K_n")
    p.add_argument("n", type=int)

    p = sub.add_parser("table", parents=[common], help="rows (n, m_5n, cube part, #Po)")
    p.add_argument("--from", dest="start", type=int, default=-60)
    p.add_argument("--to", dest="stop", type=int, default=60)
    p.add_argument("--raw", action="store_true", help="n indexes K_n directly instead of K_5n")

    p = sub.add_parser("curve", parents=[common], help="integral points on Y^2 = f(X)")
    p.add_argument("--poly", default=None, help="c4,c3,c2,c1,c0 (default: the m_n quartic)")

    p = sub.add_parser("density", parents=[common], help="cube-free values of g(k)")
    p.add_argument("--limit", type=int, default=10_000)
    p.add_argument("--cutoff", type=int, default=100)

    p = sub.add_parser("omega", parents=[common], help="omega(m_5p) over primes")
    p.add_argument("--limit", type=int, default=1000)
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Execute a command; returns (exit code, stdout text)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or FORMATS[args.command][0]
    if fmt == "text" and args.command == "table":
        fmt = "md"
    if fmt not in FORMATS[args.command]:
        parser.error(f"{args.command} does not support --format {fmt}")
    if args.workers < 1:
        parser.error("--workers must be positive")
    try:
        if args.command == "classify":
            return 0, cmd_classify(args.n, fmt)
        if args.command == "table":
            text, ok = cmd_table(args.start, args.stop, fmt, args.raw)
            return (0 if ok else EXIT_COMPUTE), text
        if args.command == "curve":
            f = LEHMER_QUARTIC if args.poly is None else parse_poly(args.poly)
            return 0, cmd_curve(f, fmt, args.workers)
        if args.command == "density":
            if args.limit < 10 or args.cutoff < 2:
                raise UsageError("density needs --limit >= 10 and --cutoff >= 2")
            return 0, cmd_density(args.limit, args.cutoff, fmt, args.workers)
        if args.limit < 2:
            raise UsageError("omega needs --limit >= 2")
        return 0, cmd_omega(args.limit, fmt, args.workers)
    except (FactorizationError, MagnitudeError, ConsistencyError, RuntimeError) as exc:
        print(f"lehmer-polya: {exc}", file=sys.stderr)
        return EXIT_COMPUTE, ""
    except (UsageError, PerfectSquareError, ValueError) as exc:
        parser.error(str(exc))
    raise AssertionError("unreachable")


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
