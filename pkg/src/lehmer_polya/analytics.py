"""Computational evidence: integral points on Y^2 = m(X), cube-free values of
g(k) = m_{5k}/25, and omega(m_{5p}) over primes.

Sweeps split their range into contiguous chunks that can run in worker
processes; results are merged in chunk order so output never depends on
the number of workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence, TypeVar

from .arith import factor, is_prime, omega, primes_up_to
from .errors import FactorizationError, MagnitudeError, PerfectSquareError
from .lehmer import m_value
from .polyring import LEHMER_QUARTIC, IntPolynomial

G_POLY = IntPolynomial([25, 25, 15, 5, 1])
ENUMERATION_LIMIT = 50
CHUNK = 50_000

T = TypeVar("T")


def _run_chunks(fn: Callable[..., list[T]], jobs: Sequence[tuple], workers: int) -> list[T]:
    if workers <= 1 or len(jobs) <= 1:
        parts = [fn(*job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, *zip(*jobs)))
    return [item for part in parts for item in part]


def _ranges(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


# -- integral points ---------------------------------------------------------

@dataclass(frozen=True)
class CurvePoint:
    """Integral point (x, y) on Y^2 = f(X); y >= 0 stands for both (x, y) and (x, -y)."""

    x: int
    y: int


def square_root_poly(f: IntPolynomial) -> IntPolynomial | None:
    """Integer quadratic g with g^2 = f for a monic quartic f, else None."""
    _, c3, c2, c1, c0 = f.coefficients
    if c3 % 2:
        return None
    a = c3 // 2
    if (c2 - a * a) % 2:
        return None
    b = (c2 - a * a) // 2
    if 2 * a * b == c1 and b * b == c0:
        return IntPolynomial([1, a, b])
    return None


def _check_quartic(f: IntPolynomial) -> None:
    if f.degree != 4 or f.leading != 1:
        raise ValueError(f"expected a monic quartic, got {f}")
    root = square_root_poly(f)
    if root is not None:
        raise PerfectSquareError(f"{f} = ({root})^2")


def masser_bound(f: IntPolynomial) -> int:
    _check_quartic(f)
    return 26 * f.height**3


def _scan(coefficients: tuple[int, ...], lo: int, hi: int) -> list[tuple[int, int]]:
    c4, c3, c2, c1, c0 = coefficients
    isqrt = math.isqrt
    found = []
    for x in range(lo, hi + 1):
        v = (((c4 * x + c3) * x + c2) * x + c1) * x + c0
        if v >= 0:
            r = isqrt(v)
            if r * r == v:
                found.append((x, r))
    return found


def curve_integral_points(
    f: IntPolynomial = LEHMER_QUARTIC, bound: int | None = None, workers: int = 1
) -> list[CurvePoint]:
    """All integral points with |x| <= bound (default: the Masser bound), sorted by x."""
    limit = masser_bound(f) if bound is None else bound
    _check_quartic(f)
    jobs = [(f.coefficients, a, b) for a, b in _ranges(-limit, limit, CHUNK)]
    return [CurvePoint(x, y) for x, y in _run_chunks(_scan, jobs, workers)]


# -- cube-free values of g ---------------------------------------------------

def gk_value(k: int) -> int:
    return 25 * k**4 + 25 * k**3 + 15 * k**2 + 5 * k + 1


def _eval_mod(f: IntPolynomial, x: int, mod: int) -> int:
    acc = 0
    for c in f.coefficients:
        acc = (acc * x + c) % mod
    return acc


def _rho_enumerate(f: IntPolynomial, p: int, coprime: bool) -> int:
    q = p**3
    return sum(
        1 for x in range(q) if _eval_mod(f, x, q) == 0 and not (coprime and x % p == 0)
    )


def _rho_lift(f: IntPolynomial, p: int, coprime: bool) -> int:
    q = p**3
    df = f.derivative()
    count = 0
    for r in range(p):
        if _eval_mod(f, r, p) or (coprime and r == 0):
            continue
        d = _eval_mod(df, r, p)
        if d:
            count += 1  # a simple root has exactly one lift to each p^k
            continue
        # singular root: count its p^2 lifts directly
        count += sum(1 for t in range(p * p) if _eval_mod(f, r + p * t, q) == 0)
    return count


def rho_cube(p: int, method: str = "auto", coprime: bool = False, f: IntPolynomial = G_POLY) -> int:
    """Number of residues x mod p^3 with p^3 | f(x) (only x prime to p if coprime)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if method == "auto":
        method = "enumerate" if p <= ENUMERATION_LIMIT else "lift"
    if method == "enumerate":
        return _rho_enumerate(f, p, coprime)
    if method == "lift":
        return _rho_lift(f, p, coprime)
    raise ValueError(f"unknown method {method!r}")


def is_cube_free(n: int) -> bool:
    return all(e < 3 for _, e in factor(n).factors)


@dataclass(frozen=True)
class DensityReport:
    limit: int
    tested: int
    cubefree_count: int
    empirical_density: Fraction
    prime_cutoff: int
    root_counts: tuple[tuple[int, int], ...]
    truncated_product: Fraction
    helfgott_constant: Fraction
    non_cubefree: tuple[int, ...] = ()


def _cubefree_flags(lo: int, hi: int) -> list[tuple[int, bool]]:
    return [(k, is_cube_free(gk_value(k))) for k in range(lo, hi + 1)]


def truncated_product(prime_cutoff: int) -> tuple[Fraction, tuple[tuple[int, int], ...]]:
    counts = tuple((p, rho_cube(p)) for p in primes_up_to(prime_cutoff))
    value = Fraction(1)
    for p, r in counts:
        value *= 1 - Fraction(r, p**3)
    return value, counts


def hel_constant(prime_cutoff: int) -> Fraction:
    """Truncation of prod_p (1 - rho'(p^3)/phi(p^3)) for g at prime arguments."""
    if prime_cutoff < 2:
        raise ValueError("prime_cutoff must be at least 2")
    value = Fraction(1)
    for p in primes_up_to(prime_cutoff):
        value *= 1 - Fraction(rho_cube(p, coprime=True), p**3 - p**2)
    return value


def cubefree_density(limit: int, prime_cutoff: int, workers: int = 1) -> DensityReport:
    if limit < 10:
        raise ValueError("limit must be at least 10")
    if prime_cutoff < 2:
        raise ValueError("prime_cutoff must be at least 2")
    flags = _run_chunks(_cubefree_flags, _ranges(1, limit, 1000), workers)
    bad = tuple(k for k, ok in flags if not ok)
    product, counts = truncated_product(prime_cutoff)
    return DensityReport(
        limit=limit,
        tested=len(flags),
        cubefree_count=len(flags) - len(bad),
        empirical_density=Fraction(len(flags) - len(bad), len(flags)),
        prime_cutoff=prime_cutoff,
        root_counts=counts,
        truncated_product=product,
        helfgott_constant=hel_constant(prime_cutoff),
        non_cubefree=bad,
    )


# -- omega over primes -------------------------------------------------------

@dataclass(frozen=True)
class OmegaStats:
    prime_limit: int
    samples: tuple[tuple[int, int], ...]
    mean_omega: Fraction
    mean_loglog: float
    failures: tuple[int, ...] = field(default=())


def _omega_samples(primes: Iterable[int]) -> list[tuple[int, int | None]]:
    out = []
    for p in primes:
        try:
            out.append((p, omega(m_value(5 * p))))
        except (FactorizationError, MagnitudeError):
            out.append((p, None))
    return out


def omega_over_primes(prime_limit: int, workers: int = 1) -> OmegaStats:
    """omega(m_{5p}) for each prime p <= prime_limit; descriptive only."""
    if prime_limit < 2:
        raise ValueError("prime_limit must be at least 2")
    primes = primes_up_to(prime_limit)
    jobs = [(primes[i : i + 200],) for i in range(0, len(primes), 200)]
    raw = _run_chunks(_omega_samples, jobs, workers)
    samples = tuple((p, w) for p, w in raw if w is not None)
    failures = tuple(p for p, w in raw if w is None)
    if not samples:
        raise FactorizationError(prime_limit, 0)
    return OmegaStats(
        prime_limit=prime_limit,
        samples=samples,
        mean_omega=Fraction(sum(w for _, w in samples), len(samples)),
        mean_loglog=math.fsum(math.log(math.log(p)) for p, _ in samples) / len(samples),
        failures=failures,
    )


def square_values_of_m(bound: int = 406250, workers: int = 1) -> list[int]:
    """Integers x with |x| <= bound and m_x a perfect square."""
    return [pt.x for pt in curve_integral_points(LEHMER_QUARTIC, bound, workers)]

