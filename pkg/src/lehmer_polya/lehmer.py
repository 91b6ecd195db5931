"""Field-level invariants of the Lehmer quintic fields K_n."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .arith import Factorization, factor, integer_sqrt
from .errors import ConsistencyError
from .polyring import IntPolynomial, lehmer_coeffs


def m_value(n: int) -> int:
    return n**4 + 5 * n**3 + 15 * n**2 + 25 * n + 25


def c_value(n: int) -> int:
    return n**3 + 5 * n**2 + 10 * n + 7


@dataclass(frozen=True)
class LehmerQuintic:
    n: int
    poly: IntPolynomial
    m: int
    c: int
    disc_poly: int


def quintic(n: int) -> LehmerQuintic:
    m, c = m_value(n), c_value(n)
    return LehmerQuintic(n=n, poly=lehmer_coeffs(n), m=m, c=c, disc_poly=c * c * m**4)


@dataclass(frozen=True)
class MDecomposition:
    """m_n = 5^b * A * B^2 * (cube part), A and B square-free and prime to 5."""

    b: int
    A: int
    B: int
    cube: int
    is_cube_free: bool


@dataclass(frozen=True)
class FieldInvariants:
    conductor: int
    field_disc: int
    ramified_primes: tuple[int, ...]
    t: int
    five_ramified: bool


def five_exponent(n: int) -> int:
    return 2 if n % 5 == 0 else 0


def m_factorization(n: int) -> Factorization:
    """Factor m_n and check the 5-adic and mod-5 structure every m_n must have."""
    fac = factor(m_value(n))
    b = five_exponent(n)
    if fac.exponent(5) != b:
        raise ConsistencyError(f"v_5(m_{n}) = {fac.exponent(5)} but 5 | n gives b = {b}")
    bad = [p for p in fac.primes if p != 5 and p % 5 != 1]
    if bad:
        raise ConsistencyError(f"m_{n} has prime divisors {bad} not congruent to 1 mod 5")
    return fac


def decompose_m(n: int, fac: Factorization | None = None) -> MDecomposition:
    fac = fac or m_factorization(n)
    rest = [(p, e) for p, e in fac.factors if p != 5]
    cube = prod(p**e for p, e in fac.factors if e >= 3)
    return MDecomposition(
        b=five_exponent(n),
        A=prod(p for p, e in rest if e == 1),
        B=prod(p for p, e in rest if e == 2),
        cube=cube,
        is_cube_free=cube == 1,
    )


def field_invariants(n: int, fac: Factorization | None = None) -> FieldInvariants:
    fac = fac or m_factorization(n)
    b = five_exponent(n)
    ramified = [p for p, e in fac.factors if p != 5 and e % 5 != 0]
    if b:
        ramified.insert(0, 5)
    conductor = 5**b * prod(p for p in ramified if p != 5)
    return FieldInvariants(
        conductor=conductor,
        field_disc=conductor**4,
        ramified_primes=tuple(ramified),
        t=len(ramified),
        five_ramified=b == 2,
    )


def theta_index(n: int, inv: FieldInvariants | None = None) -> int:
    """Index [O_K : Z[theta_n]] from disc(f_n) = I(theta_n)^2 * d(K_n)."""
    inv = inv or field_invariants(n)
    q = quintic(n)
    ratio, r = divmod(q.disc_poly, inv.field_disc)
    if r:
        raise ConsistencyError(f"d(K_{n}) does not divide disc(f_{n})")
    root, exact = integer_sqrt(ratio)
    if not exact:
        raise ConsistencyError(f"disc(f_{n}) / d(K_{n}) = {ratio} is not a square")
    return root


def gcd_with_six(n: int) -> int:
    return gcd(m_value(n) * c_value(n), 6)
