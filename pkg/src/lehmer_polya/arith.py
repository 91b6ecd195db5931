"""Exact integer arithmetic: primality, factorization, valuations, omega, cube parts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod

from .errors import FactorizationError, MagnitudeError

# Miller-Rabin with the first 13 prime bases is deterministic below this bound.
DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

SMALL_TABLE_LIMIT = 10**4
TRIAL_LIMIT = 1000
RHO_ATTEMPTS = 40


@lru_cache(maxsize=None)
def primes_up_to(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@lru_cache(maxsize=None)
def _small_prime_set() -> frozenset[int]:
    return frozenset(primes_up_to(SMALL_TABLE_LIMIT))


def is_prime(n: int) -> bool:
    if n < 1:
        raise ValueError(f"is_prime expects a positive integer, got {n}")
    if n < SMALL_TABLE_LIMIT:
        return n in _small_prime_set()
    if n >= DETERMINISTIC_LIMIT:
        raise MagnitudeError(f"{n} exceeds the deterministic primality range")
    return _miller_rabin(n)


def _miller_rabin(n: int) -> bool:
    """Strong probable-prime test to the fixed bases; False is always a proof."""
    for p in _MR_BASES:
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition, pairs sorted by prime."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def exponent(self, p: int) -> int:
        return self.as_dict().get(p, 0)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def _brent(n: int, rng: random.Random, max_iter: int = 1 << 22) -> int | None:
    """One Pollard-Brent attempt on odd composite n; a nontrivial divisor or None."""
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
        steps += r
        if steps > max_iter:
            return None
    if g == n:
        # batch overshot; back up one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if 1 < g < n else None


def _split(n: int, original: int) -> int:
    root = isqrt(n)
    if root * root == n:
        return root
    rng = random.Random(n)
    for _ in range(RHO_ATTEMPTS):
        d = _brent(n, rng)
        if d is not None:
            return d
    raise FactorizationError(original, n)


def factor(n: int, trial_limit: int = TRIAL_LIMIT) -> Factorization:
    """Complete factorization of n >= 1.

    Trial division by primes up to trial_limit, then each remaining cofactor
    is either certified prime or split by Pollard-Brent. Raises FactorizationError rather than return an
    uncertified factor.
    """
    if n < 1:
        raise ValueError(f"factor expects a positive integer, got {n}")
    found: dict[int, int] = {}
    rest = n
    for p in primes_up_to(trial_limit):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
    stack = [rest] if rest > 1 else []
    while stack:
        c = stack.pop()
        if c >= DETERMINISTIC_LIMIT and _miller_rabin(c):
            raise MagnitudeError(f"cofactor {c} of {n} cannot be certified prime")
        if c < DETERMINISTIC_LIMIT and is_prime(c):
            found[c] = found.get(c, 0) + 1
            continue
        d = _split(c, n)
        stack.extend((d, c // d))
    return Factorization(tuple(sorted(found.items())))


def valuation(n: int, p: int) -> int:
    if n < 1 or p < 2:
        raise ValueError("valuation expects n >= 1 and a prime p")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def omega(n: int) -> int:
    return len(factor(n).factors)


def cube_part(n: int | Factorization) -> int:
    fac = n if isinstance(n, Factorization) else factor(n)
    return prod(p**e for p, e in fac.factors if e >= 3)


def integer_sqrt(n: int) -> tuple[int, bool]:
    if n < 0:
        raise ValueError("integer_sqrt of a negative number")
    r = isqrt(n)
    return r, r * r == n
