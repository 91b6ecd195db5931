"""Dense integer polynomials: Lehmer quintics, discriminants, irreducibility mod p.

Coefficients are stored highest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import is_prime


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Sequence[int]):
        coeffs = [int(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[0] == 0:
            coeffs.pop(0)
        object.__setattr__(self, "coefficients", tuple(coeffs) or (0,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[0]

    @property
    def height(self) -> int:
        return max(abs(c) for c in self.coefficients)

    def __call__(self, x: int) -> int:
        return eval_poly(self, x)

    def derivative(self) -> IntPolynomial:
        d = self.degree
        if d == 0:
            return IntPolynomial([0])
        return IntPolynomial([c * (d - i) for i, c in enumerate(self.coefficients[:-1])])

    def shift(self, c: int) -> IntPolynomial:
        """f(x + c)."""
        result = [0]
        for a in self.coefficients:
            # result = result * (x + c) + a
            nxt = result + [0]
            for i in range(len(result)):
                nxt[i + 1] += c * result[i]
            nxt[-1] += a
            result = nxt
        return IntPolynomial(result)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            k = self.degree - i
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def lehmer_coeffs(n: int) -> IntPolynomial:
    return IntPolynomial([
        1,
        n**2,
        -(2 * n**3 + 6 * n**2 + 10 * n + 10),
        n**4 + 5 * n**3 + 11 * n**2 + 15 * n + 5,
        n**3 + 4 * n**2 + 10 * n + 10,
        1,
    ])


LEHMER_QUARTIC = IntPolynomial([1, 5, 15, 25, 25])


def eval_poly(f: IntPolynomial, x: int) -> int:
    acc = 0
    for c in f.coefficients:
        acc = acc * x + c
    return acc


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f.coefficients) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g.coefficients) + [0] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    return bareiss_determinant(sylvester_matrix(f, g))


def discriminant(f: IntPolynomial) -> int:
    d = f.degree
    if d < 2:
        raise ValueError("discriminant needs degree >= 2")
    res = resultant(f, f.derivative())
    q, r = divmod(res, f.leading)
    if r:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return (-1) ** (d * (d - 1) // 2) * q


# GF(p)[x] helpers, lists lowest degree first, always trimmed.

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        coef = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        _trim(a)
    return a


def _mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _polymod(out, m, p)


def _powmod_x(e: int, m: list[int], p: int) -> list[int]:
    result, base = [1], _polymod([0, 1], m, p)
    while e:
        if e & 1:
            result = _mulmod(result, base, m, p)
        base = _mulmod(base, base, m, p)
        e >>= 1
    return result


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _polymod(a, b, p)
    return a


def is_irreducible_mod_p(f: IntPolynomial, p: int) -> bool:
    """Irreducibility of a quintic over GF(p): no roots and no quadratic factors."""
    if f.degree != 5:
        raise ValueError("is_irreducible_mod_p is defined for quintics only")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.leading % p == 0:
        raise ValueError("leading coefficient vanishes mod p")
    m = [c % p for c in reversed(f.coefficients)]
    x_p = _powmod_x(p, m, p)
    x_p2 = _powmod_x(p * p, m, p)
    for xq in (x_p, x_p2):
        diff = xq + [0] * max(0, 2 - len(xq))
        diff[1] -= 1
        if len(_gcd(m, diff, p)) > 1:
            return False
    return True
