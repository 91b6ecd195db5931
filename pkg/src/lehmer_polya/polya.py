"""Polya group order and rank, genus number, Polya-number bound, monogenicity.

K_n is cyclic of odd prime degree 5, so |Po(K_n)| = (1/5) * prod e_p with
e_p = 5 at each ramified prime; every ambiguous class has order 5, so Po(K_n)
is elementary abelian of rank t - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import lehmer
from .errors import ConsistencyError

DEGREE = 5


@dataclass(frozen=True)
class PolyaReport:
    n: int
    m: int
    is_cube_free: bool
    is_polya: bool
    po_order: int
    po_rank: int
    genus_number: int
    polya_number_bound: int
    theorem1_applies: bool


@dataclass(frozen=True)
class MonogenicityReport:
    n: int
    theta_index: int
    gcd_with_six: int
    non_monogenic: bool
    field_index_one: bool


def _rank_and_genus(inv: lehmer.FieldInvariants) -> tuple[int, int]:
    rank = inv.t - 1
    genus = DEGREE ** (inv.t if inv.five_ramified else inv.t - 1)
    return rank, genus


def polya_group_order(n: int) -> int:
    return DEGREE ** (lehmer.field_invariants(n).t - 1)


def genus_number(n: int) -> int:
    return _rank_and_genus(lehmer.field_invariants(n))[1]


def polya_number_bound(n: int) -> int:
    """Upper bound on po_K from po_K <= g_K; equals 5|Po| when 5 | n."""
    inv = lehmer.field_invariants(n)
    rank, genus = _rank_and_genus(inv)
    if inv.five_ramified and genus != DEGREE * DEGREE**rank:
        raise ConsistencyError(f"genus bound for n={n} is not 5|Po|")
    return genus


def classify(n: int) -> PolyaReport:
    fac = lehmer.m_factorization(n)
    dec = lehmer.decompose_m(n, fac)
    inv = lehmer.field_invariants(n, fac)
    rank, genus = _rank_and_genus(inv)
    order = DEGREE**rank
    report = PolyaReport(
        n=n,
        m=fac.value,
        is_cube_free=dec.is_cube_free,
        is_polya=order == 1,
        po_order=order,
        po_rank=rank,
        genus_number=genus,
        polya_number_bound=genus,
        theorem1_applies=dec.is_cube_free,
    )
    if report.theorem1_applies:
        m = report.m
        criterion = m == 25 or (len(fac.factors) == 1 and fac.factors[0][1] == 1)
        if criterion != report.is_polya:
            raise ConsistencyError(f"conductor formula disagrees with the m-criterion at n={n}")
    return report


def monogenicity_report(n: int) -> MonogenicityReport:
    report = classify(n)
    index = lehmer.theta_index(n)
    g6 = gcd(index, 6)
    if g6 != 1:
        raise ConsistencyError(f"theta index {index} for n={n} shares a factor with 6")
    return MonogenicityReport(
        n=n,
        theta_index=index,
        gcd_with_six=g6,
        # a non-Polya cyclic quintic is never a real cyclotomic subfield
        non_monogenic=not report.is_polya,
        # field index divisors are primes below the degree, i.e. 2 and 3
        field_index_one=True,
    )

