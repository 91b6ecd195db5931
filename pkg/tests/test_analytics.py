from fractions import Fraction
from math import isqrt, log

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lehmer_polya import analytics
from lehmer_polya.analytics import (
    CurvePoint,
    cubefree_density,
    curve_integral_points,
    gk_value,
    hel_constant,
    masser_bound,
    omega_over_primes,
    rho_cube,
    square_root_poly,
    truncated_product,
)
from lehmer_polya.errors import PerfectSquareError
from lehmer_polya.lehmer import m_value
from lehmer_polya.polyring import LEHMER_QUARTIC, IntPolynomial

# Frozen from an independent sympy / brute-force run (no package code involved).
TRUNCATED_PRODUCT_100 = Fraction(20117935490870355810417, 20183039639774699876221)
HEL_CONSTANT_100 = Fraction(14618909035871127, 14670733454815625)
NON_CUBEFREE_K_10K = (
    356, 1110, 1248, 1278, 1687, 2429, 2441, 2579, 2609, 3018, 3772, 3910, 3940, 4349, 5103,
    5241, 5271, 5680, 6434, 6572, 6602, 6746, 7011, 7620, 7765, 7903, 7933, 8342, 9096, 9234,
    9264, 9673, 9722,
)
NONZERO_RHO_100 = {11: 4, 31: 4, 41: 4, 61: 4, 71: 4}


def brute_points(coeffs, bound):
    out = []
    for x in range(-bound, bound + 1):
        v = sum(c * x ** (4 - i) for i, c in enumerate(coeffs))
        if v >= 0 and isqrt(v) ** 2 == v:
            out.append((x, isqrt(v)))
    return out


def test_masser_bound_examples():
    assert masser_bound(LEHMER_QUARTIC) == 406250
    assert masser_bound(IntPolynomial([1, 0, 0, 0, 1])) == 26
    assert masser_bound(IntPolynomial([1, 0, -1, 1, 1])) == 26
    assert masser_bound(IntPolynomial([1, 2, 0, 0, 1])) == 208


def test_masser_bound_rejects_squares_and_non_quartics():
    with pytest.raises(PerfectSquareError):
        masser_bound(IntPolynomial([1, 0, 2, 0, 1]))
    with pytest.raises(ValueError):
        masser_bound(IntPolynomial([2, 0, 0, 0, 1]))
    with pytest.raises(ValueError):
        masser_bound(IntPolynomial([1, 0, 0, 1]))


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_square_root_poly_detects_squares(a, b):
    g = IntPolynomial([1, a, b])
    f = IntPolynomial([1, 2 * a, a * a + 2 * b, 2 * a * b, b * b])
    assert square_root_poly(f) == g


@given(st.lists(st.integers(-20, 20), min_size=4, max_size=4))
def test_square_root_poly_agrees_with_sympy(tail):
    x = sympy.Symbol("x")
    f = sympy.Poly([1, *tail], x)
    _, factors = f.sqf_list()
    is_square = all(e % 2 == 0 for _, e in factors)
    assert (square_root_poly(IntPolynomial([1, *tail])) is not None) == is_square


def test_curve_small_examples():
    assert curve_integral_points(IntPolynomial([1, 0, 0, 0, 1])) == [CurvePoint(0, 1)]
    with pytest.raises(PerfectSquareError):
        curve_integral_points(IntPolynomial([1, 0, 2, 0, 1]))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_curve_matches_brute_force(tail):
    f = IntPolynomial([1, *tail])
    if square_root_poly(f) is not None:
        return
    expected = brute_points(f.coefficients, masser_bound(f))
    assert [(p.x, p.y) for p in curve_integral_points(f)] == expected


def test_curve_points_satisfy_equation():
    f = IntPolynomial([1, 0, -3, 0, 4])
    pts = curve_integral_points(f)
    assert pts and all(p.y >= 0 and p.y**2 == f(p.x) for p in pts)
    assert [p.x for p in pts] == sorted(p.x for p in pts)


def test_curve_chunking_is_schedule_independent(monkeypatch):
    f = IntPolynomial([1, 1, -2, 0, 1])
    whole = curve_integral_points(f, bound=2000)
    monkeypatch.setattr(analytics, "CHUNK", 7)
    assert curve_integral_points(f, bound=2000) == whole
    assert curve_integral_points(f, bound=2000, workers=2) == whole


@pytest.mark.parametrize("k, expected", [(0, 1), (1, 71), (2, 671)])
def test_gk_value(k, expected):
    assert gk_value(k) == expected


def test_gk_relation():
    assert gk_value(1) * 25 == 1775
    assert gk_value(2) * 25 == 16775
    assert all(25 * gk_value(k) == m_value(5 * k) for k in range(-10**4, 10**4 + 1))


def test_g_is_one_mod_five():
    assert all(gk_value(k) % 5 == 1 for k in range(-100, 100))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rho_small_primes_vanish(p):
    assert rho_cube(p) == 0
    assert rho_cube(p, method="enumerate") == 0


def test_rho_lift_matches_enumeration():
    for p in sympy.primerange(2, 51):
        assert rho_cube(p, "lift") == rho_cube(p, "enumerate")
        assert rho_cube(p, "lift", coprime=True) == rho_cube(p, "enumerate", coprime=True)


def test_rho_lift_handles_singular_roots():
    # x^2 (x - 1)(x - 2) has a double root at 0 mod every p
    f = IntPolynomial([1, -3, 2, 0, 0])
    for p in (3, 5, 7, 11):
        assert rho_cube(p, "lift", f=f) == rho_cube(p, "enumerate", f=f)


def test_rho_bounds():
    for p in sympy.primerange(2, 200):
        r = rho_cube(p)
        rp = rho_cube(p, coprime=True)
        assert 0 <= rp <= r <= 4 * p * p


def test_rho_rejects_composites_and_bad_method():
    with pytest.raises(ValueError):
        rho_cube(4)
    with pytest.raises(ValueError):
        rho_cube(7, method="magic")


def test_truncated_product_frozen():
    value, counts = truncated_product(100)
    assert value == TRUNCATED_PRODUCT_100
    assert {p: r for p, r in counts if r} == NONZERO_RHO_100


def test_truncated_product_non_increasing():
    values = [truncated_product(c)[0] for c in (2, 5, 11, 30, 60, 100, 200)]
    assert values == sorted(values, reverse=True)
    assert truncated_product(5)[0] == 1


def test_hel_constant():
    assert hel_constant(5) == 1
    assert hel_constant(2) == 1
    assert hel_constant(100) == HEL_CONSTANT_100
    with pytest.raises(ValueError):
        hel_constant(1)


def test_density_small():
    rep = cubefree_density(10, 5)
    assert rep.empirical_density == 1
    assert rep.truncated_product == 1
    assert rep.tested == rep.cubefree_count == 10
    with pytest.raises(ValueError):
        cubefree_density(9, 5)


@pytest.mark.slow
def test_density_ten_thousand():
    rep = cubefree_density(10**4, 100)
    assert rep.non_cubefree == NON_CUBEFREE_K_10K
    assert rep.empirical_density == Fraction(9967, 10000)
    assert rep.truncated_product == TRUNCATED_PRODUCT_100
    assert abs(rep.empirical_density - rep.truncated_product) <= Fraction(1, 100)


def test_density_workers_agree():
    assert cubefree_density(2500, 50, workers=2) == cubefree_density(2500, 50)


def test_omega_examples():
    stats = omega_over_primes(10)
    assert stats.samples == ((2, 3), (3, 2), (5, 3), (7, 2))
    assert stats.mean_omega == Fraction(10, 4)
    assert stats.mean_loglog == pytest.approx(sum(log(log(p)) for p in (2, 3, 5, 7)) / 4)
    assert omega_over_primes(2).samples == ((2, 3),)
    with pytest.raises(ValueError):
        omega_over_primes(1)


def test_omega_matches_sympy():
    for p, w in omega_over_primes(500).samples:
        assert w == len(sympy.factorint(m_value(5 * p)))


def test_omega_at_least_two_up_to_ten_thousand():
    stats = omega_over_primes(10**4)
    assert len(stats.samples) == 1229 and not stats.failures
    assert min(w for _, w in stats.samples) >= 2
    assert stats.mean_omega == Fraction(4643, 1229)


def test_omega_failures_are_excluded(monkeypatch):
    from lehmer_polya.errors import FactorizationError

    real = analytics.omega

    def flaky(n):
        if n == m_value(15):
            raise FactorizationError(n, n)
        return real(n)

    monkeypatch.setattr(analytics, "omega", flaky)
    stats = omega_over_primes(10)
    assert stats.failures == (3,)
    assert [p for p, _ in stats.samples] == [2, 5, 7]
    assert stats.mean_omega == Fraction(8, 3)
