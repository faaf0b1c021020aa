"""Tests for the rank-1 extension engine."""

import math
import random
from fractions import Fraction as F

import pytest

from oracles import padic_factor_degrees
from valknaf.gf import GF
from valknaf.localsplit import (BaseValuation, LocalFactor,
                                NewtonPolygonSegment, UnresolvedBranchError,
                                newton_polygon, residual_polynomial,
                                split_extensions, to_extension_invariants,
                                value_of)
from valknaf.poly import Poly, QQ, poly_gcd
from valknaf.raminv import knaf_decide
from valknaf.residuefield import UnsupportedResidueExtension

V2 = BaseValuation.padic(2)
V3 = BaseValuation.padic(3)
V5 = BaseValuation.padic(5)


def vt_over(q):
    return BaseValuation.pi_adic(GF(q, 1), [0, 1])


def efd(factors):
    return [(lf.e, lf.f, lf.degree) for lf in factors]


# -- base valuations ---------------------------------------------------------

def test_value_of_examples():
    assert value_of(V2, 12) == 2
    assert value_of(V5, F(7, 25)) == -2
    vt = vt_over(3)
    assert value_of(vt, vt.field.from_coeff_lists([0, 0, 0, 1, 0, 1])) == 3
    assert value_of(V2, 0) == float("inf")


def test_padic_requires_prime():
    with pytest.raises(ValueError):
        BaseValuation.padic(6)


def test_pi_adic_requires_irreducible():
    with pytest.raises(ValueError):
        BaseValuation.pi_adic(GF(3, 1), [2, 0, 1])  # t^2 + 2 = (t-1)(t+1)
    with pytest.raises(ValueError):
        BaseValuation.pi_adic(GF(3, 1), [1, 2])  # not monic


def test_pi_adic_rational_constants_degree_limit():
    # t-adic on Q(t) works; a degree-2 residue extension of Q is refused
    vq = BaseValuation.pi_adic(QQ, [0, 1])
    assert vq.residue_char == 0
    with pytest.raises(UnsupportedResidueExtension):
        BaseValuation.pi_adic(QQ, [1, 0, 1])


def test_pi_adic_nontrivial_residue_field():
    # (t^2+1)-adic on F_3(t): residue field F_9
    v = BaseValuation.pi_adic(GF(3, 1), [1, 0, 1])
    assert v.residue_field is GF(3, 2)
    t = v.field.t
    assert v.value_of((t * t + 1) ** 2 / t) == 2
    r = v.shifted_reduce(t, 0)
    assert r * r + v.residue_field.one == v.residue_field.zero


# -- newton polygons ---------------------------------------------------------

def test_polygon_examples():
    assert newton_polygon(V2, [-2, 0, 1]) == [
        NewtonPolygonSegment(slope=F(-1, 2), length=2)]
    assert newton_polygon(V2, [-4, 0, 1]) == [
        NewtonPolygonSegment(slope=F(-1), length=2)]
    assert newton_polygon(V5, [1, 0, 1]) == [
        NewtonPolygonSegment(slope=F(0), length=2)]


def test_polygon_two_segments():
    # (x^2 - 2)(x - 4) = x^3 - 4x^2 - 2x + 8: root valuations 1/2, 1/2, 2
    segs = newton_polygon(V2, [8, -2, -4, 1])
    assert segs == [NewtonPolygonSegment(slope=F(-2), length=1),
                    NewtonPolygonSegment(slope=F(-1, 2), length=2)]
    assert all(a.slope < b.slope for a, b in zip(segs, segs[1:]))
    assert sum(s.length for s in segs) == 3


def test_polygon_rejects_zero_constant_term():
    with pytest.raises(ValueError):
        newton_polygon(V2, [0, -2, 1])
    with pytest.raises(ValueError):
        newton_polygon(V2, [2, 0, 2])  # not monic


# -- residual polynomials ----------------------------------------------------

def test_residual_examples():
    seg = newton_polygon(V5, [1, 0, 1])[0]
    r = residual_polynomial(V5, [1, 0, 1], seg)
    assert r == Poly(GF(5, 1), [1, 0, 1])  # T^2 + 1 over F_5

    seg = newton_polygon(V2, [-2, 0, 1])[0]
    r = residual_polynomial(V2, [-2, 0, 1], seg)
    assert r == Poly(GF(2, 1), [1, 1])  # T - 1 = T + 1 over F_2

    vt = vt_over(3)
    g = [-vt.field.t, 0, 1]
    seg = newton_polygon(vt, g)[0]
    r = residual_polynomial(vt, g, seg)
    assert r == Poly(GF(3, 1), [2, 1])  # T - 1 over F_3


def test_residual_rejects_foreign_segment():
    with pytest.raises(ValueError):
        residual_polynomial(V2, [-2, 0, 1], NewtonPolygonSegment(F(-1), 2))


# -- split_extensions: named instances ---------------------------------------

def test_split_named_instances():
    assert efd(split_extensions(V2, [-2, 0, 1])) == [(2, 1, 2)]
    assert efd(split_extensions(V5, [1, 0, 1])) == [(1, 1, 1), (1, 1, 1)]
    assert efd(split_extensions(V3, [1, 0, 1])) == [(1, 2, 2)]
    vt = vt_over(3)
    assert efd(split_extensions(vt, [-vt.field.t, 0, 1])) == [(2, 1, 2)]


def test_split_wild_cases():
    # Q_2(zeta_8): totally ramified quartic
    assert efd(split_extensions(V2, [1, 0, 0, 0, 1])) == [(4, 1, 4)]
    # x^4 + 4 = (x^2-2x+2)(x^2+2x+2): two ramified quadratics
    assert efd(split_extensions(V2, [4, 0, 0, 0, 1])) == [(2, 1, 2), (2, 1, 2)]
    # roots +-i(sqrt(3)-1): the field Q_2(i, sqrt 3) has e = f = 2
    assert efd(split_extensions(V2, [4, 0, 8, 0, 1])) == [(2, 2, 4)]
    # x^3 - 2 at 3 and at 5
    assert efd(split_extensions(V3, [-2, 0, 0, 1])) == [(3, 1, 3)]
    assert efd(split_extensions(V5, [-2, 0, 0, 1])) == [(1, 1, 1), (1, 2, 2)]


def test_split_function_field_cases():
    vt = vt_over(3)
    t = vt.field.t
    # purely inseparable-looking but squarefree: x^3 - t
    assert efd(split_extensions(vt, [-t, 0, 0, 1])) == [(3, 1, 3)]
    # inert cubic: x^3 + 2x + 1 stays irreducible over F_3
    assert efd(split_extensions(vt, [1, 2, 0, 1])) == [(1, 3, 3)]
    # mixed product: (x^2 - t)(x^2 - 1)
    g = [t, 0, -(1 + t), 0, 1]
    assert efd(split_extensions(vt, g)) == [(2, 1, 2), (1, 1, 1), (1, 1, 1)]


def test_split_exact_division_path():
    # x^2 - 1/4 has roots +-1/2 of valuation -1 at v_2
    assert efd(split_extensions(V2, [F(-1, 4), 0, 1])) == [(1, 1, 1), (1, 1, 1)]
    # x(x^2 - 2) has the zero root split off via exact key division
    assert efd(split_extensions(V2, [0, -2, 0, 1])) == [(2, 1, 2), (1, 1, 1)]


def test_split_rejects_bad_input():
    with pytest.raises(ValueError):
        split_extensions(V2, [4, 0, -4, 0, 1])  # (x^2-2)^2
    with pytest.raises(ValueError):
        split_extensions(V2, [2, 0, 2])  # not monic
    with pytest.raises(ValueError):
        split_extensions(V2, [1])  # constant
    vt = vt_over(3)
    t = vt.field.t
    # (x - t)^3 (x^3 - t) = (x^3 - t^3)(x^3 - t): inseparable repeated layer
    gbad = [t ** 4, 0, 0, -(t ** 3 + t), 0, 0, 1]
    with pytest.raises(ValueError):
        split_extensions(vt, gbad)


def test_split_depth_limit():
    with pytest.raises(UnresolvedBranchError) as exc:
        split_extensions(V2, [4, 0, 8, 0, 1], depth_limit=1)
    assert "slope" in str(exc.value)


def test_split_unsupported_rational_residue_growth():
    # over Q(t) a branch needing the residue field Q(i) is refused honestly
    vq = BaseValuation.pi_adic(QQ, [0, 1])
    t = vq.field.t
    g = [1 + t, 0, 2, 0, 1]  # (x^2+1)^2 + t
    with pytest.raises(UnsupportedResidueExtension):
        split_extensions(vq, g)


def test_split_determinism_and_certificates():
    g = [4, 0, 8, 0, 1]
    a = split_extensions(V2, g)
    b = split_extensions(V2, g)
    assert a == b
    assert all(isinstance(lf, LocalFactor) for lf in a)
    assert all("slope" in lf.certificate for lf in a)


# -- conservation against the Hensel oracle ----------------------------------

def rand_monic_squarefree(rng, field=QQ, max_deg=4, rational=False):
    while True:
        deg = rng.randint(2, max_deg)
        if rational:
            coeffs = [F(rng.randint(-8, 8), rng.randint(1, 4))
                      for _ in range(deg)]
        else:
            coeffs = [F(rng.randint(-10, 10)) for _ in range(deg)]
        g = Poly(field, coeffs + [1])
        if poly_gcd(g, g.derivative()).degree == 0:
            return g


def scaled_integer_model(g):
    """h(y) = M^n g(y/M): monic, integer coefficients, same splitting type."""
    M = math.lcm(*[c.denominator for c in g.coeffs])
    n = g.degree
    return [int(c * M ** (n - i)) for i, c in enumerate(g.coeffs)]


def test_conservation_matches_hensel_oracle():
    rng = random.Random(20240819)
    primes = {2: V2, 3: V3, 5: V5}
    checked = 0
    for _ in range(24):
        rational = rng.random() < 0.4
        g = rand_monic_squarefree(rng, rational=rational)
        p = rng.choice(list(primes))
        factors = split_extensions(primes[p], g)
        assert sum(lf.degree for lf in factors) == g.degree
        assert all(lf.e * lf.f == lf.degree for lf in factors)
        oracle = padic_factor_degrees(scaled_integer_model(g), p)
        assert sorted(lf.degree for lf in factors) == oracle, (g, p)
        checked += 1
    assert checked == 24


def test_mixed_product_over_q():
    # (x^2 - 2)(x^3 - 2)(x - 7) at v_2
    g = Poly(QQ, [-2, 0, 1]) * Poly(QQ, [-2, 0, 0, 1]) * Poly(QQ, [-7, 1])
    factors = split_extensions(V2, g)
    assert efd(factors) == [(2, 1, 2), (3, 1, 3), (1, 1, 1)]
    assert sorted(lf.degree for lf in factors) == padic_factor_degrees(
        [int(c) for c in g.coeffs], 2)


# -- pipeline to invariants ---------------------------------------------------

def test_to_extension_invariants_pipeline():
    cases = [
        (V2, [-2, 0, 1], [(2, 1, 2, 1)]),
        (V5, [1, 0, 1], [(1, 1, 1, 1), (1, 1, 1, 1)]),
        (V3, [1, 0, 1], [(1, 2, 1, 1)]),
    ]
    for v, g, expected in cases:
        factors = split_extensions(v, g)
        got = []
        for lf in factors:
            inv = to_extension_invariants(v, lf, total_degree=len(g) - 1)
            verdict = knaf_decide(inv)
            got.append((verdict.e, verdict.f, verdict.eps, verdict.d))
            assert verdict.eft
        assert got == expected
    vt = vt_over(3)
    lf = split_extensions(vt, [-vt.field.t, 0, 1])[0]
    verdict = knaf_decide(to_extension_invariants(vt, lf, 2))
    assert (verdict.e, verdict.f, verdict.eps, verdict.d) == (2, 1, 2, 1)
    assert verdict.eft
