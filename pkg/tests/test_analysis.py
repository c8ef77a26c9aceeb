import math
import random

import mpmath
import pytest

from softroot import analysis
from softroot.analysis import (
    AmbiguousBoundary,
    TooManyRoots,
    ZeroDenominator,
    ZeroDistance,
    build_s0,
    cluster_geometry,
    gamma_poly,
    mahler,
    predicted_bounds,
    s_f,
)
from softroot.dyadic import ComplexDyadic, Dyadic
from softroot.functions import Poly
from softroot.geometry import ComplexBox
from softroot.interval import ComplexInterval, DyInterval
from softroot.roots import RootSet
from softroot.suites import _roots_zd_minus_2, bounds_instances

from helpers import inside

O = ComplexDyadic()
C0 = 2**17 * math.e**2


def cd(re, im=0):
    return ComplexDyadic(Dyadic.coerce(re), Dyadic.coerce(im))


def near(iv, x, tol=1e-12):
    return float(iv.lo) - tol <= x <= float(iv.hi) + tol


def test_gamma_examples():
    assert inside(gamma_poly(Poly([-2, 0, 1]), O), mpmath.sqrt(mpmath.mpf(1) / 2))
    assert inside(gamma_poly(Poly([-5, 1]), O), mpmath.mpf(1) / 5)
    assert near(gamma_poly(Poly([0, 0, 1]), cd(1)), 2.0)
    with pytest.raises(ZeroDenominator):
        gamma_poly(Poly([0, 0, 1]), O)


def test_s_f_examples():
    assert inside(s_f(_roots_zd_minus_2(2), O), mpmath.sqrt(2))
    assert near(s_f(RootSet([1]), cd(3)), 0.5)
    assert near(s_f(RootSet([(0, 2)]), cd(2)), 1.0)
    with pytest.raises(ZeroDistance):
        s_f(RootSet([1]), cd(1))


def test_mahler_examples():
    assert near(mahler(Poly([-2, 0, 1]), _roots_zd_minus_2(2)), 2.0)
    assert near(mahler(Poly([Dyadic(-1, -1), 1]), RootSet([Dyadic(1, -1)])), 1.0)
    assert near(mahler(Poly.from_roots([1, 2, 3, 4, 5]), RootSet([1, 2, 3, 4, 5])), 120.0)
    with pytest.raises(AmbiguousBoundary):
        fuzzy = ComplexInterval(DyInterval(Dyadic(1) - Dyadic(1, -20), Dyadic(1) + Dyadic(1, -20)), DyInterval(Dyadic(0)))
        mahler(Poly([-1, 1]), RootSet([fuzzy]))


def test_cluster_geometry_examples():
    roots = RootSet([0, 0, 10])
    zero = [r for r in roots if r.mult == 2]
    g = cluster_geometry(roots, zero)
    assert g.size == 2 and g.m_C.contains(O)
    assert g.r_C.hi == Dyadic(0)
    assert near(g.sigma_C, 10.0) and near(g.gamma_C, 0.1)
    assert math.isclose(float(g.R_C.mid()), 20 / C0, rel_tol=1e-12)
    assert g.strongly_separated

    whole = cluster_geometry(roots, list(roots))
    assert whole.gamma_C.hi == Dyadic(0) and whole.R_C is None and whole.sigma_C is None
    assert whole.strongly_separated

    a = Dyadic(1, -2)
    roots = RootSet([a, a + Dyadic(1, -6)])
    g = cluster_geometry(roots, [r for r in roots if r.where.re.lo == a])
    assert g.r_C.hi == Dyadic(0) and g.strongly_separated
    assert near(g.sigma_C, 2**-6)


def test_build_s0_examples():
    roots = RootSet([0, 0, 10])
    assert [g.size for g in build_s0(roots, ComplexBox(O, 8))] == [2]
    assert [g.size for g in build_s0(roots, ComplexBox(O, 32))] == [3]
    assert [g.size for g in build_s0(RootSet([1]), ComplexBox(O, 8))] == [1]
    assert build_s0(RootSet([100]), ComplexBox(O, 8)) == []
    many = RootSet([cd(Dyadic(i, -2)) for i in range(13)])
    with pytest.raises(TooManyRoots):
        build_s0(many, ComplexBox(O, 64))


def test_predicted_bounds_examples():
    tb = predicted_bounds(Poly([0, 1]), RootSet([0]), ComplexBox(O, 4), 1)
    assert tb.tree_bound == pytest.approx(2.0)
    f, roots, B0 = Poly([-2, 0, 1]), _roots_zd_minus_2(2), ComplexBox(O, 8)
    singles = [cluster_geometry(roots, [r]) for r in roots]
    assert predicted_bounds(f, roots, B0, 2, s0=singles).tree_bound == pytest.approx(10.0, abs=1e-9)
    assert predicted_bounds(f, roots, B0, 2).tree_bound == pytest.approx(16.0)
    prod5 = Poly.from_roots([1, 2, 3, 4, 5])
    tb = predicted_bounds(prod5, RootSet([1, 2, 3, 4, 5]), ComplexBox(O, 8), 5)
    assert tb.intpoly_bound == pytest.approx(25 * math.log2(120) + 125)
    assert 297.5 < tb.intpoly_bound < 297.7


def _random_poly(rng):
    pts = [cd(Dyadic(rng.randint(-40, 40), -3), Dyadic(rng.randint(-40, 40), -3)) for _ in range(rng.randint(1, 5))]
    return Poly.from_roots(pts), RootSet(pts)


def test_gamma_below_s_f():
    rng = random.Random(21)
    for _ in range(200):
        f, roots = _random_poly(rng)
        z = cd(Dyadic(rng.randint(-99, 99), -4), Dyadic(rng.randint(-99, 99), -4))
        if f(z) == O:
            continue
        assert gamma_poly(f, z).lo <= s_f(roots, z).hi


def test_strong_separation_is_scale_invariant():
    rng = random.Random(22)
    checked = 0
    for _ in range(60):
        base = [Dyadic(rng.randint(-64, 64), -rng.randint(0, 12)) for _ in range(rng.randint(2, 4))]
        if len(set(base)) < len(base):
            continue
        for t in (-3, 5):
            roots = RootSet(base)
            scaled = RootSet([b.ldexp(t) for b in base])
            try:
                g1 = cluster_geometry(roots, list(roots)[:2])
                g2 = cluster_geometry(scaled, list(scaled)[:2])
            except (AmbiguousBoundary, ZeroDenominator):
                continue
            assert g1.strongly_separated == g2.strongly_separated
            checked += 1
    assert checked > 50


def test_s0_parts_are_unmergeable():
    rng = random.Random(23)
    for _ in range(30):
        c = Dyadic(rng.randint(-8, 8))
        pts = [c + Dyadic(rng.randint(-3, 3), -rng.randint(20, 40)) for _ in range(3)]
        pts += [Dyadic(rng.randint(-20, 20), -1) for _ in range(2)]
        try:
            roots = RootSet(pts)
        except ValueError:
            continue
        s0 = build_s0(roots, ComplexBox(O, 16))
        assert sum(g.size for g in s0) == sum(r.mult for r in analysis.roots_in(roots, ComplexBox(O, 32)))
        for i in range(len(s0)):
            for j in range(i + 1, len(s0)):
                try:
                    merged = cluster_geometry(roots, s0[i].members + s0[j].members)
                except ZeroDenominator:
                    continue
                assert not merged.strongly_separated


def test_intpoly_monotone_on_suite():
    rows = []
    for inst in bounds_instances():
        tb = predicted_bounds(inst.f, inst.roots, inst.B0, inst.degree)
        rows.append((inst.degree, tb.mahler, tb.intpoly_bound))
    for a in rows:
        for b in rows:
            if a[0] <= b[0] and a[1] <= b[1]:
                assert a[2] <= b[2]


def test_theory_json_is_strings():
    tb = predicted_bounds(Poly([-2, 0, 1]), _roots_zd_minus_2(2), ComplexBox(O, 8), 2)
    js = tb.to_json()
    assert js["degree"] == 2 and isinstance(js["tree_bound"], str)
