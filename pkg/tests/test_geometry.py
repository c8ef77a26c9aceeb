import random
from fractions import Fraction
from math import isqrt

from hypothesis import given
from hypothesis import strategies as st

from softroot.dyadic import ComplexDyadic, Dyadic
from softroot.geometry import ComplexBox, Disc, discs_intersect

from helpers import dyadics

O = ComplexDyadic()


def cd(re, im=0):
    return ComplexDyadic(Dyadic.coerce(re), Dyadic.coerce(im))


def test_subdivide4_example():
    kids = ComplexBox(O, 4).subdivide4()
    assert {(int(k.center.re.to_fraction()), int(k.center.im.to_fraction())) for k in kids} == {
        (-1, -1), (1, -1), (-1, 1), (1, 1)}
    assert all(k.width == Dyadic(2) for k in kids)


@given(dyadics(max_bits=20, min_e=-10, max_e=4), dyadics(max_bits=20, min_e=-10, max_e=4),
       st.integers(1, 1 << 10), st.integers(-8, 4))
def test_subdivide4_partitions(x, y, wm, we):
    B = ComplexBox(ComplexDyadic(x, y), Dyadic(wm, we))
    kids = B.subdivide4()
    assert sum((k.area() for k in kids), Dyadic(0)) == B.area()
    x0, x1, y0, y1 = B.bounds()
    for k in kids:
        a0, a1, b0, b1 = k.bounds()
        assert x0 <= a0 and a1 <= x1 and y0 <= b0 and b1 <= y1
    # children meet only along edges: pairwise intersection has zero area
    for i in range(4):
        for j in range(i + 1, 4):
            a, b = kids[i].bounds(), kids[j].bounds()
            dx = min(a[1], b[1]) - max(a[0], b[0])
            dy = min(a[3], b[3]) - max(a[2], b[2])
            assert dx.m <= 0 or dy.m <= 0


def test_scale_identity_and_disc_of():
    B = ComplexBox(cd(Dyadic(3, -2), -1), Dyadic(5, -3))
    assert B.scale(1) == B
    assert B.scale(4).width == Dyadic(5, -1) and B.scale(4).center == B.center
    D = B.disc_of()
    assert D.center == B.center and D.radius == B.radius_upper()


def test_radius_upper_against_integer_sqrt():
    # sqrt(2) to 60 decimal digits by integer square root
    scale = 10**60
    root2 = Fraction(isqrt(2 * scale * scale), scale)
    r = ComplexBox(O, 2).radius_upper().to_fraction()
    assert root2 <= r <= root2 * (1 + Fraction(1, 2**20))
    assert float(r) < 1.41421491


@given(st.integers(1, 1 << 20), st.integers(-30, 30))
def test_radius_upper_bounds_every_width(m, e):
    w = Dyadic(m, e)
    r = ComplexBox(O, w).radius_upper().to_fraction()
    half_diag_sq = w.to_fraction() ** 2 / 2
    assert r * r >= half_diag_sq
    assert r * r <= half_diag_sq * (1 + Fraction(1, 2**20)) ** 2


def test_discs_intersect_examples():
    assert not discs_intersect(Disc(O, 1), Disc(cd(3), 1))
    assert discs_intersect(Disc(O, 1), Disc(cd(2), 1))  # tangent
    assert discs_intersect(Disc(O, 1), Disc(cd(1, 1), Dyadic(1, -1)))


def test_discs_intersect_symmetric_and_matches_floats():
    rng = random.Random(11)
    checked = 0
    for _ in range(5000):
        c1 = cd(Dyadic(rng.randint(-4000, 4000), -8), Dyadic(rng.randint(-4000, 4000), -8))
        c2 = cd(Dyadic(rng.randint(-4000, 4000), -8), Dyadic(rng.randint(-4000, 4000), -8))
        d1 = Disc(c1, Dyadic(rng.randint(0, 3000), -8))
        d2 = Disc(c2, Dyadic(rng.randint(0, 3000), -8))
        got = discs_intersect(d1, d2)
        assert got == discs_intersect(d2, d1)
        dist = abs(complex(float(c1.re), float(c1.im)) - complex(float(c2.re), float(c2.im)))
        rs = float(d1.radius) + float(d2.radius)
        if abs(dist - rs) > 2**-20 * max(rs, 1e-9):
            assert got == (dist <= rs)
            checked += 1
    assert checked > 4000


def test_box_classify():
    from softroot.interval import ComplexInterval, DyInterval

    B = ComplexBox(O, 4)
    inner = ComplexInterval(DyInterval(Dyadic(-1), Dyadic(1)), DyInterval(Dyadic(0), Dyadic(2)))
    outer = ComplexInterval(DyInterval(Dyadic(3), Dyadic(4)), DyInterval(Dyadic(0), Dyadic(0)))
    straddle = ComplexInterval(DyInterval(Dyadic(1), Dyadic(3)), DyInterval(Dyadic(0), Dyadic(0)))
    assert B.classify(inner) is True
    assert B.classify(outer) is False
    assert B.classify(straddle) is None
    D = Disc(O, 2)
    assert D.classify(inner) is None
    assert D.classify(ComplexInterval.point(cd(1, 1))) is True
    assert D.classify(outer) is False
