"""Squares and discs in the complex plane with dyadic data."""

from __future__ import annotations

from math import isqrt

from .dyadic import ComplexDyadic, Dyadic
from .interval import ComplexInterval

# Dyadic upper bounds for 1/sqrt(2) and sqrt(2), relative error below 2**-23.
_RB = 24
INV_SQRT2_UP = Dyadic(isqrt(1 << (2 * _RB - 1)) + 1, -_RB)
SQRT2_UP = Dyadic(isqrt(1 << (2 * _RB + 1)) + 1, -_RB)


class Disc:
    """Closed disc ``D(center, radius)``."""

    __slots__ = ("center", "radius")

    def __init__(self, center: ComplexDyadic, radius):
        radius = Dyadic.coerce(radius)
        if radius.m < 0:
            raise ValueError("negative disc radius")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", radius)

    def __setattr__(self, name, value):
        raise AttributeError("Disc is immutable")

    def scale(self, lam) -> Disc:
        return Disc(self.center, self.radius * Dyadic.coerce(lam))

    def contains_point(self, z: ComplexDyadic) -> bool:
        return (z - self.center).abs2() <= self.radius * self.radius

    def classify(self, rect: ComplexInterval) -> bool | None:
        """True if ``rect`` lies inside, False if it is disjoint, None if unsure."""
        dre = rect.re - self.center.re
        dim = rect.im - self.center.im
        r2 = self.radius * self.radius
        far = dre.mag() ** 2 + dim.mag() ** 2
        if far <= r2:
            return True
        near = dre.mig() ** 2 + dim.mig() ** 2
        if near > r2:
            return False
        return None

    def __eq__(self, other):
        if isinstance(other, Disc):
            return self.center == other.center and self.radius == other.radius
        return NotImplemented

    def __hash__(self):
        return hash((self.center, self.radius))

    def __repr__(self):
        return f"Disc({self.center!r}, {self.radius!r})"


def discs_intersect(d1: Disc, d2: Disc) -> bool:
    """True iff the closed discs meet; tangency counts."""
    rs = d1.radius + d2.radius
    return (d1.center - d2.center).abs2() <= rs * rs


class ComplexBox:
    """Axis-aligned square of side ``width`` centred at ``center``."""

    __slots__ = ("center", "width")

    def __init__(self, center: ComplexDyadic, width):
        width = Dyadic.coerce(width)
        if width.m <= 0:
            raise ValueError("box width must be positive")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "width", width)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexBox is immutable")

    @classmethod
    def square(cls, re, im, width) -> ComplexBox:
        return cls(ComplexDyadic(re, im), width)

    def midpoint(self) -> ComplexDyadic:
        return self.center

    def radius_upper(self) -> Dyadic:
        """Dyadic bound on ``width/sqrt(2)`` from above, within 2**-20 relative.

        Linear in the width, so ``radius_upper(s*B) == s*radius_upper(B)``
        exactly for dyadic ``s``.
        """
        return self.width * INV_SQRT2_UP

    def scale(self, lam) -> ComplexBox:
        lam = Dyadic.coerce(lam)
        if lam.m <= 0:
            raise ValueError("scale factor must be positive")
        return ComplexBox(self.center, self.width * lam)

    def subdivide4(self) -> list[ComplexBox]:
        """Children in the order SW, SE, NW, NE."""
        q = self.width.ldexp(-2)
        h = self.width.ldexp(-1)
        c = self.center
        return [
            ComplexBox(ComplexDyadic(c.re + dx, c.im + dy), h)
            for dy in (-q, q)
            for dx in (-q, q)
        ]

    def disc_of(self) -> Disc:
        return Disc(self.center, self.radius_upper())

    def bounds(self) -> tuple[Dyadic, Dyadic, Dyadic, Dyadic]:
        h = self.width.ldexp(-1)
        return (self.center.re - h, self.center.re + h, self.center.im - h, self.center.im + h)

    def contains_point(self, z: ComplexDyadic) -> bool:
        x0, x1, y0, y1 = self.bounds()
        return x0 <= z.re <= x1 and y0 <= z.im <= y1

    def classify(self, rect: ComplexInterval) -> bool | None:
        """True if ``rect`` lies inside the closed box, False if disjoint, None if unsure."""
        x0, x1, y0, y1 = self.bounds()
        if x0 <= rect.re.lo and rect.re.hi <= x1 and y0 <= rect.im.lo and rect.im.hi <= y1:
            return True
        if rect.re.hi < x0 or rect.re.lo > x1 or rect.im.hi < y0 or rect.im.lo > y1:
            return False
        return None

    def area(self) -> Dyadic:
        return self.width * self.width

    def __eq__(self, other):
        if isinstance(other, ComplexBox):
            return self.center == other.center and self.width == other.width
        return NotImplemented

    def __hash__(self):
        return hash((self.center, self.width))

    def __repr__(self):
        return f"ComplexBox({self.center!r}, {self.width!r})"
