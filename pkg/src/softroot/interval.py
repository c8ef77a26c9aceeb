"""Outward-rounded interval arithmetic over dyadic endpoints.

Exact operations (``+``, ``-``, ``*``) never round; the ``*_to(p)`` family
rounds outward to the grid ``2**-p`` so mantissas stay bounded inside
iterative computations.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable

from .dyadic import ONE, ZERO, Dyadic, dyadic_sqrt_bounds


class PrecisionError(ArithmeticError):
    """An enclosure could not be tightened to the requested width."""


def div_floor(a: Dyadic, b: Dyadic, p: int) -> Dyadic:
    """``floor(a / b * 2**p) / 2**p`` for ``b != 0``."""
    num, den = _ratio(a, b, p)
    return Dyadic(num // den, -p)


def div_ceil(a: Dyadic, b: Dyadic, p: int) -> Dyadic:
    num, den = _ratio(a, b, p)
    return Dyadic(-((-num) // den), -p)


def _ratio(a: Dyadic, b: Dyadic, p: int) -> tuple[int, int]:
    if not b.m:
        raise ZeroDivisionError("dyadic division by zero")
    s = a.e - b.e + p
    num, den = a.m, b.m
    if s >= 0:
        num <<= s
    else:
        den <<= -s
    if den < 0:
        num, den = -num, -den
    return num, den


def iroot(n: int, k: int) -> int:
    """``floor(n ** (1/k))`` for ``n >= 0``."""
    if n < 2 or k == 1:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


class DyInterval:
    """Closed interval ``[lo, hi]`` with dyadic endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Dyadic.coerce(lo)
        hi = lo if hi is None else Dyadic.coerce(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("DyInterval is immutable")

    @classmethod
    def _make(cls, lo: Dyadic, hi: Dyadic) -> DyInterval:
        obj = object.__new__(cls)
        object.__setattr__(obj, "lo", lo)
        object.__setattr__(obj, "hi", hi)
        return obj

    @classmethod
    def point(cls, x) -> DyInterval:
        x = Dyadic.coerce(x)
        return cls._make(x, x)

    @classmethod
    def from_fraction(cls, q: Fraction, p: int) -> DyInterval:
        """Tightest enclosure of ``q`` on the grid ``2**-p``."""
        num = q.numerator << p
        lo = num // q.denominator
        hi = -((-num) // q.denominator)
        return cls._make(Dyadic(lo, -p), Dyadic(hi, -p))

    # arithmetic

    def __add__(self, other):
        other = _iv(other)
        return DyInterval._make(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = _iv(other)
        return DyInterval._make(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return _iv(other) - self

    def __neg__(self):
        return DyInterval._make(-self.hi, -self.lo)

    def __mul__(self, other):
        if isinstance(other, (Dyadic, int)):
            other = Dyadic.coerce(other)
            if other.m >= 0:
                return DyInterval._make(self.lo * other, self.hi * other)
            return DyInterval._make(self.hi * other, self.lo * other)
        other = _iv(other)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        if a.m >= 0 and c.m >= 0:
            return DyInterval._make(a * c, b * d)
        ps = (a * c, a * d, b * c, b * d)
        return DyInterval._make(min(ps), max(ps))

    __rmul__ = __mul__

    def sqr(self) -> DyInterval:
        """``{x*x : x in self}`` (tighter than ``self * self``)."""
        a = abs(self)
        return DyInterval._make(a.lo * a.lo, a.hi * a.hi)

    def __pow__(self, n: int):
        if n == 0:
            return DyInterval.point(ONE)
        if n % 2 == 0:
            a = abs(self)
            return DyInterval._make(a.lo ** n, a.hi ** n)
        return DyInterval._make(self.lo ** n, self.hi ** n)

    def __abs__(self):
        if self.lo.m >= 0:
            return self
        if self.hi.m <= 0:
            return DyInterval._make(-self.hi, -self.lo)
        return DyInterval._make(ZERO, max(-self.lo, self.hi))

    def ldexp(self, k: int) -> DyInterval:
        return DyInterval._make(self.lo.ldexp(k), self.hi.ldexp(k))

    def join(self, other: DyInterval) -> DyInterval:
        return DyInterval._make(min(self.lo, other.lo), max(self.hi, other.hi))

    def max(self, other: DyInterval) -> DyInterval:
        """Enclosure of ``max(x, y)`` for ``x in self, y in other``."""
        return DyInterval._make(max(self.lo, other.lo), max(self.hi, other.hi))

    # precision-dependent operations

    def outward(self, p: int) -> DyInterval:
        """Round endpoints outward to the grid ``2**-p``."""
        return DyInterval._make(self.lo.floor_to(p), self.hi.ceil_to(p))

    def round_out(self, p: int) -> DyInterval:
        """``(I)_p``: endpoints rounded to ``p`` bits, then widened by ``2**-p``."""
        eps = Dyadic(1, -p)
        return DyInterval._make(self.lo.round_to(p) - eps, self.hi.round_to(p) + eps)

    def recip(self, p: int) -> DyInterval:
        if self.contains_zero():
            raise ZeroDivisionError("reciprocal of an interval containing 0")
        return DyInterval._make(div_floor(ONE, self.hi, p), div_ceil(ONE, self.lo, p))

    def div(self, other: DyInterval, p: int) -> DyInterval:
        """Outward enclosure of ``self / other`` on the grid ``2**-p``."""
        other = _iv(other)
        if other.contains_zero():
            raise ZeroDivisionError("division by an interval containing 0")
        qs_lo = [div_floor(x, y, p) for x in (self.lo, self.hi) for y in (other.lo, other.hi)]
        qs_hi = [div_ceil(x, y, p) for x in (self.lo, self.hi) for y in (other.lo, other.hi)]
        return DyInterval._make(min(qs_lo), max(qs_hi))

    def sqrt(self, p: int) -> DyInterval:
        if self.hi.m < 0:
            raise ValueError("square root of a negative interval")
        lo = dyadic_sqrt_bounds(max(self.lo, ZERO), p)[0]
        hi = dyadic_sqrt_bounds(self.hi, p)[1]
        return DyInterval._make(lo, hi)

    def root(self, n: int, p: int) -> DyInterval:
        """Enclosure of the nonnegative ``n``-th root (``self >= 0``)."""
        if n == 1:
            return self.outward(p)
        if n == 2:
            return self.sqrt(p)
        if self.hi.m < 0:
            raise ValueError("root of a negative interval")
        lo = iroot(max(self.lo, ZERO).scaled_floor(n * p), n)
        nh = self.hi.scaled_ceil(n * p)
        hi = iroot(nh, n)
        if hi ** n < nh:
            hi += 1
        return DyInterval._make(Dyadic(lo, -p), Dyadic(hi, -p))

    # predicates and measures

    def width(self) -> Dyadic:
        return self.hi - self.lo

    def mid(self) -> Dyadic:
        return (self.lo + self.hi).ldexp(-1)

    def contains(self, x) -> bool:
        if isinstance(x, DyInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        x = Dyadic.coerce(x)
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo.m <= 0 <= self.hi.m

    def intersects(self, other: DyInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def mag(self) -> Dyadic:
        """``max |x|`` over the interval."""
        return max(-self.lo, self.hi)

    def mig(self) -> Dyadic:
        """``min |x|`` over the interval (0 if it contains 0)."""
        if self.contains_zero():
            return ZERO
        return min(abs(self.lo), abs(self.hi))

    def __eq__(self, other):
        if isinstance(other, DyInterval):
            return self.lo == other.lo and self.hi == other.hi
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"DyInterval({self.lo!r}, {self.hi!r})"

    def __iter__(self):
        yield self.lo
        yield self.hi

    def to_json(self) -> dict:
        return {"lo": self.lo.to_json(), "hi": self.hi.to_json()}

    @classmethod
    def from_json(cls, obj) -> DyInterval:
        if isinstance(obj, dict) and "lo" in obj:
            return cls(Dyadic.from_json(obj["lo"]), Dyadic.from_json(obj["hi"]))
        return cls.point(Dyadic.from_json(obj))


def _iv(x) -> DyInterval:
    if isinstance(x, DyInterval):
        return x
    return DyInterval.point(x)


class ComplexInterval:
    """Axis-aligned complex rectangle ``re + i*im``."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        object.__setattr__(self, "re", _iv(re))
        object.__setattr__(self, "im", _iv(ZERO if im is None else im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexInterval is immutable")

    @classmethod
    def point(cls, z) -> ComplexInterval:
        return cls(DyInterval.point(z.re), DyInterval.point(z.im))

    def __add__(self, other):
        other = _ci(other)
        return ComplexInterval(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _ci(other)
        return ComplexInterval(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (DyInterval, Dyadic, int)):
            return ComplexInterval(self.re * other, self.im * other)
        other = _ci(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexInterval(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def outward(self, p: int) -> ComplexInterval:
        return ComplexInterval(self.re.outward(p), self.im.outward(p))

    def ldexp(self, k: int) -> ComplexInterval:
        return ComplexInterval(self.re.ldexp(k), self.im.ldexp(k))

    def widen(self, t: Dyadic) -> ComplexInterval:
        """Grow both sides by ``t >= 0`` in every direction."""
        return ComplexInterval(
            DyInterval._make(self.re.lo - t, self.re.hi + t),
            DyInterval._make(self.im.lo - t, self.im.hi + t),
        )

    def abs2(self) -> DyInterval:
        return self.re.sqr() + self.im.sqr()

    def modulus(self, p: int) -> DyInterval:
        """Enclosure of ``{|z| : z in self}``."""
        return self.abs2().sqrt(p)

    def contains(self, z) -> bool:
        return self.re.contains(z.re) and self.im.contains(z.im)

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def max_width(self) -> Dyadic:
        return max(self.re.width(), self.im.width())

    def __eq__(self, other):
        if isinstance(other, ComplexInterval):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ComplexInterval({self.re!r}, {self.im!r})"


def _ci(x) -> ComplexInterval:
    if isinstance(x, ComplexInterval):
        return x
    if hasattr(x, "re") and hasattr(x, "im"):
        return ComplexInterval.point(x)
    return ComplexInterval(_iv(x))


class ApproxReal:
    """A real number given by enclosures refinable to any accuracy.

    ``evaluate(w)`` must return a :class:`DyInterval` containing the number
    whose width shrinks as the working precision ``w`` grows.  ``refine(p)``
    raises ``w`` until the width is at most ``2**(1-p)``.
    """

    MAX_ATTEMPTS = 40

    def __init__(self, evaluate: Callable[[int], DyInterval], guard: int = 4, name: str = ""):
        self._evaluate = evaluate
        self._guard = guard
        self.name = name
        self.bits_served = 0
        self._lock = threading.Lock()

    @classmethod
    def exact(cls, x) -> ApproxReal:
        iv = DyInterval.point(Dyadic.coerce(x))
        return cls(lambda w: iv, guard=0, name=f"exact({x})")

    @classmethod
    def from_fraction(cls, q: Fraction) -> ApproxReal:
        return cls(lambda w: DyInterval.from_fraction(q, w), guard=1, name=f"fraction({q})")

    def refine(self, p: int) -> DyInterval:
        with self._lock:
            if p > self.bits_served:
                self.bits_served = p
        target = Dyadic(1, 1 - p)
        w = p + self._guard
        for _ in range(self.MAX_ATTEMPTS):
            enc = self._evaluate(w)
            width = enc.width()
            if width <= target:
                return enc
            # raise the working precision by the observed shortfall
            w += max(2, width.log2_upper() + p) + 2
        raise PrecisionError(f"{self.name or 'ApproxReal'} did not reach 2^{1 - p}")

    def __repr__(self):
        return f"ApproxReal({self.name or '?'})"
