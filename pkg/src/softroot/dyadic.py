"""Exact binary rationals ``m * 2**e`` and their complex counterparts."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

EXP_LIMIT = 1 << 62


class DyadicOverflow(OverflowError):
    """A dyadic exponent left the machine-integer range."""


class Dyadic:
    """The number ``m * 2**e``, always stored with ``m`` odd or zero.

    Zero is ``Dyadic(0, 0)``.  Addition, subtraction and multiplication are
    exact.  Instances are immutable.
    """

    __slots__ = ("m", "e")

    def __init__(self, m: int = 0, e: int = 0):
        if m:
            tz = (m & -m).bit_length() - 1
            if tz:
                m >>= tz
                e += tz
            if not -EXP_LIMIT < e < EXP_LIMIT:
                raise DyadicOverflow(f"dyadic exponent {e} out of range")
        else:
            e = 0
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "e", e)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    # construction

    @classmethod
    def from_int(cls, n: int) -> Dyadic:
        return cls(n, 0)

    @classmethod
    def from_float(cls, x: float) -> Dyadic:
        num, den = float(x).as_integer_ratio()
        return cls(num, -(den.bit_length() - 1))

    @classmethod
    def from_fraction(cls, q: Fraction) -> Dyadic:
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"{q} is not a dyadic rational")
        return cls(q.numerator, -(den.bit_length() - 1))

    @classmethod
    def coerce(cls, x) -> Dyadic:
        if isinstance(x, Dyadic):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, float):
            return cls.from_float(x)
        if isinstance(x, Fraction):
            return cls.from_fraction(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Dyadic")

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Dyadic):
            if not isinstance(other, int):
                return NotImplemented
            other = Dyadic(other)
        if not self.m:
            return other
        if not other.m:
            return self
        d = self.e - other.e
        if d >= 0:
            return Dyadic((self.m << d) + other.m, other.e)
        return Dyadic(self.m + (other.m << -d), self.e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.m, self.e)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, Dyadic):
            if not isinstance(other, int):
                return NotImplemented
            other = Dyadic(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Dyadic):
            if not isinstance(other, int):
                return NotImplemented
            other = Dyadic(other)
        return Dyadic(self.m * other.m, self.e + other.e)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        return Dyadic(self.m ** n, self.e * n)

    def __abs__(self):
        return self if self.m >= 0 else Dyadic(-self.m, self.e)

    def ldexp(self, k: int) -> Dyadic:
        """``self * 2**k``."""
        return Dyadic(self.m, self.e + k) if self.m else self

    # comparison

    def cmp(self, other) -> int:
        other = Dyadic.coerce(other)
        d = self.e - other.e
        if d >= 0:
            a, b = self.m << d, other.m
        else:
            a, b = self.m, other.m << -d
        return (a > b) - (a < b)

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.m == other.m and self.e == other.e
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.e))

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def sign(self) -> int:
        return (self.m > 0) - (self.m < 0)

    # rounding to the grid 2**-p

    def scaled_floor(self, p: int) -> int:
        """``floor(self * 2**p)``."""
        s = self.e + p
        return self.m << s if s >= 0 else self.m >> -s

    def scaled_ceil(self, p: int) -> int:
        s = self.e + p
        return self.m << s if s >= 0 else -((-self.m) >> -s)

    def floor_to(self, p: int) -> Dyadic:
        return Dyadic(self.scaled_floor(p), -p)

    def ceil_to(self, p: int) -> Dyadic:
        return Dyadic(self.scaled_ceil(p), -p)

    def round_to(self, p: int) -> Dyadic:
        """Nearest multiple of ``2**-p``, ties rounded up."""
        s = self.e + p
        if s >= 0:
            return self
        return Dyadic((self.m + (1 << (-s - 1))) >> -s, -p)

    def floor(self) -> int:
        return self.scaled_floor(0)

    def bit_size(self) -> int:
        return self.m.bit_length()

    def log2_upper(self) -> int:
        """An integer ``t`` with ``|self| <= 2**t`` (``self`` nonzero)."""
        return abs(self.m).bit_length() + self.e

    # conversion

    def to_fraction(self) -> Fraction:
        if self.e >= 0:
            return Fraction(self.m << self.e)
        return Fraction(self.m, 1 << -self.e)

    def __float__(self):
        if self.e >= 0:
            return float(self.m << self.e) if self.e < 1100 else float("inf") * self.sign()
        return float(self.to_fraction())

    def __bool__(self):
        return self.m != 0

    def __repr__(self):
        return f"Dyadic({self.m}, {self.e})"

    def __str__(self):
        return f"{self.m}*2^{self.e}"

    def to_json(self) -> dict:
        return {"m": str(self.m), "e": self.e}

    @classmethod
    def from_json(cls, obj) -> Dyadic:
        if isinstance(obj, (int, float)) and not isinstance(obj, bool):
            return cls.coerce(obj)
        m, e = obj["m"], obj["e"]
        if isinstance(m, str):
            m = int(m)
        if not isinstance(m, int) or not isinstance(e, int) or isinstance(e, bool):
            raise ValueError(f"malformed dyadic {obj!r}")
        return cls(m, e)


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, -1)


def dyadic_sqrt_bounds(x: Dyadic, p: int) -> tuple[Dyadic, Dyadic]:
    """Dyadics ``lo <= sqrt(x) <= hi`` on the grid ``2**-p`` (``x >= 0``)."""
    if x.m < 0:
        raise ValueError("square root of a negative dyadic")
    n_lo = x.scaled_floor(2 * p)
    n_hi = x.scaled_ceil(2 * p)
    lo = isqrt(n_lo)
    hi = isqrt(n_hi)
    if hi * hi < n_hi:
        hi += 1
    return Dyadic(lo, -p), Dyadic(hi, -p)


class ComplexDyadic:
    """A Gaussian dyadic ``re + i*im``."""

    __slots__ = ("re", "im")

    def __init__(self, re=ZERO, im=ZERO):
        object.__setattr__(self, "re", Dyadic.coerce(re))
        object.__setattr__(self, "im", Dyadic.coerce(im))

    def __setattr__(self, name, value):
        raise AttributeError("ComplexDyadic is immutable")

    def __add__(self, other):
        other = _cd(other)
        return ComplexDyadic(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _cd(other)
        return ComplexDyadic(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _cd(other) - self

    def __neg__(self):
        return ComplexDyadic(-self.re, -self.im)

    def __mul__(self, other):
        other = _cd(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return ComplexDyadic(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conj(self) -> ComplexDyadic:
        return ComplexDyadic(self.re, -self.im)

    def abs2(self) -> Dyadic:
        """``|z|**2``, exact."""
        return self.re * self.re + self.im * self.im

    def ldexp(self, k: int) -> ComplexDyadic:
        return ComplexDyadic(self.re.ldexp(k), self.im.ldexp(k))

    def __eq__(self, other):
        if isinstance(other, ComplexDyadic):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexDyadic({self.re!r}, {self.im!r})"

    def to_json(self) -> dict:
        return {"re": self.re.to_json(), "im": self.im.to_json()}

    @classmethod
    def from_json(cls, obj) -> ComplexDyadic:
        if isinstance(obj, (list, tuple)):
            re, im = obj
            return cls(Dyadic.from_json(re), Dyadic.from_json(im))
        return cls(Dyadic.from_json(obj["re"]), Dyadic.from_json(obj.get("im", {"m": "0", "e": 0})))


def _cd(x) -> ComplexDyadic:
    if isinstance(x, ComplexDyadic):
        return x
    return ComplexDyadic(Dyadic.coerce(x), ZERO)
