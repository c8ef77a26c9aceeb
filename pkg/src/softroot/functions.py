"""Entire functions with enclosures of their normalized Taylor coefficients.

``f_k(m) = f^(k)(m) / k!``.  Each function knows how to enclose
``f_0(m), ..., f_n(m)`` at a dyadic point and how to bound the Taylor tail
``sum_{j>=1} C(k+j, j) |f_{k+j}(m)| rho**j``, which together give the box
enclosure of ``f_k`` over the square of half-diagonal ``rho`` around ``m``.

Working precision ``w`` below always means absolute accuracy on the order of
``2**-w``; callers that need a guaranteed width retry with a larger ``w``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from . import kernels
from .dyadic import ONE, ZERO, ComplexDyadic, Dyadic
from .geometry import SQRT2_UP, Disc
from .interval import ComplexInterval, DyInterval

CoeffEnclosure = ComplexInterval

# |Re m|, |Im m| above this are rejected for exp and sin
ARG_LIMIT = Dyadic(1, 10)


class PrecisionOverflow(ArithmeticError):
    """The evaluation would exceed the kernel's argument or precision limits."""


# ---------------------------------------------------------------------------
# real elementary functions on dyadic arguments


@lru_cache(maxsize=256)
def inv_factorial(k: int, w: int) -> DyInterval:
    return DyInterval.point(ONE).div(DyInterval.point(Dyadic(factorial(k))), w)


@lru_cache(maxsize=256)
def _exp_int(n: int, w: int) -> DyInterval:
    """``e**n`` for an integer ``n``."""
    if n == 0:
        return DyInterval.point(ONE)
    if n < 0:
        return _exp_int(-n, w + 4).recip(w)
    g = w + 2 * n.bit_length() + 4
    lo, hi = kernels.exp_series(1, 0, g)
    base = DyInterval(Dyadic(lo, -g), Dyadic(hi, -g))
    result = DyInterval.point(ONE)
    while n:
        if n & 1:
            result = (result * base).outward(g)
        n >>= 1
        if n:
            base = base.sqr().outward(g)
    return result


def exp_real(x: Dyadic, w: int) -> DyInterval:
    """Enclosure of ``e**x``; the integer part is split off first."""
    n = x.floor()
    t = x - Dyadic(n)
    # absolute error of e**t is amplified by e**n
    guard = max(0, n) * 3 // 2 + 4
    W = w + guard
    if t.m:
        lo, hi = kernels.exp_series(t.m, -t.e, W)
        et = DyInterval(Dyadic(lo, -W), Dyadic(hi, -W))
    else:
        et = DyInterval.point(ONE)
    return (et * _exp_int(n, W + 4)).outward(W)


def sincos_real(x: Dyadic, w: int) -> tuple[DyInterval, DyInterval]:
    if x.e >= 0:
        xi, s = x.m << x.e, 0
    else:
        xi, s = x.m, -x.e
    slo, shi, clo, chi = kernels.sincos_series(xi, s, w)
    return DyInterval(Dyadic(slo, -w), Dyadic(shi, -w)), DyInterval(Dyadic(clo, -w), Dyadic(chi, -w))


def cosh_sinh(y: Dyadic, w: int) -> tuple[DyInterval, DyInterval]:
    ep = exp_real(y, w + 2)
    em = exp_real(-y, w + 2)
    return (ep + em).ldexp(-1), (ep - em).ldexp(-1)


def _check_arg(m: ComplexDyadic):
    if abs(m.re) > ARG_LIMIT or abs(m.im) > ARG_LIMIT:
        raise PrecisionOverflow(f"argument {complex(m)} outside the supported range |Re|,|Im| <= 1024")


def _expm1_upper(rho: Dyadic, w: int) -> DyInterval:
    """Enclosure of ``e**rho - 1`` (exactly 0 for ``rho == 0``)."""
    if not rho.m:
        return DyInterval.point(ZERO)
    e = exp_real(rho, w)
    return DyInterval(max(e.lo - ONE, ZERO), e.hi - ONE)


# ---------------------------------------------------------------------------
# function representations


class FuncExpr:
    """Base class: an entire function with box-enclosable Taylor coefficients."""

    kind = ""

    def coeffs(self, m: ComplexDyadic, n: int, w: int) -> list[ComplexInterval]:
        """Enclosures of ``f_0(m), ..., f_n(m)``."""
        raise NotImplementedError

    def moduli(self, m: ComplexDyadic, n: int, w: int) -> list[DyInterval]:
        """Enclosures of ``|f_0(m)|, ..., |f_n(m)|``."""
        return [c.modulus(w) for c in self.coeffs(m, n, w)]

    def tail(self, m: ComplexDyadic, k: int, rho: Dyadic, w: int) -> DyInterval:
        """Enclosure of the bound on ``sup |f_k(z) - f_k(m)|`` for ``|z - m| <= rho``."""
        raise NotImplementedError

    def to_json(self) -> dict:
        return {"type": self.kind}

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(self.kind)


class Exp(FuncExpr):
    kind = "exp"

    def coeffs(self, m, n, w):
        _check_arg(m)
        ex, c, s = _exp_parts(m.re, m.im, w + 4)
        em = ComplexInterval(ex * c, ex * s)
        return [(em * inv_factorial(k, w + 4)).outward(w + 4) for k in range(n + 1)]

    def moduli(self, m, n, w):
        _check_arg(m)
        ex = exp_real(m.re, w + 4)
        return [(ex * inv_factorial(k, w + 4)).outward(w + 4) for k in range(n + 1)]

    def tail(self, m, k, rho, w):
        _check_arg(m)
        if not rho.m:
            return DyInterval.point(ZERO)
        ex = exp_real(m.re, w + 4)
        return (ex * _expm1_upper(rho, w + 4) * inv_factorial(k, w + 4)).outward(w + 4)

    def __repr__(self):
        return "Exp()"


@lru_cache(maxsize=4096)
def _exp_parts(x: Dyadic, y: Dyadic, w: int):
    ex = exp_real(x, w)
    s, c = sincos_real(y, w + max(0, x.floor()) * 3 // 2 + 2)
    return ex, c, s


class Sin(FuncExpr):
    kind = "sin"

    def coeffs(self, m, n, w):
        _check_arg(m)
        sm, cm = _sin_cos(m.re, m.im, w + 4)
        cycle = (sm, cm, -sm, -cm)
        return [(cycle[k % 4] * inv_factorial(k, w + 4)).outward(w + 4) for k in range(n + 1)]

    def tail(self, m, k, rho, w):
        _check_arg(m)
        if not rho.m:
            return DyInterval.point(ZERO)
        sm, cm = _sin_cos(m.re, m.im, w + 4)
        # every derivative of sin is +-sin or +-cos
        big = sm.modulus(w + 4).max(cm.modulus(w + 4))
        return (big * _expm1_upper(rho, w + 4) * inv_factorial(k, w + 4)).outward(w + 4)

    def __repr__(self):
        return "Sin()"


@lru_cache(maxsize=4096)
def _sin_cos(x: Dyadic, y: Dyadic, w: int) -> tuple[ComplexInterval, ComplexInterval]:
    W = w + max(0, abs(y).floor()) * 3 // 2 + 4
    sx, cx = sincos_real(x, W)
    ch, sh = cosh_sinh(y, W)
    sin_m = ComplexInterval((sx * ch).outward(W), (cx * sh).outward(W))
    cos_m = ComplexInterval((cx * ch).outward(W), (-(sx * sh)).outward(W))
    return sin_m, cos_m


class Poly(FuncExpr):
    """Polynomial with Gaussian-dyadic coefficients, lowest degree first."""

    kind = "poly"

    def __init__(self, coeffs):
        cs = tuple(c if isinstance(c, ComplexDyadic) else ComplexDyadic(Dyadic.coerce(c)) for c in coeffs)
        if not cs or not cs[-1]:
            raise ValueError("polynomial needs a nonzero leading coefficient")
        self.c = cs

    @classmethod
    def from_roots(cls, roots) -> Poly:
        """Monic polynomial with the given dyadic (complex) roots."""
        cs = [ComplexDyadic(ONE)]
        for r in roots:
            r = r if isinstance(r, ComplexDyadic) else ComplexDyadic(Dyadic.coerce(r))
            nxt = [ComplexDyadic()] * (len(cs) + 1)
            for i, a in enumerate(cs):
                nxt[i + 1] = nxt[i + 1] + a
                nxt[i] = nxt[i] - a * r
            cs = nxt
        return cls(cs)

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def taylor_shift(self, m: ComplexDyadic) -> tuple[ComplexDyadic, ...]:
        """Exact ``f_0(m), ..., f_d(m)``."""
        return _taylor_shift(self.c, m)

    def coeffs(self, m, n, w):
        b = self.taylor_shift(m)
        out = [ComplexInterval.point(x) for x in b[: n + 1]]
        out.extend(ComplexInterval(DyInterval.point(ZERO)) for _ in range(n + 1 - len(out)))
        return out

    def moduli(self, m, n, w):
        b = self.taylor_shift(m)
        out = []
        for i in range(n + 1):
            if i < len(b):
                out.append(_modulus(b[i], w))
            else:
                out.append(DyInterval.point(ZERO))
        return out

    def tail(self, m, k, rho, w):
        b = self.taylor_shift(m)
        d = self.degree
        total = DyInterval.point(ZERO)
        if not rho.m:
            return total
        rj = ONE
        for j in range(1, d - k + 1):
            rj = rj * rho
            total = total + _modulus(b[k + j], w + 2) * (rj * comb(k + j, j))
        return total.outward(w + 2)

    def __call__(self, z: ComplexDyadic) -> ComplexDyadic:
        acc = ComplexDyadic()
        for a in reversed(self.c):
            acc = acc * z + a
        return acc

    def to_json(self):
        return {"type": "poly", "coeffs": [c.to_json() for c in self.c]}

    def __eq__(self, other):
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({[complex(c) for c in self.c]})"


@lru_cache(maxsize=8192)
def _modulus(z: ComplexDyadic, w: int) -> DyInterval:
    return DyInterval.point(z.abs2()).sqrt(w)


@lru_cache(maxsize=8192)
def _taylor_shift(coeffs: tuple[ComplexDyadic, ...], m: ComplexDyadic) -> tuple[ComplexDyadic, ...]:
    if not m:
        return coeffs
    # f(m + z) = g(M + z / 2**F) with g(y) = f(2**F y) and M a Gaussian integer
    F = min(m.re.e if m.re.m else 0, m.im.e if m.im.m else 0, 0)
    M_re = _as_int(m.re.ldexp(-F))
    M_im = _as_int(m.im.ldexp(-F))
    scaled = [(c.re.ldexp(i * F), c.im.ldexp(i * F)) for i, c in enumerate(coeffs)]
    E = min(x.e for pair in scaled for x in pair if x.m)
    re = [x.m << (x.e - E) if x.m else 0 for x, _ in scaled]
    im = [y.m << (y.e - E) if y.m else 0 for _, y in scaled]
    hr, hi = kernels.taylor_shift(re, im, M_re, M_im)
    return tuple(ComplexDyadic(Dyadic(hr[j], E - j * F), Dyadic(hi[j], E - j * F)) for j in range(len(coeffs)))


def _as_int(x: Dyadic) -> int:
    return x.m << x.e


def func_from_json(obj) -> FuncExpr:
    t = obj.get("type") if isinstance(obj, dict) else None
    if t == "exp":
        return Exp()
    if t == "sin":
        return Sin()
    if t == "poly":
        return Poly([ComplexDyadic.from_json(c) for c in obj["coeffs"]])
    raise ValueError(f"unknown function description {obj!r}")


# ---------------------------------------------------------------------------
# public evaluation contracts


def _rho(D: Disc) -> Dyadic:
    # half-diagonal of the axis-aligned square circumscribing the disc
    return D.radius * SQRT2_UP


def eval_fk_point(f: FuncExpr, k: int, m: ComplexDyadic, p: int) -> CoeffEnclosure:
    """Rectangle containing ``f_k(m)`` with both sides at most ``2**-p`` wide."""
    if p < 1:
        raise ValueError("precision must be >= 1")
    target = Dyadic(1, -p - 2)
    w = p + 4
    for _ in range(40):
        c = f.coeffs(m, k, w)[k]
        if c.max_width() <= target:
            return c.outward(p + 2)
        w += max(4, c.max_width().log2_upper() + p + 2)
    raise PrecisionOverflow(f"could not enclose f_{k} to 2^-{p}")


def eval_fk_box(f: FuncExpr, k: int, D: Disc, p: int) -> CoeffEnclosure:
    """Rectangle containing ``f_k(z)`` for all ``z`` in the square around ``D``."""
    center = eval_fk_point(f, k, D.center, p)
    if not D.radius.m:
        return center
    t = f.tail(D.center, k, _rho(D), p + 2)
    return center.widen(t.hi.ceil_to(p + 2))


def magnitude_upper(f: FuncExpr, k: int, D: Disc, p: int) -> DyInterval:
    """``[lo, hi]`` bracketing ``sup |f_k|`` over the square around ``D``."""
    rect = eval_fk_box(f, k, D, p)
    hi = (rect.re.mag() ** 2 + rect.im.mag() ** 2)
    lo = (rect.re.mig() ** 2 + rect.im.mig() ** 2)
    return DyInterval(DyInterval.point(lo).sqrt(p + 2).lo, DyInterval.point(hi).sqrt(p + 2).hi)


def corner_magnitude(f: FuncExpr, m: ComplexDyadic, k: int, rho: Dyadic, w: int) -> DyInterval:
    """Enclosure of the real ``sqrt((|Re f_k(m)| + T)**2 + (|Im f_k(m)| + T)**2)``.

    ``T`` is the tail bound; this is the exact-arithmetic limit of
    ``magnitude_upper(...).hi`` and what the Pellet predicate compares against.
    """
    c = f.coeffs(m, k, w)[k]
    t = f.tail(m, k, rho, w)
    x = abs(c.re) + t
    y = abs(c.im) + t
    return (x.sqr() + y.sqr()).sqrt(w)
