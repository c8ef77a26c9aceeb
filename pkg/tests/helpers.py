"""Shared generators and reference evaluations for the tests."""

from fractions import Fraction

import mpmath
from hypothesis import strategies as st

from softroot.dyadic import ComplexDyadic, Dyadic

mpmath.mp.prec = 200


def dyadics(max_bits=64, min_e=-40, max_e=20):
    return st.builds(Dyadic, st.integers(-(1 << max_bits), 1 << max_bits), st.integers(min_e, max_e))


def rand_dyadic(rng, bits=20, lo_e=-20, hi_e=2):
    return Dyadic(rng.randint(-(1 << bits), 1 << bits), rng.randint(lo_e, hi_e))


def frac(x) -> Fraction:
    return x.to_fraction()


def mpf(x: Dyadic):
    return mpmath.ldexp(mpmath.mpf(x.m), x.e)


def mpc(z: ComplexDyadic):
    return mpmath.mpc(mpf(z.re), mpf(z.im))


def inside(iv, value) -> bool:
    """mpmath real inside a DyInterval (closed)."""
    return mpf(iv.lo) <= value <= mpf(iv.hi)


def inside_rect(rect, value) -> bool:
    value = mpmath.mpc(value)
    return inside(rect.re, value.real) and inside(rect.im, value.imag)


def fk_reference(kind, k, z, coeffs=None):
    """High-precision f_k(z) for exp, sin or a polynomial (list of complex coefficients)."""
    if kind == "exp":
        return mpmath.exp(z) / mpmath.factorial(k)
    if kind == "sin":
        return [mpmath.sin, mpmath.cos, lambda t: -mpmath.sin(t), lambda t: -mpmath.cos(t)][k % 4](z) / mpmath.factorial(k)
    total = mpmath.mpc(0)
    for j in range(k, len(coeffs)):
        total += mpmath.binomial(j, k) * coeffs[j] * z ** (j - k)
    return total


def noisy_real(value, rng):
    """ApproxReal for an exact dyadic ``value`` whose refine(p) has width exactly
    2**(1-p) and sits at a random offset around the value."""
    from softroot.dyadic import Dyadic
    from softroot.interval import ApproxReal, DyInterval

    value = Dyadic.coerce(value)
    offsets = {}

    def evaluate(w):
        # w == p for guard 0; the offset is fixed per precision so repeats agree
        if w not in offsets:
            offsets[w] = rng.randint(0, 1 << 16)
        width = Dyadic(1, 1 - w)
        lo = value - width * Dyadic(offsets[w], -16)
        return DyInterval(lo, lo + width)

    return ApproxReal(evaluate, guard=0, name=f"noisy({value!r})")


def next_pow2(n: int) -> int:
    p = 1
    while p < n:
        p *= 2
    return p
