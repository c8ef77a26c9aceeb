"""The soft Pellet predicate and the root-counting routine built on it."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dyadic import ONE, ComplexDyadic, Dyadic
from .functions import FuncExpr, corner_magnitude
from .geometry import SQRT2_UP, ComplexBox
from .interval import ApproxReal, DyInterval
from .softcompare import DEFAULT_ITERATION_CAP, Verdict, soft_compare

# smallest integer >= 32e; any scaling in [32e|C|, 96e|C|] keeps the converse valid
C1_HAT = 87
# exclusion constant of the k = 0 converse
C3 = 1 << 7


@dataclass(frozen=True)
class PredicateResult:
    holds: bool
    bits_used: int
    verdict: Verdict


def pellet_sides(f: FuncExpr, m: ComplexDyadic, r: Dyadic, k: int) -> tuple[ApproxReal, ApproxReal]:
    """The two quantities compared by the predicate, as refinable reals.

    left  = |f_k(m)| r^k
    right = sum_{i<k} |f_i(m)| r^i + |box f_{k+1}(D(m, r))| r^{k+1}
    """
    powers = [ONE]
    for _ in range(k + 1):
        powers.append(powers[-1] * r)
    rho = r * SQRT2_UP
    # each term is scaled by up to r^(k+1); a sum of k+2 terms loses log2(k+2) bits
    guard = 4 + (k + 1).bit_length() + max(0, (k + 1) * r.log2_upper())

    def left(w: int) -> DyInterval:
        return f.moduli(m, k, w)[k] * powers[k]

    def right(w: int) -> DyInterval:
        mods = f.moduli(m, k, w)
        total = corner_magnitude(f, m, k + 1, rho, w) * powers[k + 1]
        for i in range(k):
            total = total + mods[i] * powers[i]
        return total

    return (
        ApproxReal(left, guard=guard, name=f"A_{k}"),
        ApproxReal(right, guard=guard, name=f"B_{k}"),
    )


def c_tilde_k(f: FuncExpr, m: ComplexDyadic, r, k: int, cap: int = DEFAULT_ITERATION_CAP) -> PredicateResult:
    """Soft Pellet test on ``D(m, r)``: holds only on a certified POSITIVE."""
    r = Dyadic.coerce(r)
    if r.m <= 0:
        raise ValueError("predicate radius must be positive")
    a, b = pellet_sides(f, m, r, k)
    out = soft_compare(a, b, cap)
    return PredicateResult(out.verdict is Verdict.POSITIVE, out.bits_used, out.verdict)


@dataclass(frozen=True)
class FirstCResult:
    """``k`` is 0 (exclude), 1..N0 (include) or -1 (unresolved)."""

    k: int
    bits_used: int
    predicates_tried: int
    calls: tuple = field(default=(), repr=False)  # (k, scale, bits) per predicate call

    @property
    def excluded(self) -> bool:
        return self.k == 0

    @property
    def included(self) -> bool:
        return self.k >= 1

    @property
    def unresolved(self) -> bool:
        return self.k < 0


def first_c(f: FuncExpr, B: ComplexBox, N0: int, cap: int = DEFAULT_ITERATION_CAP) -> FirstCResult:
    """Smallest ``k <= N0`` whose predicate holds on both scalings of ``B``."""
    if N0 < 0:
        raise ValueError("N0 must be nonnegative")
    rb = B.radius_upper()
    m = B.midpoint()
    calls = []
    bits = 0
    for k in range(N0 + 1):
        ok = True
        seen = {}
        for scale in (max(1, C1_HAT * k), max(1, 3 * C1_HAT * k)):
            if scale in seen:
                res = seen[scale]
            else:
                res = c_tilde_k(f, m, rb * scale, k, cap)
                seen[scale] = res
                calls.append((k, scale, res.bits_used))
                bits = max(bits, res.bits_used)
            if not res.holds:
                ok = False
                break
        if ok:
            return FirstCResult(k, bits, len(calls), tuple(calls))
    return FirstCResult(-1, bits, len(calls), tuple(calls))
