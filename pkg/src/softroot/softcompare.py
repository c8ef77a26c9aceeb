"""Soft comparison of two refinable nonnegative quantities."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .dyadic import Dyadic
from .interval import ApproxReal, DyInterval

DEFAULT_ITERATION_CAP = 1 << 20


class Verdict(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    RELATIVELY_CLOSE = "relatively-close"


@dataclass(frozen=True)
class SoftOutcome:
    verdict: Verdict
    bits_used: int


class IterationCap(RuntimeError):
    """Soft comparison exceeded its precision cap (both sides are likely 0)."""

    def __init__(self, cap: int, left: ApproxReal, right: ApproxReal):
        super().__init__(f"soft_compare({left!r}, {right!r}) passed the {cap}-bit cap")
        self.cap = cap


def approx_interval(E: DyInterval, p: int) -> DyInterval:
    """``(I)_p`` from an enclosure of width <= 2**(1-p).

    The midpoint is within ``2**-p`` of the value, i.e. a p-bit absolute
    approximation; widening it by ``2**-p`` gives an interval containing ``E``.
    """
    eps = Dyadic(1, -p)
    c = E.mid()
    return DyInterval(c - eps, c + eps)


def soft_compare(I: ApproxReal, J: ApproxReal, cap: int = DEFAULT_ITERATION_CAP) -> SoftOutcome:
    """Sign of ``I - J``, or RELATIVELY_CLOSE, on the doubling schedule p = 1, 2, 4, ...

    The caller guarantees that at least one of the two values is nonzero;
    otherwise the loop stops with :class:`IterationCap` once ``p > cap``.
    """
    p = 1
    while p <= cap:
        ei = I.refine(p)
        ej = J.refine(p)
        # (I)_p contains ei, so disjoint (I)_p, (J)_p are caught here too; strict
        # separation of the enclosures themselves already certifies the sign
        if ei.hi < ej.lo:
            return SoftOutcome(Verdict.NEGATIVE, p)
        if ej.hi < ei.lo:
            return SoftOutcome(Verdict.POSITIVE, p)
        ip = approx_interval(ei, p)
        jp = approx_interval(ej, p)
        if ip.intersects(jp) and (not ip.contains_zero() or not jp.contains_zero()):
            return SoftOutcome(Verdict.RELATIVELY_CLOSE, p)
        p *= 2
    raise IterationCap(cap, I, J)
