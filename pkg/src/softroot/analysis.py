"""Complexity parameters of polynomial instances and the bound expressions built from them.

Everything here works from a known root multiset; nothing is root-found.
Bound expressions use base-2 logarithms and carry no asymptotic constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb

from .dyadic import ONE, ZERO, ComplexDyadic, Dyadic
from .functions import Poly, eval_fk_point, exp_real
from .geometry import ComplexBox
from .interval import ComplexInterval, DyInterval
from .roots import Root, RootSet

PREC = 64
MAX_S0_ROOTS = 12


class AnalysisError(ValueError):
    pass


class ZeroDenominator(AnalysisError):
    pass


class ZeroDistance(AnalysisError):
    pass


class AmbiguousBoundary(AnalysisError):
    pass


class TooManyRoots(AnalysisError):
    pass


class RootsMismatch(AnalysisError):
    pass


def _c0(p: int) -> DyInterval:
    # 2^17 e^2
    return exp_real(Dyadic(2), p + 4).ldexp(17)


def _shifted_coeffs(offsets: list[ComplexInterval], p: int) -> list[ComplexInterval]:
    """Coefficients in w of prod (w + o) for the given offsets o = m - alpha."""
    c = [ComplexInterval.point(ComplexDyadic(ONE))]
    for o in offsets:
        nxt = [ComplexInterval.point(ComplexDyadic())] * (len(c) + 1)
        for i, a in enumerate(c):
            nxt[i] = nxt[i] + a * o
            nxt[i + 1] = nxt[i + 1] + a
        c = [x.outward(p + 16) for x in nxt]
    return c


def _gamma_from_coeffs(c: list[ComplexInterval], p: int) -> DyInterval:
    """max_k |c_k / c_0|^(1/k) for k >= 1, from Taylor coefficients at the point."""
    d0 = c[0].abs2()
    if d0.contains_zero():
        raise ZeroDenominator("function value at the point is not bounded away from 0")
    best = DyInterval.point(ZERO)
    for k in range(1, len(c)):
        q = c[k].abs2().div(d0, p + 8)
        best = best.max(q.root(2 * k, p + 4))
    return best.outward(p)


def gamma_poly(f: Poly, z, p: int = PREC) -> DyInterval:
    """Enclosure of sup_k |f_k(z)/f(z)|^(1/k), a finite max for polynomials."""
    if isinstance(z, ComplexInterval):
        c = poly_taylor_interval(f, z, p)
    else:
        c = [ComplexInterval.point(x) for x in f.taylor_shift(z)]
    return _gamma_from_coeffs(c, p)


def poly_taylor_interval(f: Poly, z: ComplexInterval, p: int = PREC) -> list[ComplexInterval]:
    """All Taylor coefficients f_k at an uncertain point, by interval arithmetic."""
    a = f.c
    d = len(a) - 1
    powers = [ComplexInterval.point(ComplexDyadic(ONE))]
    for _ in range(d):
        powers.append((powers[-1] * z).outward(p + 16))
    out = []
    for k in range(d + 1):
        s = ComplexInterval.point(ComplexDyadic())
        for j in range(k, d + 1):
            s = s + powers[j - k] * ComplexInterval.point(a[j]) * comb(j, k)
        out.append(s.outward(p + 8))
    return out


def _dist(z, r: Root, p: int) -> DyInterval:
    diff = ComplexInterval.point(z) - r.where if isinstance(z, ComplexDyadic) else z - r.where
    return diff.modulus(p)


def s_f(roots: RootSet, z, p: int = PREC) -> DyInterval:
    """Enclosure of the sum of 1/|z - alpha| over the roots, with multiplicity."""
    total = DyInterval.point(ZERO)
    for r in roots:
        dist = _dist(z, r, p + 8)
        if dist.contains_zero():
            raise ZeroDistance(f"{z!r} is not separated from the root {r.where!r}")
        total = total + dist.recip(p + 8) * r.mult
    return total.outward(p)


def mahler(f: Poly, roots: RootSet, p: int = PREC) -> DyInterval:
    """|leading coefficient| times the product of |alpha| over roots outside the unit disc."""
    lead = f.c[-1]
    out = ComplexInterval.point(lead).modulus(p + 8)
    for r in roots:
        a2 = r.where.abs2()
        if a2.hi <= ONE:
            continue
        if a2.lo <= ONE:
            raise AmbiguousBoundary(f"|{r.where!r}| may equal 1")
        out = (out * a2.sqrt(p + 8) ** r.mult).outward(p + 8)
    return out.outward(p)


def check_roots(f: Poly, roots: RootSet):
    """Raise :class:`RootsMismatch` unless ``roots`` can be the root multiset of ``f``."""
    if roots.total() != f.degree:
        raise RootsMismatch(f"{roots.total()} roots given for a degree-{f.degree} polynomial")
    for r in roots:
        vals = poly_taylor_interval(f, r.where, PREC)
        if not vals[0].contains_zero():
            raise RootsMismatch(f"f does not vanish at {r.where!r}")


@dataclass
class ClusterGeometry:
    members: tuple[Root, ...]
    size: int
    m_C: ComplexInterval
    r_C: DyInterval
    sigma_C: DyInterval | None  # None is +infinity
    gamma_C: DyInterval
    R_C: DyInterval | None  # None is +infinity
    D_C_radius: DyInterval | None
    strongly_separated: bool

    def to_json(self) -> dict:
        def iv(x):
            return None if x is None else x.to_json()

        return {
            "members": [
                {"re": r.where.re.to_json(), "im": r.where.im.to_json(), "mult": r.mult} for r in self.members
            ],
            "size": self.size,
            "m_C": {"re": self.m_C.re.to_json(), "im": self.m_C.im.to_json()},
            "r_C": iv(self.r_C),
            "sigma_C": iv(self.sigma_C),
            "gamma_C": iv(self.gamma_C),
            "R_C": iv(self.R_C),
            "D_C_radius": iv(self.D_C_radius),
            "strongly_separated": self.strongly_separated,
        }


def _key(r: Root):
    return (r.where.re.lo, r.where.im.lo)


def cluster_geometry(roots: RootSet, members, p: int = PREC) -> ClusterGeometry:
    members = tuple(members)
    if not members:
        raise ValueError("a cluster needs at least one root")
    ids = {_key(r) for r in members}
    outside = [r for r in roots if _key(r) not in ids]
    size = sum(r.mult for r in members)

    # centroid
    sre = DyInterval.point(ZERO)
    sim = DyInterval.point(ZERO)
    for r in members:
        sre = sre + r.where.re * r.mult
        sim = sim + r.where.im * r.mult
    n = DyInterval.point(Dyadic(size))
    m = ComplexInterval(sre.div(n, p + 16), sim.div(n, p + 16))

    r_C = DyInterval.point(ZERO)
    if len(members) == 1:
        # a lone (possibly multiple) root is its own centroid
        m = members[0].where
    else:
        for r in members:
            r_C = r_C.max((m - r.where).modulus(p + 8))

    if not outside:
        return ClusterGeometry(members, size, m, r_C.outward(p), None, DyInterval.point(ZERO), None, None, True)

    sigma = None
    for r in outside:
        d = (m - r.where).modulus(p + 8)
        sigma = d if sigma is None else DyInterval._make(min(sigma.lo, d.lo), min(sigma.hi, d.hi))

    expanded = []
    for r in outside:
        expanded.extend([m - r.where] * r.mult)
    gamma = _gamma_from_coeffs(_shifted_coeffs(expanded, p), p)
    R = (DyInterval.point(Dyadic(size))).div(_c0(p) * gamma, p + 8)
    bound = R.div(DyInterval.point(Dyadic(8 * size**3)), p + 8)
    if r_C.hi <= bound.lo:
        ss = True
    elif r_C.lo > bound.hi:
        ss = False
    else:
        raise AmbiguousBoundary("strong-separation test undecided at this precision")
    Dr = R.div(DyInterval.point(Dyadic(size**3)), p + 8)
    return ClusterGeometry(members, size, m, r_C.outward(p), sigma.outward(p), gamma, R.outward(p), Dr.outward(p), ss)


def roots_in(roots: RootSet, box: ComplexBox) -> list[Root]:
    inside = []
    for r in roots:
        c = box.classify(r.where)
        if c is None:
            raise AmbiguousBoundary(f"root {r.where!r} straddles the boundary of {box!r}")
        if c:
            inside.append(r)
    return inside


def build_s0(roots: RootSet, B0: ComplexBox, p: int = PREC) -> list[ClusterGeometry]:
    """Strongly separated partition of the roots in 2B0, closed under pairwise merging.

    Starts from singletons (always strongly separated) and repeatedly merges the
    closest pair of parts, by centroid distance, whose union is still strongly
    separated, until no pair can be merged.
    """
    inside = roots_in(roots, B0.scale(2))
    if len(inside) > MAX_S0_ROOTS:
        raise TooManyRoots(f"{len(inside)} distinct roots in 2B0; the cap is {MAX_S0_ROOTS}")
    parts = [cluster_geometry(roots, [r], p) for r in inside]
    while True:
        cands = []
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                gap = complex(_mid(parts[i].m_C)) - complex(_mid(parts[j].m_C))
                cands.append((abs(gap), i, j))
        cands.sort()
        merged = False
        for _, i, j in cands:
            try:
                g = cluster_geometry(roots, parts[i].members + parts[j].members, p)
            except ZeroDenominator:
                # centroid on an outside root: gamma is unbounded, so not separated
                continue
            if g.strongly_separated:
                parts = [x for t, x in enumerate(parts) if t not in (i, j)] + [g]
                merged = True
                break
        if not merged:
            break
    parts.sort(key=lambda g: (g.m_C.re.lo, g.m_C.im.lo))
    return parts


def _mid(z: ComplexInterval) -> ComplexDyadic:
    return ComplexDyadic(z.re.mid(), z.im.mid())


@dataclass
class TheoryBounds:
    degree: int
    mahler: float
    tree_bound: float
    intpoly_bound: float
    precision_bound: float
    s0_sizes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "mahler": _fmt(self.mahler),
            "tree_bound": _fmt(self.tree_bound),
            "intpoly_bound": _fmt(self.intpoly_bound),
            "precision_bound": _fmt(self.precision_bound),
            "s0_sizes": list(self.s0_sizes),
        }


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _log2(x: DyInterval) -> float:
    return math.log2(float(x.mid()))


def _omin(x: float) -> float:
    return min(1.0, x)


def predicted_bounds(f: Poly, roots: RootSet, B0: ComplexBox, N0: int | None = None, s0=None, p: int = PREC) -> TheoryBounds:
    """Evaluate the tree-size, integer-polynomial and precision bound expressions.

    ``s0`` overrides the computed partition (a list of ClusterGeometry); the
    all-roots cluster has infinite separation and contributes no log term.
    """
    d = f.degree
    if s0 is None:
        s0 = build_s0(roots, B0, p)
    M = mahler(f, roots, p)
    logM = _log2(M)

    sep = 0.0
    fk_min = None
    for g in s0:
        if g.sigma_C is not None:
            sep += g.size * _log2(g.sigma_C)
        fk = poly_taylor_interval(f, g.m_C, p)[g.size] if g.size <= d else None
        if fk is not None:
            v = float(fk.modulus(p).lo)
            if g.m_C.re.width().m == 0 and g.m_C.im.width().m == 0:
                v = float(eval_fk_point(f, g.size, _mid(g.m_C), p).modulus(p).lo)
            fk_min = v if fk_min is None else min(fk_min, v)

    tree = d * d * math.log2(float(B0.width)) + d * d * math.log2(d) - d * sep if d else 0.0
    intpoly = d * d * logM + d**3
    rb = float(B0.radius_upper())
    prec = d**3 * logM - d * d * math.log2(_omin(rb)) - d * sep
    if fk_min is not None:
        om = _omin(fk_min)
        if om <= 0:
            raise ZeroDenominator("a cluster's leading Taylor coefficient vanishes at its centroid")
        prec -= d * math.log2(om)
    return TheoryBounds(d, float(M.mid()), tree, intpoly, prec, [g.size for g in s0])
