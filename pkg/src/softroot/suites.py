"""Benchmark instances and the scaling experiments run by ``softroot bench``."""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass, field
from math import factorial

from .analysis import predicted_bounds
from .clusterer import cluster, verify_isolating_system
from .dyadic import ComplexDyadic, Dyadic
from .functions import Exp, FuncExpr, Poly, Sin
from .geometry import ComplexBox
from .interval import ComplexInterval, DyInterval
from .roots import RootSet
from .serialize import dumps

ORIGIN = ComplexDyadic()
ROOT_PREC = 60


@dataclass
class PolyInstance:
    name: str
    f: Poly
    roots: RootSet
    B0: ComplexBox

    @property
    def degree(self) -> int:
        return self.f.degree


def _roots_zd_minus_2(d: int) -> RootSet:
    """Roots of z^d - 2 for d in {1, 2, 4, 8}, as enclosures."""
    zero = DyInterval.point(Dyadic(0))
    a = DyInterval.point(Dyadic(2)).root(d, ROOT_PREC)
    pts = [ComplexInterval(a, zero), ComplexInterval(-a, zero)]
    if d >= 4:
        pts += [ComplexInterval(zero, a), ComplexInterval(zero, -a)]
    if d == 8:
        # 2^(1/8) e^(i pi/4) has both parts 2^(-3/8)
        b = DyInterval.point(Dyadic(32)).root(8, ROOT_PREC).ldexp(-1)
        pts += [ComplexInterval(sx, sy) for sx in (b, -b) for sy in (b, -b)]
    if d not in (1, 2, 4, 8):
        raise ValueError("only d in {1, 2, 4, 8} is supported")
    return RootSet(pts[:d])


def pair_instance(t: int, width=8) -> PolyInstance:
    a = Dyadic(1, -2)
    b = a + Dyadic(1, -t)
    return PolyInstance(f"pair_t{t}", Poly.from_roots([a, b]), RootSet([a, b]), ComplexBox(ORIGIN, width))


def correctness_instances() -> list[PolyInstance]:
    B0 = ComplexBox(ORIGIN, 8)
    out = [
        PolyInstance("z", Poly([0, 1]), RootSet([0]), B0),
        PolyInstance("z^2-2", Poly([-2, 0, 1]), _roots_zd_minus_2(2), B0),
        PolyInstance("z^2(z-1)", Poly.from_roots([0, 0, 1]), RootSet([0, 0, 1]), B0),
        PolyInstance("(z-1)^3(z+1)", Poly.from_roots([1, 1, 1, -1]), RootSet([1, 1, 1, -1]), B0),
        PolyInstance("prod5", Poly.from_roots([1, 2, 3, 4, 5]), RootSet([1, 2, 3, 4, 5]), B0),
    ]
    out += [pair_instance(t) for t in (4, 6, 8, 10, 12)]
    return out


def bounds_instances() -> list[PolyInstance]:
    """Monic integer polynomials on B0 = square(0, 4*ceil(M)); M is known in closed form."""
    out = []
    for d in (2, 4, 8):
        f = Poly([-2] + [0] * (d - 1) + [1])
        out.append(PolyInstance(f"z^{d}-2", f, _roots_zd_minus_2(d), ComplexBox(ORIGIN, 4 * 2)))
    for d in (3, 5):
        rs = list(range(1, d + 1))
        out.append(PolyInstance(f"prod{d}", Poly.from_roots(rs), RootSet(rs), ComplexBox(ORIGIN, 4 * factorial(d))))
    return out


PRECISION_TS = (4, 6, 8, 10, 12)
AREA_WIDTHS = (2, 4, 8)
SIN_CENTER = ComplexDyadic(Dyadic(0), Dyadic(16))
SIN_WIDTHS = (4, 8)
TREE_K = 64
BITS_C = 32


@dataclass
class SuiteResult:
    name: str
    columns: list
    rows: list = field(default_factory=list)
    checks: list = field(default_factory=list)  # (label, passed, detail)

    @property
    def ok(self) -> bool:
        return all(c[1] for c in self.checks)

    def check(self, label: str, passed: bool, detail: str = ""):
        self.checks.append((label, bool(passed), detail))

    def write(self, outdir: str):
        os.makedirs(outdir, exist_ok=True)
        with open(os.path.join(outdir, f"{self.name}.csv"), "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(self.columns)
            w.writerows(self.rows)
        summary = {
            "suite": self.name,
            "pass": self.ok,
            "checks": [{"check": c[0], "pass": c[1], "detail": c[2]} for c in self.checks],
        }
        with open(os.path.join(outdir, f"{self.name}_summary.json"), "w") as fh:
            fh.write(dumps(summary))


COLUMNS = ["instance", "d", "mahler", "width", "tree_size", "max_bits", "bound", "ratio"]


def _g(x) -> str:
    return "" if x is None else f"{x:.6g}"


def _ratio(a, b):
    return a / b if b not in (None, 0) and b > 0 else None


def run_poly_correctness(threads: int = 1) -> SuiteResult:
    res = SuiteResult("poly-correctness", COLUMNS)
    for inst in correctness_instances():
        D, st = cluster(inst.f, inst.B0, inst.degree, threads=threads)
        rep = verify_isolating_system(D, inst.roots, inst.B0)
        tb = predicted_bounds(inst.f, inst.roots, inst.B0, inst.degree)
        res.rows.append(
            [inst.name, inst.degree, _g(tb.mahler), str(float(inst.B0.width)), st.tree_size, st.max_bits,
             _g(tb.tree_bound), _g(_ratio(st.tree_size, tb.tree_bound))]
        )
        for cond, ok in rep.passed.items():
            res.check(f"{inst.name}: {cond}", ok, "; ".join(rep.failures.get(cond, [])))
    return res


def run_poly_bounds(threads: int = 1) -> SuiteResult:
    res = SuiteResult("poly-bounds", COLUMNS)
    for inst in bounds_instances():
        D, st = cluster(inst.f, inst.B0, inst.degree, threads=threads)
        tb = predicted_bounds(inst.f, inst.roots, inst.B0, inst.degree)
        ratio = st.tree_size / tb.intpoly_bound
        res.rows.append(
            [inst.name, inst.degree, _g(tb.mahler), str(float(inst.B0.width)), st.tree_size, st.max_bits,
             _g(tb.intpoly_bound), _g(ratio)]
        )
        res.check(f"{inst.name}: tree_size <= {TREE_K}*bound", st.tree_size <= TREE_K * tb.intpoly_bound,
                  f"tree_size={st.tree_size} bound={tb.intpoly_bound:.6g} ratio={ratio:.4g}")
    return res


def _area_law(res: SuiteResult, f: FuncExpr, center: ComplexDyadic, widths, label: str, threads: int):
    sizes = []
    for w in widths:
        B0 = ComplexBox(center, w)
        D, st = cluster(f, B0, 0, threads=threads, record_tree=True)
        ratio = st.tree_size / sizes[-1] if sizes else None
        sizes.append(st.tree_size)
        res.rows.append([f"{label}_w{w}", "", "", str(w), st.tree_size, st.max_bits, "", _g(ratio)])
        leaves = [r for r in st.tree if r.status != "split"]
        radii = [ComplexBox(r.center, r.width).radius_upper() for r in leaves]
        res.check(f"{label} w={w}: no discs", len(D) == 0, f"{len(D)} discs")
        res.check(f"{label} w={w}: only excluded leaves", all(r.status == "excluded" for r in leaves), "")
        res.check(f"{label} w={w}: every leaf radius < 2", all(r < Dyadic(2) for r in radii),
                  f"max radius {max(float(r) for r in radii):.6g}")
        if ratio is not None:
            res.check(f"{label} w={w}: tree-size ratio in [3,5]", 3 <= ratio <= 5, f"ratio={ratio:.4g}")
        yield radii


def run_exp_area(threads: int = 1) -> SuiteResult:
    res = SuiteResult("exp-area", COLUMNS)
    for w, radii in zip(AREA_WIDTHS, _area_law(res, Exp(), ORIGIN, AREA_WIDTHS, "exp", threads)):
        res.check(f"exp w={w}: some leaf radius > 1/4", any(r > Dyadic(1, -2) for r in radii), "")
    return res


def run_sin_halfplane(threads: int = 1) -> SuiteResult:
    res = SuiteResult("sin-halfplane", COLUMNS)
    for _ in _area_law(res, Sin(), SIN_CENTER, SIN_WIDTHS, "sin", threads):
        pass
    return res


def run_precision_scaling(threads: int = 1) -> SuiteResult:
    res = SuiteResult("precision-scaling", COLUMNS)
    prev = None
    for t in PRECISION_TS:
        inst = pair_instance(t)
        D, st = cluster(inst.f, inst.B0, 2, threads=threads)
        tb = predicted_bounds(inst.f, inst.roots, inst.B0, 2)
        res.rows.append(
            [inst.name, 2, _g(tb.mahler), "8.0", st.tree_size, st.max_bits, _g(tb.precision_bound),
             _g(_ratio(st.max_bits, tb.precision_bound))]
        )
        res.check(f"t={t}: max_bits <= {BITS_C}*t", st.max_bits <= BITS_C * t, f"max_bits={st.max_bits}")
        if prev is not None:
            res.check(f"t={t}: max_bits nondecreasing", st.max_bits >= prev, f"{prev} -> {st.max_bits}")
        prev = st.max_bits
    return res


SUITES = {
    "poly-correctness": run_poly_correctness,
    "poly-bounds": run_poly_bounds,
    "exp-area": run_exp_area,
    "sin-halfplane": run_sin_halfplane,
    "precision-scaling": run_precision_scaling,
}
