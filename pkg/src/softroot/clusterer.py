"""Subdivision driver: breadth-first quadtree over B0 with exclusion/inclusion tests."""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .dyadic import ComplexDyadic, Dyadic
from .functions import FuncExpr
from .geometry import ComplexBox, Disc, discs_intersect
from .pellet import C1_HAT, FirstCResult, first_c
from .roots import RootSet
from .softcompare import DEFAULT_ITERATION_CAP

DEFAULT_MAX_DEPTH = 64


@dataclass(frozen=True)
class ComponentPair:
    box: ComplexBox
    k: int
    disc: Disc
    depth: int
    discovery_index: int

    @classmethod
    def make(cls, box: ComplexBox, k: int, depth: int, index: int) -> ComponentPair:
        disc = box.scale(C1_HAT * k).disc_of()
        return cls(box, k, disc, depth, index)


@dataclass
class IsolatingSystem:
    pairs: list[ComponentPair] = field(default_factory=list)

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def discs(self) -> list[Disc]:
        return [p.disc for p in self.pairs]


@dataclass(frozen=True)
class TreeRecord:
    center: ComplexDyadic
    width: Dyadic
    depth: int
    status: str  # "excluded", "included:k" or "split"


@dataclass
class SubdivisionStats:
    tree_size: int = 0
    excluded: int = 0
    included: int = 0
    split: int = 0
    max_depth: int = 0
    min_leaf_width: Dyadic | None = None
    max_bits: int = 0
    bits_histogram: Counter = field(default_factory=Counter)
    wall_time: float = 0.0
    bit_log: list = field(default_factory=list)  # (depth, k, bits) per predicate call
    tree: list | None = None

    @property
    def leaf_counts(self) -> dict:
        return {"excluded": self.excluded, "included": self.included, "split": self.split}

    def record(self, box: ComplexBox, depth: int, res: FirstCResult):
        self.tree_size += 1
        self.max_depth = max(self.max_depth, depth)
        for k, _scale, bits in res.calls:
            self.bit_log.append((depth, k, bits))
            self.bits_histogram[bits] += 1
            self.max_bits = max(self.max_bits, bits)
        if res.unresolved:
            self.split += 1
            status = "split"
        else:
            if res.excluded:
                self.excluded += 1
                status = "excluded"
            else:
                self.included += 1
                status = f"included:{res.k}"
            if self.min_leaf_width is None or box.width < self.min_leaf_width:
                self.min_leaf_width = box.width
        if self.tree is not None:
            self.tree.append(TreeRecord(box.center, box.width, depth, status))


class DepthExceeded(RuntimeError):
    """A box at the depth limit could not be resolved."""

    def __init__(self, box: ComplexBox, depth: int, stats: SubdivisionStats):
        super().__init__(
            f"unresolved box {box!r} at depth {depth}; N0 may be too small, or a root "
            "sits on a subdivision wall and needs more depth"
        )
        self.box = box
        self.depth = depth
        self.stats = stats


def cluster(
    f: FuncExpr,
    B0: ComplexBox,
    N0: int,
    max_depth: int = DEFAULT_MAX_DEPTH,
    iteration_cap: int = DEFAULT_ITERATION_CAP,
    threads: int = 1,
    record_tree: bool = False,
) -> tuple[IsolatingSystem, SubdivisionStats]:
    """Run the subdivision on ``B0`` and return the isolating system with its statistics.

    Boxes are processed in FIFO order.  With ``threads > 1`` each BFS level is
    evaluated concurrently but merged in queue order, so the result does not
    depend on the thread count.
    """
    if N0 < 0:
        raise ValueError("N0 must be nonnegative")
    stats = SubdivisionStats(tree=[] if record_tree else None)
    t0 = time.perf_counter()
    q1: list[ComponentPair] = []
    level = [B0]
    depth = 0
    index = 0
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while level:
            if pool is None:
                results = [first_c(f, B, N0, iteration_cap) for B in level]
            else:
                results = list(pool.map(lambda B: first_c(f, B, N0, iteration_cap), level))
            nxt = []
            for B, res in zip(level, results):
                stats.record(B, depth, res)
                if res.included:
                    q1.append(ComponentPair.make(B, res.k, depth, index))
                elif res.unresolved:
                    if depth >= max_depth:
                        stats.wall_time = time.perf_counter() - t0
                        raise DepthExceeded(B, depth, stats)
                    nxt.extend(B.subdivide4())
                index += 1
            level = nxt
            depth += 1
    finally:
        if pool is not None:
            pool.shutdown()

    system = IsolatingSystem()
    for pair in q1:
        if not any(discs_intersect(pair.disc, kept.disc) for kept in system.pairs):
            system.pairs.append(pair)
    stats.wall_time = time.perf_counter() - t0
    return system, stats


# --- verification against known roots -------------------------------------------

CONDITIONS = ("centers_in_b0", "isolating", "coverage", "inside_2b0", "disjoint")


@dataclass
class VerificationReport:
    passed: dict = field(default_factory=dict)
    failures: dict = field(default_factory=dict)  # condition -> list of counterexample strings

    @property
    def ok(self) -> bool:
        return all(self.passed.values())

    def to_json(self) -> dict:
        return {c: {"pass": self.passed[c], "counterexamples": self.failures.get(c, [])} for c in CONDITIONS}


def _count(disc: Disc, roots: RootSet) -> tuple[int, int]:
    """(certainly inside, possibly inside) multiplicity counts."""
    lo = hi = 0
    for r in roots:
        c = disc.classify(r.where)
        if c is True:
            lo += r.mult
        if c is not False:
            hi += r.mult
    return lo, hi


def verify_isolating_system(D: IsolatingSystem, roots: RootSet, B0: ComplexBox) -> VerificationReport:
    """Check the output against ground truth; uncertain containment counts as a failure."""
    rep = VerificationReport()
    fail = {c: [] for c in CONDITIONS}
    pairs = list(D)

    for p in pairs:
        if not B0.contains_point(p.disc.center):
            fail["centers_in_b0"].append(f"center {p.disc.center!r} outside B0")

    for p in pairs:
        a = _count(p.disc, roots)
        b = _count(p.disc.scale(3), roots)
        if not (a[0] == a[1] == b[0] == b[1] == p.k):
            fail["isolating"].append(f"disc {p.disc!r} k={p.k}: D has {a}, 3D has {b}")

    big = B0.scale(2)
    for r in roots:
        inside_b0 = B0.classify(r.where)
        if inside_b0 is not False:
            if not any(p.disc.classify(r.where) is True for p in pairs):
                fail["coverage"].append(f"root {r.where!r} not covered")
        if any(p.disc.classify(r.where) is not False for p in pairs):
            if big.classify(r.where) is not True:
                fail["inside_2b0"].append(f"root {r.where!r} in a disc but not in 2B0")

    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if discs_intersect(pairs[i].disc, pairs[j].disc):
                fail["disjoint"].append(f"discs {i} and {j} meet")

    for c in CONDITIONS:
        rep.passed[c] = not fail[c]
        if fail[c]:
            rep.failures[c] = fail[c]
    return rep
