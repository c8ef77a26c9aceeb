"""Ground-truth root multisets for test instances."""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import ComplexDyadic, Dyadic
from .interval import ComplexInterval, DyInterval


@dataclass(frozen=True)
class Root:
    where: ComplexInterval  # a point root has zero-width sides
    mult: int = 1

    def __post_init__(self):
        if self.mult < 1:
            raise ValueError("root multiplicity must be >= 1")

    @property
    def exact(self) -> bool:
        return self.where.re.lo == self.where.re.hi and self.where.im.lo == self.where.im.hi

    def point(self) -> ComplexDyadic:
        """Centre of the enclosure (the root itself when exact)."""
        return ComplexDyadic(self.where.re.mid(), self.where.im.mid())


class RootSet:
    """Distinct roots with multiplicities; locations are points or rectangles."""

    def __init__(self, roots=()):
        items = []
        for r in roots:
            if isinstance(r, Root):
                items.append(r)
                continue
            if isinstance(r, tuple) and len(r) == 2 and isinstance(r[1], int):
                loc, mult = r
            else:
                loc, mult = r, 1
            items.append(Root(_as_rect(loc), mult))
        self.roots = _merge(items)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def total(self) -> int:
        return sum(r.mult for r in self.roots)

    def __repr__(self):
        return f"RootSet({self.roots!r})"

    def to_json(self) -> dict:
        out = []
        for r in self.roots:
            if r.exact:
                out.append({"re": r.where.re.lo.to_json(), "im": r.where.im.lo.to_json(), "mult": r.mult})
            else:
                out.append({"re": r.where.re.to_json(), "im": r.where.im.to_json(), "mult": r.mult})
        return {"roots": out}

    @classmethod
    def from_json(cls, obj) -> RootSet:
        items = []
        for r in obj["roots"]:
            where = ComplexInterval(DyInterval.from_json(r["re"]), DyInterval.from_json(r.get("im", {"m": "0", "e": 0})))
            items.append(Root(where, int(r.get("mult", 1))))
        return cls(items)


def _as_rect(loc) -> ComplexInterval:
    if isinstance(loc, ComplexInterval):
        return loc
    if isinstance(loc, ComplexDyadic):
        return ComplexInterval.point(loc)
    if isinstance(loc, complex):
        return ComplexInterval.point(ComplexDyadic(Dyadic.from_float(loc.real), Dyadic.from_float(loc.imag)))
    return ComplexInterval.point(ComplexDyadic(Dyadic.coerce(loc)))


def _merge(items: list[Root]) -> list[Root]:
    # equal exact locations are the same root; overlapping enclosures are not allowed
    out: list[Root] = []
    for r in items:
        for i, s in enumerate(out):
            if r.exact and s.exact and r.where == s.where:
                out[i] = Root(s.where, s.mult + r.mult)
                break
            if _overlap(r.where, s.where):
                raise ValueError("root locations must be pairwise distinct")
        else:
            out.append(r)
    return out


def _overlap(a: ComplexInterval, b: ComplexInterval) -> bool:
    return a.re.intersects(b.re) and a.im.intersects(b.im)
