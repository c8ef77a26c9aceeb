"""Instance files, run reports and tree dumps.

All JSON is written with sorted keys and a fixed layout so that repeated runs
produce identical bytes.  Dyadics are ``{"m": "<int>", "e": <int>}``; report
output adds a ``display`` field holding a 17-significant-digit decimal.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from decimal import Decimal

from .clusterer import IsolatingSystem, SubdivisionStats
from .dyadic import ComplexDyadic, Dyadic
from .functions import FuncExpr, func_from_json
from .geometry import ComplexBox


class InstanceError(ValueError):
    """The instance file is unreadable or malformed."""


def display(d: Dyadic) -> str:
    if d.e >= 0:
        dec = Decimal(d.m << d.e)
    else:
        # m * 2^e = m * 5^-e * 10^e, exact
        dec = Decimal(d.m * 5 ** (-d.e)).scaleb(d.e)
    return format(dec, ".17g")


def dy_out(d: Dyadic) -> dict:
    return {"m": str(d.m), "e": d.e, "display": display(d)}


def cd_out(z: ComplexDyadic) -> dict:
    return {"re": dy_out(z.re), "im": dy_out(z.im)}


@dataclass
class InstanceSpec:
    function: FuncExpr
    box: ComplexBox
    n0: int
    options: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        c = self.box.center
        return {
            "function": self.function.to_json(),
            "box": {"center": [c.re.to_json(), c.im.to_json()], "width": self.box.width.to_json()},
            "n0": self.n0,
            "options": dict(self.options),
        }

    @classmethod
    def from_json(cls, obj) -> InstanceSpec:
        try:
            f = func_from_json(obj["function"])
            box = obj["box"]
            center = ComplexDyadic.from_json(box["center"])
            width = Dyadic.from_json(box["width"])
            if width.m <= 0:
                raise ValueError("box width must be positive")
            n0 = obj["n0"]
            if not isinstance(n0, int) or isinstance(n0, bool) or n0 < 0:
                raise ValueError("n0 must be a nonnegative integer")
            options = obj.get("options", {}) or {}
            if not isinstance(options, dict):
                raise ValueError("options must be an object")
            return cls(f, ComplexBox(center, width), n0, options)
        except (KeyError, TypeError, ValueError) as exc:
            raise InstanceError(f"bad instance: {exc}") from exc


def read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON: {exc}") from exc


def load_instance(path: str) -> InstanceSpec:
    return InstanceSpec.from_json(read_json(path))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_json(obj, path: str):
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def system_json(D: IsolatingSystem) -> list:
    out = []
    for p in D:
        out.append(
            {
                "center": cd_out(p.disc.center),
                "radius": dy_out(p.disc.radius),
                "k": p.k,
                "box": {"center": cd_out(p.box.center), "width": dy_out(p.box.width)},
                "depth": p.depth,
                "discovery_index": p.discovery_index,
            }
        )
    return out


def stats_json(s: SubdivisionStats) -> dict:
    # wall_time is left out on purpose: reports must be byte-identical across runs
    return {
        "tree_size": s.tree_size,
        "leaf_counts": s.leaf_counts,
        "max_depth": s.max_depth,
        "min_leaf_width": None if s.min_leaf_width is None else dy_out(s.min_leaf_width),
        "max_bits": s.max_bits,
        "bits_histogram": {str(k): s.bits_histogram[k] for k in sorted(s.bits_histogram)},
        "predicate_calls": len(s.bit_log),
    }


@dataclass
class RunReport:
    instance: dict
    isolating_system: list
    stats: dict
    error: dict | None = None
    theory: dict | None = None
    verification: dict | None = None

    def to_json(self) -> dict:
        out = {"instance": self.instance, "isolating_system": self.isolating_system, "stats": self.stats}
        for key in ("error", "theory", "verification"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out

    @classmethod
    def from_json(cls, obj) -> RunReport:
        return cls(
            obj["instance"],
            obj["isolating_system"],
            obj["stats"],
            obj.get("error"),
            obj.get("theory"),
            obj.get("verification"),
        )


def write_tree_csv(stats: SubdivisionStats, path: str):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["center_re", "center_im", "width", "depth", "status"])
        for rec in stats.tree or ():
            w.writerow([display(rec.center.re), display(rec.center.im), display(rec.width), rec.depth, rec.status])
