"""Hyperconnectedness relations and probe-based descriptions.

All relations are n-ary with the common-intersection reading: the verdict is
NEAR (0) when every argument contributes to a single shared witness (a common
cell, a common positive-length interval, or descriptions within tolerance),
and FAR (1) otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Optional, Sequence

from .complexes import CellRegion, Complex, Region, closure, same_ambient
from .errors import AmbientMismatch, FewerThanTwoRegions, MissingIntensity
from .intervals import has_common_interior, has_common_point

FEATURES = ("area", "perimeter", "meanIntensity", "constantLabel")


class Verdict(IntEnum):
    NEAR = 0
    FAR = 1


RelatorVerdict = Verdict


@dataclass(frozen=True)
class Probe:
    """Feature extractor configuration.

    Extensive features (area, perimeter) aggregate by sum over a region's
    2-cells; meanIntensity is area-weighted; constantLabel is a fixed value.
    """

    features: tuple[str, ...]
    constant: float = 0.0

    def __post_init__(self):
        if not self.features:
            raise ValueError("probe needs at least one feature")
        bad = [f for f in self.features if f not in FEATURES]
        if bad:
            raise ValueError(f"unknown probe features: {bad}")


@dataclass(frozen=True)
class Description:
    """Feature vector of a region, aligned with the probe's feature order."""

    values: tuple[float, ...]

    def chebyshev(self, other: "Description") -> float:
        return max(abs(a - b) for a, b in zip(self.values, other.values))


class DescriptiveComplex:
    """A complex paired with a probe; per-triangle descriptions are cached."""

    def __init__(self, base: Complex, probe: Probe,
                 intensity: Optional[dict[int, float]] = None):
        if "meanIntensity" in probe.features and intensity is None:
            raise MissingIntensity("probe uses meanIntensity but no intensity field given")
        self.base = base
        self.probe = probe
        self.intensity = dict(intensity) if intensity is not None else None
        self.cache: dict[int, Description] = {}
        for tid in base.triangle_ids():
            self.cache[tid] = describe(CellRegion(base, frozenset([tid])), self)


def probe_from_json_dict(data: dict) -> tuple[Probe, float]:
    """Parse the probe config wire format: {"features": [...], "eps": 10.0}."""
    probe = Probe(tuple(data["features"]), constant=float(data.get("constantLabel", 0.0)))
    return probe, float(data.get("eps", 0.0))


def describe(region: CellRegion, dk: DescriptiveComplex) -> Description:
    """Aggregate feature vector of a region over its member 2-cells."""
    if region.complex is not dk.base:
        raise AmbientMismatch("region does not belong to the descriptive complex")
    tris = sorted(region.triangles())
    values = []
    for f in dk.probe.features:
        if f == "area":
            values.append(sum(dk.base.area(t) for t in tris))
        elif f == "perimeter":
            values.append(sum(dk.base.perimeter(t) for t in tris))
        elif f == "constantLabel":
            values.append(dk.probe.constant)
        else:
            if dk.intensity is None:
                raise MissingIntensity("meanIntensity needs an intensity field")
            total = sum(dk.base.area(t) for t in tris)
            if total == 0.0:
                values.append(0.0)
            else:
                values.append(sum(dk.base.area(t) * dk.intensity[t] for t in tris) / total)
    return Description(tuple(values))


def _check_arity(regions: Sequence[Region]) -> None:
    if len(regions) < 2:
        raise FewerThanTwoRegions(f"relation needs >= 2 regions, got {len(regions)}")
    for r in regions[1:]:
        same_ambient(regions[0], r)


def hnear(regions: Sequence[Region]) -> Verdict:
    """Lodato hyperconnectedness: NEAR iff all closures share a point."""
    _check_arity(regions)
    first = regions[0]
    if isinstance(first, CellRegion):
        common = closure(first).cells
        for r in regions[1:]:
            common = common & closure(r).cells
            if not common:
                return Verdict.FAR
        return Verdict.NEAR
    arc_lists = [list(r.intervals) for r in regions]
    return Verdict.NEAR if has_common_point(arc_lists, first.ambient) else Verdict.FAR


def hsn(regions: Sequence[Region]) -> Verdict:
    """Strong hyperconnectedness: NEAR iff all interiors share a point
    (a common 2-cell, or a common positive-length interval)."""
    _check_arity(regions)
    first = regions[0]
    if isinstance(first, CellRegion):
        common = first.triangles()
        for r in regions[1:]:
            common = common & r.triangles()
            if not common:
                return Verdict.FAR
        return Verdict.NEAR
    arc_lists = [list(r.intervals) for r in regions]
    return Verdict.NEAR if has_common_interior(arc_lists, first.ambient) else Verdict.FAR


def hdnear(regions: Sequence[CellRegion], dk: DescriptiveComplex, eps: float) -> Verdict:
    """Descriptive hyperconnectedness: NEAR iff the regions' descriptions are
    pairwise within eps in the Chebyshev metric."""
    _check_arity(regions)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    descs = [describe(r, dk) for r in regions]
    if math.isinf(eps):
        return Verdict.NEAR
    worst = max(descs[i].chebyshev(descs[j])
                for i in range(len(descs)) for j in range(i + 1, len(descs)))
    return Verdict.NEAR if worst <= eps else Verdict.FAR


def descriptive_holes(dk: DescriptiveComplex, eps: float) -> list[CellRegion]:
    """Maximal edge-connected unions of 2-cells whose descriptions stay within
    eps (Chebyshev) of the component seed's description.

    Flood fill is seeded in ascending cell-id order and compares against the
    seed (not a running mean) so reruns are byte-identical. The output is
    sorted by smallest member id; components are disjoint.
    """
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    k = dk.base
    adjacency = k.triangle_adjacency()
    unvisited = set(k.triangle_ids())
    holes: list[CellRegion] = []
    for seed in sorted(k.triangle_ids()):
        if seed not in unvisited:
            continue
        seed_desc = dk.cache[seed]
        component = {seed}
        unvisited.discard(seed)
        frontier = [seed]
        while frontier:
            cur = frontier.pop(0)
            for nb in adjacency[cur]:
                if nb in unvisited and dk.cache[nb].chebyshev(seed_desc) <= eps:
                    unvisited.discard(nb)
                    component.add(nb)
                    frontier.append(nb)
        holes.append(CellRegion(k, frozenset(component)))
    holes.sort(key=lambda h: min(h.cells))
    return holes
