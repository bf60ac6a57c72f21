"""Nerves, maximal nuclear clusters, spoke rings and centroidal cycles.

A nerve collects the triangles whose closure contains a common vertex (the
nucleus). The spoke rings grow outward from the nucleus: ring 1 is the
nucleus star; ring j is near ring j-1 (shared closed face) while far from
ring j-2 and disjoint from all earlier rings. Centroidal cycles order a
ring's triangle centroids by angle about the nucleus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexes import Complex, Point
from .errors import NoTriangles, RingTooSmall, UnknownVertex


@dataclass(frozen=True)
class Nerve:
    nucleus_vertex: int
    triangles: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.triangles)


@dataclass(frozen=True)
class SpokeRing:
    nucleus: int
    k: int
    members: frozenset[int]  # 2-cell ids; ring 0 has none (the nucleus itself)


@dataclass(frozen=True)
class CentroidalCycle:
    nucleus: int
    k: int
    points: tuple[Point, ...]
    closed: bool = True


@dataclass(frozen=True)
class VortexResult:
    cycles: tuple[CentroidalCycle, ...]
    skipped: tuple[tuple[int, int], ...]  # (ring index, ring size)


def _require_triangles(k: Complex) -> None:
    if not k.triangle_ids():
        raise NoTriangles("complex has no 2-cells")


def nerves(k: Complex) -> list[Nerve]:
    """One nerve per vertex with at least one incident triangle, by vertex id."""
    _require_triangles(k)
    out = []
    for v in range(k.n_vertices):
        star = k.star_triangles(v)
        if star:
            out.append(Nerve(v, frozenset(star)))
    return out


def mnc(k: Complex) -> list[Nerve]:
    """All nerves of maximal order, sorted by nucleus vertex id. Ties are
    preserved, never broken silently."""
    all_nerves = nerves(k)
    top = max(n.order for n in all_nerves)
    return [n for n in all_nerves if n.order == top]


def skcx(k: Complex, nucleus: int, ring_index: int) -> SpokeRing:
    """Spoke ring of the given index around a nucleus vertex.

    Rings use Lodato nearness between single triangles: near means sharing a
    closed face (at least a vertex), far means sharing none. Ring 1 is the
    set of triangles containing the nucleus; higher rings must touch the
    previous ring, avoid the ring two steps back entirely, and exclude all
    earlier rings.
    """
    if ring_index < 0:
        raise ValueError("ring index must be >= 0")
    rings = _rings_up_to(k, nucleus, ring_index)
    return rings[ring_index]


def _tri_verts(k: Complex, tid: int) -> frozenset[int]:
    return frozenset(k.cell(tid).vertices)


def _rings_up_to(k: Complex, nucleus: int, max_index: int) -> list[SpokeRing]:
    if not 0 <= nucleus < k.n_vertices:
        raise UnknownVertex(f"vertex {nucleus} not in complex")
    if not k.star_triangles(nucleus):
        raise UnknownVertex(f"vertex {nucleus} has no incident triangle")
    rings = [SpokeRing(nucleus, 0, frozenset())]
    if max_index == 0:
        return rings
    ring1 = frozenset(k.star_triangles(nucleus))
    rings.append(SpokeRing(nucleus, 1, ring1))
    assigned = set(ring1)
    verts = {t: _tri_verts(k, t) for t in k.triangle_ids()}
    for j in range(2, max_index + 1):
        prev = rings[j - 1].members
        back = rings[j - 2].members
        prev_verts = set().union(*(verts[t] for t in prev)) if prev else set()
        if j == 2:
            back_verts = {nucleus}
        else:
            back_verts = set().union(*(verts[t] for t in back)) if back else set()
        members = set()
        for t in sorted(k.triangle_ids()):
            if t in assigned:
                continue
            tv = verts[t]
            if tv & prev_verts and not tv & back_verts:
                members.add(t)
        rings.append(SpokeRing(nucleus, j, frozenset(members)))
        assigned |= members
    return rings


def mcyc(k: Complex, nucleus: int, ring_index: int) -> CentroidalCycle:
    """Closed cycle through the centroids of a ring's triangles.

    Centroids are ordered by angle about the nucleus, ties broken by distance
    then cell id, which pins one canonical traversal.
    """
    if ring_index < 1:
        raise ValueError("centroidal cycles start at ring 1")
    ring = skcx(k, nucleus, ring_index)
    if len(ring.members) < 3:
        raise RingTooSmall(
            f"ring {ring_index} of vertex {nucleus} has {len(ring.members)} triangles")
    nx, ny = k.coords(nucleus)
    keyed = []
    for tid in sorted(ring.members):
        cx, cy = k.centroid(tid)
        angle = math.atan2(cy - ny, cx - nx)
        dist = math.hypot(cx - nx, cy - ny)
        keyed.append((angle, dist, tid, Point.plane(cx, cy)))
    keyed.sort(key=lambda t: (t[0], t[1], t[2]))
    return CentroidalCycle(nucleus, ring_index, tuple(p for _, _, _, p in keyed))


def mvort(k: Complex, nucleus: int, max_ring: int) -> VortexResult:
    """Cycles for rings 1..max_ring; rings with fewer than three triangles are
    skipped and reported with their size."""
    if max_ring < 0:
        raise ValueError("max ring must be >= 0")
    cycles = []
    skipped = []
    rings = _rings_up_to(k, nucleus, max_ring) if max_ring >= 1 else []
    for j in range(1, max_ring + 1):
        ring = rings[j]
        if len(ring.members) < 3:
            skipped.append((j, len(ring.members)))
        else:
            cycles.append(mcyc(k, nucleus, j))
    return VortexResult(tuple(cycles), tuple(skipped))


def vortex_json_dict(k: Complex, nucleus: int, max_ring: int,
                     include_cycles: bool = True) -> dict:
    """JSON report of rings (and optionally cycles) around a nucleus."""
    rings = _rings_up_to(k, nucleus, max_ring)
    payload: dict = {
        "nucleus": nucleus,
        "rings": [{"k": r.k, "triangles": sorted(r.members)} for r in rings[1:]],
    }
    if include_cycles:
        result = mvort(k, nucleus, max_ring)
        payload["cycles"] = [
            {"k": c.k, "points": [[p.x, p.y] for p in c.points]} for c in result.cycles
        ]
        payload["skippedRings"] = [{"k": j, "size": s} for j, s in result.skipped]
    return payload
