"""Finite planar cell complexes, regions, closure semantics and validation.

A complex holds vertices (0-cells), edges (1-cells) and filled triangles
(2-cells) with downward-closed face incidence. Cell ids are deterministic:
vertices in input order, then edges sorted by vertex pair, then triangles
sorted by vertex triple. Geometry checks use exact rational predicates, so
a complex is either provably proper or the violating pair is reported.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import geom
from .errors import (
    AmbientMismatch,
    DegenerateTriangle,
    DuplicateCell,
    IdenticalPoints,
    ImproperIntersection,
)
from .intervals import Arc, point_arc_distance

VERTEX = "vertex"
EDGE = "edge"
TRIANGLE = "triangle"


@dataclass(frozen=True)
class Point:
    """A point of a 1- or 2-dimensional ambient space."""

    coords: tuple[float, ...]

    @classmethod
    def plane(cls, x: float, y: float) -> "Point":
        return cls((float(x), float(y)))

    @classmethod
    def line(cls, t: float) -> "Point":
        return cls((float(t),))

    @property
    def dimension(self) -> int:
        return len(self.coords)

    @property
    def x(self) -> float:
        return self.coords[0]

    @property
    def y(self) -> float:
        return self.coords[1]

    def __post_init__(self):
        if len(self.coords) not in (1, 2):
            raise ValueError("points are 1- or 2-dimensional")
        if not all(math.isfinite(c) for c in self.coords):
            raise ValueError("point coordinates must be finite")


@dataclass(frozen=True)
class Cell:
    """A cell identified by its kind and strictly increasing vertex ids."""

    kind: str
    vertices: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class Disk:
    center: Point
    radius: float


class Complex:
    """Immutable container for a planar cell complex.

    The constructor stores what it is given; use :func:`build_complex` to
    derive faces and run the properness checks. Keeping the constructor dumb
    lets tests assemble deliberately broken complexes for validate_cw.
    """

    ambient = "plane"

    def __init__(self, vertex_coords: Sequence[tuple[float, float]],
                 cells: Sequence[Cell], faces: Sequence[tuple[int, ...]]):
        self._coords = tuple((float(x), float(y)) for x, y in vertex_coords)
        self._cells = tuple(cells)
        self._faces = tuple(tuple(f) for f in faces)
        self._index = {(c.kind, c.vertices): i for i, c in enumerate(self._cells)}
        star: list[list[int]] = [[] for _ in self._coords]
        for cid, c in enumerate(self._cells):
            if c.kind == TRIANGLE:
                for v in c.vertices:
                    if 0 <= v < len(star):
                        star[v].append(cid)
        self._star = tuple(tuple(s) for s in star)
        self._tri_adj: Optional[dict[int, tuple[int, ...]]] = None

    # -- structure ---------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self._coords)

    @property
    def cells(self) -> tuple[Cell, ...]:
        return self._cells

    def cell(self, cid: int) -> Cell:
        return self._cells[cid]

    def kind(self, cid: int) -> str:
        return self._cells[cid].kind

    def cell_ids(self, kind: Optional[str] = None) -> tuple[int, ...]:
        if kind is None:
            return tuple(range(len(self._cells)))
        return tuple(i for i, c in enumerate(self._cells) if c.kind == kind)

    def triangle_ids(self) -> tuple[int, ...]:
        return self.cell_ids(TRIANGLE)

    def edge_ids(self) -> tuple[int, ...]:
        return self.cell_ids(EDGE)

    def has_cell(self, kind: str, vertices: tuple[int, ...]) -> bool:
        return (kind, vertices) in self._index

    def cell_id_of(self, kind: str, vertices: tuple[int, ...]) -> int:
        return self._index[(kind, vertices)]

    def faces_of(self, cid: int) -> tuple[int, ...]:
        return self._faces[cid]

    def closure_ids(self, cell_ids: Iterable[int]) -> frozenset[int]:
        out = set()
        for cid in cell_ids:
            out.add(cid)
            out.update(self._faces[cid])
        return frozenset(out)

    def star_triangles(self, vertex: int) -> tuple[int, ...]:
        """2-cells whose closure contains the given vertex."""
        return self._star[vertex]

    def triangle_adjacency(self) -> dict[int, tuple[int, ...]]:
        """Edge-sharing adjacency between 2-cells, sorted and cached."""
        if self._tri_adj is None:
            by_edge: dict[tuple[int, int], list[int]] = {}
            for tid in self.triangle_ids():
                a, b, c = self._cells[tid].vertices
                for pair in ((a, b), (a, c), (b, c)):
                    by_edge.setdefault(pair, []).append(tid)
            adj: dict[int, set[int]] = {t: set() for t in self.triangle_ids()}
            for tids in by_edge.values():
                for i in tids:
                    for j in tids:
                        if i != j:
                            adj[i].add(j)
            self._tri_adj = {t: tuple(sorted(n)) for t, n in sorted(adj.items())}
        return self._tri_adj

    # -- geometry ----------------------------------------------------------

    def coords(self, vertex: int) -> tuple[float, float]:
        return self._coords[vertex]

    def carrier(self, cid: int) -> tuple[tuple[float, float], ...]:
        return tuple(self._coords[v] for v in self._cells[cid].vertices)

    def centroid(self, cid: int) -> tuple[float, float]:
        pts = self.carrier(cid)
        n = len(pts)
        return (sum(p[0] for p in pts) / n, sum(p[1] for p in pts) / n)

    def area(self, cid: int) -> float:
        pts = self.carrier(cid)
        if len(pts) != 3:
            return 0.0
        return geom.tri_area(*pts)

    def perimeter(self, cid: int) -> float:
        pts = self.carrier(cid)
        if len(pts) != 3:
            return 0.0
        return geom.tri_perimeter(*pts)

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [p[0] for p in self._coords]
        ys = [p[1] for p in self._coords]
        return min(xs), min(ys), max(xs), max(ys)

    def cell_bbox(self, cid: int):
        pts = self.carrier(cid)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return min(xs), min(ys), max(xs), max(ys)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "vertices": [[x, y] for x, y in self._coords],
            "triangles": [list(self._cells[t].vertices) for t in self.triangle_ids()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def complex_from_json_dict(data: dict) -> "Complex":
    if data.get("ambient", "plane") != "plane":
        raise ValueError("only plane-ambient complexes are serialized")
    vertices = [(float(x), float(y)) for x, y in data["vertices"]]
    triangles = [tuple(int(i) for i in t) for t in data.get("triangles", [])]
    return build_complex(vertices, triangles)


def complex_from_json(text: str) -> "Complex":
    return complex_from_json_dict(json.loads(text))


# -- regions ---------------------------------------------------------------

@dataclass(frozen=True)
class CellRegion:
    """A nonempty set of cells of one complex."""

    complex: Complex
    cells: frozenset[int]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("cell region must be nonempty")
        n = len(self.complex.cells)
        bad = [c for c in self.cells if not 0 <= c < n]
        if bad:
            raise ValueError(f"cell ids not in complex: {sorted(bad)}")

    @property
    def ambient(self) -> str:
        return self.complex.ambient

    def triangles(self) -> frozenset[int]:
        return frozenset(c for c in self.cells if self.complex.kind(c) == TRIANGLE)


@dataclass(frozen=True)
class IntervalRegion:
    """A nonempty union of closed rational intervals on the segment or circle."""

    ambient: str
    intervals: tuple[Arc, ...]

    def __post_init__(self):
        if self.ambient not in ("segment", "circle"):
            raise ValueError(f"bad interval ambient: {self.ambient!r}")
        if not self.intervals:
            raise ValueError("interval region must be nonempty")

    @classmethod
    def from_pairs(cls, ambient: str, pairs) -> "IntervalRegion":
        from .intervals import make_arc
        arcs = sorted(make_arc(lo, hi, ambient) for lo, hi in pairs)
        return cls(ambient, tuple(arcs))


Region = CellRegion | IntervalRegion


def cell_region(k: Complex, cell_ids: Iterable[int]) -> CellRegion:
    return CellRegion(k, frozenset(cell_ids))


def segment_region(*pairs) -> IntervalRegion:
    return IntervalRegion.from_pairs("segment", pairs)


def circle_region(*pairs) -> IntervalRegion:
    return IntervalRegion.from_pairs("circle", pairs)


def same_ambient(a: Region, b: Region) -> None:
    if isinstance(a, CellRegion) and isinstance(b, CellRegion):
        if a.complex is not b.complex:
            raise AmbientMismatch("cell regions belong to different complexes")
        return
    if isinstance(a, IntervalRegion) and isinstance(b, IntervalRegion):
        if a.ambient != b.ambient:
            raise AmbientMismatch(f"{a.ambient} vs {b.ambient}")
        return
    raise AmbientMismatch(f"{type(a).__name__} vs {type(b).__name__}")


# -- reports ---------------------------------------------------------------

@dataclass
class CwReport:
    closure_finite_counts: dict[int, int]
    weak_topology_ok: bool
    planarity_violations: tuple[tuple[int, int], ...]
    verdict: bool

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "weakTopologyOk": self.weak_topology_ok,
            "planarityViolations": [list(p) for p in self.planarity_violations],
            "closureFiniteCounts": {str(k): v for k, v in self.closure_finite_counts.items()},
        }


# -- construction ----------------------------------------------------------

def build_complex(vertex_coords: Sequence, triangles: Sequence[tuple[int, int, int]]) -> Complex:
    """Build a proper planar complex from vertices and triangle triples.

    Edges and face incidence are derived; ids are deterministic. Raises
    DegenerateTriangle, DuplicateCell or ImproperIntersection on bad input.
    """
    coords = [_xy(p) for p in vertex_coords]
    if not coords:
        raise ValueError("complex needs at least one vertex")
    for x, y in coords:
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError("vertex coordinates must be finite")

    nv = len(coords)
    tris: list[tuple[int, int, int]] = []
    seen = set()
    for t in triangles:
        triple = tuple(sorted(int(i) for i in t))
        if len(triple) != 3 or len(set(triple)) != 3:
            raise DegenerateTriangle(f"triangle needs three distinct vertices: {t}")
        if not all(0 <= i < nv for i in triple):
            raise ValueError(f"triangle ids out of range: {t}")
        if triple in seen:
            raise DuplicateCell(f"duplicate triangle {triple}")
        seen.add(triple)
        a, b, c = (coords[i] for i in triple)
        if geom.orient_sign(a, b, c) == 0:
            raise DegenerateTriangle(f"collinear vertices in triangle {triple}")
        tris.append(triple)
    tris.sort()

    edge_set = set()
    for a, b, c in tris:
        edge_set.update(((a, b), (a, c), (b, c)))
    edges = sorted(edge_set)

    cells: list[Cell] = [Cell(VERTEX, (i,)) for i in range(nv)]
    cells.extend(Cell(EDGE, e) for e in edges)
    cells.extend(Cell(TRIANGLE, t) for t in tris)

    edge_id = {e: nv + i for i, e in enumerate(edges)}
    faces: list[tuple[int, ...]] = [() for _ in range(nv)]
    faces.extend((e[0], e[1]) for e in edges)
    for a, b, c in tris:
        faces.append((a, b, c, edge_id[(a, b)], edge_id[(a, c)], edge_id[(b, c)]))

    k = Complex(coords, cells, faces)

    for i, j in _bbox_pairs(k, k.triangle_ids()):
        if _pair_improper(k, i, j):
            vi = k.cell(i).vertices
            vj = k.cell(j).vertices
            raise ImproperIntersection(f"triangles {vi} and {vj} overlap off shared faces")
    return k


def _xy(p) -> tuple[float, float]:
    if isinstance(p, Point):
        return (p.x, p.y)
    x, y = p
    return (float(x), float(y))


# -- operations ------------------------------------------------------------

def closure(region: CellRegion) -> CellRegion:
    """Combinatorial closure: the region's cells plus all their faces."""
    return CellRegion(region.complex, region.complex.closure_ids(region.cells))


def interiors_intersect(a: Region, b: Region) -> bool:
    """Strong overlap: shared 2-cell in the plane, positive-length interval
    overlap on the segment/circle."""
    same_ambient(a, b)
    if isinstance(a, CellRegion):
        return bool(a.triangles() & b.triangles())
    from .intervals import arcs_overlap_positively
    return any(arcs_overlap_positively(x, y, a.ambient)
               for x in a.intervals for y in b.intervals)


def closures_intersect(a: Region, b: Region) -> bool:
    """Lodato overlap: closures share a cell, or intervals touch."""
    same_ambient(a, b)
    if isinstance(a, CellRegion):
        return bool(closure(a).cells & closure(b).cells)
    from .intervals import arcs_touch
    return any(arcs_touch(x, y, a.ambient)
               for x in a.intervals for y in b.intervals)


def validate_cw(k: Complex) -> CwReport:
    """Audit the complex against the closure-finiteness and weak-topology
    conditions on finite planar complexes.

    closure_finite_counts reports, per cell, how many closed cells its closed
    carrier meets (finite by construction; reported for audit). The weak
    topology holds iff every face of every cell is present and closed cells
    intersect exactly in their shared faces.
    """
    downward_ok = _downward_closed(k)

    all_ids = k.cell_ids()
    counts = {cid: 1 for cid in all_ids}  # carriers always meet themselves
    violations: list[tuple[int, int]] = []
    for i, j in _bbox_pairs(k, all_ids):
        if _carriers_touch(k, i, j):
            counts[i] += 1
            counts[j] += 1
            if _pair_improper(k, i, j):
                violations.append((i, j))

    planarity = tuple((i, j) for i, j in violations
                      if k.kind(i) == TRIANGLE and k.kind(j) == TRIANGLE)
    weak_ok = downward_ok and not violations
    return CwReport(counts, weak_ok, planarity, weak_ok and not planarity)


def point_locate(k: Complex, p: Point) -> Optional[int]:
    """Lowest-dimensional cell whose closed carrier contains p, or None.

    Cell ids order vertices before edges before triangles, so the first hit
    in id order is the lowest-dimensional one (ties break to smallest id).
    """
    fp = (p.x, p.y)
    for cid, c in enumerate(k.cells):
        pts = k.carrier(cid)
        if c.kind == VERTEX:
            if pts[0] == fp:
                return cid
        elif c.kind == EDGE:
            if geom.on_segment(fp, *pts):
                return cid
        else:
            if geom.in_triangle(fp, *pts):
                return cid
    return None


def point_in_closure(region: Region, p: Point, tol: float) -> bool:
    """True iff p lies within tol of the closed carrier of the region."""
    if isinstance(region, CellRegion):
        k = region.complex
        best = math.inf
        for cid in k.closure_ids(region.cells):
            pts = k.carrier(cid)
            if len(pts) == 1:
                d = math.dist((p.x, p.y), pts[0])
            elif len(pts) == 2:
                d = geom.point_segment_dist((p.x, p.y), *pts)
            else:
                d = geom.point_triangle_dist((p.x, p.y), *pts)
            best = min(best, d)
            if best == 0.0:
                break
        return best <= tol
    return point_arc_distance(p.coords[0], list(region.intervals), region.ambient) <= tol


def hausdorff_witness(x: Point, y: Point) -> tuple[Disk, Disk]:
    """Disjoint closed disks around two distinct points (radius |x-y|/3)."""
    if x.coords == y.coords:
        raise IdenticalPoints("hausdorff witness needs two distinct points")
    r = math.dist(x.coords, y.coords) / 3.0
    return Disk(x, r), Disk(y, r)


# -- exact pairwise properness ----------------------------------------------

def _downward_closed(k: Complex) -> bool:
    for cid, c in enumerate(k.cells):
        if c.kind == TRIANGLE:
            a, b, cc = c.vertices
            for pair in ((a, b), (a, cc), (b, cc)):
                if not k.has_cell(EDGE, pair):
                    return False
            listed = set(k.faces_of(cid))
            need = {a, b, cc} | {k.cell_id_of(EDGE, pr) for pr in ((a, b), (a, cc), (b, cc))}
            if not need <= listed:
                return False
        elif c.kind == EDGE:
            if not all(0 <= v < k.n_vertices for v in c.vertices):
                return False
            if not set(c.vertices) <= set(k.faces_of(cid)):
                return False
    return True


def _bbox_pairs(k: Complex, ids: Sequence[int]):
    """Candidate cell pairs whose bounding boxes overlap (sweep on min-x)."""
    boxes = [(k.cell_bbox(c), c) for c in ids]
    boxes.sort(key=lambda t: t[0][0])
    n = len(boxes)
    for a in range(n):
        (ax0, ay0, ax1, ay1), ca = boxes[a]
        for b in range(a + 1, n):
            (bx0, by0, bx1, by1), cb = boxes[b]
            if bx0 > ax1:
                break
            if by0 > ay1 or by1 < ay0:
                continue
            yield (ca, cb) if ca < cb else (cb, ca)


def _carriers_touch(k: Complex, i: int, j: int) -> bool:
    """Closed carriers share at least one point (exact)."""
    if set(k.cell(i).vertices) & set(k.cell(j).vertices):
        return True
    return _convex_touch(k.carrier(i), k.carrier(j))


def _convex_touch(pi, pj) -> bool:
    for p in pi:
        if _in_carrier(p, pj):
            return True
    for p in pj:
        if _in_carrier(p, pi):
            return True
    for e1 in _boundary_edges(pi):
        for e2 in _boundary_edges(pj):
            if geom.segments_touch(e1[0], e1[1], e2[0], e2[1]):
                return True
    return False


def _in_carrier(p, pts) -> bool:
    if len(pts) == 1:
        return p == pts[0]
    if len(pts) == 2:
        return geom.on_segment(p, *pts)
    return geom.in_triangle(p, *pts)


def _boundary_edges(pts):
    if len(pts) == 2:
        return [(pts[0], pts[1])]
    if len(pts) == 3:
        return [(pts[0], pts[1]), (pts[1], pts[2]), (pts[2], pts[0])]
    return []


def _pair_improper(k: Complex, i: int, j: int) -> bool:
    """True iff closed carriers of two distinct cells intersect anywhere
    outside the carrier of their shared face."""
    ci, cj = k.cell(i), k.cell(j)
    vi, vj = set(ci.vertices), set(cj.vertices)
    if vi <= vj or vj <= vi:
        return False  # one is a face of the other
    shared = sorted(vi & vj)
    shared_pts = [k.coords(v) for v in shared]

    def in_shared(p) -> bool:
        if not shared_pts:
            return False
        if len(shared_pts) == 1:
            return p == shared_pts[0]
        return geom.on_segment(p, shared_pts[0], shared_pts[1])

    pi = k.carrier(i)
    pj = k.carrier(j)

    for v, p in zip(ci.vertices, pi):
        if v not in shared and _in_carrier(p, pj) and not in_shared(p):
            return True
    for v, p in zip(cj.vertices, pj):
        if v not in shared and _in_carrier(p, pi) and not in_shared(p):
            return True

    for e1 in _boundary_edges(pi):
        for e2 in _boundary_edges(pj):
            if geom.segments_cross_strict(e1[0], e1[1], e2[0], e2[1]):
                return True
            got = geom.collinear_overlap(e1[0], e1[1], e2[0], e2[1])
            if got is not None:
                lo, hi = got
                if not (in_shared(lo) and in_shared(hi)):
                    return True
    return False
