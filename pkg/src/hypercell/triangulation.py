"""Deterministic Delaunay triangulation of planar point sets.

Incremental insertion against a super-triangle at ten times the bounding-box
scale. Points are inserted in sorted (x, y) order, and a canonicalization
pass flips every cocircular quad onto the diagonal with the lexicographically
smaller sorted vertex-id pair, so equal inputs give byte-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import geom
from .complexes import Complex, Point, build_complex
from .errors import CollinearInput, DegenerateTriangle, DuplicatePoints, TooFewKeypoints

DUPLICATE_TOL = 1e-12
COCIRCULAR_REL_TOL = 1e-9


@dataclass(frozen=True)
class PointSet:
    """At least three pairwise-distinct, not-all-collinear planar points."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pts = self.points
        if len(pts) < 3:
            raise TooFewKeypoints(f"triangulation needs >= 3 points, got {len(pts)}")
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if math.dist(pts[i], pts[j]) <= DUPLICATE_TOL:
                    raise DuplicatePoints(f"points {i} and {j} coincide")
        if all(geom.orient_sign(pts[0], pts[1], q) == 0 for q in pts[2:]):
            raise CollinearInput("all points are collinear")


def _as_pointset(points) -> PointSet:
    if isinstance(points, PointSet):
        return points
    coords = []
    for p in points:
        if isinstance(p, Point):
            coords.append((p.x, p.y))
        else:
            x, y = p
            coords.append((float(x), float(y)))
    return PointSet(tuple(coords))


def circumdisk_contains(tri: Sequence, p, tol: float) -> bool:
    """True iff p is strictly inside the circumcircle, beyond a slack of
    tol relative to the circumradius.

    The sign convention follows the in-circle determinant with the triangle
    normalized to positive (counterclockwise) orientation: positive means
    inside. A point exactly on the circle is never contained.
    """
    a, b, c = [_coords(q) for q in tri]
    pp = _coords(p)
    sign = geom.orient_sign(a, b, c)
    if sign == 0:
        raise DegenerateTriangle("circumcircle of collinear points is undefined")
    if sign < 0:
        b, c = c, b
    det = geom.incircle_det(a, b, c, pp)
    ox, oy, r = geom.circumcircle(a, b, c)
    return det > 0.0 and (r - math.dist((ox, oy), pp)) > tol * r


def _coords(p) -> tuple[float, float]:
    if isinstance(p, Point):
        return (p.x, p.y)
    x, y = p
    return (float(x), float(y))


def delaunay(points) -> Complex:
    """Delaunay triangulation as a proper planar complex.

    Vertex ids follow the (x, y)-sorted input order. Every triangle's open
    circumdisk is empty of input points up to the relative cocircular slack.
    """
    ps = _as_pointset(points)
    pts = sorted(ps.points)
    n = len(pts)

    minx = min(p[0] for p in pts)
    maxx = max(p[0] for p in pts)
    miny = min(p[1] for p in pts)
    maxy = max(p[1] for p in pts)
    scale = 10.0 * max(maxx - minx, maxy - miny, 1.0)
    cx = (minx + maxx) / 2.0
    cy = (miny + maxy) / 2.0
    coords = list(pts) + [
        (cx - 3.0 * scale, cy - scale),
        (cx + 3.0 * scale, cy - scale),
        (cx, cy + 3.0 * scale),
    ]
    tris: set[tuple[int, int, int]] = {(n, n + 1, n + 2)}

    for i in range(n):
        p = coords[i]
        bad = [t for t in tris
               if _incircle_fast(coords[t[0]], coords[t[1]], coords[t[2]], p)]
        if not bad:
            # numerically grazing insertion: fall back to the containing triangle
            bad = [t for t in tris if geom.in_triangle(
                p, coords[t[0]], coords[t[1]], coords[t[2]])][:1]
        edge_count: dict[tuple[int, int], int] = {}
        for a, b, c in bad:
            for e in ((a, b), (a, c), (b, c)):
                edge_count[e] = edge_count.get(e, 0) + 1
        tris.difference_update(bad)
        for (a, b), cnt in edge_count.items():
            if cnt == 1:
                tris.add(tuple(sorted((a, b, i))))

    final = {t for t in tris if all(v < n for v in t)}
    final = _canonical_flips(coords, final, n)
    return build_complex(pts, sorted(final))


def _incircle_fast(a, b, c, p) -> bool:
    if ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])) < 0:
        b, c = c, b
    return geom.incircle_det(a, b, c, p) > 0.0


def _canonical_flips(coords, tris: set[tuple[int, int, int]], n: int) -> set:
    """Flip cocircular quads onto the lexicographically smaller diagonal.

    Each flip replaces an edge by a strictly smaller vertex pair, so the pass
    terminates; it only fires when both diagonals are Delaunay-legal within
    the cocircular tolerance.
    """
    changed = True
    while changed:
        changed = False
        by_edge: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
        for t in tris:
            a, b, c = t
            for e in ((a, b), (a, c), (b, c)):
                by_edge.setdefault(e, []).append(t)
        for (u, v), owners in sorted(by_edge.items()):
            if len(owners) != 2:
                continue
            t1, t2 = owners
            a = next(x for x in t1 if x not in (u, v))
            b = next(x for x in t2 if x not in (u, v))
            diag = (a, b) if a < b else (b, a)
            if diag >= (u, v):
                continue
            if not _cocircular(coords[u], coords[v], coords[a], coords[b]):
                continue
            if not _strictly_convex_quad(coords, u, v, a, b):
                continue
            tris.discard(t1)
            tris.discard(t2)
            tris.add(tuple(sorted((diag[0], diag[1], u))))
            tris.add(tuple(sorted((diag[0], diag[1], v))))
            changed = True
            break
    return tris


def _cocircular(pu, pv, pa, pb) -> bool:
    try:
        ox, oy, r = geom.circumcircle(pu, pv, pa)
    except ZeroDivisionError:
        return False
    return abs(math.dist((ox, oy), pb) - r) <= COCIRCULAR_REL_TOL * r


def _strictly_convex_quad(coords, u, v, a, b) -> bool:
    # a and b sit on opposite sides of uv; the flip also needs u, v on
    # opposite sides of ab
    s1 = geom.orient_sign(coords[a], coords[b], coords[u])
    s2 = geom.orient_sign(coords[a], coords[b], coords[v])
    return (s1 > 0 > s2) or (s1 < 0 < s2)
