"""Planar geometric predicates.

Sign predicates run on floats behind an adaptive error filter: when the
floating-point determinant is larger than its rounding-error bound the sign
is certain, otherwise the computation is redone in exact rational arithmetic
(floats convert losslessly to Fraction). Predicates therefore never
misclassify. Metric helpers (distances, centroids, circumcircles) are plain
floats.
"""

from __future__ import annotations

import math
from fractions import Fraction

Pt = tuple[float, float]

# (3 + 16 eps) eps with eps = 2^-53; standard bound for the 2x2 determinant
_ORIENT_ERRBOUND = 3.3306690738754716e-16


def to_frac(p) -> tuple[Fraction, Fraction]:
    return (Fraction(p[0]), Fraction(p[1]))


def orient_sign(a: Pt, b: Pt, c: Pt) -> int:
    """Sign of twice the signed area of (a, b, c); +1 for counterclockwise."""
    acx = b[0] - a[0]
    acy = c[1] - a[1]
    bcx = b[1] - a[1]
    bcy = c[0] - a[0]
    detleft = acx * acy
    detright = bcx * bcy
    det = detleft - detright
    bound = _ORIENT_ERRBOUND * (abs(detleft) + abs(detright))
    if det > bound:
        return 1
    if det < -bound:
        return -1
    if detleft == 0.0 and detright == 0.0:
        # a rounded product is zero iff the exact product is, unless it
        # underflowed; rule that out and the determinant is exactly zero
        if all(f == 0.0 or abs(f) > 1e-150 for f in (acx, acy, bcx, bcy)):
            return 0
    exact = ((Fraction(b[0]) - Fraction(a[0])) * (Fraction(c[1]) - Fraction(a[1]))
             - (Fraction(b[1]) - Fraction(a[1])) * (Fraction(c[0]) - Fraction(a[0])))
    if exact > 0:
        return 1
    if exact < 0:
        return -1
    return 0


def on_segment(p: Pt, a: Pt, b: Pt) -> bool:
    """True iff p lies on the closed segment ab."""
    if orient_sign(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def in_triangle(p: Pt, a: Pt, b: Pt, c: Pt) -> bool:
    """True iff p lies in the closed triangle abc (any orientation)."""
    s1 = orient_sign(a, b, p)
    s2 = orient_sign(b, c, p)
    s3 = orient_sign(c, a, p)
    has_neg = s1 < 0 or s2 < 0 or s3 < 0
    has_pos = s1 > 0 or s2 > 0 or s3 > 0
    return not (has_neg and has_pos)


def strictly_in_triangle(p: Pt, a: Pt, b: Pt, c: Pt) -> bool:
    s1 = orient_sign(a, b, p)
    s2 = orient_sign(b, c, p)
    s3 = orient_sign(c, a, p)
    return (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0)


def segments_cross_strict(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> bool:
    """True iff the open segments cross at a single interior point."""
    o1 = orient_sign(p1, p2, q1)
    o2 = orient_sign(p1, p2, q2)
    if o1 * o2 >= 0:
        return False
    o3 = orient_sign(q1, q2, p1)
    o4 = orient_sign(q1, q2, p2)
    return o3 * o4 < 0


def segments_touch(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> bool:
    """True iff the closed segments share at least one point."""
    if segments_cross_strict(p1, p2, q1, q2):
        return True
    return (on_segment(q1, p1, p2) or on_segment(q2, p1, p2)
            or on_segment(p1, q1, q2) or on_segment(p2, q1, q2))


def collinear_overlap(p1: Pt, p2: Pt, q1: Pt, q2: Pt):
    """Positive-length overlap of two collinear segments, or None.

    Returns the overlap endpoints; those are always among the four inputs.
    Parameters along the carrier line are compared in exact rationals.
    """
    if orient_sign(p1, p2, q1) != 0 or orient_sign(p1, p2, q2) != 0:
        return None
    fp1, fp2, fq1, fq2 = to_frac(p1), to_frac(p2), to_frac(q1), to_frac(q2)
    d = (fp2[0] - fp1[0], fp2[1] - fp1[1])

    def param(x) -> Fraction:
        return (x[0] - fp1[0]) * d[0] + (x[1] - fp1[1]) * d[1]

    keyed = [(param(f), orig) for f, orig in
             ((fp1, p1), (fp2, p2), (fq1, q1), (fq2, q2))]
    tp = [keyed[0][0], keyed[1][0]]
    tq = [keyed[2][0], keyed[3][0]]
    lo = max(min(tp), min(tq))
    hi = min(max(tp), max(tq))
    if hi <= lo:
        return None
    lo_pt = next(orig for t, orig in keyed if t == lo)
    hi_pt = next(orig for t, orig in keyed if t == hi)
    return lo_pt, hi_pt


# --- float helpers -------------------------------------------------------

def tri_area(a: Pt, b: Pt, c: Pt) -> float:
    """Unsigned triangle area."""
    return abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])) / 2.0


def tri_centroid(a: Pt, b: Pt, c: Pt) -> Pt:
    return ((a[0] + b[0] + c[0]) / 3.0, (a[1] + b[1] + c[1]) / 3.0)


def tri_perimeter(a: Pt, b: Pt, c: Pt) -> float:
    return math.dist(a, b) + math.dist(b, c) + math.dist(c, a)


def circumcircle(a: Pt, b: Pt, c: Pt) -> tuple[float, float, float]:
    """Circumcenter and radius of a non-degenerate triangle."""
    d = 2.0 * ((a[0] * (b[1] - c[1])) + (b[0] * (c[1] - a[1])) + (c[0] * (a[1] - b[1])))
    if d == 0.0:
        raise ZeroDivisionError("degenerate triangle has no circumcircle")
    a2 = a[0] * a[0] + a[1] * a[1]
    b2 = b[0] * b[0] + b[1] * b[1]
    c2 = c[0] * c[0] + c[1] * c[1]
    ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d
    uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d
    return ux, uy, math.dist((ux, uy), a)


def incircle_det(a: Pt, b: Pt, c: Pt, p: Pt) -> float:
    """In-circle determinant; positive iff p is inside the circumcircle of a
    counterclockwise triangle (a, b, c)."""
    ax, ay = a[0] - p[0], a[1] - p[1]
    bx, by = b[0] - p[0], b[1] - p[1]
    cx, cy = c[0] - p[0], c[1] - p[1]
    return ((ax * ax + ay * ay) * (bx * cy - cx * by)
            - (bx * bx + by * by) * (ax * cy - cx * ay)
            + (cx * cx + cy * cy) * (ax * by - bx * ay))


def point_segment_dist(p: Pt, a: Pt, b: Pt) -> float:
    vx, vy = b[0] - a[0], b[1] - a[1]
    wx, wy = p[0] - a[0], p[1] - a[1]
    vv = vx * vx + vy * vy
    if vv == 0.0:
        return math.dist(p, a)
    t = max(0.0, min(1.0, (wx * vx + wy * vy) / vv))
    return math.dist(p, (a[0] + t * vx, a[1] + t * vy))


def point_triangle_dist(p: Pt, a: Pt, b: Pt, c: Pt) -> float:
    if in_triangle(p, a, b, c):
        return 0.0
    return min(point_segment_dist(p, a, b),
               point_segment_dist(p, b, c),
               point_segment_dist(p, c, a))
