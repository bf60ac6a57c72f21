"""Exact interval arithmetic on the unit segment and the unit circle.

Arcs are closed intervals with Fraction endpoints. On the circle, arcs are
normalized so that lo is in [0, 1) and hi - lo is at most 1; a wrapping arc
simply has hi > 1. All overlap questions reduce to at most three integer
shifts of one operand.
"""

from __future__ import annotations

from fractions import Fraction

Arc = tuple[Fraction, Fraction]

ONE = Fraction(1)


def make_arc(lo, hi, ambient: str) -> Arc:
    lo = Fraction(lo)
    hi = Fraction(hi)
    if hi < lo:
        raise ValueError(f"interval endpoints out of order: [{lo}, {hi}]")
    if ambient == "segment":
        if lo < 0 or hi > 1:
            raise ValueError(f"segment interval outside [0, 1]: [{lo}, {hi}]")
        return (lo, hi)
    if ambient == "circle":
        length = min(hi - lo, ONE)
        lo = lo % 1
        return (lo, lo + length)
    raise ValueError(f"unknown interval ambient: {ambient!r}")


def _linear_overlap(a: Arc, b: Arc) -> Arc | None:
    """Closed overlap on the line; degenerate (point) overlaps are kept."""
    lo = max(a[0], b[0])
    hi = min(a[1], b[1])
    if hi < lo:
        return None
    return (lo, hi)


def intersect_pair(a: Arc, b: Arc, ambient: str) -> list[Arc]:
    """All closed overlap components of two arcs."""
    if ambient == "segment":
        got = _linear_overlap(a, b)
        return [got] if got is not None else []
    if a[1] - a[0] >= 1:
        return [b]
    if b[1] - b[0] >= 1:
        return [a]
    out: list[Arc] = []
    for shift in (-1, 0, 1):
        got = _linear_overlap(a, (b[0] + shift, b[1] + shift))
        if got is not None and got not in out:
            out.append(got)
    return out


def intersect_many(arc_lists: list[list[Arc]], ambient: str) -> list[Arc]:
    """Fold the closed intersection across a list of arc unions."""
    if not arc_lists:
        return []
    acc = list(arc_lists[0])
    for arcs in arc_lists[1:]:
        nxt: list[Arc] = []
        for a in acc:
            for b in arcs:
                for got in intersect_pair(a, b, ambient):
                    if got not in nxt:
                        nxt.append(got)
        acc = nxt
        if not acc:
            break
    return acc


def has_common_point(arc_lists: list[list[Arc]], ambient: str) -> bool:
    """Nonempty intersection of the closed unions (a point counts)."""
    return bool(intersect_many(arc_lists, ambient))


def has_common_interior(arc_lists: list[list[Arc]], ambient: str) -> bool:
    """The unions share an interval of positive length."""
    return any(hi > lo for lo, hi in intersect_many(arc_lists, ambient))


def arcs_touch(a: Arc, b: Arc, ambient: str) -> bool:
    return bool(intersect_pair(a, b, ambient))


def arcs_overlap_positively(a: Arc, b: Arc, ambient: str) -> bool:
    return any(hi > lo for lo, hi in intersect_pair(a, b, ambient))


def point_arc_distance(t: float, arcs: list[Arc], ambient: str) -> float:
    """Distance from a 1-D coordinate to the closed union of arcs."""
    best = float("inf")
    if ambient == "circle":
        t = t % 1.0
        shifts = (-1.0, 0.0, 1.0)
    else:
        shifts = (0.0,)
    for lo, hi in arcs:
        flo, fhi = float(lo), float(hi)
        for s in shifts:
            u = t + s
            d = max(flo - u, u - fhi, 0.0)
            best = min(best, d)
    return best
