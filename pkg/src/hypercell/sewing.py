"""Constructive sewing: chains of triangle windows joining two points.

The sewing operator locates both endpoints in triangles, takes the shortest
path between them in the dual graph (ties broken toward the lexicographically
smallest node sequence) and emits overlapping two-triangle windows along it.
Consecutive windows share exactly one 2-cell and windows further apart share
none, so the result always classifies as a chain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .chains import ChainFamily
from .complexes import CellRegion, Complex, Point, TRIANGLE, point_locate
from .errors import (
    CycleTooShort,
    Disconnected,
    NoTriangles,
    PointOnSkeleton,
    PointOutsideComplex,
)


@dataclass(frozen=True)
class DualGraph:
    """Graph on 2-cells with an edge per shared 1-cell."""

    nodes: tuple[int, ...]
    adjacency: dict[int, tuple[int, ...]]

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for a, nbrs in self.adjacency.items():
            for b in nbrs:
                out.add((a, b) if a < b else (b, a))
        return frozenset(out)


@dataclass(frozen=True)
class SewChain:
    x: Point
    y: Point
    windows: ChainFamily
    dual_path: tuple[int, ...]

    @property
    def degree(self) -> int:
        return max(1, len(self.dual_path) - 1)


def dual_graph(k: Complex) -> DualGraph:
    if not k.triangle_ids():
        raise NoTriangles("dual graph needs at least one 2-cell")
    return DualGraph(k.triangle_ids(), k.triangle_adjacency())


def _locate_triangle(k: Complex, p: Point) -> int:
    cid = point_locate(k, p)
    if cid is None:
        raise PointOutsideComplex(f"point ({p.x}, {p.y}) lies outside the complex")
    if k.kind(cid) != TRIANGLE:
        raise PointOnSkeleton(
            f"point ({p.x}, {p.y}) lies on the 1-skeleton; perturb it off cell {cid}")
    return cid


def _shortest_dual_path(k: Complex, start: int, goal: int) -> tuple[int, ...]:
    """Shortest path in the dual graph; among shortest paths, the one with the
    lexicographically smallest node sequence."""
    adj = k.triangle_adjacency()
    dist = {goal: 0}
    queue = deque([goal])
    while queue:
        cur = queue.popleft()
        for nb in adj[cur]:
            if nb not in dist:
                dist[nb] = dist[cur] + 1
                queue.append(nb)
    if start not in dist:
        raise Disconnected(f"no dual path between triangles {start} and {goal}")
    path = [start]
    cur = start
    while cur != goal:
        # the smallest feasible next node is lexicographically optimal
        cur = min(nb for nb in adj[cur] if dist.get(nb) == dist[cur] - 1)
        path.append(cur)
    return tuple(path)


def sew(k: Complex, x: Point, y: Point) -> SewChain:
    """Chain of triangle windows joining the triangles containing x and y.

    With a dual path t_1..t_m the windows are {t_j, t_(j+1)} for j < m; a
    single window {t_1} covers the degenerate same-triangle case. For paths
    of three or more triangles, x avoids the last window and y the first.
    """
    tx = _locate_triangle(k, x)
    ty = _locate_triangle(k, y)
    path = _shortest_dual_path(k, tx, ty)
    if len(path) == 1:
        windows = [CellRegion(k, frozenset([tx]))]
    else:
        windows = [CellRegion(k, frozenset([path[j], path[j + 1]]))
                   for j in range(len(path) - 1)]
    family = ChainFamily(tuple(windows), k.ambient)
    return SewChain(x, y, family, path)


def cycle_through(k: Complex, points: Sequence[Point]) -> ChainFamily:
    """Concatenated sewing chains through the waypoints and back to the first.

    Duplicate windows at junctions are merged; the result is a link (its ends
    meet), not a chain.
    """
    if len(points) < 3:
        raise CycleTooShort(f"cycle needs >= 3 points, got {len(points)}")
    windows: list[CellRegion] = []
    n = len(points)
    for i in range(n):
        seg = sew(k, points[i], points[(i + 1) % n])
        for w in seg.windows.members:
            if windows and windows[-1].cells == w.cells:
                continue
            windows.append(w)
    # the wrap-around junction can also duplicate the first window
    while len(windows) > 1 and windows[0].cells == windows[-1].cells:
        windows.pop()
    return ChainFamily(tuple(windows), k.ambient)
