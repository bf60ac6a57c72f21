"""Independent oracles used to derive expected test values.

These deliberately avoid the library's own code paths: polygon work goes
through shapely, graph work through networkx, circumcircles and hulls
through exact Fraction arithmetic, component labeling through a separate
BFS. Expected values asserted in the tests were computed here.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

import networkx as nx
from shapely.geometry import Point as ShPoint
from shapely.geometry import Polygon


def triangle_polygon(coords):
    return Polygon(list(coords))


def open_polygons_overlap(tris_a, tris_b) -> bool:
    """Interiors of two unions of closed triangles overlap (positive area)."""
    ua = None
    for t in tris_a:
        ua = triangle_polygon(t) if ua is None else ua.union(triangle_polygon(t))
    ub = None
    for t in tris_b:
        ub = triangle_polygon(t) if ub is None else ub.union(triangle_polygon(t))
    return ua.intersection(ub).area > 1e-15


def closed_polygons_touch(tris_a, tris_b) -> bool:
    ua = None
    for t in tris_a:
        ua = triangle_polygon(t) if ua is None else ua.union(triangle_polygon(t))
    ub = None
    for t in tris_b:
        ub = triangle_polygon(t) if ub is None else ub.union(triangle_polygon(t))
    return ua.distance(ub) == 0.0


def point_in_closed_union(p, tris) -> bool:
    pt = ShPoint(p)
    return any(triangle_polygon(t).distance(pt) == 0.0 for t in tris)


def is_path_graph_nx(nodes, edges) -> bool:
    g = nx.Graph()
    g.add_nodes_from(nodes)
    g.add_edges_from(edges)
    if g.number_of_nodes() < 2:
        return False
    if not nx.is_tree(g):
        return False
    degrees = sorted(d for _, d in g.degree())
    return degrees == [1, 1] + [2] * (g.number_of_nodes() - 2)


def bfs_shortest_paths(adj, start, goal):
    """All shortest start-goal paths in an adjacency dict."""
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nb in adj[cur]:
            if nb not in dist:
                dist[nb] = dist[cur] + 1
                queue.append(nb)
    if goal not in dist:
        return []
    paths = []

    def walk(node, acc):
        if node == goal:
            paths.append(tuple(acc))
            return
        for nb in adj[node]:
            if dist.get(nb) == dist[node] + 1:
                walk(nb, acc + [nb])

    walk(start, [start])
    return paths


def frac_circumcircle(a, b, c):
    """Exact circumcenter and squared radius of a rational triangle."""
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cx, cy = Fraction(c[0]), Fraction(c[1])
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0:
        raise ValueError("collinear")
    a2 = ax * ax + ay * ay
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ox = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    oy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    r2 = (ax - ox) ** 2 + (ay - oy) ** 2
    return ox, oy, r2


def strictly_inside_circumdisk(tri, p, rel_slack=Fraction(1, 10 ** 9)) -> bool:
    """Exact: p closer to the circumcenter than radius * (1 - rel_slack)."""
    ox, oy, r2 = frac_circumcircle(*tri)
    d2 = (Fraction(p[0]) - ox) ** 2 + (Fraction(p[1]) - oy) ** 2
    return d2 < r2 * (1 - rel_slack) ** 2


def convex_hull_point_count(points) -> int:
    """Number of input points on the hull boundary, collinear ones included."""
    pts = sorted({(Fraction(x), Fraction(y)) for x, y in points})
    if len(pts) < 3:
        return len(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def on_hull_segment(p, a, b):
        if cross(a, b, p) != 0:
            return False
        return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    count = 0
    for p in pts:
        for i in range(len(hull)):
            if on_hull_segment(p, hull[i], hull[(i + 1) % len(hull)]):
                count += 1
                break
    return count


def label_components(width, height, values, tolerance, connectivity):
    """Independent seed-relative flood fill; returns list of pixel sets."""
    if connectivity == 4:
        steps = ((-1, 0), (1, 0), (0, -1), (0, 1))
    else:
        steps = tuple((dr, dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1)
                      if (dr, dc) != (0, 0))
    seen = set()
    comps = []
    for r in range(height):
        for c in range(width):
            if (r, c) in seen:
                continue
            seed = values[r * width + c]
            comp = set()
            queue = deque([(r, c)])
            seen.add((r, c))
            while queue:
                cr, cc = queue.popleft()
                comp.add((cr, cc))
                for dr, dc in steps:
                    nr, nc = cr + dr, cc + dc
                    if (0 <= nr < height and 0 <= nc < width and (nr, nc) not in seen
                            and abs(values[nr * width + nc] - seed) <= tolerance):
                        seen.add((nr, nc))
                        queue.append((nr, nc))
            comps.append(comp)
    return comps
