"""Hyperconnected chains and links, their graphs, and region maps.

A family of regions is a link when consecutive members are strongly near, and
a chain when additionally all non-consecutive members are far. The induced
adjacency graph of a chain is a path graph; relaxing the far condition can
only add edges, so the chain graph spans the link graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from .complexes import IntervalRegion, Region, same_ambient
from .errors import AmbientMismatch, EtaOutOfRange, FewerThanTwoRegions
from .intervals import make_arc
from .relations import Verdict, hsn


@dataclass(frozen=True)
class ChainFamily:
    """Ordered family of regions over one ambient.

    ``dilation`` records the endpoint overhang of an interval decomposition;
    it lets the circle gluing restore mass clamped at the segment endpoints.
    """

    members: tuple[Region, ...]
    ambient: str
    dilation: Fraction | None = None

    def __post_init__(self):
        if not self.members:
            raise ValueError("chain family must be nonempty")
        for m in self.members[1:]:
            same_ambient(self.members[0], m)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class AdjGraph:
    """Simple graph on member indices; an edge per strongly-near pair."""

    nodes: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def degree(self, node: int) -> int:
        return sum(1 for e in self.edges if node in e)


@dataclass(frozen=True)
class ChainReport:
    is_chain: bool
    is_link: bool
    violations: tuple[tuple[int, int, int, int], ...]  # (i, j, expected, got)

    def to_json_dict(self) -> dict:
        return {
            "isChain": self.is_chain,
            "isLink": self.is_link,
            "violations": [list(v) for v in self.violations],
        }


@dataclass(frozen=True)
class RegionMap:
    """A map restricted to a finite test family: aligned (source, image) pairs."""

    pairs: tuple[tuple[Region, Region], ...]

    def __post_init__(self):
        sources = [p[0] for p in self.pairs]
        if len(set(sources)) != len(sources):
            raise ValueError("map sources must be distinct")


@dataclass(frozen=True)
class MapReport:
    mode: str
    ok: bool
    violations: tuple[tuple[int, int, int, int], ...]  # (i, j, src, img)


def adjacency_graph(family: ChainFamily) -> AdjGraph:
    """Graph on member indices with an edge wherever hsn of the pair is NEAR."""
    n = len(family.members)
    if n < 2:
        raise FewerThanTwoRegions("adjacency graph needs >= 2 members")
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            if hsn([family.members[i], family.members[j]]) == Verdict.NEAR:
                edges.add((i, j))
    return AdjGraph(tuple(range(n)), frozenset(edges))


def classify(family: ChainFamily) -> ChainReport:
    """Chain/link classification with every failed pair enumerated."""
    n = len(family.members)
    if n < 2:
        raise FewerThanTwoRegions("classification needs >= 2 members")
    link_bad: list[tuple[int, int, int, int]] = []
    chain_bad: list[tuple[int, int, int, int]] = []
    for i in range(n):
        for j in range(i, n):
            got = int(hsn([family.members[i], family.members[j]]))
            if j - i <= 1:
                if got != Verdict.NEAR:
                    link_bad.append((i, j, int(Verdict.NEAR), got))
            else:
                if got != Verdict.FAR:
                    chain_bad.append((i, j, int(Verdict.FAR), got))
    is_link = not link_bad
    is_chain = is_link and not chain_bad
    return ChainReport(is_chain, is_link, tuple(sorted(link_bad + chain_bad)))


def is_path_graph(g: AdjGraph) -> bool:
    """Connected acyclic graph with two degree-1 endpoints and degree-2 interior."""
    n = len(g.nodes)
    if n < 2:
        return False
    if len(g.edges) != n - 1:
        return False
    degrees = [g.degree(v) for v in g.nodes]
    if sorted(degrees) != [1, 1] + [2] * (n - 2):
        return False
    # edge count + degree sequence force a single path once connected
    seen = {g.nodes[0]}
    frontier = [g.nodes[0]]
    while frontier:
        cur = frontier.pop()
        for a, b in g.edges:
            if a == cur and b not in seen:
                seen.add(b)
                frontier.append(b)
            elif b == cur and a not in seen:
                seen.add(a)
                frontier.append(a)
    return len(seen) == n


def is_spanning_subgraph(sub: AdjGraph, sup: AdjGraph) -> bool:
    return set(sub.nodes) == set(sup.nodes) and sub.edges <= sup.edges


def interval_decomposition(n: int, eta) -> ChainFamily:
    """Cover [0, 1] with n closed intervals dilated by eta at both ends.

    Member i is [max(0, i/n - eta), min(1, (i+1)/n + eta)]; adjacent members
    overlap in an interval of length 2*eta while 0 < eta < 1/(2n) keeps
    non-adjacent members apart, so the family always classifies as a chain.
    """
    if n < 2:
        raise FewerThanTwoRegions("decomposition needs n >= 2")
    eta = Fraction(eta)
    if not 0 < eta < Fraction(1, 2 * n):
        raise EtaOutOfRange(f"eta must satisfy 0 < eta < 1/{2 * n}, got {eta}")
    members = []
    for i in range(n):
        lo = max(Fraction(0), Fraction(i, n) - eta)
        hi = min(Fraction(1), Fraction(i + 1, n) + eta)
        members.append(IntervalRegion("segment", (make_arc(lo, hi, "segment"),)))
    return ChainFamily(tuple(members), "segment", dilation=eta)


def glue_to_circle(family: ChainFamily) -> ChainFamily:
    """Reinterpret a segment family on the circle obtained by gluing 0 to 1.

    Intervals away from the endpoints are unchanged. For decomposition
    families the recorded dilation restores, across the glue point, the
    overhang that was clamped at the segment endpoints, so end members
    overlap on the circle exactly as interior neighbours do.
    """
    if family.ambient != "segment":
        raise AmbientMismatch("gluing applies to segment families")
    eta = family.dilation
    new_members = []
    for m in family.members:
        arcs = []
        for lo, hi in m.intervals:
            if eta is not None:
                if lo == 0:
                    lo = lo - eta
                if hi == 1:
                    hi = hi + eta
            arcs.append(make_arc(lo, hi, "circle"))
        new_members.append(IntervalRegion("circle", tuple(sorted(arcs))))
    return ChainFamily(tuple(new_members), "circle", dilation=eta)


def verify_region_map(region_map: RegionMap, mode: str) -> MapReport:
    """Check hsn-continuity or hsn-equivalence over the supplied finite family.

    Continuity: every near source pair must map to a near image pair.
    Equivalence: source and image verdicts must agree. The check is
    restricted to the listed pairs; nothing is claimed about other subsets.
    """
    if mode not in ("continuity", "equivalence"):
        raise ValueError(f"mode must be continuity or equivalence, got {mode!r}")
    if len(region_map.pairs) < 2:
        raise FewerThanTwoRegions("map verification needs >= 2 pairs")
    violations = []
    n = len(region_map.pairs)
    for i in range(n):
        for j in range(i + 1, n):
            src = int(hsn([region_map.pairs[i][0], region_map.pairs[j][0]]))
            img = int(hsn([region_map.pairs[i][1], region_map.pairs[j][1]]))
            if mode == "continuity":
                bad = src == Verdict.NEAR and img == Verdict.FAR
            else:
                bad = src != img
            if bad:
                violations.append((i, j, src, img))
    return MapReport(mode, not violations, tuple(violations))


# -- serialization ----------------------------------------------------------

def family_to_json_dict(family: ChainFamily) -> dict:
    members = []
    for m in family.members:
        if not isinstance(m, IntervalRegion):
            raise ValueError("only interval families are serialized")
        members.append([[str(lo), str(hi)] for lo, hi in m.intervals])
    return {"ambient": family.ambient, "members": members}


def family_from_json_dict(data: dict) -> ChainFamily:
    ambient = data["ambient"]
    members = tuple(
        IntervalRegion.from_pairs(ambient, [(Fraction(lo), Fraction(hi)) for lo, hi in ivs])
        for ivs in data["members"]
    )
    return ChainFamily(members, ambient)


def family_from_json(text: str) -> ChainFamily:
    return family_from_json_dict(json.loads(text))
