"""Deterministic SVG rendering of complexes and their derived structures.

One affine fit maps the complex bounding box into the canvas minus margin
(uniform scale, y flipped so image-derived complexes render upright). Equal
inputs always produce byte-identical documents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from .chains import ChainFamily
from .complexes import Complex
from .errors import UnknownReference
from .nerves import CentroidalCycle, Nerve, SpokeRing
from .sewing import SewChain

LAYER_KINDS = ("mesh", "mnc", "ring", "cycle", "chain")

_DEFAULT_STYLE = {
    "mesh": {"stroke": "#777777", "stroke-width": "1.0000", "fill": "none"},
    "mnc": {"stroke": "#b8860b", "stroke-width": "1.0000", "fill": "#f2c14e"},
    "ring": {"stroke": "#1f618d", "stroke-width": "1.0000", "fill": "#aed6f1"},
    "cycle": {"stroke": "#c0392b", "stroke-width": "2.0000", "fill": "none"},
    "chain": {"stroke": "#27ae60", "stroke-width": "2.0000", "fill": "none"},
}


@dataclass(frozen=True)
class Layer:
    kind: str
    data: object = None
    style: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in LAYER_KINDS:
            raise UnknownReference(f"unknown layer kind {self.kind!r}")


@dataclass(frozen=True)
class RenderSpec:
    layers: tuple[Layer, ...]
    width: int = 480
    height: int = 480
    margin: int = 24

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0 or self.margin < 0:
            raise ValueError("canvas dimensions must be positive")
        if 2 * self.margin >= min(self.width, self.height):
            raise ValueError("margin leaves no drawing area")


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def to_svg(k: Complex, spec: RenderSpec) -> str:
    """Render the requested layers over the complex as an SVG 1.1 document."""
    x0, y0, x1, y1 = k.bbox()
    avail_w = spec.width - 2 * spec.margin
    avail_h = spec.height - 2 * spec.margin
    spanx = max(x1 - x0, 1e-12)
    spany = max(y1 - y0, 1e-12)
    scale = min(avail_w / spanx, avail_h / spany)
    offx = spec.margin + (avail_w - scale * spanx) / 2.0
    offy = spec.margin + (avail_h - scale * spany) / 2.0

    def tx(p: tuple[float, float]) -> tuple[float, float]:
        # y flipped: raster rows grow downward
        return (offx + scale * (p[0] - x0), spec.height - (offy + scale * (p[1] - y0)))

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        '<g id="canvas">',
    ]
    for idx, layer in enumerate(spec.layers):
        style = dict(_DEFAULT_STYLE[layer.kind])
        style.update({k_: str(v) for k_, v in layer.style.items()})
        attrs = " ".join(f'{name}="{style[name]}"' for name in sorted(style))
        lines.append(f'<g id="layer{idx}-{layer.kind}">')
        lines.extend(_render_layer(k, layer, tx, attrs))
        lines.append("</g>")
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _render_layer(k: Complex, layer: Layer, tx, attrs: str) -> list[str]:
    out = []
    if layer.kind == "mesh":
        for eid in k.edge_ids():
            (ax, ay), (bx, by) = (tx(p) for p in k.carrier(eid))
            out.append(f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" '
                       f'x2="{_fmt(bx)}" y2="{_fmt(by)}" {attrs}/>')
        return out
    if layer.kind in ("mnc", "ring"):
        tri_ids = _triangle_ids_of(layer.data)
        for tid in sorted(tri_ids):
            pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (tx(p) for p in k.carrier(tid)))
            out.append(f'<polygon points="{pts}" {attrs}/>')
        return out
    if layer.kind == "cycle":
        if not isinstance(layer.data, CentroidalCycle):
            raise UnknownReference("cycle layer needs a CentroidalCycle")
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}"
                       for x, y in (tx((p.x, p.y)) for p in layer.data.points))
        out.append(f'<polygon points="{pts}" {attrs}/>')
        return out
    # chain: polyline through the dual-path triangle centroids
    path = _chain_path(layer.data)
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (tx(k.centroid(t)) for t in path))
    out.append(f'<polyline points="{pts}" {attrs}/>')
    return out


def _triangle_ids_of(data) -> frozenset[int]:
    if isinstance(data, Nerve):
        return data.triangles
    if isinstance(data, SpokeRing):
        return data.members
    if isinstance(data, (list, tuple)) and data and all(isinstance(n, Nerve) for n in data):
        ids: set[int] = set()
        for n in data:
            ids |= n.triangles
        return frozenset(ids)
    raise UnknownReference("mnc/ring layer needs a Nerve, SpokeRing or list of Nerves")


def _chain_path(data) -> tuple[int, ...]:
    if isinstance(data, SewChain):
        return data.dual_path
    if isinstance(data, ChainFamily):
        path: list[int] = []
        for member in data.members:
            for cid in sorted(member.cells):
                if not path or path[-1] != cid:
                    path.append(cid)
        return tuple(path)
    raise UnknownReference("chain layer needs a SewChain or ChainFamily")
