"""Grayscale image ingestion and the hole/keypoint/triangulation pipeline.

Holes are maximal connected runs of near-uniform intensity; their centroids
(pixel centers at col + 0.5, row + 0.5) seed the triangulation, and the
resulting complex carries an intensity probe sampled from the source grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import geom
from .complexes import Complex, Point
from .errors import (
    CollinearInput,
    CollinearKeypoints,
    CorruptHeader,
    TooFewKeypoints,
    UnsupportedFormat,
)
from .relations import DescriptiveComplex, Probe
from .triangulation import delaunay


@dataclass(frozen=True)
class Grid:
    """Row-major grayscale raster with values in [0, 255]."""

    width: int
    height: int
    intensities: tuple[int, ...]

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("grid dimensions must be positive")
        if len(self.intensities) != self.width * self.height:
            raise ValueError("intensity buffer does not match dimensions")

    def at(self, row: int, col: int) -> int:
        return self.intensities[row * self.width + col]


@dataclass(frozen=True)
class Hole:
    """A uniform-intensity pixel component with its centroid keypoint."""

    pixels: frozenset[tuple[int, int]]  # (row, col)
    centroid: Point
    mean_intensity: float

    @property
    def area(self) -> int:
        return len(self.pixels)


def read_image(path, allow_png: bool = False) -> Grid:
    """Read a PGM (P2 or P5) grayscale image; PNG optionally via Pillow.

    Color inputs are converted by luma (0.299 R + 0.587 G + 0.114 B).
    """
    data = Path(path).read_bytes()
    if data[:2] in (b"P2", b"P5"):
        return _parse_pgm(data)
    if data[:8] == b"\x89PNG\r\n\x1a\n":
        if not allow_png:
            raise UnsupportedFormat("PNG input requires allow_png / the png extra")
        return _read_png(path)
    raise UnsupportedFormat(f"unrecognized image header {data[:2]!r}")


def _parse_pgm(data: bytes) -> Grid:
    magic = data[:2]
    try:
        if magic == b"P2":
            tokens = _pgm_tokens(data[2:])
            width, height, maxval = (int(next(tokens)) for _ in range(3))
            _check_header(width, height, maxval)
            values = []
            for _ in range(width * height):
                values.append(int(next(tokens)))
        else:
            header: list[int] = []
            pos = 2
            while len(header) < 3:
                pos = _skip_pgm_space(data, pos)
                start = pos
                while pos < len(data) and not data[pos:pos + 1].isspace():
                    pos += 1
                header.append(int(data[start:pos]))
            width, height, maxval = header
            _check_header(width, height, maxval)
            pos += 1  # single whitespace after maxval
            raster = data[pos:pos + width * height]
            if len(raster) != width * height:
                raise CorruptHeader("binary raster truncated")
            values = list(raster)
    except (StopIteration, ValueError, IndexError) as exc:
        raise CorruptHeader(f"malformed PGM: {exc}") from exc
    if any(not 0 <= v <= maxval for v in values):
        raise CorruptHeader("sample exceeds maxval")
    return Grid(width, height, tuple(values))


def _check_header(width: int, height: int, maxval: int) -> None:
    if width <= 0 or height <= 0:
        raise CorruptHeader("non-positive dimensions")
    if not 0 < maxval <= 255:
        raise CorruptHeader(f"unsupported maxval {maxval}")


def _pgm_tokens(data: bytes):
    for line in data.split(b"\n"):
        line = line.split(b"#", 1)[0]
        yield from line.split()


def _skip_pgm_space(data: bytes, pos: int) -> int:
    while pos < len(data):
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] != b"\n":
                pos += 1
        elif data[pos:pos + 1].isspace():
            pos += 1
        else:
            break
    return pos


def _read_png(path) -> Grid:
    try:
        from PIL import Image
    except ImportError as exc:  # pragma: no cover - depends on extra
        raise UnsupportedFormat("PNG support needs Pillow (install the png extra)") from exc
    with Image.open(path) as img:
        rgb = img.convert("RGB")
        width, height = rgb.size
        values = []
        for r, g, b in rgb.getdata():
            values.append(int(round(0.299 * r + 0.587 * g + 0.114 * b)))
    return Grid(width, height, tuple(values))


def extract_holes(g: Grid, tolerance: float, connectivity: int = 4,
                  min_area: int = 1) -> list[Hole]:
    """Flood-fill components of near-uniform intensity.

    Pixels join a component iff their intensity is within tolerance of the
    component seed. Components smaller than min_area are discarded; holes are
    sorted by centroid (row, col).
    """
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    if connectivity not in (4, 8):
        raise ValueError("connectivity must be 4 or 8")
    if min_area < 1:
        raise ValueError("min_area must be positive")
    if connectivity == 4:
        steps = ((-1, 0), (1, 0), (0, -1), (0, 1))
    else:
        steps = tuple((dr, dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1)
                      if (dr, dc) != (0, 0))
    visited = [False] * (g.width * g.height)
    holes = []
    for seed_row in range(g.height):
        for seed_col in range(g.width):
            if visited[seed_row * g.width + seed_col]:
                continue
            seed_val = g.at(seed_row, seed_col)
            component = []
            stack = [(seed_row, seed_col)]
            visited[seed_row * g.width + seed_col] = True
            while stack:
                r, c = stack.pop()
                component.append((r, c))
                for dr, dc in steps:
                    nr, nc = r + dr, c + dc
                    if 0 <= nr < g.height and 0 <= nc < g.width:
                        idx = nr * g.width + nc
                        if not visited[idx] and abs(g.at(nr, nc) - seed_val) <= tolerance:
                            visited[idx] = True
                            stack.append((nr, nc))
            if len(component) < min_area:
                continue
            n = len(component)
            # exact rational means keep centroids bit-stable
            cx = Fraction(sum(c for _, c in component), n) + Fraction(1, 2)
            cy = Fraction(sum(r for r, _ in component), n) + Fraction(1, 2)
            mean = Fraction(sum(g.at(r, c) for r, c in component), n)
            holes.append(Hole(frozenset(component),
                              Point.plane(float(cx), float(cy)), float(mean)))
    holes.sort(key=lambda h: (h.centroid.y, h.centroid.x))
    return holes


def sample_triangle_intensity(g: Grid, k: Complex) -> dict[int, float]:
    """Mean intensity of the pixels whose centers fall inside each triangle.

    Triangles that catch no pixel center take the value of the pixel nearest
    their centroid (ties to the smallest row, col).
    """
    out: dict[int, float] = {}
    for tid in k.triangle_ids():
        a, b, c = k.carrier(tid)
        x0, y0, x1, y1 = k.cell_bbox(tid)
        col_lo = max(0, math.floor(x0 - 0.5))
        col_hi = min(g.width - 1, math.ceil(x1))
        row_lo = max(0, math.floor(y0 - 0.5))
        row_hi = min(g.height - 1, math.ceil(y1))
        total = 0
        count = 0
        for r in range(row_lo, row_hi + 1):
            for col in range(col_lo, col_hi + 1):
                center = (col + 0.5, r + 0.5)
                if geom.in_triangle(center, a, b, c):
                    total += g.at(r, col)
                    count += 1
        if count:
            out[tid] = total / count
        else:
            gx, gy = k.centroid(tid)
            best = min(
                ((r, col) for r in range(g.height) for col in range(g.width)),
                key=lambda rc: (math.hypot(rc[1] + 0.5 - gx, rc[0] + 0.5 - gy), rc),
            )
            out[tid] = float(g.at(*best))
    return out


def pipeline(g: Grid, tolerance: float, connectivity: int = 4,
             min_area: int = 1) -> tuple[Complex, DescriptiveComplex, list[Hole]]:
    """Holes -> centroid keypoints -> triangulation -> intensity probe."""
    holes = extract_holes(g, tolerance, connectivity, min_area)
    if len(holes) < 3:
        raise TooFewKeypoints(f"need >= 3 holes to triangulate, got {len(holes)}")
    centroids = [(h.centroid.x, h.centroid.y) for h in holes]
    try:
        k = delaunay(centroids)
    except CollinearInput as exc:
        raise CollinearKeypoints(str(exc)) from exc
    intensity = sample_triangle_intensity(g, k)
    dk = DescriptiveComplex(k, Probe(("meanIntensity",)), intensity)
    return k, dk, holes
