"""Command-line surface.

Subcommands: validate, triangulate, holes, mnc, skcx, sew, cycle,
chain-check, render. Success prints JSON (or SVG) to stdout or writes it
atomically to --output; domain errors exit 1 with a JSON error object on
stderr; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import tempfile
from pathlib import Path

from .chains import classify, family_from_json
from .complexes import Complex, Point, complex_from_json, validate_cw
from .errors import DomainError, TooFewKeypoints
from .imaging import extract_holes, read_image
from .nerves import mcyc, mnc, skcx, vortex_json_dict
from .render import Layer, RenderSpec, to_svg
from .sewing import cycle_through, sew
from .triangulation import delaunay


def _load_complex(path: str) -> Complex:
    return complex_from_json(Path(path).read_text())


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    target = Path(output)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_point(text: str) -> Point:
    x, y = (float(t) for t in text.split(","))
    return Point.plane(x, y)


def _cmd_validate(args) -> str:
    report = validate_cw(_load_complex(args.complex))
    return _dump(report.to_json_dict())


def _cmd_triangulate(args) -> str:
    points = []
    for line in Path(args.points).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        x, y = (float(t) for t in line.split(","))
        points.append((x, y))
    if len(points) < 3:
        raise TooFewKeypoints(f"need >= 3 points, got {len(points)}")
    return delaunay(points).to_json()


def _cmd_holes(args) -> str:
    grid = read_image(args.image)
    payload: dict = {}
    if args.triangulate:
        from .imaging import pipeline
        k, _dk, holes = pipeline(grid, args.tolerance, args.connectivity, args.min_area)
        payload["complex"] = k.to_json_dict()
    else:
        holes = extract_holes(grid, args.tolerance, args.connectivity, args.min_area)
    payload["holes"] = [
        {
            "area": h.area,
            "centroid": [h.centroid.x, h.centroid.y],
            "meanIntensity": h.mean_intensity,
        }
        for h in holes
    ]
    return _dump(payload)


def _cmd_mnc(args) -> str:
    clusters = mnc(_load_complex(args.complex))
    return _dump({
        "mncs": [
            {"nucleus": n.nucleus_vertex, "order": n.order,
             "triangles": sorted(n.triangles)}
            for n in clusters
        ]
    })


def _cmd_skcx(args) -> str:
    k = _load_complex(args.complex)
    payload = vortex_json_dict(k, args.nucleus, args.k, include_cycles=args.cycles)
    return _dump(payload)


def _cmd_sew(args) -> str:
    k = _load_complex(args.complex)
    chain = sew(k, _parse_point(args.origin), _parse_point(args.target))
    return _dump({
        "dualPath": list(chain.dual_path),
        "windows": [sorted(w.cells) for w in chain.windows.members],
        "degree": chain.degree,
    })


def _cmd_cycle(args) -> str:
    k = _load_complex(args.complex)
    points = [_parse_point(tok) for tok in args.points.split(";") if tok]
    family = cycle_through(k, points)
    report = classify(family)
    return _dump({
        "windows": [sorted(w.cells) for w in family.members],
        "isLink": report.is_link,
        "isChain": report.is_chain,
    })


def _cmd_chain_check(args) -> str:
    family = family_from_json(Path(args.family).read_text())
    return _dump(classify(family).to_json_dict())


def _cmd_render(args) -> str:
    k = _load_complex(args.complex)
    layers = []
    if args.mesh:
        layers.append(Layer("mesh"))
    if args.mnc:
        layers.append(Layer("mnc", mnc(k)))
    if args.ring is not None:
        nucleus, ring_k = args.ring
        layers.append(Layer("ring", skcx(k, nucleus, ring_k)))
    if args.cycle is not None:
        nucleus, ring_k = args.cycle
        layers.append(Layer("cycle", mcyc(k, nucleus, ring_k)))
    spec = RenderSpec(tuple(layers), width=args.canvas[0], height=args.canvas[1],
                      margin=args.margin)
    return to_svg(k, spec)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercell",
        description="Hyperconnectedness machinery over planar cell complexes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="seed the process RNG (reserved for randomized runs)")
    common.add_argument("--output", "-o", default=None, help="write output to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("validate", help="audit a complex against the CW conditions")
    p.add_argument("complex")
    p.set_defaults(func=_cmd_validate)

    p = add_parser("triangulate", help="Delaunay triangulation of x,y CSV points")
    p.add_argument("points")
    p.set_defaults(func=_cmd_triangulate)

    p = add_parser("holes", help="uniform-intensity holes of a PGM image")
    p.add_argument("image")
    p.add_argument("--tolerance", type=float, default=0.0)
    p.add_argument("--connectivity", type=int, choices=(4, 8), default=4)
    p.add_argument("--min-area", type=int, default=1)
    p.add_argument("--triangulate", action="store_true",
                   help="also triangulate the hole centroids and emit the complex")
    p.set_defaults(func=_cmd_holes)

    p = add_parser("mnc", help="maximal nuclear clusters of a complex")
    p.add_argument("complex")
    p.set_defaults(func=_cmd_mnc)

    p = add_parser("skcx", help="spoke rings (and cycles) around a nucleus")
    p.add_argument("complex")
    p.add_argument("--nucleus", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cycles", action="store_true",
                   help="include centroidal cycles for feasible rings")
    p.set_defaults(func=_cmd_skcx)

    p = add_parser("sew", help="sewing chain between two interior points")
    p.add_argument("complex")
    p.add_argument("--from", dest="origin", required=True, metavar="X,Y")
    p.add_argument("--to", dest="target", required=True, metavar="X,Y")
    p.set_defaults(func=_cmd_sew)

    p = add_parser("cycle", help="cycle of sewing chains through waypoints")
    p.add_argument("complex")
    p.add_argument("--points", required=True, metavar="X1,Y1;X2,Y2;...")
    p.set_defaults(func=_cmd_cycle)

    p = add_parser("chain-check", help="classify an interval family JSON")
    p.add_argument("family")
    p.set_defaults(func=_cmd_chain_check)

    p = add_parser("render", help="render complex layers to SVG")
    p.add_argument("complex")
    p.add_argument("--mesh", action="store_true")
    p.add_argument("--mnc", action="store_true")
    p.add_argument("--ring", nargs=2, type=int, metavar=("NUCLEUS", "K"), default=None)
    p.add_argument("--cycle", nargs=2, type=int, metavar=("NUCLEUS", "K"), default=None)
    p.add_argument("--canvas", nargs=2, type=int, metavar=("W", "H"), default=(480, 480))
    p.add_argument("--margin", type=int, default=24)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        text = args.func(args)
        _emit(text, args.output)
    except DomainError as exc:
        sys.stderr.write(_dump({"error": exc.code, "message": str(exc)}))
        return 1
    except (OSError, ValueError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(_dump({"error": type(exc).__name__, "message": str(exc)}))
        return 1
    return 0


def console_main() -> None:  # pragma: no cover - thin wrapper
    raise SystemExit(main())


cli_main = main
