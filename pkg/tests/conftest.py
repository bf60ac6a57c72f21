import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hypercell import build_complex


def hex_fan_coords():
    return [(0.0, 0.0)] + [(math.cos(i * math.pi / 3), math.sin(i * math.pi / 3))
                           for i in range(6)]


@pytest.fixture(scope="session")
def hex_fan():
    """Center vertex 0, unit-hexagon corners 1..6, six fan triangles."""
    return build_complex(hex_fan_coords(), [(0, 1 + i, 1 + (i + 1) % 6) for i in range(6)])


@pytest.fixture(scope="session")
def strip5():
    """Zigzag strip of five triangles t_i = (i-1, i, i+1)."""
    coords = [(0.0, 0.0), (0.5, 1.0), (1.0, 0.0), (1.5, 1.0),
              (2.0, 0.0), (2.5, 1.0), (3.0, 0.0)]
    return build_complex(coords, [(i - 1, i, i + 1) for i in range(1, 6)])


@pytest.fixture(scope="session")
def two_ring_fan():
    """Hex fan plus an annulus of 12 outer triangles at radius 2."""
    inner = hex_fan_coords()
    outer = [(2 * math.cos(i * math.pi / 3), 2 * math.sin(i * math.pi / 3))
             for i in range(6)]
    coords = inner + outer
    tris = [(0, 1 + i, 1 + (i + 1) % 6) for i in range(6)]
    for i in range(6):
        vi, vj = 1 + i, 1 + (i + 1) % 6
        wi, wj = 7 + i, 7 + (i + 1) % 6
        tris.append((vi, vj, wi))
        tris.append((vj, wj, wi))
    return build_complex(coords, tris)


@pytest.fixture(scope="session")
def single_triangle():
    return build_complex([(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)], [(0, 1, 2)])


def golden_path(name: str) -> Path:
    return Path(__file__).parent / "golden" / name
