import pytest

import oracles
from hypercell import (
    DescriptiveComplex,
    Grid,
    Probe,
    Verdict,
    build_complex,
    cell_region,
    extract_holes,
    hdnear,
    pipeline,
    read_image,
    validate_cw,
)
from hypercell.errors import CorruptHeader, TooFewKeypoints, UnsupportedFormat
from hypercell.imaging import sample_triangle_intensity


def two_block_grid():
    """8x8 grid: left 8x4 block of 50, right 8x4 block of 200."""
    values = []
    for _r in range(8):
        values.extend([50] * 4 + [200] * 4)
    return Grid(8, 8, tuple(values))


def checkerboard(width, height, low=0, high=255):
    return [low if (r + c) % 2 == 0 else high
            for r in range(height) for c in range(width)]


def blob_image(width, height, blobs):
    """Checkerboard background with constant square blobs; only the blobs
    survive a minArea filter because background pixels are all singletons."""
    values = checkerboard(width, height)
    for (top, left, size, value) in blobs:
        for r in range(top, top + size):
            for c in range(left, left + size):
                values[r * width + c] = value
    return Grid(width, height, tuple(values))


class TestReadImage:
    def test_p2(self, tmp_path):
        path = tmp_path / "img.pgm"
        path.write_text("P2\n# comment\n2 2\n255\n0 0\n0 0\n")
        g = read_image(path)
        assert (g.width, g.height) == (2, 2)
        assert g.intensities == (0, 0, 0, 0)

    def test_p5_matches_p2(self, tmp_path):
        p2 = tmp_path / "a.pgm"
        p2.write_text("P2\n3 2\n255\n10 20 30\n40 50 60\n")
        p5 = tmp_path / "b.pgm"
        p5.write_bytes(b"P5\n3 2\n255\n" + bytes([10, 20, 30, 40, 50, 60]))
        assert read_image(p2) == read_image(p5)

    def test_truncated(self, tmp_path):
        path = tmp_path / "bad.pgm"
        path.write_bytes(b"P5\n4 4\n255\n\x00\x01")
        with pytest.raises(CorruptHeader):
            read_image(path)

    def test_garbage_header(self, tmp_path):
        path = tmp_path / "bad.bin"
        path.write_bytes(b"GIF89a.....")
        with pytest.raises(UnsupportedFormat):
            read_image(path)

    def test_value_above_maxval(self, tmp_path):
        path = tmp_path / "bad.pgm"
        path.write_text("P2\n1 1\n10\n99\n")
        with pytest.raises(CorruptHeader):
            read_image(path)


class TestExtractHoles:
    def test_two_block_fixture(self):
        holes = extract_holes(two_block_grid(), tolerance=10, connectivity=4, min_area=4)
        assert len(holes) == 2
        assert (holes[0].centroid.x, holes[0].centroid.y) == (2.0, 4.0)
        assert (holes[1].centroid.x, holes[1].centroid.y) == (6.0, 4.0)
        assert holes[0].mean_intensity == 50.0
        assert holes[1].mean_intensity == 200.0

    def test_constant_image(self):
        g = Grid(5, 4, tuple([9] * 20))
        holes = extract_holes(g, tolerance=0, connectivity=4, min_area=1)
        assert len(holes) == 1
        assert holes[0].area == 20

    def test_checkerboard_all_discarded(self):
        g = Grid(6, 6, tuple(checkerboard(6, 6)))
        holes = extract_holes(g, tolerance=10, connectivity=4, min_area=2)
        assert holes == []

    def test_agrees_with_labeling_oracle(self):
        import random
        rng = random.Random(8)
        width, height = 12, 9
        values = tuple(rng.choice([0, 30, 60, 200]) for _ in range(width * height))
        g = Grid(width, height, values)
        for connectivity in (4, 8):
            holes = extract_holes(g, tolerance=35, connectivity=connectivity, min_area=1)
            comps = oracles.label_components(width, height, values, 35, connectivity)
            got = sorted((frozenset(h.pixels) for h in holes), key=sorted)
            expect = sorted((frozenset(c) for c in comps), key=sorted)
            assert got == expect

    def test_partition(self):
        g = two_block_grid()
        holes = extract_holes(g, tolerance=10, connectivity=4, min_area=1)
        seen = set()
        for h in holes:
            assert not (seen & h.pixels)
            seen |= h.pixels
        assert len(seen) == 64

    def test_eight_connectivity_merges_diagonal(self):
        values = [(0 if r == c else 255) for r in range(4) for c in range(4)]
        g = Grid(4, 4, tuple(values))
        four = extract_holes(g, tolerance=0, connectivity=4, min_area=1)
        eight = extract_holes(g, tolerance=0, connectivity=8, min_area=1)
        assert len([h for h in four if h.mean_intensity == 0.0]) == 4
        assert len([h for h in eight if h.mean_intensity == 0.0]) == 1


class TestPipeline:
    def test_three_blob(self):
        g = blob_image(24, 24, [(2, 2, 4, 80), (2, 18, 4, 160), (18, 9, 4, 240)])
        k, dk, holes = pipeline(g, tolerance=10, connectivity=4, min_area=4)
        assert len(holes) == 3
        assert len(k.triangle_ids()) == 1
        assert validate_cw(k).verdict
        assert set(dk.cache) == set(k.triangle_ids())

    def test_collinear_keypoints_rejected(self):
        from hypercell.errors import CollinearKeypoints
        g = blob_image(26, 8, [(2, 2, 4, 80), (2, 11, 4, 160), (2, 20, 4, 240)])
        with pytest.raises(CollinearKeypoints):
            pipeline(g, tolerance=10, connectivity=4, min_area=4)

    def test_two_holes_rejected(self):
        g = blob_image(16, 8, [(2, 2, 4, 80), (2, 10, 4, 200)])
        with pytest.raises(TooFewKeypoints):
            pipeline(g, tolerance=10, connectivity=4, min_area=4)

    def test_translation_invariance(self):
        blobs = [(2, 2, 4, 80), (2, 18, 4, 160), (18, 9, 4, 240)]
        g0 = blob_image(26, 26, blobs)
        g1 = blob_image(26, 26, [(t + 1, l + 1, s, v) for t, l, s, v in blobs])
        h0 = extract_holes(g0, tolerance=10, connectivity=4, min_area=4)
        h1 = extract_holes(g1, tolerance=10, connectivity=4, min_area=4)
        assert [(h.centroid.x + 1, h.centroid.y + 1) for h in h0] == \
            [(h.centroid.x, h.centroid.y) for h in h1]

    def test_determinism(self):
        g = blob_image(24, 24, [(2, 2, 4, 80), (2, 18, 4, 160), (18, 9, 4, 240)])
        k1, _, holes1 = pipeline(g, tolerance=10, connectivity=4, min_area=4)
        k2, _, holes2 = pipeline(g, tolerance=10, connectivity=4, min_area=4)
        assert k1.to_json() == k2.to_json()
        assert [h.pixels for h in holes1] == [h.pixels for h in holes2]


class TestTriangleSampling:
    def test_two_block_regions(self):
        # two triangles per block; hdnear separates the blocks at eps 10
        g = two_block_grid()
        k = build_complex([(0, 0), (4, 0), (8, 0), (0, 8), (4, 8), (8, 8)],
                          [(0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 5)])
        intensity = sample_triangle_intensity(g, k)
        dk = DescriptiveComplex(k, Probe(("meanIntensity",)), intensity)
        left = cell_region(k, [k.cell_id_of("triangle", (0, 1, 3)),
                               k.cell_id_of("triangle", (1, 3, 4))])
        right = cell_region(k, [k.cell_id_of("triangle", (1, 2, 4)),
                                k.cell_id_of("triangle", (2, 4, 5))])
        assert hdnear([left, right], dk, 10) == Verdict.FAR
        assert hdnear([left, right], dk, 200) == Verdict.NEAR

    def test_empty_triangle_gets_nearest_pixel(self):
        g = Grid(4, 4, tuple(range(16)))
        # a sliver triangle far off the grid catches no pixel centers
        k = build_complex([(100.0, 100.0), (101.0, 100.0), (100.5, 100.2)], [(0, 1, 2)])
        intensity = sample_triangle_intensity(g, k)
        assert intensity[k.triangle_ids()[0]] == 15.0  # bottom-right pixel
