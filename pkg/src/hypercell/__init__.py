"""Proximal relator machinery over finite planar cell complexes.

The package builds triangulated complexes, decides Lodato / strong /
descriptive hyperconnectedness between regions, classifies chains and links
with their induced graphs, grows nerve and spoke-ring structures, sews
chains between points, and runs an image-to-centroidal-cycle pipeline.
"""

from .chains import (
    AdjGraph,
    ChainFamily,
    ChainReport,
    MapReport,
    RegionMap,
    adjacency_graph,
    classify,
    family_from_json,
    family_from_json_dict,
    family_to_json_dict,
    glue_to_circle,
    interval_decomposition,
    is_path_graph,
    is_spanning_subgraph,
    verify_region_map,
)
from .complexes import (
    Cell,
    CellRegion,
    Complex,
    CwReport,
    Disk,
    IntervalRegion,
    Point,
    Region,
    build_complex,
    cell_region,
    circle_region,
    closure,
    closures_intersect,
    complex_from_json,
    complex_from_json_dict,
    hausdorff_witness,
    interiors_intersect,
    point_in_closure,
    point_locate,
    segment_region,
    validate_cw,
)
from .imaging import Grid, Hole, extract_holes, pipeline, read_image
from .nerves import (
    CentroidalCycle,
    Nerve,
    SpokeRing,
    VortexResult,
    mcyc,
    mnc,
    mvort,
    nerves,
    skcx,
)
from .relations import (
    Description,
    DescriptiveComplex,
    Probe,
    RelatorVerdict,
    Verdict,
    describe,
    descriptive_holes,
    hdnear,
    hnear,
    hsn,
    probe_from_json_dict,
)
from .render import Layer, RenderSpec, to_svg
from .sewing import DualGraph, SewChain, cycle_through, dual_graph, sew
from .triangulation import PointSet, circumdisk_contains, delaunay

__version__ = "0.1.0"
