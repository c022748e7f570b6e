"""Multi-scale topology of 2D point clouds.

Grow a disc around every dot and watch the picture change: pieces merge,
holes open and fill.  This package builds the growing-disc filtration of a
point cloud (nerve of the disc union, or its all-edges approximation),
computes how long every piece and hole persists, reports signatures and
Betti tables at any scale, and groups objects that share a signature.  A
rasterization oracle counts the same quantities by flood fill on the drawn
discs, independently of all of the above.
"""
from .analysis import (
    SHAPES,
    BettiProfile,
    LabeledSignature,
    SignatureGroup,
    auto_profile,
    default_radii,
    generate,
    group_by_signature,
    most_persistent,
    profile,
    signature_at,
)
from .filtration import (
    FilteredSimplex,
    Filtration,
    Simplex,
    build_cech,
    build_rips,
    critical_radii,
    default_r_max,
)
from .geometry import Point2, PointCloud, dedupe, distance, min_enclosing_radius
from .io import ParseError, read_points_csv
from .oracle import Bitmap, oracle_signature, rasterize, write_pbm
from .persistence import (
    Barcode,
    BoundaryMatrix,
    PersistencePair,
    StructureError,
    TopologySignature,
    beta2_at,
    betti_at,
    betti_table,
    compute_persistence,
    connected_persistence,
)

__version__ = "0.1.0"

__all__ = [
    "Barcode",
    "BettiProfile",
    "Bitmap",
    "BoundaryMatrix",
    "FilteredSimplex",
    "Filtration",
    "LabeledSignature",
    "ParseError",
    "PersistencePair",
    "Point2",
    "PointCloud",
    "SHAPES",
    "SignatureGroup",
    "Simplex",
    "StructureError",
    "TopologySignature",
    "auto_profile",
    "beta2_at",
    "betti_at",
    "betti_table",
    "build_cech",
    "build_rips",
    "compute_persistence",
    "connected_persistence",
    "critical_radii",
    "dedupe",
    "default_r_max",
    "default_radii",
    "distance",
    "generate",
    "group_by_signature",
    "min_enclosing_radius",
    "most_persistent",
    "oracle_signature",
    "profile",
    "rasterize",
    "read_points_csv",
    "signature_at",
    "write_pbm",
    "__version__",
]
