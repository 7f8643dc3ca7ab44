"""Geometry of the graph exteriors M_g: triangulation, volume, canonicity and fillings."""

from .cusp import (
    MERIDIAN,
    CuspTorus,
    FillingCertificate,
    Slope,
    build_cusp_torus,
    certify_filling,
    cusp_area,
    edge_slope_length,
    exhaustive_slope_audit,
    slope_length,
)
from .errors import (
    ConstructionError,
    ConvergenceError,
    DevelopingError,
    DomainError,
    GexError,
    InvariantViolation,
)
from .geometry import (
    AngleData,
    angles,
    check_consistency,
    check_Rprime_inequality,
    realize_half_space,
)
from .kernels import BACKEND
from .tilts import certify_canonical, check_tilt_identities, compute_tilts
from .triangulation import (
    automorphism_group,
    build_double_cone,
    build_triangulation,
    check_dihedral,
    classify_vertex_links,
    edge_classes,
    subdivide,
)
from .volume import VolumeResult, tet_volume, volume_of_Mg

__version__ = "0.1.0"

__all__ = [
    "AngleData", "BACKEND", "ConstructionError", "ConvergenceError", "CuspTorus", "DevelopingError",
    "DomainError", "FillingCertificate", "GexError", "InvariantViolation", "MERIDIAN", "Slope",
    "VolumeResult", "angles", "automorphism_group", "build_cusp_torus", "build_double_cone",
    "build_triangulation", "certify_canonical", "certify_filling", "check_Rprime_inequality",
    "check_consistency", "check_dihedral", "check_tilt_identities", "classify_vertex_links",
    "compute_tilts", "cusp_area", "edge_classes", "edge_slope_length", "exhaustive_slope_audit",
    "realize_half_space", "slope_length", "subdivide", "tet_volume", "volume_of_Mg",
]
