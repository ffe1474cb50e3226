"""Exact Lie-theoretic machinery behind the classification of homogeneous
maximal totally complex submanifolds of quaternionic projective space."""

from .roots import GroupSpec, RootSystem, SimpleLieType, build_root_system, dim_g
from .reps import (
    FS_COMPLEX,
    FS_QUATERNIONIC,
    FS_REAL,
    RepExpr,
    dual_weight,
    freudenthal_multiplicities,
    fs_combine,
    fs_type,
    weight_set,
    weyl_dim,
)
from .classify import (
    CandidateVerdict,
    OrbitReport,
    ReducibleSpec,
    classify_reducible,
    complex_orbit_dim,
    enumerate_case1,
    enumerate_case2,
    isotropy_levi,
    mtc_report,
    normal_holonomy,
)
from .catalog import load_catalog, verify_catalog
from .parsing import ParseError, parse_group, parse_rep

__version__ = "0.1.0"

__all__ = [
    "GroupSpec",
    "RootSystem",
    "SimpleLieType",
    "build_root_system",
    "dim_g",
    "FS_COMPLEX",
    "FS_QUATERNIONIC",
    "FS_REAL",
    "RepExpr",
    "dual_weight",
    "freudenthal_multiplicities",
    "fs_combine",
    "fs_type",
    "weight_set",
    "weyl_dim",
    "CandidateVerdict",
    "OrbitReport",
    "ReducibleSpec",
    "classify_reducible",
    "complex_orbit_dim",
    "enumerate_case1",
    "enumerate_case2",
    "isotropy_levi",
    "mtc_report",
    "normal_holonomy",
    "load_catalog",
    "verify_catalog",
    "ParseError",
    "parse_group",
    "parse_rep",
]
