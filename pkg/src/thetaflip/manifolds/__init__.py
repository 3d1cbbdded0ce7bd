from .census import SpineCensus, SweptCell, flat_description, spine_census
from .homology import HomologyReport, first_homology
from .lens_spaces import (
    LensReport,
    TwistResult,
    gluing_matrix,
    lens_homeomorphic,
    lens_normalize,
    lens_report,
    lens_twist_distance,
    lens_twist_distance_window,
    lens_twist_pair,
)
from .torus_bundles import (
    TorusBundleReport,
    bundle_homeo_key,
    bundles_homeomorphic,
    conjectured_bundle_complexity,
    torus_bundle_report,
)

__all__ = [
    "HomologyReport",
    "LensReport",
    "SpineCensus",
    "SweptCell",
    "TorusBundleReport",
    "TwistResult",
    "bundle_homeo_key",
    "bundles_homeomorphic",
    "conjectured_bundle_complexity",
    "first_homology",
    "flat_description",
    "gluing_matrix",
    "lens_homeomorphic",
    "lens_normalize",
    "lens_report",
    "lens_twist_distance",
    "lens_twist_distance_window",
    "lens_twist_pair",
    "spine_census",
    "torus_bundle_report",
]
