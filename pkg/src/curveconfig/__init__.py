"""Exact combinatorial and asymptotic invariants of plane curve configurations."""

from .chern import (
    ChernPair,
    GeneralTypeCondition,
    QuadraticInN,
    ball_quotient_candidates,
    bmy_gap,
    characteristic_number,
    chern_pair,
    slope_at,
    sommese_bounds,
)
from .config import (
    CurveConfiguration,
    MultiplicitySpectrum,
    ValidationReport,
    f_moment,
    lines,
    linear_harbourne,
    validate,
)
from .families import (
    FamilySpectrum,
    asymptotic_harbourne,
    builtin_family,
    dominant_profile,
    instantiate,
    k_chern_slope,
    kn_chern_slope,
)
from .incidence import (
    LineArrangement,
    ProjLine,
    ProjPoint,
    generate_generic,
    generate_regular_polygon_family,
    intersect,
    spectrum_of,
)
from .inequalities import (
    InequalityVerdict,
    gamma_bound,
    hirzebruch_dconfig,
    hirzebruch_lines,
    melchior,
    tang_conics,
)
from .poly import QuasiPolynomial, RationalFunctionInN, qp_from_floor

__version__ = "0.1.0"

__all__ = [
    "ChernPair",
    "CurveConfiguration",
    "FamilySpectrum",
    "GeneralTypeCondition",
    "InequalityVerdict",
    "LineArrangement",
    "MultiplicitySpectrum",
    "ProjLine",
    "ProjPoint",
    "QuadraticInN",
    "QuasiPolynomial",
    "RationalFunctionInN",
    "ValidationReport",
    "asymptotic_harbourne",
    "ball_quotient_candidates",
    "bmy_gap",
    "builtin_family",
    "characteristic_number",
    "chern_pair",
    "dominant_profile",
    "f_moment",
    "gamma_bound",
    "generate_generic",
    "generate_regular_polygon_family",
    "hirzebruch_dconfig",
    "hirzebruch_lines",
    "instantiate",
    "intersect",
    "k_chern_slope",
    "kn_chern_slope",
    "lines",
    "linear_harbourne",
    "melchior",
    "qp_from_floor",
    "slope_at",
    "sommese_bounds",
    "spectrum_of",
    "tang_conics",
    "validate",
]
