"""Exact stability diagnostics for toric varieties and projective bundles.

Everything is computed in rational arithmetic: lattice point counts of
dilated polytopes, the polynomials they interpolate, the obstruction
vectors those polynomials produce, Kaehler-Einstein verdicts for toric
Fano fans, and closed-form Chow weights of projectivized split bundles
over curves.
"""

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    EnumerationBudgetExceeded,
    FitFailed,
    InconsistentInput,
    InvalidInput,
    NotFano,
    NotFound,
    NotFullDimensional,
    TslabError,
    Unbounded,
    ValidationFailed,
    ZeroChi,
    ZeroSlope,
)
from .polytope import (
    Fan,
    Facet,
    LatticePolytope,
    Measure,
    SymmetryReport,
    apply_unimodular,
    construct,
    dilate,
    dilation_stats,
    dual_polytope,
    is_delzant,
    iter_lattice_points,
    lattice_points,
    measure,
    moment_polytope,
    symmetry_report,
    translate,
)
from .ehrhart import (
    RationalPolynomial,
    VectorPolynomial,
    ehrhart_polynomial,
    newton_interpolate,
    weight_polynomial,
)
from .obstructions import (
    ExpansionPair,
    HilbertWeightReport,
    ObstructionReport,
    chow_level_test,
    chow_weight,
    f_ell,
    hilbert_weight_table,
    ono_vectors,
    toric_expansions,
)
from .hilbert import (
    LaurentSeries,
    ReebDirection,
    SpanComparison,
    bernoulli,
    laurent_functionals,
    level_dimensions,
    power_sum_laurent,
    reeb_direction,
    span_compare,
)
from .fano import (
    FanoReport,
    anticanonical_polytope,
    chow_obstruction_report,
    is_reflexive,
    ke_report,
)
from .projbundle import (
    BundleComponent,
    BundleSpec,
    FEllVerdict,
    bundle_measures,
    chow_weight_bundle,
    f_ell_bundle,
    symmetric_power_chi,
)
from .catalog import CatalogEntry, load_catalog, lookup

__version__ = "0.1.0"

__all__ = [
    "TslabError", "InvalidInput", "NotFullDimensional", "InconsistentInput",
    "Unbounded", "NotFano", "DimensionMismatch", "EnumerationBudgetExceeded",
    "ZeroSlope", "ZeroChi", "DivisionByZero", "FitFailed", "NotFound",
    "ValidationFailed",
    "Facet", "LatticePolytope", "Measure", "SymmetryReport", "Fan",
    "construct", "dilate", "translate", "apply_unimodular",
    "iter_lattice_points", "lattice_points", "dilation_stats", "measure",
    "is_delzant", "symmetry_report", "moment_polytope", "dual_polytope",
    "RationalPolynomial", "VectorPolynomial", "newton_interpolate",
    "ehrhart_polynomial", "weight_polynomial",
    "ExpansionPair", "ObstructionReport", "HilbertWeightReport",
    "ono_vectors", "chow_level_test", "f_ell", "chow_weight",
    "toric_expansions", "hilbert_weight_table",
    "LaurentSeries", "SpanComparison", "ReebDirection", "bernoulli",
    "power_sum_laurent", "level_dimensions", "laurent_functionals",
    "span_compare", "reeb_direction",
    "FanoReport", "anticanonical_polytope", "is_reflexive", "ke_report",
    "chow_obstruction_report",
    "BundleComponent", "BundleSpec", "FEllVerdict", "bundle_measures",
    "symmetric_power_chi", "chow_weight_bundle", "f_ell_bundle",
    "CatalogEntry", "load_catalog", "lookup",
    "__version__",
]
