"""Verdicts for smooth toric Fano manifolds given by their fans.

The anticanonical moment polytope P* = {w : <v_j, w> >= -1 for all rays}
is handled in inward form normal . x + 1 >= 0.  The barycenter of P*
decides Kaehler-Einstein existence outright (Wang-Zhu), while the
discrete counting invariants of the cone over P* supply the asymptotic
Chow obstruction that can survive even when the barycenter vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotFano, Unbounded
from .hilbert import SpanComparison, laurent_functionals, span_compare
from .obstructions import ObstructionReport, ono_vectors
from .polytope import Fan, LatticePolytope, measure, moment_polytope, symmetry_report


def anticanonical_polytope(fan: Fan) -> LatticePolytope:
    """P* of a Fano fan; raises NotFano if the fan cannot be anticanonical."""
    try:
        P_star = moment_polytope(fan)
    except Unbounded as exc:
        raise NotFano("anticanonical polytope is unbounded") from exc
    # every ray must cut an actual facet, and nothing else may appear
    normals = {f.normal for f in P_star.facets}
    offsets = {f.offset for f in P_star.facets}
    if normals != set(fan.rays) or offsets != {1}:
        raise NotFano("fan rays do not match the facet normals at height one")
    return P_star


def is_reflexive(P_star: LatticePolytope) -> bool:
    """Integral with all (reduced) facet offsets equal to one."""
    return P_star.is_integral and all(f.offset == 1 for f in P_star.facets)


@dataclass(frozen=True)
class PolytopeSummary:
    dim: int
    vertex_count: int
    facet_count: int
    volume: Fraction


@dataclass(frozen=True)
class FanoReport:
    polytope_summary: PolytopeSummary
    is_reflexive: bool
    barycenter: tuple[Fraction, ...]
    futaki_vanishes: bool
    is_symmetric: bool
    automorphism_count: int
    ke_verdict: str
    obstruction: ObstructionReport | None = None
    span_check: SpanComparison | None = None
    chow_obstructed: bool | None = None
    ke_but_chow_obstructed: bool | None = None


def ke_report(fan: Fan, budget: int | None = None) -> FanoReport:
    """Barycenter and symmetry verdicts for the Fano manifold of a fan.

    The KE verdict is exact: the metric exists iff the barycenter of P*
    is the origin (Wang-Zhu), which is also the vanishing of the
    classical DF character in this setting.  Symmetry (only the origin
    is fixed by the lattice automorphisms of P*) independently implies
    the KE verdict and is reported for cross-checking.
    """
    P_star = anticanonical_polytope(fan)
    if not is_reflexive(P_star):
        raise NotFano("the moment polytope at height one is not reflexive")
    mes = measure(P_star)
    sym = symmetry_report(P_star)
    vanishes = all(c == 0 for c in mes.barycenter)
    return FanoReport(
        polytope_summary=PolytopeSummary(
            dim=P_star.dim,
            vertex_count=len(P_star.vertices),
            facet_count=len(P_star.facets),
            volume=mes.volume,
        ),
        is_reflexive=True,
        barycenter=mes.barycenter,
        futaki_vanishes=vanishes,
        is_symmetric=sym.is_symmetric,
        automorphism_count=len(sym.automorphisms),
        ke_verdict="KE" if vanishes else "NotKE",
    )


def chow_obstruction_report(fan: Fan, order: int | None = None,
                            budget: int | None = None) -> FanoReport:
    """ke_report plus the full discrete obstruction data of the cone.

    chow_obstructed is True when some counting obstruction vector is
    nonzero; ke_but_chow_obstructed flags the combination this package
    exists to detect.
    """
    base = ke_report(fan, budget)
    P_star = anticanonical_polytope(fan)
    obstruction = ono_vectors(P_star, budget)
    functionals = laurent_functionals(P_star, order, budget)
    span = span_compare(functionals, obstruction.vectors)
    obstructed = obstruction.rank > 0
    return FanoReport(
        polytope_summary=base.polytope_summary,
        is_reflexive=base.is_reflexive,
        barycenter=base.barycenter,
        futaki_vanishes=base.futaki_vanishes,
        is_symmetric=base.is_symmetric,
        automorphism_count=base.automorphism_count,
        ke_verdict=base.ke_verdict,
        obstruction=obstruction,
        span_check=span,
        chow_obstructed=obstructed,
        ke_but_chow_obstructed=base.futaki_vanishes and obstructed,
    )
