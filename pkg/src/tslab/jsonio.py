"""JSON ingestion and canonical report serialization.

Canonical form: objects are rendered with sorted keys and two-space
indentation; rational-typed values are always "num/den" strings with a
positive, gcd-reduced denominator; integer-typed values are JSON numbers
inside the 53-bit float-exact window and decimal strings outside it.
Re-serializing a parsed report is therefore byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction

from .ehrhart import RationalPolynomial, VectorPolynomial
from .errors import InvalidInput
from .fano import FanoReport
from .hilbert import LaurentSeries, ReebDirection, SpanComparison
from .obstructions import ExpansionPair, HilbertWeightReport, ObstructionReport
from .polytope import Fan, LatticePolytope, construct
from .projbundle import BundleComponent, BundleMeasures, BundleSpec, FEllVerdict

INT_SAFE_BOUND = 2 ** 53

_INT_RE = re.compile(r"^[+-]?\d+$")
_RAT_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


# ---------------------------------------------------------------------------
# scalar parsing


def parse_int(value, what: str = "integer") -> int:
    if isinstance(value, bool):
        raise InvalidInput(f"{what}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _INT_RE.match(value):
        return int(value)
    raise InvalidInput(f"{what}: expected an integer or decimal string, got {value!r}")


def parse_rational(value, what: str = "rational") -> Fraction:
    if isinstance(value, bool):
        raise InvalidInput(f"{what}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RAT_RE.match(value):
        num, _, den = value.partition("/")
        if den:
            if int(den) == 0:
                raise InvalidInput(f"{what}: zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    raise InvalidInput(
        f"{what}: expected an integer or 'num/den' string, got {value!r}")


def _require(data: dict, key: str, context: str):
    if not isinstance(data, dict):
        raise InvalidInput(f"{context}: expected a JSON object")
    if key not in data:
        raise InvalidInput(f"{context}: missing required key {key!r}")
    return data[key]


def _vector(value, dim: int, what: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list) or len(value) != dim:
        raise InvalidInput(f"{what}: expected a list of {dim} rationals")
    return tuple(parse_rational(x, what) for x in value)


# ---------------------------------------------------------------------------
# input object parsing


def parse_polytope(data) -> LatticePolytope:
    dim = parse_int(_require(data, "dim", "polytope"), "polytope dim")
    has_v = "vertices" in data
    has_i = "inequalities" in data
    if has_v == has_i:
        raise InvalidInput(
            "polytope: provide exactly one of 'vertices' or 'inequalities'")
    if has_v:
        verts = data["vertices"]
        if not isinstance(verts, list) or not verts:
            raise InvalidInput("polytope: 'vertices' must be a nonempty list")
        points = [_vector(v, dim, "polytope vertex") for v in verts]
        return construct(vertices=points, dim=dim)
    ineqs = data["inequalities"]
    if not isinstance(ineqs, list) or not ineqs:
        raise InvalidInput("polytope: 'inequalities' must be a nonempty list")
    facets = []
    for item in ineqs:
        normal = _vector(_require(item, "normal", "inequality"), dim,
                         "inequality normal")
        offset = parse_rational(_require(item, "offset", "inequality"),
                                "inequality offset")
        facets.append((normal, offset))
    return construct(facets=facets, dim=dim)


def parse_fan(data) -> Fan:
    dim = parse_int(_require(data, "dim", "fan"), "fan dim")
    rays = _require(data, "rays", "fan")
    cones = _require(data, "max_cones", "fan")
    if not isinstance(rays, list) or not isinstance(cones, list):
        raise InvalidInput("fan: 'rays' and 'max_cones' must be lists")
    parsed_rays = []
    for r in rays:
        if not isinstance(r, list) or len(r) != dim:
            raise InvalidInput(f"fan ray {r!r}: expected a list of {dim} integers")
        parsed_rays.append(tuple(parse_int(x, "fan ray entry") for x in r))
    parsed_cones = []
    for c in cones:
        if not isinstance(c, list):
            raise InvalidInput(f"fan cone {c!r}: expected a list of ray indices")
        parsed_cones.append(tuple(parse_int(i, "fan cone index") for i in c))
    return Fan(dim=dim, rays=tuple(parsed_rays), max_cones=tuple(parsed_cones))


def parse_bundle(data) -> BundleSpec:
    genus = parse_int(_require(data, "genus", "bundle"), "bundle genus")
    twist = parse_int(_require(data, "twist_r", "bundle"), "bundle twist_r")
    deg_b = parse_int(_require(data, "deg_B", "bundle"), "bundle deg_B")
    comps = _require(data, "components", "bundle")
    if not isinstance(comps, list) or not comps:
        raise InvalidInput("bundle: 'components' must be a nonempty list")
    parsed = []
    for item in comps:
        parsed.append(BundleComponent(
            rank=parse_int(_require(item, "rank", "component"), "component rank"),
            degree=parse_int(_require(item, "degree", "component"),
                             "component degree"),
            weight=parse_rational(_require(item, "weight", "component"),
                                  "component weight"),
        ))
    return BundleSpec(genus=genus, twist=twist, base_degree=deg_b,
                      components=tuple(parsed))


def input_kind(data) -> str:
    """Classify an input object by its keys: fan, polytope, or bundle."""
    if not isinstance(data, dict):
        raise InvalidInput("input: expected a JSON object at the top level")
    if "rays" in data or "max_cones" in data:
        return "fan"
    if "vertices" in data or "inequalities" in data:
        return "polytope"
    if "components" in data:
        return "bundle"
    raise InvalidInput(
        "input: cannot classify; expected fan keys ('rays', 'max_cones'), "
        "polytope keys ('vertices' or 'inequalities'), or bundle keys "
        "('components', ...)")


# ---------------------------------------------------------------------------
# rendering


def render_int(n: int):
    return n if -INT_SAFE_BOUND < n < INT_SAFE_BOUND else str(n)


def render_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def render_vector(v) -> list:
    return [render_rational(x) for x in v]


def encode_polynomial(p: RationalPolynomial) -> dict:
    return {"coeffs": render_vector(p.coeffs)}


def encode_vector_polynomial(s: VectorPolynomial) -> dict:
    return {"components": [encode_polynomial(c) for c in s.components]}


def encode_laurent_series(ls: LaurentSeries) -> dict:
    return {"min_exp": render_int(ls.min_exp), "coeffs": render_vector(ls.coeffs)}


def encode_obstruction_report(rep: ObstructionReport) -> dict:
    return {
        "vectors": [render_vector(v) for v in rep.vectors],
        "all_zero": rep.all_zero,
        "rank": render_int(rep.rank),
        "pairwise_proportional": rep.pairwise_proportional,
        "verdict": rep.verdict,
    }


def encode_span(span: SpanComparison) -> dict:
    return {
        "equal": span.equal,
        "rank_a": render_int(span.rank_a),
        "rank_b": render_int(span.rank_b),
        "rank_union": render_int(span.rank_union),
    }


def encode_fano_report(rep: FanoReport) -> dict:
    out = {
        "polytope_summary": {
            "dim": render_int(rep.polytope_summary.dim),
            "vertex_count": render_int(rep.polytope_summary.vertex_count),
            "facet_count": render_int(rep.polytope_summary.facet_count),
            "volume": render_rational(rep.polytope_summary.volume),
        },
        "is_reflexive": rep.is_reflexive,
        "barycenter": render_vector(rep.barycenter),
        "futaki_vanishes": rep.futaki_vanishes,
        "is_symmetric": rep.is_symmetric,
        "automorphism_count": render_int(rep.automorphism_count),
        "ke_verdict": rep.ke_verdict,
    }
    if rep.obstruction is not None:
        out["obstruction"] = encode_obstruction_report(rep.obstruction)
    if rep.span_check is not None:
        out["span_check"] = encode_span(rep.span_check)
    if rep.chow_obstructed is not None:
        out["chow_obstructed"] = rep.chow_obstructed
    if rep.ke_but_chow_obstructed is not None:
        out["ke_but_chow_obstructed"] = rep.ke_but_chow_obstructed
    return out


def encode_expansion_pair(e: ExpansionPair) -> dict:
    return {"a": render_vector(e.a), "b": render_vector(e.b),
            "dim": render_int(e.dim)}


def encode_hilbert_weight_report(rep: HilbertWeightReport) -> dict:
    return {
        "coefficients": [render_vector(row) for row in rep.coefficients],
        "sign_top": render_int(rep.sign_top),
        "sign_f1": render_int(rep.sign_f1),
        "signs_agree": rep.signs_agree,
    }


def encode_bundle_measures(mes: BundleMeasures) -> dict:
    return {
        "slope": render_rational(mes.slope),
        "component_slopes": render_vector(mes.component_slopes),
        "weight_sum": render_rational(mes.weight_sum),
        "chi_det_twist": render_rational(mes.chi_det_twist),
        "twisted_slope": render_rational(mes.twisted_slope),
    }


def encode_f_ell(verdict: FEllVerdict) -> dict:
    return {
        "value": render_rational(verdict.value),
        "vanishes": verdict.vanishes,
        "sign": render_int(verdict.sign),
        "polystable_slopes": verdict.polystable_slopes,
        "caveats": list(verdict.caveats),
    }


def encode_reeb(direction: ReebDirection) -> dict:
    return {"vector": render_vector(direction.vector),
            "in_reeb_cone": direction.in_reeb_cone}


def encode_polytope(P: LatticePolytope) -> dict:
    return {
        "dim": render_int(P.dim),
        "vertices": [render_vector(v) for v in P.vertices],
        "facets": [{"normal": [render_int(n) for n in f.normal],
                    "offset": render_int(f.offset)} for f in P.facets],
        "is_integral": P.is_integral,
    }


# ---------------------------------------------------------------------------
# canonical output


def canonical_json(obj) -> str:
    """Deterministic rendering; loading and re-rendering is the identity."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def input_digest(data) -> str:
    """sha256 of the canonical rendering of a (parsed) input JSON object."""
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()
