"""Exact lattice polytope geometry over the rationals.

A polytope carries both descriptions at once: rational vertices and
integer facet inequalities ``normal . x + offset >= 0``.  Facet data is
jointly gcd-reduced so rational-vertex polytopes (polar duals, say) fit
the same representation.  Every operation is a pure function on
immutable values; caches fill idempotently and floating point never
enters.

Conventions
-----------
* Inward orientation: a point ``x`` lies in the polytope iff every
  facet satisfies ``normal . x + offset >= 0``.
* ``dilate(P, 0)`` is the single point at the origin.  That degenerate
  value exists only to make lattice enumeration of the 0-th dilation
  well defined (one point, zero coordinate sum); metric and
  interpolation routines reject it.
* Lattice point scans run over the bounding box with per-level interval
  tightening and are capped by a work budget, default 5*10**7 units,
  overridable by the TSL_BUDGET environment variable or per call.
  Exceeding the cap raises, it never silently approximates.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import (
    EnumerationBudgetExceeded,
    InconsistentInput,
    InvalidInput,
    NotFullDimensional,
    Unbounded,
)

Vector = tuple[Fraction, ...]
LatticePoint = tuple[int, ...]

DEFAULT_ENUMERATION_BUDGET = 50_000_000
BUDGET_ENV_VAR = "TSL_BUDGET"


def enumeration_budget(override: int | None = None) -> int:
    """Resolve the work cap: explicit argument, then env var, then default."""
    if override is not None:
        if override <= 0:
            raise InvalidInput("budget must be positive")
        return int(override)
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise InvalidInput(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}")
        if value <= 0:
            raise InvalidInput(f"{BUDGET_ENV_VAR} must be positive")
        return value
    return DEFAULT_ENUMERATION_BUDGET


@dataclass(frozen=True)
class Facet:
    """One inequality ``normal . x + offset >= 0`` with integer data."""

    normal: tuple[int, ...]
    offset: int

    def eval(self, point):
        return sum(n * x for n, x in zip(self.normal, point)) + self.offset


def _reduced_facet(normal, offset) -> Facet:
    # joint gcd reduction: (2,2).x + 2 >= 0 and (1,1).x + 1 >= 0 are one facet
    ints = list(normal) + [offset]
    g = linalg.content(ints)
    if g > 1:
        ints = [x // g for x in ints]
    return Facet(tuple(ints[:-1]), ints[-1])


def _facet_from_rational(normal, offset) -> Facet:
    ints, _ = linalg.clear_denominators(list(normal) + [offset])
    return _reduced_facet(ints[:-1], ints[-1])


@dataclass(frozen=True)
class Measure:
    """Euclidean volume, moment (integral of x) and barycenter."""

    volume: Fraction
    moment: Vector
    barycenter: Vector


@dataclass(frozen=True)
class SymmetryReport:
    """Lattice-linear automorphisms of a polytope and their fixed space."""

    automorphisms: tuple[tuple[tuple[int, ...], ...], ...]
    fixed_space_dim: int
    is_symmetric: bool


@dataclass(frozen=True)
class LatticePolytope:
    dim: int
    vertices: tuple[Vector, ...]
    facets: tuple[Facet, ...]
    is_integral: bool
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    def contains(self, point) -> bool:
        return all(f.eval(point) >= 0 for f in self.facets)


def _as_fraction_points(points, dim):
    out = []
    for p in points:
        q = tuple(Fraction(x) for x in p)
        if len(q) != dim:
            raise InvalidInput(f"point {p!r} does not have dimension {dim}")
        out.append(q)
    return out


def _finish(dim, vertices, facets) -> LatticePolytope:
    vertices = tuple(sorted(set(vertices)))
    facets = tuple(sorted(set(facets), key=lambda f: (f.normal, f.offset)))
    integral = all(x.denominator == 1 for v in vertices for x in v)
    return LatticePolytope(dim, vertices, facets, integral)


def _hull_facets(points, dim):
    """All supporting facet hyperplanes of conv(points), inward oriented.

    Exhaustive over dim-subsets, hence exact; meant for small vertex
    sets (catalog data, fan rays), not bulk point clouds.
    """
    hyperplanes = {}
    for comb in combinations(range(len(points)), dim):
        rows = [tuple(points[i]) + (Fraction(1),) for i in comb]
        hp = linalg.nullspace_vector(rows, dim + 1)
        if hp is None:
            continue
        ints, _ = linalg.clear_denominators(hp)
        normal, offset = ints[:-1], ints[-1]
        pos = neg = False
        for p in points:
            v = sum(n * x for n, x in zip(normal, p)) + offset
            if v > 0:
                pos = True
            elif v < 0:
                neg = True
            if pos and neg:
                break
        if pos and neg:
            continue
        if neg:
            normal = tuple(-n for n in normal)
            offset = -offset
        f = _reduced_facet(normal, offset)
        hyperplanes[(f.normal, f.offset)] = f
    return sorted(hyperplanes.values(), key=lambda f: (f.normal, f.offset))


def _vertices_from_facets(facets, dim):
    found = set()
    for comb in combinations(facets, dim):
        A = [f.normal for f in comb]
        b = [-f.offset for f in comb]
        x = linalg.solve(A, b)
        if x is None:
            continue
        if all(f.eval(x) >= 0 for f in facets):
            found.add(tuple(x))
    return sorted(found)


def _from_vertices(points, dim) -> LatticePolytope:
    pts = sorted(set(_as_fraction_points(points, dim)))
    if linalg.affine_rank(pts) < dim:
        raise NotFullDimensional(
            f"affine hull of the vertex set has dimension below {dim}")
    facets = _hull_facets(pts, dim)
    extreme = []
    for p in pts:
        active = [f.normal for f in facets if f.eval(p) == 0]
        if linalg.rank(active) == dim:
            extreme.append(p)
    # round-trip cross-check, skipped only when combinatorially huge
    if math.comb(len(facets), dim) <= 200_000:
        rederived = _vertices_from_facets(facets, dim)
        if rederived != extreme:
            raise InconsistentInput(
                "vertex and inequality descriptions disagree after round-trip")
    return _finish(dim, extreme, facets)


def _from_facets(raw_facets, dim) -> LatticePolytope:
    facets = []
    for f in raw_facets:
        if isinstance(f, Facet):
            f = _reduced_facet(f.normal, f.offset)
        else:
            normal, offset = f
            f = _facet_from_rational(normal, offset)
        if len(f.normal) != dim:
            raise InvalidInput(f"facet normal {f.normal!r} does not have dimension {dim}")
        if not any(f.normal):
            if f.offset < 0:
                raise InconsistentInput("inequality 0.x + c >= 0 with c < 0 is infeasible")
            continue
        facets.append(f)
    facets = sorted(set(facets), key=lambda f: (f.normal, f.offset))
    if not facets:
        raise Unbounded("no nontrivial inequalities")
    normals = [tuple(Fraction(n) for n in f.normal) for f in facets]
    # bounded iff the normals positively span: 0 strictly inside conv(normals)
    if linalg.affine_rank(normals) < dim:
        raise Unbounded("facet normals do not span the space")
    for g in _hull_facets(normals, dim):
        if g.offset <= 0:
            raise Unbounded("facet normals do not positively span the space")
    vertices = _vertices_from_facets(facets, dim)
    if not vertices:
        raise InconsistentInput("inequality system has no basic feasible point")
    if linalg.affine_rank(vertices) < dim:
        raise NotFullDimensional(
            f"solution set of the inequalities has dimension below {dim}")
    kept = []
    for f in facets:
        active = [v for v in vertices if f.eval(v) == 0]
        if linalg.affine_rank(active) == dim - 1:
            kept.append(f)
    return _finish(dim, vertices, kept)


def construct(vertices=None, facets=None, dim: int | None = None) -> LatticePolytope:
    """Build a polytope from one description, deriving the other exactly.

    Exactly one of ``vertices`` (points spanning the hull; interior
    points are dropped) or ``facets`` (pairs ``(normal, offset)`` or
    Facet values; redundant inequalities are dropped) must be given.
    """
    if (vertices is None) == (facets is None):
        raise InvalidInput("give exactly one of vertices or facets")
    if vertices is not None:
        seq = list(vertices)
        if not seq:
            raise InvalidInput("empty vertex list")
        if dim is None:
            dim = len(seq[0])
        return _from_vertices(seq, dim)
    seq = list(facets)
    if not seq:
        raise Unbounded("empty inequality list")
    if dim is None:
        first = seq[0]
        dim = len(first.normal) if isinstance(first, Facet) else len(first[0])
    return _from_facets(seq, dim)


def _point_polytope(dim: int) -> LatticePolytope:
    origin = (Fraction(0),) * dim
    facets = []
    for i in range(dim):
        e = tuple(1 if j == i else 0 for j in range(dim))
        facets.append(Facet(e, 0))
        facets.append(Facet(tuple(-x for x in e), 0))
    return LatticePolytope(dim, (origin,), tuple(facets), True)


def dilate(P: LatticePolytope, k: int) -> LatticePolytope:
    """The dilation kP; k = 0 gives the single point at the origin."""
    if k < 0:
        raise InvalidInput("dilation factor must be a nonnegative integer")
    if k == 0:
        return _point_polytope(P.dim)
    if k == 1:
        return P
    vertices = [tuple(k * x for x in v) for v in P.vertices]
    facets = [_reduced_facet(f.normal, k * f.offset) for f in P.facets]
    return _finish(P.dim, vertices, facets)


def translate(P: LatticePolytope, u) -> LatticePolytope:
    """Translate by an integer vector (facet normals are unchanged)."""
    shift = []
    for x in u:
        if Fraction(x).denominator != 1:
            raise InvalidInput("translation vector must be integral")
        shift.append(int(x))
    u = tuple(shift)
    if len(u) != P.dim:
        raise InvalidInput("translation vector has the wrong dimension")
    vertices = [tuple(x + du for x, du in zip(v, u)) for v in P.vertices]
    facets = [Facet(f.normal, f.offset - linalg.dot(f.normal, u)) for f in P.facets]
    return _finish(P.dim, vertices, facets)


def apply_unimodular(P: LatticePolytope, U) -> LatticePolytope:
    """Image under an integer matrix with determinant +-1."""
    U = tuple(tuple(int(x) for x in row) for row in U)
    if abs(linalg.det(U)) != 1:
        raise InvalidInput("matrix is not unimodular")
    Uinv = linalg.invert(U)
    vertices = [linalg.mat_vec(U, v) for v in P.vertices]
    facets = []
    for f in P.facets:
        # x = U^{-1} y turns n.x + c >= 0 into (n U^{-1}).y + c >= 0
        normal = tuple(linalg.dot(f.normal, col) for col in zip(*Uinv))
        facets.append(_facet_from_rational(normal, f.offset))
    return _finish(P.dim, vertices, facets)


# ---------------------------------------------------------------------------
# lattice point enumeration


def _box_bounds(P):
    lo, hi = [], []
    for i in range(P.dim):
        coords = [v[i] for v in P.vertices]
        lo.append(math.ceil(min(coords)))
        hi.append(math.floor(max(coords)))
    return lo, hi


def _scan(P, budget, collect, charge_state=None):
    """Depth-first box scan with per-level interval tightening.

    When ``collect`` is None the innermost level is aggregated in closed
    form and (count, coordinate sums) is returned; otherwise every point
    is appended to ``collect`` in lexicographic order.  Work units are
    partial assignments visited plus points emitted.
    """
    m = P.dim
    lo, hi = _box_bounds(P)
    if any(l > h for l, h in zip(lo, hi)):
        return 0, (0,) * m
    normals = [tuple(int(n) for n in f.normal) for f in P.facets]
    offsets = [int(f.offset) for f in P.facets]
    F = len(normals)
    # rest[f][t]: optimistic max of sum_{i >= t} n_i x_i over the box
    rest = [[0] * (m + 1) for _ in range(F)]
    for fi in range(F):
        acc = 0
        n = normals[fi]
        for i in range(m - 1, -1, -1):
            a, b = n[i] * lo[i], n[i] * hi[i]
            acc += a if a > b else b
            rest[fi][i] = acc
    used = charge_state if charge_state is not None else [0]
    count = 0
    sums = [0] * m
    point = [0] * m
    partial = list(offsets)

    def tighten(t):
        lb, ub = lo[t], hi[t]
        for fi in range(F):
            nt = normals[fi][t]
            r = partial[fi] + rest[fi][t + 1]
            if nt > 0:
                b = -(r // nt)
                if b > lb:
                    lb = b
            elif nt < 0:
                b = r // (-nt)
                if b < ub:
                    ub = b
            elif r < 0:
                return 1, 0
        return lb, ub

    def rec(t):
        nonlocal count
        lb, ub = tighten(t)
        if lb > ub:
            return
        if t == m - 1 and collect is None:
            width = ub - lb + 1
            used[0] += width
            if used[0] > budget:
                raise EnumerationBudgetExceeded(
                    f"lattice point scan exceeded budget of {budget} work units")
            count += width
            sums[t] += (lb + ub) * width // 2
            for i in range(t):
                sums[i] += point[i] * width
            return
        n_t = [normals[fi][t] for fi in range(F)]
        for fi in range(F):
            partial[fi] += n_t[fi] * lb
        for x in range(lb, ub + 1):
            used[0] += 1
            if used[0] > budget:
                raise EnumerationBudgetExceeded(
                    f"lattice point scan exceeded budget of {budget} work units")
            point[t] = x
            if t == m - 1:
                collect.append(tuple(point))
            else:
                rec(t + 1)
            if x < ub:
                for fi in range(F):
                    partial[fi] += n_t[fi]
        for fi in range(F):
            partial[fi] -= n_t[fi] * ub

    rec(0)
    return count, tuple(sums)


def iter_lattice_points(P: LatticePolytope, budget: int | None = None):
    """Yield the lattice points of P in lexicographic order."""
    return iter(lattice_points(P, budget))


def lattice_points(P: LatticePolytope, budget: int | None = None) -> list[LatticePoint]:
    """All integer points of P, lexicographically sorted, exactly."""
    cap = enumeration_budget(budget)
    out: list[LatticePoint] = []
    _scan(P, cap, out)
    return out


def dilation_stats(P: LatticePolytope, k: int, budget: int | None = None):
    """(number of lattice points, coordinate sum vector) of kP, cached on P."""
    key = ("stats", k)
    hit = P._cache.get(key)
    if hit is not None:
        return hit
    cap = enumeration_budget(budget)
    result = _scan(dilate(P, k), cap, None)
    P._cache[key] = result
    return result


# ---------------------------------------------------------------------------
# metric data


def _require_full_dim(P):
    if len(P.vertices) <= P.dim or linalg.affine_rank(P.vertices) < P.dim:
        raise NotFullDimensional("operation needs a full-dimensional polytope")


def _triangulate(P):
    """Fan triangulation: anchor vertex joined to a triangulated boundary.

    Faces are intersections of facet incidence sets; each face is
    triangulated once (memoized) from its lexicographically least
    vertex, which makes the decomposition deterministic.
    """
    verts = P.vertices
    inc = [frozenset(i for i, v in enumerate(verts) if f.eval(v) == 0)
           for f in P.facets]
    rank_memo: dict[frozenset, int] = {}

    def afr(idxs):
        r = rank_memo.get(idxs)
        if r is None:
            r = linalg.affine_rank([verts[i] for i in idxs])
            rank_memo[idxs] = r
        return r

    tri_memo: dict[frozenset, list] = {}

    def tri(face, d):
        got = tri_memo.get(face)
        if got is not None:
            return got
        if len(face) == d + 1:
            result = [tuple(sorted(face))]
        else:
            anchor = min(face, key=lambda i: verts[i])
            result = []
            seen = set()
            for fi in range(len(inc)):
                sub = face & inc[fi]
                if anchor in sub or sub == face or sub in seen:
                    continue
                seen.add(sub)
                if len(sub) < d or afr(sub) != d - 1:
                    continue
                for s in tri(sub, d - 1):
                    result.append((anchor,) + s)
        tri_memo[face] = result
        return result

    return tri(frozenset(range(len(verts))), P.dim)


def measure(P: LatticePolytope) -> Measure:
    """Exact volume and moment via the fan triangulation from a vertex."""
    cached = P._cache.get("measure")
    if cached is not None:
        return cached
    _require_full_dim(P)
    m = P.dim
    fact = math.factorial(m)
    vol = Fraction(0)
    mom = [Fraction(0)] * m
    for simplex in _triangulate(P):
        base = P.vertices[simplex[0]]
        rows = [linalg.vsub(P.vertices[i], base) for i in simplex[1:]]
        svol = abs(linalg.det(rows)) / fact
        if svol == 0:
            continue
        vol += svol
        for i in range(m):
            centroid_i = sum(P.vertices[j][i] for j in simplex) / (m + 1)
            mom[i] += svol * centroid_i
    if vol == 0:
        raise NotFullDimensional("degenerate triangulation")
    result = Measure(vol, tuple(mom), tuple(c / vol for c in mom))
    P._cache["measure"] = result
    return result


# ---------------------------------------------------------------------------
# smoothness and symmetry


def is_delzant(P: LatticePolytope) -> bool:
    """True iff all vertices are integral, simple and unimodular."""
    cached = P._cache.get("delzant")
    if cached is not None:
        return cached
    result = _is_delzant(P)
    P._cache["delzant"] = result
    return result


def _is_delzant(P):
    if not P.is_integral or P.is_point:
        return False
    m = P.dim
    for v in P.vertices:
        active = [f.normal for f in P.facets if f.eval(v) == 0]
        if len(active) != m:
            return False
        directions = []
        for drop in range(m):
            kept = [active[i] for i in range(m) if i != drop]
            d = linalg.nullspace_vector(kept, m) if kept else None
            if m == 1:
                d = (Fraction(1),)
            if d is None:
                return False
            ints, _ = linalg.clear_denominators(d)
            prim = linalg.primitive(ints)
            # orient into the polytope: positive against the dropped facet
            s = linalg.dot(active[drop], prim)
            if s == 0:
                return False
            if s < 0:
                prim = tuple(-x for x in prim)
            directions.append(prim)
        if abs(linalg.det(directions)) != 1:
            return False
    return True


def symmetry_report(P: LatticePolytope) -> SymmetryReport:
    """All unimodular linear maps with U(P) = P, plus their common fixed space.

    The search assigns images to a linearly independent vertex frame,
    pruned by facet-offset incidence signatures of vertices and vertex
    pairs; the polytope must be positioned so the symmetries of interest
    are linear (a reflexive polytope already is).
    """
    cached = P._cache.get("symmetry")
    if cached is not None:
        return cached
    verts = P.vertices
    n, m = len(verts), P.dim
    inc = [frozenset(i for i, v in enumerate(verts) if f.eval(v) == 0)
           for f in P.facets]
    vfac = [frozenset(fi for fi in range(len(inc)) if i in inc[fi]) for i in range(n)]
    fsig = [(P.facets[fi].offset, len(inc[fi])) for fi in range(len(inc))]
    vsig = [tuple(sorted(fsig[fi] for fi in vfac[i])) for i in range(n)]

    def psig(i, j):
        return tuple(sorted(fsig[fi] for fi in vfac[i] & vfac[j]))

    class_size = {}
    for s in vsig:
        class_size[s] = class_size.get(s, 0) + 1
    order = sorted(range(n), key=lambda i: (class_size[vsig[i]], i))
    base: list[int] = []
    for i in order:
        if linalg.rank([verts[b] for b in base] + [verts[i]]) > len(base):
            base.append(i)
        if len(base) == m:
            break
    if len(base) < m:
        raise NotFullDimensional("vertices do not span the space linearly")
    Bcols = tuple(tuple(verts[b][i] for b in base) for i in range(m))
    Binv = linalg.invert(Bcols)
    if Binv is None:
        raise NotFullDimensional("vertex frame is singular")
    vertex_set = set(verts)
    autos = []
    assign: list[int] = []

    def leaf():
        Wcols = tuple(tuple(verts[w][i] for w in assign) for i in range(m))
        U = linalg.mat_mul(Wcols, Binv)
        rows = []
        for row in U:
            ints = []
            for x in row:
                if Fraction(x).denominator != 1:
                    return
                ints.append(int(x))
            rows.append(tuple(ints))
        U = tuple(rows)
        if abs(linalg.det(U)) != 1:
            return
        if {linalg.mat_vec(U, v) for v in verts} != vertex_set:
            return
        autos.append(U)

    def bt(slot):
        if slot == m:
            leaf()
            return
        b = base[slot]
        for w in range(n):
            if w in assign or vsig[w] != vsig[b]:
                continue
            if any(psig(b, base[t]) != psig(w, assign[t]) for t in range(slot)):
                continue
            assign.append(w)
            bt(slot + 1)
            assign.pop()

    bt(0)
    autos.sort()
    rows = []
    for U in autos:
        for i in range(m):
            rows.append(tuple(U[i][j] - (1 if i == j else 0) for j in range(m)))
    fixed = m - linalg.rank(rows)
    report = SymmetryReport(tuple(autos), fixed, fixed == 0)
    P._cache["symmetry"] = report
    return report


# ---------------------------------------------------------------------------
# fans and their anticanonical polytopes


@dataclass(frozen=True)
class Fan:
    """A smooth simplicial fan given by primitive rays and maximal cones.

    Validation checks primitivity, unimodular maximal cones, that every
    ray is used, and the wall condition (each wall shared by exactly two
    maximal cones), which is the completeness certificate appropriate
    for the complete fans this library consumes.
    """

    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        dim = int(self.dim)
        if dim < 1:
            raise InvalidInput("fan dimension must be at least 1")
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        cones = tuple(tuple(sorted(int(i) for i in c)) for c in self.max_cones)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        if not rays:
            raise InvalidInput("fan needs at least one ray")
        for r in rays:
            if len(r) != dim:
                raise InvalidInput(f"ray {r!r} does not have dimension {dim}")
            if not any(r):
                raise InvalidInput("zero vector is not a ray")
            if linalg.content(r) != 1:
                raise InvalidInput(f"ray {r!r} is not primitive")
        if len(set(rays)) != len(rays):
            raise InvalidInput("duplicate rays")
        if not cones:
            raise InvalidInput("fan needs at least one maximal cone")
        used = set()
        walls: dict[frozenset, int] = {}
        for c in cones:
            if len(c) != dim:
                raise InvalidInput(f"maximal cone {c!r} must have {dim} rays")
            if any(i < 0 or i >= len(rays) for i in c):
                raise InvalidInput(f"cone {c!r} references a missing ray")
            if len(set(c)) != dim:
                raise InvalidInput(f"cone {c!r} repeats a ray")
            if abs(linalg.det([rays[i] for i in c])) != 1:
                raise InvalidInput(f"cone {c!r} is not unimodular")
            used.update(c)
            for wall in combinations(c, dim - 1):
                w = frozenset(wall)
                walls[w] = walls.get(w, 0) + 1
        if len(set(cones)) != len(cones):
            raise InvalidInput("duplicate maximal cones")
        if used != set(range(len(rays))):
            raise InvalidInput("every ray must appear in some maximal cone")
        if any(count != 2 for count in walls.values()):
            raise InvalidInput("fan is not complete: a wall is not shared by exactly two cones")


def moment_polytope(fan: Fan) -> LatticePolytope:
    """The anticanonical polytope {w : ray . w >= -1 for every ray}.

    Raises Unbounded when the rays fail to positively span, i.e. when
    the inequality system has a nontrivial recession cone.
    """
    pts = [tuple(Fraction(x) for x in r) for r in fan.rays]
    if linalg.affine_rank(pts) < fan.dim:
        raise Unbounded("rays do not span the space")
    for g in _hull_facets(pts, fan.dim):
        if g.offset <= 0:
            raise Unbounded("rays do not positively span the space")
    return _from_facets([Facet(r, 1) for r in fan.rays], fan.dim)


def dual_polytope(P: LatticePolytope) -> LatticePolytope:
    """Polar dual {y : x . y >= -1 for all x in P} by exact polarity.

    Needs 0 strictly inside P.  Vertices of the dual are normal/offset
    over the irredundant facets; facets of the dual come from the
    vertices of P with denominators cleared.
    """
    if any(f.offset <= 0 for f in P.facets):
        raise InvalidInput("polar dual needs the origin strictly inside")
    vertices = [tuple(Fraction(n, f.offset) for n in f.normal) for f in P.facets]
    facets = []
    for v in P.vertices:
        ints, mult = linalg.clear_denominators(v)
        facets.append(_reduced_facet(ints, mult))
    return _finish(P.dim, vertices, facets)
