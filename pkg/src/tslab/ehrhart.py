"""Lattice point counting polynomials via exact Newton interpolation.

The counting polynomial of an integral polytope P of dimension m has
degree m and is pinned down by the counts of 0P .. mP; the lattice
weight polynomial (coordinate sums over dilations) has degree m + 1
with zero constant term.  Both are interpolated exactly and then
validated at extra dilation levels, so an enumeration bug cannot slip
through as a wrong polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, ValidationFailed
from .polytope import LatticePolytope, dilation_stats, measure


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial over Q; coeffs[j] multiplies k**j."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def __call__(self, k) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(tuple(
            self.coefficient(j) + other.coefficient(j) for j in range(n)))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(tuple(
            self.coefficient(j) - other.coefficient(j) for j in range(n)))

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            if not self.coeffs or not other.coeffs:
                return RationalPolynomial(())
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RationalPolynomial(tuple(out))
        return RationalPolynomial(tuple(Fraction(other) * c for c in self.coeffs))

    __rmul__ = __mul__

    def scale_argument(self, c):
        """The polynomial k |-> p(c*k)."""
        c = Fraction(c)
        return RationalPolynomial(tuple(
            coef * c ** j for j, coef in enumerate(self.coeffs)))


ZERO_POLYNOMIAL = RationalPolynomial(())


@dataclass(frozen=True)
class VectorPolynomial:
    """A tuple of coordinate polynomials sharing one argument."""

    components: tuple[RationalPolynomial, ...]

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return max((c.degree for c in self.components), default=-1)

    def coefficient_vector(self, j: int) -> tuple[Fraction, ...]:
        return tuple(c.coefficient(j) for c in self.components)

    def __call__(self, k) -> tuple[Fraction, ...]:
        return tuple(c(k) for c in self.components)

    def dot(self, direction) -> RationalPolynomial:
        acc = ZERO_POLYNOMIAL
        for c, comp in zip(direction, self.components):
            acc = acc + Fraction(c) * comp
        return acc


def newton_interpolate(nodes, values) -> RationalPolynomial:
    """Unique polynomial through (node, value) pairs, by divided differences."""
    nodes = [Fraction(x) for x in nodes]
    dd = [Fraction(v) for v in values]
    if len(nodes) != len(dd) or not nodes:
        raise InvalidInput("need equally many nodes and values")
    n = len(nodes)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j])
    poly = RationalPolynomial((dd[0],))
    basis = RationalPolynomial((Fraction(1),))
    for j in range(1, n):
        basis = basis * RationalPolynomial((-nodes[j - 1], Fraction(1)))
        poly = poly + dd[j] * basis
    return poly


def _checked_counts(P, ks, budget):
    return [dilation_stats(P, k, budget)[0] for k in ks]


def ehrhart_polynomial(P: LatticePolytope, budget: int | None = None) -> RationalPolynomial:
    """Counting polynomial E with E(k) = #(kP intersect Z^m) for k >= 0.

    Interpolated from dilations 0..m, validated against fresh counts at
    m+1 and m+2 and against the leading-coefficient bridge E_m = Vol(P).
    """
    cached = P._cache.get("ehrhart")
    if cached is not None:
        return cached
    if not P.is_integral:
        raise InvalidInput("counting polynomial needs an integral polytope")
    m = P.dim
    if P.is_point:
        raise InvalidInput("counting polynomial needs a full-dimensional polytope")
    poly = newton_interpolate(range(m + 1), _checked_counts(P, range(m + 1), budget))
    for k in (m + 1, m + 2):
        if poly(k) != dilation_stats(P, k, budget)[0]:
            raise ValidationFailed(
                f"interpolated count disagrees with enumeration at level {k}")
    if poly.coefficient(m) != measure(P).volume:
        raise ValidationFailed("leading coefficient differs from the volume")
    if poly(0) != 1:
        raise ValidationFailed("count polynomial must take value 1 at level 0")
    P._cache["ehrhart"] = poly
    return poly


def weight_polynomial(P: LatticePolytope, budget: int | None = None) -> VectorPolynomial:
    """Vector polynomial s with s(k) = sum of lattice points of kP.

    Degree m + 1, zero constant term, leading coefficient equal to the
    moment vector of P; validated at an extra dilation level.
    """
    cached = P._cache.get("weight")
    if cached is not None:
        return cached
    if not P.is_integral:
        raise InvalidInput("weight polynomial needs an integral polytope")
    m = P.dim
    if P.is_point:
        raise InvalidInput("weight polynomial needs a full-dimensional polytope")
    nodes = list(range(m + 2))
    sums = [dilation_stats(P, k, budget)[1] for k in nodes]
    comps = []
    for i in range(m):
        comps.append(newton_interpolate(nodes, [s[i] for s in sums]))
    vp = VectorPolynomial(tuple(comps))
    extra = dilation_stats(P, m + 2, budget)[1]
    if vp(m + 2) != tuple(Fraction(x) for x in extra):
        raise ValidationFailed(
            f"interpolated weight disagrees with enumeration at level {m + 2}")
    if vp.coefficient_vector(m + 1) != measure(P).moment:
        raise ValidationFailed("leading weight coefficient differs from the moment")
    if any(c.coefficient(0) != 0 for c in comps):
        raise ValidationFailed("weight polynomial must vanish at level 0")
    P._cache["weight"] = vp
    return vp
