"""Semistability obstructions from counting and weight polynomials.

Writing E(k) = sum_j E_j k^j for the counting polynomial and
s(k) = sum_j s_j k^j for the weight polynomial of an integral Delzant
polytope P of dimension m (so E_m = Vol(P) and s_{m+1} is the moment
vector), the obstruction vectors are

    F_j = Vol(P) * s_j - E_{j-1} * moment(P),   j = 1..m,

and the same combination at j = m + 1 cancels identically, which is
asserted.  All of them vanishing is necessary for the level-wise
barycenter identities tested by chow_level_test to hold at every level.

For a polarized pair expanded as chi(k) = a_0 k^m + ... + a_m and
w(k) = b_0 k^{m+1} + ... + b_{m+1}, the derived invariants are
F_ell = (a_0 b_ell - b_0 a_ell) / a_0^2 and the Chow weight
w(k)/(k chi(k)) - b_0/a_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DivisionByZero, FitFailed, InvalidInput, ValidationFailed
from .ehrhart import (
    RationalPolynomial,
    ehrhart_polynomial,
    newton_interpolate,
    weight_polynomial,
)
from .polytope import LatticePolytope, dilate, dilation_stats, is_delzant, measure


@dataclass(frozen=True)
class ExpansionPair:
    """Coefficients (a_0..a_m, b_0..b_{m+1}) of a polarized pair."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    dim: int

    def __post_init__(self):
        a = tuple(Fraction(x) for x in self.a)
        b = tuple(Fraction(x) for x in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != self.dim + 1 or len(b) != self.dim + 2:
            raise InvalidInput("expansion lengths must be dim+1 and dim+2")
        if a[0] <= 0:
            raise InvalidInput("leading coefficient a_0 must be positive")

    def chi(self, k) -> Fraction:
        m = self.dim
        return sum(c * Fraction(k) ** (m - j) for j, c in enumerate(self.a))

    def w(self, k) -> Fraction:
        m = self.dim
        return sum(c * Fraction(k) ** (m + 1 - j) for j, c in enumerate(self.b))


@dataclass(frozen=True)
class ObstructionReport:
    vectors: tuple[tuple[Fraction, ...], ...]
    all_zero: bool
    rank: int
    pairwise_proportional: bool

    @property
    def verdict(self) -> str:
        return "passes-necessary-condition" if self.all_zero else "obstructed"


@dataclass(frozen=True)
class HilbertWeightReport:
    """Renormalized two-level weights and their exact coefficient array."""

    table: tuple[tuple[Fraction, ...], ...]
    coefficients: tuple[tuple[Fraction, ...], ...]
    sign_top: int
    sign_f1: int
    signs_agree: bool


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _require_toric_input(P: LatticePolytope):
    if not P.is_integral:
        raise InvalidInput("this test needs an integral polytope")
    if not is_delzant(P):
        raise InvalidInput("this test needs a Delzant polytope")


def ono_vectors(P: LatticePolytope, budget: int | None = None) -> ObstructionReport:
    """Obstruction vectors F_1..F_m of an integral Delzant polytope.

    Vanishing of all of them is the necessary condition for every
    level-wise barycenter identity to hold; the rank and pairwise
    proportionality of the nonzero vectors are reported as data.
    """
    _require_toric_input(P)
    m = P.dim
    E = ehrhart_polynomial(P, budget)
    s = weight_polynomial(P, budget)
    meas = measure(P)
    vol, mom = meas.volume, meas.moment
    vectors = []
    for j in range(1, m + 1):
        sj = s.coefficient_vector(j)
        ej = E.coefficient(j - 1)
        vectors.append(tuple(vol * sv - ej * mv for sv, mv in zip(sj, mom)))
    top = tuple(vol * sv - E.coefficient(m) * mv
                for sv, mv in zip(s.coefficient_vector(m + 1), mom))
    if any(x != 0 for x in top):
        raise ValidationFailed("the j = m+1 obstruction term must cancel identically")
    rank = linalg.rank(vectors)
    return ObstructionReport(
        vectors=tuple(vectors),
        all_zero=all(x == 0 for v in vectors for x in v),
        rank=rank,
        pairwise_proportional=rank <= 1,
    )


def chow_level_test(P: LatticePolytope, i: int, budget: int | None = None) -> bool:
    """Level-i barycenter identity, both sides computed independently.

    Compares the direct lattice sum over iP against
    count(iP)/Vol(iP) * moment(iP), using enumeration for the left side
    and the metric data of the dilation for the right side.
    """
    if not P.is_integral:
        raise InvalidInput("level test needs an integral polytope")
    if i < 1:
        raise InvalidInput("level must be a positive integer")
    count, sums = dilation_stats(P, i, budget)
    meas = measure(dilate(P, i))
    rhs = tuple(Fraction(count) * mv / meas.volume for mv in meas.moment)
    return tuple(Fraction(x) for x in sums) == rhs


def f_ell(e: ExpansionPair, ell: int) -> Fraction:
    """The invariant (a_0 b_ell - b_0 a_ell) / a_0^2; ell = 1 is classical."""
    if not 1 <= ell <= e.dim:
        raise InvalidInput(f"ell must lie in 1..{e.dim}")
    return (e.a[0] * e.b[ell] - e.b[0] * e.a[ell]) / e.a[0] ** 2


def chow_weight(e: ExpansionPair, k: int) -> Fraction:
    """w(k)/(k chi(k)) - b_0/a_0 at a positive integer level k."""
    if k < 1:
        raise InvalidInput("level must be a positive integer")
    chi = e.chi(k)
    if chi == 0:
        raise DivisionByZero(f"chi vanishes at level {k}")
    return e.w(k) / (Fraction(k) * chi) - e.b[0] / e.a[0]


def toric_expansions(P: LatticePolytope, direction,
                     budget: int | None = None) -> ExpansionPair:
    """ExpansionPair of (P, direction): a from counts, b from weights.

    a_j is the k^{m-j} coefficient of the counting polynomial, b_j the
    k^{m+1-j} coefficient of s(k) . direction, and b_{m+1} = 0 because
    the weight polynomial has no constant term (asserted).
    """
    _require_toric_input(P)
    m = P.dim
    c = tuple(Fraction(x) for x in direction)
    if len(c) != m:
        raise InvalidInput("direction vector has the wrong dimension")
    E = ehrhart_polynomial(P, budget)
    sdot = weight_polynomial(P, budget).dot(c)
    a = tuple(E.coefficient(m - j) for j in range(m + 1))
    b = tuple(sdot.coefficient(m + 1 - j) for j in range(m + 2))
    if b[m + 1] != 0:
        raise ValidationFailed("weight expansion must have zero constant term")
    return ExpansionPair(a, b, m)


def _two_level_weight(e: ExpansionPair, r: int, k: int) -> Fraction:
    s = r * k
    chi_r = e.chi(r)
    if chi_r == 0:
        raise DivisionByZero(f"chi vanishes at level {r}")
    return -e.w(s) + e.w(r) / (Fraction(r) * chi_r) * Fraction(s) * e.chi(s)


def hilbert_weight_table(e: ExpansionPair, r_max: int, k_max: int) -> HilbertWeightReport:
    """Exact table and coefficient array of the renormalized weights.

    With wt(r, k) = -w(rk) + w(r)/(r chi(r)) * rk chi(rk), the function
    r chi(r) wt(r, k) is a polynomial sum a_{i,j} r^{i+j} k^j with
    0 <= i, j <= m+1.  The array is recovered by exact interpolation in
    k then in r (each needs m+2 grid lines, hence the FitFailed
    precondition), the corner a_{m+1,m+1} = 0 is asserted, and the signs
    of a_{m,m+1} and F_1 are reported together with their agreement.
    """
    m = e.dim
    need = m + 2
    if r_max < need or k_max < need:
        raise FitFailed(f"grid must extend to at least {need} in both r and k")
    table = tuple(tuple(_two_level_weight(e, r, k) for k in range(1, k_max + 1))
                  for r in range(1, r_max + 1))
    k_nodes = list(range(1, k_max + 1))
    gamma = []
    for r in range(1, r_max + 1):
        g = [Fraction(r) * e.chi(r) * table[r - 1][k - 1] for k in k_nodes]
        poly = newton_interpolate(k_nodes[:need], g[:need])
        if poly.degree > m + 1:
            raise ValidationFailed("k-degree exceeds m+1 in the weight table")
        for k in k_nodes[need:]:
            if poly(k) != g[k - 1]:
                raise ValidationFailed("weight table is not polynomial in k")
        gamma.append([poly.coefficient(j) for j in range(m + 2)])
    r_nodes = list(range(1, r_max + 1))
    coeffs = [[Fraction(0)] * (m + 2) for _ in range(m + 2)]
    for j in range(m + 2):
        h = [gamma[r - 1][j] / Fraction(r) ** j for r in r_nodes]
        poly = newton_interpolate(r_nodes[:need], h[:need])
        if poly.degree > m + 1:
            raise ValidationFailed("r-degree exceeds m+1 in the weight table")
        for r in r_nodes[need:]:
            if poly(r) != h[r - 1]:
                raise ValidationFailed("weight table is not polynomial in r")
        for i in range(m + 2):
            coeffs[i][j] = poly.coefficient(i)
    if coeffs[m + 1][m + 1] != 0:
        raise ValidationFailed("corner coefficient a_{m+1,m+1} must vanish")
    sign_top = _sign(coeffs[m][m + 1])
    sign_f1 = _sign(f_ell(e, 1))
    return HilbertWeightReport(
        table=table,
        coefficients=tuple(tuple(row) for row in coeffs),
        sign_top=sign_top,
        sign_f1=sign_f1,
        signs_agree=sign_top == sign_f1,
    )
