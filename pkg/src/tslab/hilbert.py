"""Laurent data of the equivariant counting series of a polytope cone.

Lattice points of the cone over P* placed at height m + 1 organize into
levels kP*, so for a direction c the s-derivative at 0 of the twisted
generating function is the series -t * sum_k (s(k) . c) e^{-(m+1)kt}.
Expanding each power sum sum_{k>=0} k^j e^{-lam k t} as an exact
Laurent series in t (Bernoulli numbers) makes every t-coefficient a
linear functional of c.  The span of the representing vectors is what
the comparison against the obstruction vectors tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import linalg
from .errors import DimensionMismatch, InvalidInput, ValidationFailed
from .ehrhart import weight_polynomial
from .polytope import (
    LatticePolytope,
    dilate,
    dilation_stats,
    dual_polytope,
)

_BERNOULLI: dict[int, Fraction] = {0: Fraction(1)}


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2 convention), cached idempotently."""
    if n < 0:
        raise InvalidInput("Bernoulli index must be nonnegative")
    known = len(_BERNOULLI)
    for k in range(known, n + 1):
        # sum_{i=0}^{k} binom(k+1, i) B_i = 0
        acc = sum(comb(k + 1, i) * _BERNOULLI[i] for i in range(k))
        _BERNOULLI[k] = -acc / (k + 1)
    return _BERNOULLI[n]


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated Laurent series: coeffs[i] multiplies t**(min_exp + i).

    Leading zeros are absorbed into min_exp unless the series is zero to
    the stored order.
    """

    min_exp: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        shift = 0
        while shift < len(cs) and cs[shift] == 0:
            shift += 1
        if shift and shift < len(cs):
            object.__setattr__(self, "min_exp", self.min_exp + shift)
            cs = cs[shift:]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def coefficient(self, exp: int) -> Fraction:
        if exp < self.min_exp:
            return Fraction(0)
        if exp > self.max_exp:
            raise InvalidInput(f"coefficient of t^{exp} is beyond the truncation")
        return self.coeffs[exp - self.min_exp]

    def evaluate(self, t) -> Fraction:
        t = Fraction(t)
        return sum(c * t ** (self.min_exp + i) for i, c in enumerate(self.coeffs))


def power_sum_laurent(j: int, lam, order: int) -> LaurentSeries:
    """Laurent expansion of sum_{k>=0} k^j e^{-lam k t} around t = 0.

    Starts at t^{-(j+1)} with leading coefficient j!/lam^{j+1}; computed
    by applying (-1/lam d/dt)^j to 1/(1 - e^{-lam t}) term by term.
    """
    if j < 0:
        raise InvalidInput("power must be nonnegative")
    if order < 1:
        raise InvalidInput("order must be positive")
    lam = Fraction(lam)
    if lam <= 0:
        raise InvalidInput("decay rate must be positive")
    # base series: coefficient of t^{n-1} is (-1)^n B_n lam^{n-1} / n!
    length = order + j
    coeffs = [(-1) ** n * bernoulli(n) * lam ** (n - 1) / factorial(n)
              for n in range(length)]
    min_exp = -1
    for _ in range(j):
        coeffs = [-Fraction(min_exp + i) * c / lam for i, c in enumerate(coeffs)]
        min_exp -= 1
    series = LaurentSeries(min_exp, tuple(coeffs[:order]))
    if series.coefficient(-(j + 1)) != factorial(j) / lam ** (j + 1):
        raise ValidationFailed("leading power sum coefficient is off")
    return series


def level_dimensions(P_star: LatticePolytope, k_max: int,
                     budget: int | None = None) -> list[int]:
    """Lattice point counts of kP* for k = 0..k_max (cone level sizes)."""
    if k_max < 0:
        raise InvalidInput("k_max must be nonnegative")
    return [dilation_stats(P_star, k, budget)[0] for k in range(k_max + 1)]


def laurent_functionals(P_star: LatticePolytope, order: int | None = None,
                        budget: int | None = None) -> list[tuple[Fraction, ...]]:
    """Vectors representing the first Laurent coefficients as functionals of c.

    Feeding the height m + 1 into the exponent, coefficient i sits at
    t^{-(m+1)+i}; the list has the requested length (default m + 2) and
    its lowest entry is proportional to the moment vector of P*.
    """
    m = P_star.dim
    if order is None:
        order = m + 2
    if order < 1:
        raise InvalidInput("order must be positive")
    s = weight_polynomial(P_star, budget)
    lam = m + 1
    window = order + m + 1
    series = {j: power_sum_laurent(j, lam, window) for j in range(1, m + 2)}
    out = []
    for i in range(order):
        exp = -(m + 1) + i
        vec = [Fraction(0)] * m
        for j in range(1, m + 2):
            # -t * S_j contributes -coeff(exp - 1) at t^exp
            c = series[j].coefficient(exp - 1)
            if c == 0:
                continue
            sj = s.coefficient_vector(j)
            for q in range(m):
                vec[q] -= c * sj[q]
        out.append(tuple(vec))
    return out


@dataclass(frozen=True)
class SpanComparison:
    equal: bool
    rank_a: int
    rank_b: int
    rank_union: int


def span_compare(A, B) -> SpanComparison:
    """Exact equality test of the rational spans of two vector families."""
    A = [tuple(Fraction(x) for x in v) for v in A]
    B = [tuple(Fraction(x) for x in v) for v in B]
    dims = {len(v) for v in A} | {len(v) for v in B}
    if len(dims) > 1:
        raise DimensionMismatch("vectors of different lengths cannot be compared")
    ra, rb = linalg.rank(A), linalg.rank(B)
    ru = linalg.rank(A + B)
    return SpanComparison(equal=ra == rb == ru, rank_a=ra, rank_b=rb, rank_union=ru)


@dataclass(frozen=True)
class ReebDirection:
    """A height vector b for the cone over P*, with its cone membership."""

    vector: tuple[Fraction, ...]
    in_reeb_cone: bool


def reeb_direction(P_star: LatticePolytope, b) -> ReebDirection:
    """Membership test: b = (b', m+1) with b' in (m+1) * dual(P*)."""
    m = P_star.dim
    vec = tuple(Fraction(x) for x in b)
    if len(vec) != m + 1:
        raise DimensionMismatch("height vector must have dimension m + 1")
    if vec[m] != m + 1:
        return ReebDirection(vec, False)
    scaled_dual = dilate(dual_polytope(P_star), m + 1)
    return ReebDirection(vec, scaled_dual.contains(vec[:m]))
