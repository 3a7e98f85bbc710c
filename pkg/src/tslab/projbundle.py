"""Closed-form Chow weights for projectivizations of split bundles on curves.

A direct sum E of components (rank n_j, degree d_j) over a genus-g curve,
with a one-parameter weight lambda_j on each summand, has an explicitly
computable Chow weight on P(E) polarized by O(r) twisted by a line bundle
of degree deg_B.  Everything here is formal Riemann-Roch over the
rationals: fractional twists like B^{1/r} are manipulated symbolically,
chi(F) = deg(F) + rank(F)(1 - g), and no ampleness check is attempted.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb

from .errors import InvalidInput, ZeroChi, ZeroSlope

NORMALIZATION_CAVEAT = (
    "the positive constant C depending only on the dimension is normalized "
    "to 1; only the sign and the vanishing of the value are meaningful"
)
AMPLENESS_CAVEAT = (
    "ampleness of the polarizing twist is not checked; supply specs whose "
    "polarization is known to be ample"
)


@dataclass(frozen=True)
class BundleComponent:
    rank: int
    degree: int
    weight: Fraction

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidInput("component rank must be a positive integer")
        if not isinstance(self.degree, int):
            raise InvalidInput("component degree must be an integer")
        object.__setattr__(self, "weight", Fraction(self.weight))

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)


@dataclass(frozen=True)
class BundleSpec:
    """Split bundle over a curve plus polarization data.

    genus: genus of the base curve.
    twist: the r of the polarization O(r) (x) pullback of B.
    base_degree: degree of the twisting line bundle B on the curve.
    """

    genus: int
    twist: int
    base_degree: int
    components: tuple[BundleComponent, ...]

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise InvalidInput("genus must be a nonnegative integer")
        if not isinstance(self.twist, int) or self.twist < 1:
            raise InvalidInput("twist must be a positive integer")
        if not isinstance(self.base_degree, int):
            raise InvalidInput("base degree must be an integer")
        comps = tuple(self.components)
        if not comps:
            raise InvalidInput("at least one component is required")
        object.__setattr__(self, "components", comps)
        if self.total_rank < 2:
            raise InvalidInput("total rank must be at least 2 to projectivize")

    @property
    def total_rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def total_degree(self) -> int:
        return sum(c.degree for c in self.components)

    @property
    def fibration_dim(self) -> int:
        """dim P(E) = total rank (fiber dimension plus one for the curve)."""
        return self.total_rank

    @property
    def slope(self) -> Fraction:
        return Fraction(self.total_degree, self.total_rank)

    def shift_weights(self, c) -> "BundleSpec":
        c = Fraction(c)
        return replace(self, components=tuple(
            replace(comp, weight=comp.weight + c) for comp in self.components))


@dataclass(frozen=True)
class BundleMeasures:
    slope: Fraction
    component_slopes: tuple[Fraction, ...]
    weight_sum: Fraction
    chi_det_twist: Fraction
    twisted_slope: Fraction


def bundle_measures(spec: BundleSpec) -> BundleMeasures:
    """Slopes, the weighted slope-deficit sum, and chi of the twisted det.

    weight_sum = sum_j lambda_j n_j (mu_j - mu) vanishes iff every
    component has the total slope or the weights conspire; it is the only
    factor of the Chow weight that can change sign with the weights.
    """
    mu = spec.slope
    slopes = tuple(c.slope for c in spec.components)
    weight_sum = sum(
        (c.weight * c.rank * (c.slope - mu) for c in spec.components),
        Fraction(0),
    )
    n, r = spec.total_rank, spec.twist
    det_degree = spec.total_degree - Fraction(n * spec.base_degree, r)
    chi_det = det_degree + (1 - spec.genus)
    twisted_slope = mu - Fraction(spec.base_degree, r)
    return BundleMeasures(
        slope=mu,
        component_slopes=slopes,
        weight_sum=weight_sum,
        chi_det_twist=chi_det,
        twisted_slope=twisted_slope,
    )


def symmetric_power_chi(spec: BundleSpec, N: int) -> Fraction:
    """chi of S^N of the dual twisted bundle, by formal Riemann-Roch.

    The dual twist has slope -(mu(E) - deg_B/r); S^N multiplies slope by N
    and has rank binom(N + n - 1, n - 1).
    """
    if N < 0:
        raise InvalidInput("symmetric power index must be nonnegative")
    n = spec.total_rank
    rank = comb(N + n - 1, n - 1)
    mu_dual = -bundle_measures(spec).twisted_slope
    return rank * (N * mu_dual + 1 - spec.genus)


def chow_weight_bundle(spec: BundleSpec, k: int) -> Fraction:
    """Exact Chow weight of (P(E), O(r) twist) at exponent k."""
    if not isinstance(k, int) or k < 1:
        raise InvalidInput("k must be a positive integer")
    mes = bundle_measures(spec)
    if mes.twisted_slope == 0:
        raise ZeroSlope("twisted slope vanishes; the closed form has a pole")
    N = k * spec.twist
    chi_sym = symmetric_power_chi(spec, N)
    if chi_sym == 0:
        raise ZeroChi(f"chi of the symmetric power at N={N} vanishes")
    m = spec.fibration_dim
    front = Fraction(comb(m - 1 + N, m), m + 1)
    return front * mes.chi_det_twist / (mes.twisted_slope * chi_sym) * mes.weight_sum


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class FEllVerdict:
    """Asymptotic character value with its unspecified constant set to 1."""

    value: Fraction
    vanishes: bool
    sign: int
    polystable_slopes: bool
    caveats: tuple[str, ...] = field(
        default=(NORMALIZATION_CAVEAT, AMPLENESS_CAVEAT))


def f_ell_bundle(spec: BundleSpec) -> FEllVerdict:
    """Sign and vanishing of the obstruction characters of P(E).

    All characters share the sign of -chi_det * weight_sum / slope^2, so a
    single verdict covers every index.  polystable_slopes is the
    necessary condition from the declared splitting: it cannot see
    instability hidden inside an individual summand.
    """
    mes = bundle_measures(spec)
    if mes.twisted_slope == 0:
        raise ZeroSlope("twisted slope vanishes; the closed form has a pole")
    value = -mes.chi_det_twist / mes.twisted_slope ** 2 * mes.weight_sum
    return FEllVerdict(
        value=value,
        vanishes=mes.weight_sum == 0,
        sign=_sign(value),
        polystable_slopes=all(s == mes.slope for s in mes.component_slopes),
    )
