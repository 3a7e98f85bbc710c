"""Closed-form Chow weights for projectivized split bundles over a curve."""

from fractions import Fraction

import pytest

import tslab
from tslab import (
    BundleComponent,
    BundleSpec,
    InvalidInput,
    ZeroChi,
    ZeroSlope,
)

F = Fraction


def split_g2(deg_b=-1):
    return BundleSpec(genus=2, twist=1, base_degree=deg_b,
                      components=(BundleComponent(1, 0, F(1)),
                                  BundleComponent(1, 1, F(-1))))


def equal_slopes():
    return BundleSpec(genus=2, twist=1, base_degree=0,
                      components=(BundleComponent(1, 1, F(5)),
                                  BundleComponent(1, 1, F(7))))


class TestSpecValidation:
    def test_component_rank_positive(self):
        with pytest.raises(InvalidInput):
            BundleComponent(0, 1, F(1))

    def test_total_rank_at_least_two(self):
        with pytest.raises(InvalidInput):
            BundleSpec(genus=0, twist=1, base_degree=0,
                       components=(BundleComponent(1, 0, F(0)),))

    def test_components_nonempty(self):
        with pytest.raises(InvalidInput):
            BundleSpec(genus=0, twist=1, base_degree=0, components=())

    def test_genus_nonnegative(self):
        with pytest.raises(InvalidInput):
            BundleSpec(genus=-1, twist=1, base_degree=0,
                       components=(BundleComponent(2, 0, F(0)),))

    def test_twist_positive(self):
        with pytest.raises(InvalidInput):
            BundleSpec(genus=0, twist=0, base_degree=0,
                       components=(BundleComponent(2, 0, F(0)),))

    def test_derived_quantities(self):
        s = split_g2()
        assert s.total_rank == 2
        assert s.total_degree == 1
        assert s.fibration_dim == 2
        assert s.slope == F(1, 2)


class TestBundleMeasures:
    def test_split_g2(self):
        m = tslab.bundle_measures(split_g2(deg_b=0))
        assert m.slope == F(1, 2)
        assert m.component_slopes == (0, 1)
        assert m.weight_sum == -1
        assert m.chi_det_twist == 0
        assert m.twisted_slope == F(1, 2)

    def test_split_g2_twisted_base(self):
        m = tslab.bundle_measures(split_g2())
        assert m.weight_sum == -1
        assert m.chi_det_twist == 2
        assert m.twisted_slope == F(3, 2)

    def test_equal_slopes(self):
        m = tslab.bundle_measures(equal_slopes())
        assert m.component_slopes == (1, 1)
        assert m.weight_sum == 0

    def test_single_component(self):
        s = BundleSpec(genus=0, twist=1, base_degree=0,
                       components=(BundleComponent(2, 0, F(0)),))
        m = tslab.bundle_measures(s)
        assert m.slope == 0
        assert m.weight_sum == 0

    def test_weight_sum_formula(self):
        # sum of lambda_j n_j (mu_j - mu) over components
        s = BundleSpec(genus=1, twist=2, base_degree=3,
                       components=(BundleComponent(2, 1, F(3)),
                                   BundleComponent(1, -1, F(-2)),
                                   BundleComponent(3, 4, F(1, 2))))
        m = tslab.bundle_measures(s)
        mu = F(4, 6)
        expect = 3 * 2 * (F(1, 2) - mu) + (-2) * 1 * (F(-1) - mu) + \
            F(1, 2) * 3 * (F(4, 3) - mu)
        assert m.weight_sum == expect


class TestSymmetricPowerChi:
    def test_rank_factor(self):
        # rank S^N of a rank-2 bundle is N + 1
        s = split_g2()
        assert tslab.symmetric_power_chi(s, 1) == -5
        assert tslab.symmetric_power_chi(s, 3) == -22

    def test_riemann_roch_genus0(self):
        s = BundleSpec(genus=0, twist=1, base_degree=-2,
                       components=(BundleComponent(1, 0, F(1)),
                                   BundleComponent(1, 2, F(-1))))
        # W has slope -(mu - deg_B/r) = -3, rank 2; chi(S^1) = 2*(-3)+2
        assert tslab.symmetric_power_chi(s, 1) == -4


class TestChowWeightBundle:
    def test_equal_slopes_vanish(self):
        s = equal_slopes()
        assert all(tslab.chow_weight_bundle(s, k) == 0 for k in range(1, 6))

    def test_split_g2_catalog_values(self):
        s = split_g2()
        values = [tslab.chow_weight_bundle(s, k) for k in range(1, 6)]
        assert values == [F(4, 45), F(1, 9), F(4, 33), F(8, 63), F(20, 153)]
        # closed form 4k / (9(3k+2)) for this spec
        for k in range(1, 6):
            assert values[k - 1] == F(4 * k, 9 * (3 * k + 2))

    def test_degenerate_chi_det_gives_zero(self):
        assert tslab.chow_weight_bundle(split_g2(deg_b=0), 1) == 0

    def test_weight_shift_invariance(self):
        s = split_g2()
        shifted = s.shift_weights(F(7, 3))
        for k in range(1, 5):
            assert tslab.chow_weight_bundle(shifted, k) == \
                tslab.chow_weight_bundle(s, k)

    def test_component_twist_invariance(self):
        # d_j -> d_j + n_j e changes every slope by e, weight_sum by 0
        s = BundleSpec(genus=2, twist=1, base_degree=-1,
                       components=(BundleComponent(2, 1, F(2)),
                                   BundleComponent(1, 3, F(-1))))
        e = 2
        twisted = BundleSpec(
            genus=2, twist=1, base_degree=-1,
            components=tuple(BundleComponent(c.rank, c.degree + c.rank * e,
                                             c.weight)
                             for c in s.components))
        assert tslab.bundle_measures(twisted).weight_sum == \
            tslab.bundle_measures(s).weight_sum

    def test_level_positive(self):
        with pytest.raises(InvalidInput):
            tslab.chow_weight_bundle(split_g2(), 0)

    def test_zero_slope(self):
        s = BundleSpec(genus=2, twist=1, base_degree=0,
                       components=(BundleComponent(1, 0, F(1)),
                                   BundleComponent(1, 0, F(-1))))
        with pytest.raises(ZeroSlope):
            tslab.chow_weight_bundle(s, 1)

    def test_zero_chi(self):
        s = BundleSpec(genus=2, twist=1, base_degree=1,
                       components=(BundleComponent(1, 0, F(1)),
                                   BundleComponent(1, 0, F(-1))))
        with pytest.raises(ZeroChi):
            tslab.chow_weight_bundle(s, 1)


class TestFEllBundle:
    def test_equal_slopes(self):
        v = tslab.f_ell_bundle(equal_slopes())
        assert v.vanishes and v.sign == 0 and v.value == 0
        assert v.polystable_slopes

    def test_split_g2(self):
        v = tslab.f_ell_bundle(split_g2())
        assert v.value == F(8, 9)
        assert not v.vanishes
        assert v.sign == 1
        assert not v.polystable_slopes

    def test_single_component_vanishes(self):
        s = BundleSpec(genus=0, twist=1, base_degree=-1,
                       components=(BundleComponent(2, 0, F(0)),))
        v = tslab.f_ell_bundle(s)
        assert v.vanishes
        assert v.polystable_slopes

    def test_sign_matches_chow_weight(self):
        for s in (split_g2(), equal_slopes()):
            v = tslab.f_ell_bundle(s)
            for k in range(1, 6):
                cw = tslab.chow_weight_bundle(s, k)
                assert ((cw > 0) - (cw < 0)) == v.sign

    def test_vanishing_proportionality(self):
        for s in (split_g2(), equal_slopes(), split_g2(deg_b=2)):
            v = tslab.f_ell_bundle(s)
            zero = all(tslab.chow_weight_bundle(s, k) == 0
                       for k in range(1, 5))
            assert zero == v.vanishes

    def test_caveats_present(self):
        v = tslab.f_ell_bundle(split_g2())
        assert len(v.caveats) == 2
        assert any("normalized to 1" in c for c in v.caveats)
        assert any("ampleness" in c.lower() for c in v.caveats)

    def test_zero_slope(self):
        s = BundleSpec(genus=2, twist=1, base_degree=0,
                       components=(BundleComponent(1, 0, F(1)),
                                   BundleComponent(1, 0, F(-1))))
        with pytest.raises(ZeroSlope):
            tslab.f_ell_bundle(s)

    def test_shift_weights_helper(self):
        s = split_g2().shift_weights(F(1))
        assert [c.weight for c in s.components] == [2, 0]
