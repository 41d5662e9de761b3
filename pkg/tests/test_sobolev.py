"""Sobolev norm families, equivalence, weighted decay, inclusions.

The ladder-norm ground mode value (1 + sqrt 2) ||f||_2 is exact ladder
arithmetic: A_0 and the annihilator kill the mode, the raise gives
sqrt(2) Phi_1.  The strict-inclusion growth numbers are pinned loosely;
the content is monotone non-stabilization vs a stabilizing Gaussian
control.
"""
import math
import warnings

import numpy as np
import pytest

from pharmonic import (
    InvalidParameterError,
    ResolutionWarning,
    SobolevParams,
    TestFamily,
    equivalence_report,
    inclusion_chain_check,
    ladder_norm,
    lp_norm,
    make_grid,
    potential_norm,
    riesz_on_potential_check,
    strict_inclusion_demo,
    weighted_decay_check,
)
from pharmonic.grid import Field
from pharmonic.spectral import forward, mode_field


@pytest.fixture(scope="module")
def g1():
    return make_grid(1, 64, 10.0, 24, 32)


@pytest.fixture(scope="module")
def g_quartic():
    # 4K <= 2M - 1 so p = 4 Gauss-Hermite quadrature is exact
    return make_grid(1, 64, 10.0, 12, 32)


class TestParams:
    def test_valid(self):
        SobolevParams(1.0, 2.0, "potential")
        SobolevParams(2.0, 4.0, "ladder")

    @pytest.mark.parametrize("bad", [
        dict(order=0.0, p=2.0),
        dict(order=-1.0, p=2.0),
        dict(order=1.0, p=1.0),
        dict(order=1.0, p=math.inf),
        dict(order=1.0, p=2.0, family="fourier"),
        dict(order=1.5, p=2.0, family="ladder"),
    ])
    def test_invalid(self, bad):
        with pytest.raises(InvalidParameterError):
            SobolevParams(**bad)


class TestFamilyType:
    def test_unknown_kind(self):
        with pytest.raises(InvalidParameterError):
            TestFamily("chebyshev", 5)

    def test_empty(self):
        with pytest.raises(InvalidParameterError):
            TestFamily("gaussian", 0)

    def test_stable_prefix(self, g1):
        small = TestFamily("band_limited", 3, seed=11).members(g1)
        big = TestFamily("band_limited", 10, seed=11).members(g1)
        for a, b in zip(small, big):
            assert np.array_equal(a.values, b.values)

    def test_band_limited_members_are_real_and_limited(self, g1):
        for f in TestFamily("band_limited", 4, seed=2).members(g1):
            assert np.abs(f.values.imag).max() == 0.0
            c = forward(f)
            top = np.abs(c.data[:, g1.mu_abs > g1.K - 2]) ** 2
            assert top.sum() < 1e-20 * (np.abs(c.data) ** 2).sum()

    @pytest.mark.parametrize("kind", ["gaussian", "hermite_mix",
                                      "mollified"])
    def test_kinds_produce_finite_members(self, g1, kind):
        for f in TestFamily(kind, 3, seed=4).members(g1):
            assert np.isfinite(f.values).all()
            assert lp_norm(f, 2.0) > 0


class TestPotentialNorm:
    def test_ground_mode_alpha_two(self, g1):
        f = mode_field(g1, 0, (0,))
        assert potential_norm(f, 2.0, 2.0) == pytest.approx(
            lp_norm(f, 2.0), rel=1e-12)

    def test_alpha_zero_is_plain_norm(self, g1):
        f = TestFamily("gaussian", 1, seed=5).members(g1)[0]
        for p in (2.0, 4.0):
            assert potential_norm(f, 0.0, p) == pytest.approx(
                lp_norm(f, p), rel=1e-14)

    def test_homogeneity(self, g1):
        f = TestFamily("band_limited", 1, seed=6).members(g1)[0]
        scaled = Field(g1, -2.5 * f.values)
        assert potential_norm(scaled, 1.0, 2.0) == pytest.approx(
            2.5 * potential_norm(f, 1.0, 2.0), rel=1e-12)

    def test_negative_alpha_rejected(self, g1):
        f = mode_field(g1, 0, (0,))
        with pytest.raises(InvalidParameterError):
            potential_norm(f, -1.0, 2.0)


class TestLadderNorm:
    def test_ground_mode_value(self, g1):
        f = mode_field(g1, 0, (0,))
        got = ladder_norm(f, 1, 2.0) / lp_norm(f, 2.0)
        assert got == pytest.approx(1.0 + math.sqrt(2.0), rel=1e-12)

    def test_zero_field(self, g1):
        z = Field(g1, np.zeros(g1.shape, dtype=np.complex128))
        assert ladder_norm(z, 2, 2.0) == 0.0

    def test_monotone_in_k(self, g1):
        f = TestFamily("band_limited", 1, seed=7).members(g1)[0]
        assert ladder_norm(f, 2, 2.0) >= ladder_norm(f, 1, 2.0)

    def test_invalid_k(self, g1):
        f = mode_field(g1, 0, (0,))
        with pytest.raises(InvalidParameterError):
            ladder_norm(f, 3, 2.0)


class TestNormAxioms:
    @pytest.mark.parametrize("p", [2.0, 4.0])
    def test_triangle_and_homogeneity(self, g_quartic, p):
        g = g_quartic
        fa, fb = TestFamily("band_limited", 2, seed=8).members(g)
        for norm in (lambda h: potential_norm(h, 1.0, p),
                     lambda h: ladder_norm(h, 1, p)):
            na, nb = norm(fa), norm(fb)
            assert norm(fa + fb) <= na + nb + 1e-10 * (na + nb)
            assert norm(Field(g, 3.0 * fa.values)) == pytest.approx(
                3.0 * na, rel=1e-12)


class TestEquivalence:
    def test_gaussian_bracket(self, g1):
        rep = equivalence_report(g1, TestFamily("gaussian", 10, seed=1),
                                 1, 2.0)
        assert rep.all_passed, rep.failures()
        vals = {m.name: m.value for m in rep.metrics}
        assert 0 < vals["ratio_min"] <= vals["ratio_max"] < 20

    def test_ground_mode_ratio_exact(self, g1):
        f = mode_field(g1, 0, (0,))
        ratio = ladder_norm(f, 1, 2.0) / potential_norm(f, 1.0, 2.0)
        assert ratio == pytest.approx(1.0 + math.sqrt(2.0), rel=1e-12)

    def test_scaling_leaves_ratios(self, g1):
        f = TestFamily("band_limited", 1, seed=9).members(g1)[0]
        big = Field(g1, 10.0 * f.values)
        r1 = ladder_norm(f, 1, 2.0) / potential_norm(f, 1.0, 2.0)
        r2 = ladder_norm(big, 1, 2.0) / potential_norm(big, 1.0, 2.0)
        assert r1 == pytest.approx(r2, rel=1e-13)

    def test_second_order_quartic(self, g_quartic):
        rep = equivalence_report(g_quartic,
                                 TestFamily("band_limited", 8, seed=3),
                                 2, 4.0, enlarged=24)
        assert rep.all_passed, rep.failures()

    def test_p2_sharp_sandwich(self, g1):
        # lambda <= tau^2 + 4|mu| + 2d <= 2 lambda coefficientwise
        from pharmonic.ladder import apply_A
        from pharmonic.spectral import inverse
        for f in TestFamily("band_limited", 6, seed=10).members(g1):
            pot_sq = potential_norm(f, 1.0, 2.0) ** 2
            c = forward(f)
            grad_sq = sum(
                lp_norm(inverse(apply_A(j, c)), 2.0) ** 2
                for j in (0, 1, -1))
            assert pot_sq <= grad_sq * (1 + 1e-12)
            assert grad_sq <= 2.0 * pot_sq * (1 + 1e-12)


class TestRieszOnPotential:
    def test_j0_mode_bound(self, g1):
        rep = riesz_on_potential_check(0, 1.0, 2.0, g1,
                                       TestFamily("band_limited", 5,
                                                  seed=12))
        assert rep.all_passed, rep.failures()
        assert rep.metrics[0].value <= 1.0 + 1e-10

    def test_j1_finite_stable(self, g1):
        rep = riesz_on_potential_check(1, 1.0, 2.0, g1,
                                       TestFamily("band_limited", 5,
                                                  seed=13))
        assert rep.all_passed, rep.failures()


class TestWeightedDecay:
    def test_half_power(self, g1):
        rep = weighted_decay_check(0.5, 2.0, g1,
                                   TestFamily("gaussian", 5, seed=2))
        assert rep.all_passed, rep.failures()

    def test_alpha_zero_identity(self, g1):
        rep = weighted_decay_check(0.0, 2.0, g1,
                                   TestFamily("gaussian", 3, seed=2))
        vals = {m.name: m.value for m in rep.metrics}
        assert vals["weighted_operator_sup"] == pytest.approx(1.0,
                                                              abs=1e-6)
        assert vals["corollary_weighted_sup"] == pytest.approx(1.0,
                                                               abs=1e-6)

    def test_negative_alpha_rejected(self, g1):
        with pytest.raises(InvalidParameterError):
            weighted_decay_check(-0.5, 2.0, g1,
                                 TestFamily("gaussian", 2, seed=1))


class TestInclusionChain:
    def test_mollified_ranking(self, g1):
        rep = inclusion_chain_check(g1, TestFamily("mollified", 6, seed=3))
        assert rep.all_passed, rep.failures()


class TestStrictInclusion:
    def test_f1_grows(self):
        rep = strict_inclusion_demo("f1", 0.5, 2.0)
        assert rep.all_passed, rep.failures()
        vals = {m.name: m.value for m in rep.metrics}
        assert vals["monotone"] == 1.0
        assert vals["mass_growth"] > 2.0

    def test_f2_grows(self):
        rep = strict_inclusion_demo("f2", 0.5, 2.0)
        assert rep.all_passed, rep.failures()
        assert {m.name: m.value for m in rep.metrics}["mass_growth"] > 2.0

    @pytest.mark.parametrize("which", ["f1", "f2"])
    def test_gaussian_control_stabilizes(self, which):
        rep = strict_inclusion_demo(which, 0.5, 2.0, control=True)
        assert rep.all_passed, rep.failures()
        assert {m.name: m.value
                for m in rep.metrics}["mass_growth"] < 1.01

    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            strict_inclusion_demo("f3", 0.5, 2.0)
        with pytest.raises(InvalidParameterError):
            strict_inclusion_demo("f1", 1.5, 2.0)
        with pytest.raises(InvalidParameterError):
            strict_inclusion_demo("f1", 0.5, 1.0)
        with pytest.raises(InvalidParameterError):
            strict_inclusion_demo("f1", 0.5, 2.0, radii=(4.0, 8.0, 16.0))
        with pytest.raises(InvalidParameterError):
            strict_inclusion_demo("f1", 0.5, 2.0, radii=(4.0, 8.0, 8.0,
                                                         16.0))
        with pytest.raises(InvalidParameterError):
            strict_inclusion_demo("f1", 0.5, 2.0,
                                  radii=(8.0, 16.0, 32.0, 47.0))

    def test_coarse_resolution_warns(self):
        # radii spaced below the grid spacing share the same cells, so
        # the weighted norms tie instead of increasing
        with pytest.warns(ResolutionWarning):
            strict_inclusion_demo("f1", 0.5, 2.0, n_points=16,
                                  radii=(4.0, 4.5, 5.0, 5.5))
