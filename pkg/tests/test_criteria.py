import numpy as np
import pytest

import univalence as uv
from univalence.criteria import CriterionParams, corollary_lhs, evaluate_lhs, theorem1_lhs
from univalence.errors import CriticalPoint, HVanishes, InvalidSpec, OutsideDomain

from conftest import exterior_points


def params(f, g=None, h=None, alpha=0.5, criterion="theorem1", squared=True):
    return CriterionParams(
        f=f,
        g=g if g is not None else uv.identity(),
        h=h if h is not None else uv.constant_one(),
        alpha=alpha,
        criterion=criterion,
        squared_variant=squared,
    )


class TestPointwiseValues:
    def test_identity_vanishes(self, rng):
        p = params(uv.identity(), g=uv.identity())
        for z in exterior_points(rng, 10):
            assert theorem1_lhs(p, z) == 0.0

    def test_becker_reduction_value(self):
        f = uv.joukowski(0.5)
        p = params(f, g=f)
        assert abs(theorem1_lhs(p, 2.0) - 6 / 7) < 1e-14

    def test_nehari_reduction_value(self):
        p = params(uv.joukowski(0.5), g=uv.identity())
        assert abs(theorem1_lhs(p, 2.0) - 0.5 * 9 * (12 / 49)) < 1e-13

    def test_alpha_zero_with_h(self):
        p = params(
            uv.joukowski(0.5),
            h=uv.inverse_square(0.25),
            alpha=0.0,
            criterion="alpha_zero",
        )
        expected = abs(-4 * 0.0625 / 1.0625 - 3 * (-0.125 / 1.0625 + 2 / 7))
        assert abs(corollary_lhs(p, 2.0) - expected) < 1e-12
        assert abs(theorem1_lhs(p, 2.0) - expected) < 1e-12

    def test_becker_closed_form(self):
        p = params(uv.joukowski(0.5), criterion="becker")
        assert abs(corollary_lhs(p, 2.0) - 3 / 3.5) < 1e-14

    def test_nehari_normalized_output(self):
        p = params(uv.joukowski(0.5), criterion="nehari")
        assert abs(corollary_lhs(p, 2.0) - 0.5 * 9 * (12 / 49)) < 1e-13

    def test_corollary_requires_corollary_id(self):
        with pytest.raises(InvalidSpec):
            corollary_lhs(params(uv.identity()), 2.0)


class TestReductions:
    def test_becker_reduction(self, rng):
        f = uv.joukowski(0.45)
        p = params(f, g=f)
        pb = params(f, criterion="becker")
        for z in exterior_points(rng, 60, 1.01, 20.0):
            assert abs(theorem1_lhs(p, z) - corollary_lhs(pb, z)) <= 1e-12

    def test_nehari_reduction(self, rng):
        f = uv.laurent(1, 0, [0.3, 0.1])
        p = params(f, g=uv.identity())
        pn = params(f, criterion="nehari")
        for z in exterior_points(rng, 60, 1.01, 20.0):
            assert abs(theorem1_lhs(p, z) - corollary_lhs(pn, z)) <= 1e-12

    def test_alpha_zero_reduction_ignores_g(self, rng):
        f, h = uv.joukowski(0.4), uv.inverse_square(0.25)
        pts = exterior_points(rng, 60, 1.01, 20.0)
        pc = params(f, h=h, alpha=0.0, criterion="alpha_zero")
        for g in (uv.identity(), uv.joukowski(1.2)):
            p = params(f, g=g, h=h, alpha=0.0)
            for z in pts:
                assert abs(theorem1_lhs(p, z) - corollary_lhs(pc, z)) <= 1e-12

    def test_miazga_wesolowski_reduction(self, rng):
        f, g, h = uv.joukowski(0.4), uv.laurent(1, 0, [0.2]), uv.inverse_square(0.3)
        p = params(f, g=g, h=h, alpha=0.5)
        pc = params(f, g=g, h=h, alpha=0.5, criterion="miazga_wesolowski")
        for z in exterior_points(rng, 60, 1.01, 20.0):
            assert abs(theorem1_lhs(p, z) - corollary_lhs(pc, z)) <= 1e-12

    def test_epstein_reduction(self, rng):
        f, g = uv.joukowski(0.4), uv.joukowski(0.2 + 0.1j)
        p = params(f, g=g, alpha=0.5)
        pc = params(f, g=g, alpha=0.5, criterion="epstein")
        for z in exterior_points(rng, 60, 1.01, 20.0):
            assert abs(theorem1_lhs(p, z) - corollary_lhs(pc, z)) <= 1e-12


class TestVariants:
    def test_squared_flag_changes_mixed_alpha_values(self):
        f, g = uv.joukowski(0.5), uv.identity()
        z = 1.7 + 0.4j
        sq = theorem1_lhs(params(f, g=g, alpha=0.3), z)
        unsq = theorem1_lhs(params(f, g=g, alpha=0.3, squared=False), z)
        assert abs(sq - unsq) > 1e-6

    def test_variants_agree_when_prefactor_vanishes(self, rng):
        # alpha = 1/2 kills the (alpha - 1/2) factor, f = g kills the base.
        f = uv.joukowski(0.5)
        for z in exterior_points(rng, 10):
            a = theorem1_lhs(params(f, g=uv.identity(), alpha=0.5), z)
            b = theorem1_lhs(params(f, g=uv.identity(), alpha=0.5, squared=False), z)
            assert a == b
            c = theorem1_lhs(params(f, g=f, alpha=0.3), z)
            d = theorem1_lhs(params(f, g=f, alpha=0.3, squared=False), z)
            assert c == d


class TestStructure:
    def test_becker_nehari_record_canonical_g_h(self):
        p = CriterionParams(
            f=uv.joukowski(0.5),
            g=uv.joukowski(1.2),
            h=uv.inverse_square(0.3),
            criterion="becker",
        )
        assert p.g == uv.identity()
        assert p.h == uv.constant_one()

    def test_alpha_recorded_even_when_fixed(self):
        p = CriterionParams(f=uv.identity(), alpha=0.25, criterion="nehari")
        assert p.alpha == 0.25

    def test_unknown_criterion(self):
        with pytest.raises(InvalidSpec):
            CriterionParams(f=uv.identity(), criterion="lewandowski")

    def test_outside_domain(self):
        with pytest.raises(OutsideDomain):
            theorem1_lhs(params(uv.identity()), 0.99)

    def test_critical_point_inside_region(self):
        # joukowski(4) has critical points at +-2.
        with pytest.raises(CriticalPoint):
            theorem1_lhs(params(uv.joukowski(4.0), g=uv.joukowski(4.0)), 2.0)

    def test_h_vanishes(self):
        with pytest.raises(HVanishes):
            theorem1_lhs(params(uv.identity(), h=uv.inverse_square(-4.0)), 2.0)

    def test_scalar_matches_vector_path(self, rng):
        p = params(uv.joukowski(0.4), g=uv.laurent(1, 0, [0.2]), alpha=0.3)
        pts = exterior_points(rng, 30)
        vec = evaluate_lhs(p, pts)
        for z, v in zip(pts, vec):
            assert theorem1_lhs(p, z) == v


class TestAnalyticProperties:
    def test_rotation_equivariance(self, rng):
        # Evaluating the rotated instance (f, g, h conjugated by z -> z e^{i
        # theta}) at z equals evaluating the original at z e^{i theta}.
        for theta in rng.uniform(0, 2 * np.pi, 5):
            rot = np.exp(1j * theta)
            c, ch = 0.4 + 0.1j, 0.25
            p1 = params(uv.joukowski(c), g=uv.identity(), h=uv.inverse_square(ch), alpha=0.3)
            p2 = params(
                uv.joukowski(c / rot**2),
                g=uv.identity(),
                h=uv.inverse_square(ch / rot**2),
                alpha=0.3,
            )
            for z in exterior_points(rng, 8, 1.05, 5.0):
                a = theorem1_lhs(p1, z * rot)
                b = theorem1_lhs(p2, z)
                assert abs(a - b) <= 1e-10 * (1 + a)

    def test_boundary_limit_is_h_ratio(self):
        # As |zeta| -> 1+, the LHS collapses to |(1-h)/h| <= 1.
        h = uv.inverse_square(0.4)
        p = params(uv.joukowski(0.5), g=uv.joukowski(0.2), h=h, alpha=0.5)
        r = 1.0 + 1e-6
        for theta in np.linspace(0.0, 2 * np.pi, 32, endpoint=False):
            z = r * np.exp(1j * theta)
            hv = h.jet(z).value
            target = abs((1 - hv) / hv)
            got = theorem1_lhs(p, z)
            assert abs(got - target) <= 1e-3
            assert got <= 1.0 + 1e-3

    def test_lhs_bounded_toward_infinity(self):
        # Values on the outermost circle and its double differ by < 5%.
        cases = [
            params(uv.joukowski(0.5), g=uv.joukowski(0.5)),
            params(uv.joukowski(0.4), g=uv.identity(), h=uv.inverse_square(0.25)),
            params(uv.laurent(1, 0, [0.3, 0.1]), g=uv.identity(), alpha=0.3),
        ]
        for p in cases:
            for r in (50.0,):
                ring1 = r * np.exp(1j * np.linspace(0, 2 * np.pi, 64, endpoint=False))
                m1 = float(np.max(evaluate_lhs(p, ring1)))
                m2 = float(np.max(evaluate_lhs(p, 2 * ring1)))
                assert abs(m1 - m2) <= 0.05 * max(m2, 1e-12)
