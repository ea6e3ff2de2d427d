import cmath
import math

import numpy as np
import pytest

import melroot as m
from tests import reference_values as ref
from tests.conftest import contour_angles


class TestTypes:
    def test_contour_validation(self):
        with pytest.raises(ValueError):
            m.CircularContour(0j, -1.0)
        with pytest.raises(ValueError):
            m.CircularContour(0j, 1.0, nodes=0)

    def test_contour_parameterization(self):
        c = m.CircularContour(1 + 2j, 0.5)
        assert abs(c.point(0.0) - (1.5 + 2j)) < 1e-15
        assert abs(c.point(math.pi / 2) - (1 + 2.5j)) < 1e-15
        assert abs(c.velocity(0.0) - 0.5j) < 1e-15

    def test_pipeline_config_order_cap(self, coeffs):
        with pytest.raises(m.UnsupportedOrderError):
            m.PipelineConfig(table=coeffs, series_order=2)
        with pytest.raises(ValueError):
            m.PipelineConfig(table=coeffs, series_order=-1)

    def test_pipeline_config_smooth_needs_eps(self, coeffs):
        with pytest.raises(ValueError):
            m.PipelineConfig(table=coeffs, csgn_mode="smooth")
        m.PipelineConfig(table=coeffs, csgn_mode="smooth", eps=0.01)

    def test_count_result_rounding(self):
        r = m.CountResult.from_value(-0.999999 + 1e-7j)
        assert r.rounded == -1
        assert r.residual < 1e-5
        assert r.reliable
        assert not m.CountResult.from_value(0.5 + 0.2j).reliable


class TestDirectIntegrand:
    def test_matches_multiprecision_oracle(self, zeta_ff, ref_contour):
        for phi, expected in zip(contour_angles(), ref.DIRECT_ORACLE):
            assert abs(m.integrand_direct(zeta_ff, ref_contour, phi) - expected) < 1e-9

    def test_periodicity(self, zeta_ff, ref_contour):
        a = m.integrand_direct(zeta_ff, ref_contour, 0.0)
        b = m.integrand_direct(zeta_ff, ref_contour, 2.0 * math.pi)
        assert abs(a - b) < 1e-14

    def test_root_on_contour_rejected(self, zeta_zf):
        ff = m.FactoredFunction(
            zf=zeta_zf,
            K=lambda s: 1.0,
            Kprime=lambda s: 0.0,
            f_reference=lambda s: s,  # root at the origin
            fprime_reference=lambda s: 1.0,
        )
        c = m.CircularContour(-1 + 0j, 1.0)  # passes through 0 at phi = 0
        with pytest.raises(m.PoleError):
            m.integrand_direct(ff, c, 0.0)

    def test_references_required(self, zeta_zf):
        ff = m.FactoredFunction(zf=zeta_zf, K=lambda s: 1.0, Kprime=lambda s: 0.0)
        c = m.CircularContour(0.5 + 0.5j, 0.1)
        with pytest.raises(ValueError):
            m.integrand_direct(ff, c, 0.0)
        with pytest.raises(ValueError):
            m.count_direct(ff, c)


class TestStages:
    def test_stage1_reproduces_published_column2(self, zeta_ff, ref_contour, coeffs):
        for phi, expected in zip(contour_angles(), ref.COLUMN2):
            got = m.integrand_stage1(zeta_ff, ref_contour, phi, coeffs)
            assert abs(got - expected) < 1e-6

    def test_stage2_reproduces_published_columns34(self, zeta_ff, ref_contour, coeffs):
        for phi, expected in zip(contour_angles(), ref.COLUMN34):
            got = m.integrand_stage2(zeta_ff, ref_contour, phi, coeffs, 1)
            assert abs(got - expected) < 1e-6

    def test_stage2_high_order_converges_to_stage1(self, zeta_ff, ref_contour, coeffs):
        for phi in contour_angles():
            s1 = m.integrand_stage1(zeta_ff, ref_contour, phi, coeffs)
            s2 = m.integrand_stage2(zeta_ff, ref_contour, phi, coeffs, 30)
            assert abs(s1 - s2) < 1e-10


class TestKernel:
    def test_reproduces_published_column5(self, zeta_ff, ref_contour, coeffs):
        cfg = m.PipelineConfig(table=coeffs)
        for i in (0, 5):
            phi = 2.0 * math.pi * i / 8.0
            got = m.kernel_mellin(zeta_ff, ref_contour, phi, cfg)
            assert abs(got - ref.COLUMN5[i]) < 1e-5

    def test_agrees_with_stage2(self, zeta_ff, ref_contour, coeffs):
        cfg = m.PipelineConfig(table=coeffs)
        for i in (1, 3, 6):
            phi = 2.0 * math.pi * i / 8.0
            kern = m.kernel_mellin(zeta_ff, ref_contour, phi, cfg)
            s2 = m.integrand_stage2(zeta_ff, ref_contour, phi, coeffs, 1)
            assert abs(kern - s2) < 1e-5

    def test_sign_exponent_parity(self, zeta_ff, ref_contour, coeffs):
        # csgn**(k+1) squares away for odd k: rebuilding the kernel with the
        # exponent reduced mod 2 must give the same value
        cfg = m.PipelineConfig(table=coeffs)
        phi = 2.0 * math.pi * 3.0 / 8.0
        s = ref_contour.point(phi)
        sgn = m.csgn(zeta_ff.f_reference(s))
        Ks, Kp = zeta_ff.K(s), zeta_ff.Kprime(s)
        rebuilt = 0j
        for k in range(cfg.series_order + 1):
            z_pow = m.power_transform(zeta_ff.zf, k + 1, s, cfg.quad).value
            zp_zk = m.deriv_times_power(zeta_ff.zf, k, s, cfg.quad).value
            weight = sum(a * cj**k for a, cj in zip(coeffs.alpha, coeffs.c))
            body = Kp * Ks**k * z_pow + Ks ** (k + 1) * zp_zk
            rebuilt += sgn ** ((k + 1) % 2) * ((-1) ** k / math.factorial(k)) * weight * body
        rebuilt *= ref_contour.velocity(phi) / (2j * math.pi)
        assert abs(rebuilt - m.kernel_mellin(zeta_ff, ref_contour, phi, cfg)) < 1e-12

    def test_smooth_sign_mode(self, zeta_ff, ref_contour, coeffs):
        cfg_ref = m.PipelineConfig(table=coeffs)
        cfg_smooth = m.PipelineConfig(table=coeffs, csgn_mode="smooth", eps=1e-3)
        phi = 2.0 * math.pi / 8.0
        a = m.kernel_mellin(zeta_ff, ref_contour, phi, cfg_ref)
        b = m.kernel_mellin(zeta_ff, ref_contour, phi, cfg_smooth)
        assert abs(a - b) < 1e-6

    def test_strip_violation_rejected(self, zeta_ff, coeffs):
        cfg = m.PipelineConfig(table=coeffs)
        c = m.CircularContour(-1.0 + 0j, 0.2)
        with pytest.raises(m.DomainError):
            m.kernel_mellin(zeta_ff, c, math.pi, cfg)

    def test_stage_chain_degradation_is_one_directional(self, zeta_ff, ref_contour, coeffs):
        # the convolution step adds far less error than the series truncation
        for i, (c34, c5) in enumerate(zip(ref.COLUMN34, ref.COLUMN5)):
            assert abs(c5 - c34) <= 1.5e-6


class TestCounting:
    def test_no_enclosed_roots(self, zeta_ff):
        r = m.count_direct(zeta_ff, m.CircularContour(0.57 + 1.57j, 0.1, nodes=64))
        assert r.rounded == 0
        assert r.residual < 1e-6

    def test_pole_counts_minus_one(self, zeta_ff):
        r = m.count_direct(zeta_ff, m.CircularContour(1.0 + 0j, 0.1, nodes=128))
        assert r.rounded == -1
        assert r.residual < 1e-6

    def test_first_zero_counts_plus_one(self, zeta_ff):
        c = m.CircularContour(complex(0.5, ref.FIRST_ZERO_IM), 0.05, nodes=128)
        r = m.count_direct(zeta_ff, c)
        assert r.rounded == 1
        assert r.residual < 1e-6

    def test_pole_count_radius_independent(self, zeta_ff):
        for radius in (0.05, 0.1, 0.2):
            r = m.count_direct(zeta_ff, m.CircularContour(1.0 + 0j, radius, nodes=128))
            assert r.rounded == -1
            assert r.residual < 1e-8

    def test_node_doubling_invariance(self, zeta_ff):
        a = m.count_direct(zeta_ff, m.CircularContour(0.57 + 1.57j, 0.1, nodes=32))
        b = m.count_direct(zeta_ff, m.CircularContour(0.57 + 1.57j, 0.1, nodes=64))
        assert abs(a.value - b.value) < 1e-9

    def test_start_angle_rotation_invariance(self, zeta_ff):
        c = m.CircularContour(1.0 + 0j, 0.1, nodes=64)
        base = m.count_direct(zeta_ff, c)
        rotated = m.integrate_periodic(
            lambda phi: m.integrand_direct(zeta_ff, c, phi + 0.37), c.nodes
        )
        assert abs(base.value - rotated) < 1e-9

    def test_warning_grade_near_root(self, zeta_zf):
        # contour grazing the root of f(s) = s: residual blows up
        ff = m.FactoredFunction(
            zf=zeta_zf,
            K=lambda s: 1.0,
            Kprime=lambda s: 0.0,
            f_reference=lambda s: s,
            fprime_reference=lambda s: 1.0,
        )
        c = m.CircularContour(0.1 + 0j, 0.10001, nodes=8)
        assert not m.count_direct(ff, c).reliable

    def test_pipeline_count_on_root_free_contour(self, zeta_ff, coeffs):
        cfg = m.PipelineConfig(table=coeffs)
        c = m.CircularContour(0.57 + 1.57j, 0.1, nodes=8)
        r = m.count_pipeline(zeta_ff, c, cfg)
        assert abs(r.value) < 0.15
        assert r.rounded == 0
        # trapezoid over the published kernel values as an oracle
        oracle = sum(ref.COLUMN5[:8]) * (2.0 * math.pi / 8.0)
        assert abs(r.value - oracle) < 1e-4
