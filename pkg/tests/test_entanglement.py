import math

import numpy as np
import pytest

from cavitybell.entanglement import (
    closed_form_ppt_eigenvalues, degenerate_m, entanglement_report, horodecki_m, jc_min_ppt_eigenvalue,
    jc_separability_value, ppt_report,
)
from cavitybell.exceptions import DegeneracyError
from cavitybell.models import (
    InitialState, SgCoefficients, build_rho_jc, build_rho_sg, compute_overlap_set, jc_limit_overlap_set,
    sg_coefficients,
)
from cavitybell.quantum import SIGMA_X, SIGMA_Y, SIGMA_Z, TwoQubitDensityMatrix, local_phase_rotated
from cavitybell.types import GROUND
from tests.conftest import random_params

GG_STATE = TwoQubitDensityMatrix.product((GROUND, GROUND))
PSI_PLUS = TwoQubitDensityMatrix.from_state_vector([0, 1, 1, 0])


class TestPptReport:

    def test_product_state(self):
        report = ppt_report(GG_STATE)
        assert report.eigenvalues == pytest.approx((0, 0, 0, 1), abs=1e-12)
        assert report.separable

    def test_bell_state(self):
        report = ppt_report(PSI_PLUS)
        assert report.eigenvalues == pytest.approx((-0.5, 0.5, 0.5, 0.5), abs=1e-12)
        assert report.minimum == pytest.approx(-0.5)
        assert not report.separable

    def test_tolerance(self):
        assert ppt_report(PSI_PLUS, tol=0.6).separable
        assert ppt_report(GG_STATE).tolerance == 1e-10

    def test_separable_after_damping(self, params_at):
        assert ppt_report(build_rho_sg(params_at(2.0), InitialState.GG1)).separable


class TestClosedFormPpt:

    def test_vanishing_q(self):
        co = SgCoefficients(P1=0.5, P2=0.5, c1=math.sqrt(0.3), c2=math.sqrt(0.7), q=0j)
        values = sorted(closed_form_ppt_eigenvalues(co).eigenvalues)
        assert values == pytest.approx([0.0, 0.15, 0.35, 0.5])

    def test_vanishing_p1(self):
        co = SgCoefficients(P1=0.0, P2=1.0, c1=math.sqrt(0.5), c2=math.sqrt(0.5), q=1j)
        result = closed_form_ppt_eigenvalues(co)
        assert result.vanishing_p1
        assert sorted(result.eigenvalues) == pytest.approx([-0.5, 0.5, 0.5, 0.5])

    def test_jaynes_cummings_quarter_angle(self, params_at):
        params = params_at(1 / 8)
        co = sg_coefficients(jc_limit_overlap_set(params, keep_kerr_phase=False))
        assert min(closed_form_ppt_eigenvalues(co).eigenvalues) < 0

    @pytest.mark.parametrize('t_rabi', [0.05, 0.1, 0.3, 0.5, 1.0])
    def test_matches_numeric(self, params_at, t_rabi):
        params = params_at(t_rabi)
        co = sg_coefficients(compute_overlap_set(params))
        closed = sorted(closed_form_ppt_eigenvalues(co).eigenvalues)
        numeric = ppt_report(build_rho_sg(params, InitialState.GG1)).eigenvalues
        np.testing.assert_allclose(closed, numeric, atol=1e-10)

    def test_matches_numeric_over_random_scenarios(self):
        rng = np.random.default_rng(3)
        for _ in range(1000):
            params = random_params(rng)
            co = sg_coefficients(compute_overlap_set(params))
            closed = sorted(closed_form_ppt_eigenvalues(co).eigenvalues)
            numeric = ppt_report(build_rho_sg(params, InitialState.GG1)).eigenvalues
            np.testing.assert_allclose(closed, numeric, atol=1e-9)


class TestHorodecki:

    def test_product_state(self):
        m_value, nu = horodecki_m(GG_STATE)
        assert m_value == pytest.approx(1.0)
        assert nu == pytest.approx((1.0, 0.0, 0.0), abs=1e-12)

    def test_bell_state(self):
        m_value, nu = horodecki_m(PSI_PLUS)
        assert m_value == pytest.approx(2.0)
        assert nu == pytest.approx((1.0, 1.0, 1.0))

    def test_maximally_mixed(self):
        assert horodecki_m(TwoQubitDensityMatrix.maximally_mixed()).m_value == pytest.approx(0.0, abs=1e-15)

    def test_degenerate_product(self):
        assert degenerate_m(GG_STATE) == pytest.approx((1.0, 1.0, 0.0), abs=1e-12)

    def test_degenerate_jaynes_cummings(self):
        rho = build_rho_jc(1.0, math.pi / 4, InitialState.GG1)
        m_value, nu1, nu2 = degenerate_m(rho)
        # t_zz = 1 - 2 (P_eg + P_ge), t_xx = t_yy = 2 X
        assert horodecki_m(rho).nu == pytest.approx((0.5, 0.5, 0.25))
        assert nu1 == pytest.approx(0.25)
        assert nu2 == pytest.approx(0.5)
        assert m_value == pytest.approx(1.0)

    def test_not_degenerate(self):
        bell_diagonal = (np.eye(4) + 0.5 * np.kron(SIGMA_X, SIGMA_X) - 0.3 * np.kron(SIGMA_Y, SIGMA_Y)
                         + 0.1 * np.kron(SIGMA_Z, SIGMA_Z)) / 4
        rho = TwoQubitDensityMatrix(bell_diagonal)
        assert horodecki_m(rho).nu == pytest.approx((0.25, 0.09, 0.01))
        with pytest.raises(DegeneracyError):
            degenerate_m(rho)

    @pytest.mark.parametrize('t_rabi', [0.1, 0.3, 0.7])
    def test_sg_state_is_degenerate(self, params_at, t_rabi):
        degenerate_m(build_rho_sg(params_at(t_rabi), InitialState.GG1))

    def test_jaynes_cummings_period(self):
        angles = np.linspace(0.0, 2 * math.pi, 200)
        values = [horodecki_m(build_rho_jc(1.0, angle, InitialState.GG1)).m_value for angle in angles]
        shifted = [horodecki_m(build_rho_jc(1.0, angle + math.pi, InitialState.GG1)).m_value for angle in angles]
        np.testing.assert_allclose(values, shifted, atol=1e-10)
        assert max(values) > 1.0

    @pytest.mark.parametrize('initial', list(InitialState))
    def test_local_phase_invariance(self, initial):
        rng = np.random.default_rng(17)
        for _ in range(200):
            rho = build_rho_sg(random_params(rng), initial)
            rotated = local_phase_rotated(rho, rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi))
            np.testing.assert_allclose(horodecki_m(rotated).nu, horodecki_m(rho).nu, atol=1e-10)
            np.testing.assert_allclose(ppt_report(rotated).eigenvalues, ppt_report(rho).eigenvalues, atol=1e-12)


class TestJcSeparability:

    @pytest.mark.parametrize('angle,expected', [
        (0.0, 0.0),
        (math.pi / 2, 0.0),
        (math.pi / 4, 0.5),
    ])
    def test_values(self, angle, expected):
        assert jc_separability_value(1.0, angle) == pytest.approx(expected, abs=1e-15)

    def test_agrees_with_ppt(self):
        rho = build_rho_jc(1.0, math.pi / 4, InitialState.GG1)
        assert not ppt_report(rho).separable

    def test_zero_set_over_grid(self):
        tolerance = 1e-10
        exempt = 0
        for angle in np.linspace(0.0, 2 * math.pi, 1000):
            separable = ppt_report(build_rho_jc(1.0, angle, InitialState.GG1), tolerance).separable
            near_zero = min(abs(angle - k * math.pi / 2) for k in range(5)) <= 1e-6
            if near_zero:
                assert separable
            elif jc_min_ppt_eigenvalue(1.0, angle) >= -2 * tolerance:
                # quartic approach to the zeros at multiples of pi
                exempt += 1
            else:
                assert jc_separability_value(1.0, angle) > 0
                assert not separable
        assert exempt <= 4

    def test_tolerance_band_around_pi(self):
        angle = math.pi - 3e-3
        assert jc_separability_value(1.0, angle) > 0
        assert -1e-10 < jc_min_ppt_eigenvalue(1.0, angle) < 0
        assert ppt_report(build_rho_jc(1.0, angle, InitialState.GG1), 1e-10).separable
        assert not ppt_report(build_rho_jc(1.0, angle, InitialState.GG1), 1e-12).separable

    def test_min_ppt_eigenvalue_matches_numeric(self):
        rng = np.random.default_rng(5)
        for angle in rng.uniform(0.0, 2 * math.pi, 100):
            numeric = ppt_report(build_rho_jc(1.0, angle, InitialState.GG1)).minimum
            assert jc_min_ppt_eigenvalue(1.0, angle) == pytest.approx(numeric, abs=1e-13)

    @pytest.mark.parametrize('angle', [0.0, math.pi / 2, math.pi, 3 * math.pi / 2])
    def test_min_ppt_eigenvalue_zeros(self, angle):
        assert jc_min_ppt_eigenvalue(1.0, angle) == pytest.approx(0.0, abs=1e-15)


class TestEntanglementReport:

    def test_bell_state(self):
        report = entanglement_report(PSI_PLUS)
        assert report.bell_violated
        assert not report.separable
        assert report.m_value == pytest.approx(2.0)

    def test_bound_is_strict(self):
        report = entanglement_report(GG_STATE)
        assert report.separable
        assert not report.bell_violated

    @pytest.mark.parametrize('initial', list(InitialState))
    def test_dense_sg_sweep(self, params_at, initial):
        for t_rabi in np.linspace(0.0, 2.0, 201):
            report = entanglement_report(build_rho_sg(params_at(t_rabi), initial))
            assert report.ppt_eigenvalues[0] <= report.ppt_eigenvalues[-1]
            assert 0.0 <= report.m_value <= 2.0 + 1e-12
