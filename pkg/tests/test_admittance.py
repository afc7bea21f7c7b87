import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from peglab.admittance import AdmittanceState, GainSet, admittance_step, derive_damping
from peglab.errors import InvalidGainError, NonFiniteError


def step_n(state, x_d, f, gains, dt, n):
    zero = np.zeros_like(state.x_c)
    for _ in range(n):
        state = admittance_step(state, x_d, zero, zero, f, gains, dt)
    return state


def reference_step_response(m, k, step, dt, t_end):
    """Independent scalar semi-implicit integrator used as the fine-step oracle."""
    d = 4.0 * (m * k) ** 0.5
    x, v = 0.0, 0.0
    n = int(round(t_end / dt))
    out = [x]
    for _ in range(n):
        a = (-d * v - k * (x - step)) / m
        v += dt * a
        x += dt * v
        out.append(x)
    return out


class TestDeriveDamping:
    def test_single_axis(self):
        assert np.allclose(derive_damping([1.0], [400.0]), [80.0])
        assert np.allclose(derive_damping([4.0], [100.0]), [80.0])

    def test_identity_case(self):
        assert np.allclose(derive_damping([1.0, 1.0, 1.0], [1.0, 1.0, 1.0]), [4.0, 4.0, 4.0])

    @pytest.mark.parametrize("m,k", [([0.0], [1.0]), ([1.0], [-2.0]), ([1.0], [0.0])])
    def test_non_positive_rejected(self, m, k):
        with pytest.raises(InvalidGainError):
            derive_damping(m, k)

    def test_non_finite_rejected(self):
        with pytest.raises(InvalidGainError):
            derive_damping([np.nan], [1.0])

    @given(
        m=st.lists(st.floats(1e-3, 1e3), min_size=1, max_size=6),
        k=st.lists(st.floats(1e-2, 1e5), min_size=1, max_size=6),
    )
    @settings(max_examples=50)
    def test_damping_identity_exact(self, m, k):
        n = min(len(m), len(k))
        gains = GainSet.overdamped(m[:n], k[:n])
        assert np.array_equal(gains.d_damp, 4.0 * np.sqrt(gains.m * gains.k))


class TestGainSet:
    def test_rejects_inconsistent_damping(self):
        with pytest.raises(InvalidGainError):
            GainSet(m=np.ones(2), k=np.ones(2), d_damp=np.array([4.0, 5.0]))

    def test_dof(self):
        assert GainSet.overdamped(np.ones(3), np.ones(3)).dof == 3


class TestAdmittanceStep:
    def test_equilibrium_is_fixed_point(self):
        gains = GainSet.overdamped(np.ones(3), [200.0, 400.0, 50.0])
        x_d = np.array([0.1, -0.2, 0.05])
        state = AdmittanceState(x_c=x_d.copy(), v_c=np.zeros(3))
        nxt = step_n(state, x_d, np.zeros(3), gains, 0.002, 10)
        assert np.array_equal(nxt.x_c, x_d)
        assert np.array_equal(nxt.v_c, np.zeros(3))

    def test_constant_force_settles_to_spring_deflection(self):
        gains = GainSet.overdamped([1.0, 2.0, 0.5], [300.0, 120.0, 40.0])
        f = np.array([3.0, -6.0, 0.8])
        x_d = np.zeros(3)
        state = AdmittanceState(x_c=np.zeros(3), v_c=np.zeros(3))
        state = step_n(state, x_d, f, gains, 0.002, 8000)
        np.testing.assert_allclose(state.x_c, f / gains.k, rtol=1e-3)

    def test_linearity_of_deflection(self):
        gains = GainSet.overdamped(np.ones(3), [500.0, 100.0, 30.0])
        f = np.array([2.0, 1.0, -0.5])
        s1 = step_n(AdmittanceState(np.zeros(3), np.zeros(3)), np.zeros(3), f, gains, 0.002, 8000)
        s2 = step_n(AdmittanceState(np.zeros(3), np.zeros(3)), np.zeros(3), 2 * f, gains, 0.002, 8000)
        np.testing.assert_allclose(s2.x_c, 2 * s1.x_c, rtol=1e-4)

    def test_step_response_matches_fine_reference(self):
        # coarse dt=1e-4 vs the same scheme at dt/100; compare every coarse knot
        m, k, step, dt = 1.0, 100.0, 0.01, 1e-4
        gains = GainSet.overdamped([m], [k])
        x_d = np.array([step])
        state = AdmittanceState(np.zeros(1), np.zeros(1))
        coarse = [0.0]
        for _ in range(10000):
            state = admittance_step(state, x_d, np.zeros(1), np.zeros(1), np.zeros(1), gains, dt)
            coarse.append(float(state.x_c[0]))
        fine = reference_step_response(m, k, step, dt / 100.0, 1.0)
        worst = max(abs(c - fine[100 * i]) for i, c in enumerate(coarse)) / step
        assert worst < 1e-4

    @given(
        m=st.floats(0.1, 10.0),
        k=st.floats(5.0, 2000.0),
        step=st.floats(-0.05, 0.05),
    )
    @settings(max_examples=40, deadline=None)
    def test_no_overshoot_on_setpoint_step(self, m, k, step):
        if abs(step) < 1e-6:
            return
        gains = GainSet.overdamped([m], [k])
        x_d = np.array([step])
        state = AdmittanceState(np.zeros(1), np.zeros(1))
        prev = 0.0
        for _ in range(4000):
            state = admittance_step(state, x_d, np.zeros(1), np.zeros(1), np.zeros(1), gains, 0.002)
            x = float(state.x_c[0])
            # never crosses the setpoint and approaches it monotonically
            assert (x - step) * np.sign(step) <= 1e-15
            assert (x - prev) * np.sign(step) >= -1e-15
            prev = x

    def test_dt_refinement_is_first_order(self):
        m, k, f = 1.0, 100.0, 2.0
        endpoint = {}
        for dt in (4e-4, 2e-4, 1e-4):
            gains = GainSet.overdamped([m], [k])
            state = AdmittanceState(np.zeros(1), np.zeros(1))
            state = step_n(state, np.array([0.01]), np.array([f]), gains, dt, int(round(0.3 / dt)))
            endpoint[dt] = float(state.x_c[0])
        delta1 = abs(endpoint[4e-4] - endpoint[2e-4])
        delta2 = abs(endpoint[2e-4] - endpoint[1e-4])
        assert 1.6 < delta1 / delta2 < 2.6

    def test_non_finite_force_raises(self):
        gains = GainSet.overdamped(np.ones(2), np.ones(2) * 100.0)
        state = AdmittanceState(np.zeros(2), np.zeros(2))
        with pytest.raises(NonFiniteError):
            admittance_step(state, np.zeros(2), np.zeros(2), np.zeros(2), np.array([np.nan, 0.0]), gains, 0.002)

    def test_non_positive_dt_rejected(self):
        gains = GainSet.overdamped(np.ones(1), np.ones(1))
        state = AdmittanceState(np.zeros(1), np.zeros(1))
        with pytest.raises(ValueError):
            admittance_step(state, np.zeros(1), np.zeros(1), np.zeros(1), np.zeros(1), gains, 0.0)
