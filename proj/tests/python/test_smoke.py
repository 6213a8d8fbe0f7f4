import cmath
import math

import numpy as np
import pytest

import lcs


def test_superoperators_act_on_matrices():
    up = np.array([[1, 0], [0, 0]], dtype=complex)
    down = lcs.apply_superop("su2", "minus", up)
    assert np.allclose(down, [[0, 0], [0, 1]])
    assert lcs.sigma_of("su2") == -1
    assert lcs.sigma_of("su11") == 1


def test_closed_form_matches_exponential_growth():
    f_plus, f0_exp, f_minus = lcs.solve_const(0.0, 0.0, 1.0, -1, 1.0)
    assert f_plus == 0
    assert f0_exp == pytest.approx(math.e, rel=1e-14)
    assert f_minus == 0


def test_disentangled_qubit_matches_reference():
    params = lcs.SpinBosonParams(omega=2.0, g=1.0, delta=1.0)
    times = list(np.linspace(0.0, 4.0, 9))
    coeffs = lcs.solve_ode(lcs.su2_rates(params), times)
    psi = np.array([0.3 + 0.4j, 1.0])
    psi /= np.linalg.norm(psi)
    rho0 = np.outer(psi, psi.conj())
    ref = lcs.integrate_su2(params, rho0, times)
    for c, rho in zip(coeffs, ref["states"]):
        assert lcs.trace_distance(lcs.su2_evolve(c, rho0), rho) < 1e-8


def test_vacuum_rabi_oscillation_passes_through_poles():
    # delta = 0: the excited population is cos^2(t / 2)
    params = lcs.SpinBosonParams(omega=2.0, g=1.0, delta=0.0)
    assert params.poles(0.0, 7.0) == pytest.approx([math.pi])
    times = [0.0, 1.0, 3.0, 5.0]
    ref = lcs.integrate_su2(params, np.diag([1.0, 0.0]).astype(complex), times)
    for t, rho in zip(times, ref["states"]):
        assert rho[0, 0].real == pytest.approx(math.cos(t / 2) ** 2, abs=1e-8)


def test_oscillator_relaxes_to_the_thermal_state():
    params = lcs.OscillatorBathParams.constant(1.0, 0.5)
    n = 40
    rho0 = lcs.su11_state(0.5, n)
    ref = lcs.integrate_su11(params, rho0, [0.0, 20.0])
    q = 0.5 / 1.5
    thermal = np.diag([(1 - q) * q**k for k in range(n)]).astype(complex)
    assert lcs.trace_distance(ref["states"][-1], thermal) < 1e-6
    assert max(ref["leak"]) < 1e-8


def test_oscillator_lcs_path_agrees_with_reference():
    params = lcs.OscillatorBathParams.modulated(1.0, 0.0)
    times = [0.0, 0.5, 1.0, 2.0]
    coeffs = lcs.solve_ode(lcs.su11_rates(params), times)
    ref = lcs.integrate_su11(params, lcs.su11_state(0.4, 48), times)
    for c, rho in zip(coeffs, ref["states"]):
        assert lcs.trace_distance(lcs.su11_evolve(c, 0.4, 48), rho) < 1e-7


def test_circle_map_and_observables():
    s = lcs.DisentangleSample()
    s.f_z = -0.4
    s.f_minus = 0.3
    radius, center = lcs.circle_map(s, 0.5, -1)
    assert radius == pytest.approx(0.5 * math.exp(-0.4) / (1 - 0.09 * 0.25), rel=1e-14)
    g = lcs.evolve_params(s, "su2", 0.5)
    assert abs(abs(g["g_plus"] - center) - radius) < 1e-14
    o = lcs.observables(np.eye(2, dtype=complex) / 2)
    assert o["purity"] == pytest.approx(0.5)
    assert o["entropy"] == pytest.approx(math.log(2))
    assert lcs.identity_resolution_check_su2(32, 64) < 1e-6


def test_coherent_state_and_errors():
    v = lcs.coherent_state("su2", 0.0)
    assert np.allclose(v, [[0, 0], [0, 1]])
    with pytest.raises(ValueError):
        lcs.coherent_state("su11", 1.5, truncation=8)
    with pytest.raises(ValueError):
        lcs.apply_superop("su3", "plus", np.eye(2, dtype=complex))
    with pytest.raises(ArithmeticError):
        lcs.solve_ode(lcs.su2_rates(lcs.SpinBosonParams(delta=0.0)), [0.0, cmath.pi])
