import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import BELL_PHI_PLUS, random_density4, random_qubit_density, random_su2
from nanospin_qcorr import (
    MeasurementBasis,
    NanoporeParams,
    discord_bell_diagonal,
    discord_high_t_asymptotic,
    discord_low_t_asymptotic,
    discord_numeric,
    measurement_conditional_entropy,
    reduced_density,
)
from nanospin_qcorr.states import InvalidStateError, binary_entropy, bloch_data

SATURATION = 0.75 * math.log2(4.0 / 3.0)


def large_pore_state(beta):
    return reduced_density(NanoporeParams(n=math.inf, beta=beta, tau=0.0)).to_matrix()


def large_pore_q(beta):
    return math.tanh(beta / 2.0) ** 2 / 8.0


def test_bell_diagonal_known_values():
    assert discord_bell_diagonal(0.0) == 0.0
    assert discord_bell_diagonal(0.125) == pytest.approx(SATURATION, abs=1e-15)
    assert discord_bell_diagonal(-0.125) == pytest.approx(SATURATION, abs=1e-15)


@given(st.floats(min_value=-0.125, max_value=0.125))
def test_bell_diagonal_even_and_bounded(q):
    val = discord_bell_diagonal(q)
    assert val == pytest.approx(discord_bell_diagonal(-q), abs=1e-14)
    assert -1e-15 <= val <= SATURATION + 1e-12


def test_bell_diagonal_domain_error():
    with pytest.raises(ValueError, match="domain"):
        discord_bell_diagonal(0.2)


def test_low_t_asymptotic_values():
    assert discord_low_t_asymptotic(1e9) == pytest.approx(SATURATION, abs=1e-15)
    # At beta = 0 the formula degenerates to the saturation constant;
    # the asymptotic regime does not apply there.
    assert discord_low_t_asymptotic(0.0) == SATURATION
    diffs = [
        abs(discord_low_t_asymptotic(b) - discord_bell_diagonal(large_pore_q(b)))
        for b in (10.0, 20.0, 30.0)
    ]
    assert diffs[0] > diffs[1] > diffs[2]
    assert diffs[2] < 1e-8


def test_high_t_asymptotic_values():
    assert discord_high_t_asymptotic(0.0) == 0.0
    exact = discord_bell_diagonal(large_pore_q(0.1))
    assert abs(discord_high_t_asymptotic(0.1) - exact) / exact < 0.01
    exact = discord_bell_diagonal(large_pore_q(0.01))
    assert abs(discord_high_t_asymptotic(0.01) - exact) / exact < 1e-4


@given(
    st.floats(min_value=0.0, max_value=math.pi),
    st.floats(min_value=0.0, max_value=2.0 * math.pi, exclude_max=True),
)
def test_measurement_basis_projectors(theta, phi):
    basis = MeasurementBasis(theta=theta, phi=phi)
    pp, pm = basis.projectors()
    assert np.max(np.abs(pp + pm - np.eye(2))) < 1e-15
    assert np.max(np.abs(pp @ pp - pp)) < 1e-14
    assert np.max(np.abs(pm @ pm - pm)) < 1e-14
    assert np.max(np.abs(pp @ pm)) < 1e-14
    assert np.linalg.norm(basis.axis) == pytest.approx(1.0, abs=1e-14)


def test_product_state_has_no_discord(rng):
    rho = np.kron(random_qubit_density(rng), random_qubit_density(rng))
    res = discord_numeric(rho)
    assert abs(res.discord) < 1e-8
    assert abs(res.mutual_information - res.classical_correlation) < 1e-8


def test_matches_closed_form_across_temperatures():
    worst = 0.0
    for beta in (0.01, 0.05, 0.2, 0.5, 1.0, 3.0, 5.0, 10.0, 30.0):
        got = discord_numeric(large_pore_state(beta)).discord
        want = discord_bell_diagonal(large_pore_q(beta))
        worst = max(worst, abs(got - want))
    assert worst < 1e-7


def test_measured_side_is_immaterial_for_symmetric_states():
    rho = reduced_density(NanoporeParams(n=7, beta=3.0, tau=0.9)).to_matrix()
    q_second = discord_numeric(rho, measured="second").discord
    q_first = discord_numeric(rho, measured="first").discord
    assert abs(q_first - q_second) < 1e-9


def test_measured_side_rejects_garbage(rng):
    with pytest.raises(ValueError, match="measured"):
        discord_numeric(random_density4(rng), measured="third")


def test_result_invariants(rng):
    for _ in range(20):
        rho = random_density4(rng)
        res = discord_numeric(rho)
        assert res.discord >= -1e-9
        assert res.discord <= res.mutual_information + 1e-9
        assert res.classical_correlation >= -1e-12
        assert 0.0 <= res.basis.theta <= math.pi
        assert 0.0 <= res.basis.phi < 2.0 * math.pi


def test_local_unitary_invariance(rng):
    for _ in range(10):
        rho = random_density4(rng)
        u = np.kron(random_su2(rng), random_su2(rng))
        rotated = u @ rho @ u.conj().T
        q1 = discord_numeric(rho).discord
        q2 = discord_numeric(rotated).discord
        assert abs(q1 - q2) < 1e-6


def test_reported_basis_reproduces_objective(rng):
    # C_cl must equal S_A minus the objective at the reported basis.
    rho = random_density4(rng)
    res = discord_numeric(rho)
    x, _, _ = bloch_data(rho)
    s_a = binary_entropy(0.5 * (1.0 + np.linalg.norm(x)))
    val = measurement_conditional_entropy(rho, res.basis.theta, res.basis.phi)
    assert res.classical_correlation == pytest.approx(s_a - val, abs=1e-12)


def test_azimuthal_flatness_at_optimum():
    # The large-pore states have axially structured Bloch data, so the
    # objective at the optimal polar angle must not depend on phi.
    for beta in (0.5, 3.0, 20.0):
        rho = large_pore_state(beta)
        res = discord_numeric(rho)
        values = [
            measurement_conditional_entropy(rho, res.basis.theta, phi)
            for phi in np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
        ]
        assert max(values) - min(values) < 1e-9


def test_non_psd_input_rejected():
    bad = np.diag([0.6, 0.5, 0.0, -0.1]).astype(complex)
    with pytest.raises(InvalidStateError):
        discord_numeric(bad)


def test_bell_state_discord_is_one():
    res = discord_numeric(BELL_PHI_PLUS)
    assert res.mutual_information == pytest.approx(2.0, abs=1e-9)
    assert res.classical_correlation == pytest.approx(1.0, abs=1e-9)
    assert res.discord == pytest.approx(1.0, abs=1e-9)


def test_result_as_dict():
    res = discord_numeric(BELL_PHI_PLUS)
    d = res.as_dict()
    assert set(d) == {
        "mutual_information",
        "classical_correlation",
        "discord",
        "theta",
        "phi",
    }
