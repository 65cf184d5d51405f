import json

import numpy as np
import pytest

from dynamics import ComputationalGate, OccupancyTrace, virtual_z_correct
from errors import DomainError, TraceMismatchError
from gatemetrics import (
    GateKind,
    LossModel,
    SearchSpec,
    calibrate_gate,
    cz_resonance,
    decompose_coherent_error,
    duration_scan,
    first_maximum,
    incoherent_error,
    interaction_pair,
    model_unitary,
    optimize_operating_point,
    shaping_coupling,
    target_unitary,
    unitary_fidelity,
)
from pulses import ScheduleKind

ISWAP = target_unitary(GateKind.ISWAP)
CZ = target_unitary(GateKind.CZ)


def gate_of(u4, leakage=None):
    leakage = np.zeros(4) if leakage is None else leakage
    return ComputationalGate(u4=u4, leakage_per_state=leakage, duration=100.0, total_time=104.0,
                             frame_freqs=np.zeros(4))


def flat_trace(qubit=1.0, mode=0.0, t_end=100.0, samples=11):
    times = np.linspace(0.0, t_end, samples)
    return OccupancyTrace(
        times=times,
        qubit_occupancy=np.column_stack([np.full(samples, qubit), np.zeros(samples)]),
        mode_occupancy=np.full((samples, 2), mode / 2),
        initial_label=(1, 0, 0, 0),
        mode_indices=(10, 11),
    )


@pytest.mark.parametrize("target", [ISWAP, CZ])
def test_fidelity_of_exact_gate(target):
    assert unitary_fidelity(target, target) == pytest.approx(1.0)


def test_fidelity_arithmetic():
    assert unitary_fidelity(np.eye(4), CZ) == pytest.approx(0.4)
    leaky = CZ.copy()
    leaky[:, 3] = 0
    assert unitary_fidelity(leaky, CZ) == pytest.approx(0.6)
    assert unitary_fidelity(np.zeros((4, 4)), CZ) == 0.0


def test_model_unitary_reduces_to_targets():
    np.testing.assert_allclose(model_unitary(np.pi / 2, 0.0, GateKind.ISWAP), ISWAP, atol=1e-15)
    np.testing.assert_allclose(model_unitary(0.0, 0.0, GateKind.CZ), CZ, atol=1e-15)


def test_perfect_iswap_has_no_error_components():
    err = decompose_coherent_error(gate_of(ISWAP), GateKind.ISWAP)
    assert err.total == pytest.approx(0.0, abs=1e-12)
    assert err.leakage == 0.0
    assert err.angle_error == pytest.approx(0.0, abs=1e-12)
    assert err.cond_phase_error == pytest.approx(0.0, abs=1e-12)
    assert err.swap_angle == pytest.approx(np.pi / 2)
    assert not err.indeterminate


def test_iswap_swap_angle_error():
    theta = np.pi / 2 - 0.01
    err = decompose_coherent_error(gate_of(model_unitary(theta, 0.0, GateKind.ISWAP)), GateKind.ISWAP)
    s = np.sin(theta)
    assert err.angle_error == pytest.approx(1 - ((2 + 2 * s) ** 2 + 4) / 20)
    assert err.angle_error > 0
    assert err.leakage == 0.0
    assert err.cond_phase_error < 1e-6


def test_cz_conditional_phase_error():
    delta = 0.02
    u4 = model_unitary(0.0, delta, GateKind.CZ)
    err = decompose_coherent_error(gate_of(u4), GateKind.CZ)
    expected = 1 - (abs(3 + np.exp(1j * delta)) ** 2 + 4) / 20
    assert err.cond_phase_error == pytest.approx(expected)
    assert err.total == pytest.approx(expected)
    assert err.angle_error == pytest.approx(0.0, abs=1e-12)
    assert err.cond_phase == pytest.approx(delta - np.pi)


def test_conditional_phase_indeterminate_under_full_leakage():
    u4 = CZ.copy()
    u4[3, 3] = 0
    err = decompose_coherent_error(gate_of(u4, np.array([0, 0, 0, 1.0])), GateKind.CZ)
    assert err.indeterminate == ["cond_phase"]
    assert np.isnan(err.cond_phase_error)
    assert err.leakage == pytest.approx(0.25)


def test_incoherent_error_of_constant_occupation():
    loss = LossModel(gamma_qubit=1e-4, gamma_mode=2e-4)
    result = incoherent_error([flat_trace(qubit=1.0, mode=0.5)] * 4, loss)
    assert result.qubit_loss == pytest.approx(1 - np.exp(-0.01))
    assert result.cable_loss == pytest.approx(1 - np.exp(-0.01))
    assert result.total == pytest.approx(1 - np.exp(-0.02))
    assert result.convention == "excited-average"
    assert result.basis_total == pytest.approx(result.total)


def test_incoherent_error_zero_rates():
    result = incoherent_error([flat_trace()] * 4, LossModel(0.0, 0.0))
    assert result.total == 0.0


def test_incoherent_error_trace_checks():
    loss = LossModel(1e-4, 1e-4)
    with pytest.raises(TraceMismatchError):
        incoherent_error([flat_trace()] * 3, loss)
    with pytest.raises(TraceMismatchError):
        incoherent_error([flat_trace()] * 3 + [flat_trace(t_end=90.0)], loss)


def test_loss_model_from_params(params):
    loss = LossModel.from_params(params)
    assert loss.gamma_qubit == pytest.approx(1e-5)
    assert loss.gamma_mode == pytest.approx(1e-4)
    assert loss.scaled(2.0).gamma_mode == pytest.approx(2e-4)
    with pytest.raises(DomainError):
        LossModel(-1.0, 0.0)


def test_first_maximum():
    values = np.array([0.1] * 5 + [0.6, 0.8, 0.7] + [0.2] * 20)
    assert first_maximum(values, window=2) == 6
    assert first_maximum(values * 0.5, window=2) is None


def test_interaction_pair(params):
    assert interaction_pair(params, GateKind.ISWAP, 4.708) == (4.708, 4.708)
    f1, f2 = interaction_pair(params, GateKind.CZ, 4.75)
    assert f2 == 4.75
    assert f1 == pytest.approx(4.75 + params.alpha2)


def test_search_spec_needs_a_grid():
    with pytest.raises(DomainError):
        SearchSpec()


def test_calibrate_square_iswap(params, mode_set, qubit_trunc):
    report = calibrate_gate(params, mode_set, qubit_trunc, GateKind.ISWAP, ScheduleKind.SQUARE_SQUARE,
                            (4.684, 4.738), (4.708, 4.708))
    assert 100.0 < report.duration < 300.0
    assert report.fidelity > 0.99
    assert report.incoherent_error is not None
    assert 0.0 < report.incoherent_error.total < 0.01
    assert report.total_error == pytest.approx(report.coherent_error.total + report.incoherent_error.total)

    data = json.loads(json.dumps(report.to_dict()))
    assert data["gate_kind"] == "iswap"
    assert data["schedule_kind"] == "square"
    assert len(data["corrected_u4"]["real"]) == 4


def test_incoherent_error_averages_excited_states():
    loss = LossModel(gamma_qubit=1e-4, gamma_mode=2e-4)
    ground = flat_trace(qubit=0.0, mode=0.0)
    excited = flat_trace(qubit=1.0, mode=0.5)
    result = incoherent_error([ground, excited, excited, excited], loss)
    assert result.total == pytest.approx(1 - np.exp(-0.02))
    assert result.qubit_loss == pytest.approx(1 - np.exp(-0.01))
    assert result.basis_total == pytest.approx(0.75 * result.total)
    assert result.to_dict()["basis_total"] == pytest.approx(result.basis_total)


def test_opposite_iswap_phase_is_a_local_frame():
    minus_i = ISWAP.conj()
    corrected, phi1, phi2 = virtual_z_correct(minus_i, ISWAP)
    assert unitary_fidelity(corrected, ISWAP) == pytest.approx(1.0, abs=1e-9)
    assert np.cos(phi1) == pytest.approx(-1.0, abs=1e-9)
    assert np.cos(phi2) == pytest.approx(-1.0, abs=1e-9)


def test_shaping_coupling():
    assert shaping_coupling(GateKind.CZ, ScheduleKind.SLEPIAN_SLEPIAN, 0.002) == pytest.approx(0.004)
    assert shaping_coupling(GateKind.CZ, ScheduleKind.HYBRID, 0.002) == 0.002
    assert shaping_coupling(GateKind.ISWAP, ScheduleKind.SLEPIAN_SLEPIAN, 0.002) == 0.002


def test_cz_resonance_is_dressed(params, mode_set, trunc):
    crossing = cz_resonance(params, mode_set, trunc, (4.54, 4.75))
    # bare |11>-|02> resonance sits at 2 * 4.75 + alpha - 4.75
    assert crossing.location == pytest.approx(4.536, abs=0.003)
    assert crossing.location != pytest.approx(4.75 + params.alpha2, abs=1e-4)
    assert 0.5e-3 < crossing.j < 4e-3


def test_calibrate_square_cz_tunes_onto_resonance(params, mode_set, trunc):
    crossing = cz_resonance(params, mode_set, trunc, (4.54, 4.75))
    report = calibrate_gate(params, mode_set, trunc, GateKind.CZ, ScheduleKind.SQUARE_SQUARE,
                            (4.665, 4.758), (4.54, 4.75), with_incoherent=False)
    assert abs(report.int_freqs[0] - crossing.location) <= 2 * crossing.j
    assert report.int_freqs[1] == 4.75
    assert report.coherent_error.total < 0.01
    assert 200.0 < report.duration < 350.0


def test_optimize_operating_point_over_interaction_grid(params, mode_set, qubit_trunc):
    search = SearchSpec(idle_q2_grid=(4.738,), int_grid=(4.70, 4.708))
    report, rows = optimize_operating_point(params, mode_set, qubit_trunc, GateKind.ISWAP, search)

    # two-level qubits have no ZZ, so the idle point has no ZZ-free partner
    skipped = rows[0]
    assert skipped.flag == "no-zz-free-partner"
    assert np.isnan(skipped.f_idle1)
    assert skipped.f_idle2 == 4.738
    assert (skipped.f_int1, skipped.f_int2) == (4.708, 4.708)

    scanned = rows[1:]
    assert [row.flag for row in scanned] == ["ok", "ok"]
    assert [row.f_int1 for row in scanned] == [4.70, 4.708]
    best = min(scanned, key=lambda row: row.coherent_error)
    assert report.int_freqs == (best.f_int1, best.f_int2)
    assert report.incoherent_error is not None


def test_duration_scan_square_iswap(params, mode_set, qubit_trunc):
    rows = duration_scan(params, mode_set, qubit_trunc, GateKind.ISWAP, [4.70, 4.708])
    assert [row.f_int for row in rows] == [4.70, 4.708]
    for row in rows:
        assert row.flag == "ok"
        assert row.f_int1 == row.f_int2 == row.f_int
        assert 100.0 < row.duration < 400.0
        assert row.fidelity > 0.99
