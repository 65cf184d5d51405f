import math

import numpy as np
import pytest

from errors import DomainError, ScheduleError, SingularPulseError
from pulses import (
    ConstantWaveform,
    ScheduleConfig,
    ScheduleKind,
    SlepianPulse,
    SquarePulse,
    build_schedule,
    control_angle,
    idle_schedule,
    initial_angle,
    sample_schedule,
    slepian_detuning,
)

J = 0.01


@pytest.fixture
def pulse():
    return SlepianPulse(f_idle=4.758, f_int=4.75, j_coupling=J, tau=450.0)


def test_initial_angle():
    assert initial_angle(J, 4.758, 4.75) == pytest.approx(math.atan(2 * J / 0.008))
    # idle below the interaction point puts theta_i in the second quadrant
    assert math.pi / 2 < initial_angle(J, 4.66, 4.75) < math.pi


def test_initial_angle_errors():
    with pytest.raises(SingularPulseError):
        initial_angle(J, 4.75, 4.75)
    with pytest.raises(DomainError):
        initial_angle(0.0, 4.758, 4.75)


def test_control_angle_boundaries(pulse):
    assert control_angle(0.0, pulse) == pytest.approx(pulse.theta_i, abs=1e-12)
    assert control_angle(225.0, pulse) == pytest.approx(pulse.theta_f, abs=1e-12)
    assert control_angle(450.0, pulse) == pytest.approx(pulse.theta_i, abs=1e-12)


def test_control_angle_symmetric(pulse):
    for t in (13.0, 101.5, 200.0):
        assert control_angle(t, pulse) == pytest.approx(control_angle(450.0 - t, pulse), abs=1e-12)


def test_control_angle_outside_window(pulse):
    with pytest.raises(DomainError):
        control_angle(451.0, pulse)


def test_detuning_starts_and_ends_at_idle(pulse):
    assert slepian_detuning(0.0, pulse) == pytest.approx(0.0, abs=1e-12)
    assert slepian_detuning(450.0, pulse) == pytest.approx(0.0, abs=1e-12)
    mid = slepian_detuning(225.0, pulse)
    assert mid == pytest.approx(4.75 - 4.758 + 2 * J / math.tan(pulse.theta_f))


def test_singular_control_angle():
    flat = SlepianPulse(f_idle=4.758, f_int=4.75, j_coupling=J, tau=100.0, theta_f=0.0)
    with pytest.raises(SingularPulseError):
        slepian_detuning(50.0, flat)


def test_slepian_coefficients_must_reach_theta_f():
    with pytest.raises(DomainError):
        SlepianPulse(f_idle=4.758, f_int=4.75, j_coupling=J, lambdas=(1.0, 0.5, 0.5))


def test_square_pulse_half_open():
    square = SquarePulse(4.684, 4.708, 2.0, 12.0)
    assert square.frequency(1.999) == 4.684
    assert square.frequency(2.0) == 4.708
    assert square.frequency(12.0) == 4.684
    with pytest.raises(DomainError):
        SquarePulse(4.684, 4.708, 5.0, 5.0)


def test_square_schedule():
    schedule = build_schedule(ScheduleKind.SQUARE_SQUARE, ScheduleConfig(4.684, 4.738, 4.708, 4.708, hold=10.0))
    assert schedule.total_time == pytest.approx(14.0)
    assert schedule.gate_time == pytest.approx(10.0)
    assert schedule.frequencies(0.0) == (4.684, 4.738)
    assert schedule.frequencies(5.0) == (4.708, 4.708)
    assert schedule.frequencies(14.0) == (4.684, 4.738)
    assert schedule.segments() == [(0.0, 2.0, True), (2.0, 12.0, True), (12.0, 14.0, True)]


def test_square_schedule_needs_hold():
    with pytest.raises(ScheduleError):
        build_schedule(ScheduleKind.SQUARE_SQUARE, ScheduleConfig(4.684, 4.738, 4.708, 4.708))


def test_zero_hold_is_idle():
    schedule = build_schedule(ScheduleKind.SQUARE_SQUARE, ScheduleConfig(4.684, 4.738, 4.708, 4.708, hold=0.0))
    assert isinstance(schedule.waveform_q1, ConstantWaveform)
    assert schedule.segments() == [(0.0, 4.0, True)]


def test_slepian_schedule_boundaries_at_idle():
    config = ScheduleConfig(4.665, 4.758, 4.54, 4.75, tau=450.0, j_coupling=J)
    schedule = build_schedule(ScheduleKind.SLEPIAN_SLEPIAN, config)
    assert schedule.total_time == pytest.approx(454.0)
    for t in (0.0, 2.0, 452.0, 454.0):
        f1, f2 = schedule.frequencies(t)
        assert f1 == pytest.approx(4.665, abs=1e-12)
        assert f2 == pytest.approx(4.758, abs=1e-12)
    assert schedule.segments() == [(0.0, 2.0, True), (2.0, 452.0, False), (452.0, 454.0, True)]


def test_slepian_qubit_that_stays_idle():
    config = ScheduleConfig(4.708, 4.758, 4.708, 4.75, tau=100.0, j_coupling=J)
    schedule = build_schedule(ScheduleKind.SLEPIAN_SLEPIAN, config)
    assert isinstance(schedule.waveform_q1, ConstantWaveform)
    assert isinstance(schedule.waveform_q2, SlepianPulse)


def test_slepian_needs_coupling():
    with pytest.raises(ScheduleError):
        build_schedule(ScheduleKind.SLEPIAN_SLEPIAN, ScheduleConfig(4.665, 4.758, 4.54, 4.75))


def test_inconsistent_pulse_lengths():
    config = ScheduleConfig(4.665, 4.758, 4.54, 4.75, tau=450.0, tau_q2=400.0, j_coupling=J)
    with pytest.raises(ScheduleError, match="inconsistent"):
        build_schedule(ScheduleKind.SLEPIAN_SLEPIAN, config)


def test_hybrid_schedule():
    config = ScheduleConfig.hybrid(4.665, 4.758, 4.54, 4.75, J)
    schedule = build_schedule(ScheduleKind.HYBRID, config)
    assert schedule.gate_time == pytest.approx(240.0)
    assert isinstance(schedule.waveform_q1, SlepianPulse)
    assert isinstance(schedule.waveform_q2, SquarePulse)
    assert schedule.frequencies(100.0)[1] == 4.75

    with pytest.raises(ScheduleError):
        build_schedule(ScheduleKind.HYBRID, ScheduleConfig.hybrid(4.665, 4.758, 4.54, 4.75, J, hold=100.0))


def test_sample_schedule_grid():
    schedule = build_schedule(ScheduleKind.SQUARE_SQUARE, ScheduleConfig(4.684, 4.738, 4.708, 4.708, hold=10.0))
    t, f1, f2 = sample_schedule(schedule, dt=0.5)
    assert len(t) == 29
    assert t[-1] == pytest.approx(14.0)
    assert f1[0] == 4.684 and f1[10] == 4.708


def test_idle_schedule():
    schedule = idle_schedule(4.6, 4.7, 20.0)
    t, f1, f2 = sample_schedule(schedule)
    assert np.all(f1 == 4.6) and np.all(f2 == 4.7)


def test_pair_detuning_follows_control_angle():
    config = ScheduleConfig(4.665, 4.758, 4.54, 4.75, tau=450.0, j_coupling=J)
    schedule = build_schedule(ScheduleKind.SLEPIAN_SLEPIAN, config)
    q1, q2 = schedule.waveform_q1, schedule.waveform_q2
    idle_pair = (4.665 - 4.54) - (4.758 - 4.75)
    assert q1.pair_detuning == q2.pair_detuning == pytest.approx(idle_pair)
    assert q1.theta_i == pytest.approx(math.atan2(2 * J, idle_pair))

    for t in (50.0, 227.0, 300.0):
        f1, f2 = schedule.frequencies(t)
        theta = control_angle(t - config.padding, q1)
        assert (f1 - 4.54) - (f2 - 4.75) == pytest.approx(2 * J / math.tan(theta), abs=1e-12)
        # both qubits cover the same fraction of their excursion
        assert (f1 - 4.54) / (4.665 - 4.54) == pytest.approx((f2 - 4.75) / (4.758 - 4.75), abs=1e-12)


def test_pair_detuning_must_be_nonzero():
    # both excursions are exactly 0.25 GHz
    config = ScheduleConfig(4.75, 4.5, 4.5, 4.25, tau=100.0, j_coupling=J)
    with pytest.raises(SingularPulseError):
        build_schedule(ScheduleKind.SLEPIAN_SLEPIAN, config)
