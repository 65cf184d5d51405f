"""
CableQSim - Pulses

Qubit frequency waveforms for two-qubit gates: ideal square steps and
Slepian-shaped adiabatic pulses, combined into a PulseSchedule that starts and
ends at the idle frequencies.

The Slepian control angle is

    theta(t) = theta_i + (theta_f - theta_i)/2 * sum_k lambda_k (1 - cos(2 k pi t / tau))

and the qubit sits at f_idle + df(t) with df(t) = f_int - f_idle + 2J / tan(theta(t)).

When both qubits move, build_schedule shapes their pair detuning instead:
d(t) = 2J / tan(theta(t)) runs from the idle pair detuning to its value at
theta_f, and each qubit covers the same fraction of its own idle-to-interaction
excursion, f_i(t) = f_int_i + (f_idle_i - f_int_i) * d(t) / d_idle.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from config import (
    DEFAULT_DT_NS,
    HYBRID_TAU_NS,
    PADDING_NS,
    SLEPIAN_LAMBDAS,
    SLEPIAN_TAU_NS,
    SLEPIAN_THETA_F,
)
from errors import DomainError, ScheduleError, SingularPulseError

log = logging.getLogger(__name__)

_TIME_EPS = 1e-9


def initial_angle(j: float, f_idle: float, f_int: float) -> float:
    """theta_i with tan(theta_i) = 2J / (f_idle - f_int), in (0, pi)."""
    return detuning_angle(j, f_idle - f_int)


def detuning_angle(j: float, detuning: float) -> float:
    if not j > 0:
        raise DomainError(f"coupling must be positive, got {j}")
    if detuning == 0:
        raise SingularPulseError("initial angle is undefined at zero idle detuning")
    return math.atan2(2 * j, detuning)


@dataclass(frozen=True)
class SquarePulse:
    f_idle: float
    f_int: float
    t_start: float
    t_end: float

    continuous = False

    def __post_init__(self):
        if not self.t_end > self.t_start >= 0:
            raise DomainError(f"square pulse needs t_end > t_start >= 0, got [{self.t_start}, {self.t_end})")

    @property
    def duration(self) -> float:
        return self.t_end - self.t_start

    def frequency(self, t: float) -> float:
        return self.f_int if self.t_start <= t < self.t_end else self.f_idle

    def pieces(self, total_time: float) -> list[tuple[float, float, bool]]:
        return [(0.0, self.t_start, True), (self.t_start, self.t_end, True), (self.t_end, total_time, True)]


@dataclass(frozen=True)
class SlepianPulse:
    f_idle: float
    f_int: float
    j_coupling: float
    tau: float = SLEPIAN_TAU_NS
    t_start: float = 0.0
    lambdas: tuple[float, ...] = SLEPIAN_LAMBDAS
    theta_f: float = SLEPIAN_THETA_F
    pair_detuning: float | None = None

    continuous = True

    def __post_init__(self):
        if not self.tau > 0:
            raise DomainError(f"pulse length must be positive, got {self.tau}")
        if self.t_start < 0:
            raise DomainError(f"pulse start must be non-negative, got {self.t_start}")
        if not self.lambdas:
            raise DomainError("at least one Slepian coefficient is required")
        odd_sum = sum(self.lambdas[0::2])
        if abs(odd_sum - 1) > 1e-6:
            raise DomainError(f"odd Slepian coefficients must sum to 1 so the midpoint reaches theta_f, got {odd_sum}")
        object.__setattr__(self, "lambdas", tuple(float(x) for x in self.lambdas))
        if self.f_idle == self.f_int:
            raise SingularPulseError("a Slepian pulse needs f_idle != f_int")
        # validates j and the idle detuning
        detuning_angle(self.j_coupling, self.idle_detuning)

    @property
    def idle_detuning(self) -> float:
        """Detuning the control angle is defined on, at the idle point."""
        return self.f_idle - self.f_int if self.pair_detuning is None else self.pair_detuning

    @property
    def theta_i(self) -> float:
        return detuning_angle(self.j_coupling, self.idle_detuning)

    @property
    def duration(self) -> float:
        return self.tau

    @property
    def t_end(self) -> float:
        return self.t_start + self.tau

    def frequency(self, t: float) -> float:
        if not self.t_start <= t <= self.t_end:
            return self.f_idle
        return self.f_idle + slepian_detuning(min(t - self.t_start, self.tau), self)

    def pieces(self, total_time: float) -> list[tuple[float, float, bool]]:
        return [(0.0, self.t_start, True), (self.t_start, self.t_end, False), (self.t_end, total_time, True)]


@dataclass(frozen=True)
class ConstantWaveform:
    """A qubit parked at its idle frequency for the whole schedule."""

    f_idle: float

    continuous = True

    def frequency(self, t: float) -> float:
        return self.f_idle

    def pieces(self, total_time: float) -> list[tuple[float, float, bool]]:
        return [(0.0, total_time, True)]


def control_angle(t: float, pulse: SlepianPulse) -> float:
    """theta(t) for t measured from the start of the pulse window."""
    if not -_TIME_EPS <= t <= pulse.tau + _TIME_EPS:
        raise DomainError(f"t = {t} ns is outside the pulse window [0, {pulse.tau}]")
    theta_i = pulse.theta_i
    series = sum(lam * (1 - math.cos(2 * k * math.pi * t / pulse.tau)) for k, lam in enumerate(pulse.lambdas, start=1))
    return theta_i + 0.5 * (pulse.theta_f - theta_i) * series


def slepian_detuning(t: float, pulse: SlepianPulse) -> float:
    """Frequency offset from f_idle at time t inside the pulse window (GHz)."""
    theta = control_angle(t, pulse)
    if abs(math.sin(theta)) < 1e-12:
        raise SingularPulseError(f"control angle reaches {theta:.6f} rad at t = {t} ns; check lambdas/theta_f")
    fraction = 2 * pulse.j_coupling / math.tan(theta) / pulse.idle_detuning
    return (pulse.f_idle - pulse.f_int) * (fraction - 1)


@dataclass(frozen=True)
class PulseSchedule:
    waveform_q1: SquarePulse | SlepianPulse | ConstantWaveform
    waveform_q2: SquarePulse | SlepianPulse | ConstantWaveform
    total_time: float
    sample_dt: float = DEFAULT_DT_NS
    gate_time: float = 0.0

    def __post_init__(self):
        if self.total_time < 0:
            raise ScheduleError(f"total time must be non-negative, got {self.total_time}")
        if not self.sample_dt > 0:
            raise ScheduleError(f"sample step must be positive, got {self.sample_dt}")
        for waveform in (self.waveform_q1, self.waveform_q2):
            t_end = getattr(waveform, "t_end", 0.0)
            if t_end > self.total_time + _TIME_EPS:
                raise ScheduleError(f"waveform ends at {t_end} ns, after the schedule ({self.total_time} ns)")

    def frequencies(self, t: float) -> tuple[float, float]:
        return self.waveform_q1.frequency(t), self.waveform_q2.frequency(t)

    def idle_frequencies(self) -> tuple[float, float]:
        return self.waveform_q1.f_idle, self.waveform_q2.f_idle

    def segments(self) -> list[tuple[float, float, bool]]:
        """
        Consecutive (t0, t1, constant) intervals covering [0, total_time];
        `constant` is True when neither frequency changes inside the interval.
        """
        cuts = {0.0, float(self.total_time)}
        shaped = []
        for waveform in (self.waveform_q1, self.waveform_q2):
            for t0, t1, constant in waveform.pieces(self.total_time):
                cuts.update((t0, t1))
                if not constant:
                    shaped.append((t0, t1))
        times = sorted(t for t in cuts if 0 <= t <= self.total_time)
        segments = []
        for t0, t1 in zip(times[:-1], times[1:]):
            if t1 - t0 <= _TIME_EPS:
                continue
            constant = not any(s0 < t1 - _TIME_EPS and t0 + _TIME_EPS < s1 for s0, s1 in shaped)
            segments.append((t0, t1, constant))
        return segments


def idle_schedule(f_idle1: float, f_idle2: float, duration: float) -> PulseSchedule:
    return PulseSchedule(ConstantWaveform(f_idle1), ConstantWaveform(f_idle2), total_time=duration)


class ScheduleKind(str, Enum):
    SQUARE_SQUARE = "square"
    SLEPIAN_SLEPIAN = "slepian"
    HYBRID = "hybrid"


@dataclass(frozen=True)
class ScheduleConfig:
    """
    Everything build_schedule needs. `hold` is the square-pulse hold time,
    `tau` the Slepian window; `tau_q2` overrides the window of qubit 2 and
    must agree with `tau`. In HYBRID mode `slepian_qubit` gets the Slepian
    pulse and the other qubit a square pulse over the same window.
    """

    f_idle1: float
    f_idle2: float
    f_int1: float
    f_int2: float
    hold: float | None = None
    tau: float = SLEPIAN_TAU_NS
    tau_q2: float | None = None
    j_coupling: float | None = None
    lambdas: tuple[float, ...] = SLEPIAN_LAMBDAS
    theta_f: float = SLEPIAN_THETA_F
    slepian_qubit: int = 1
    padding: float = PADDING_NS
    sample_dt: float = DEFAULT_DT_NS

    @classmethod
    def hybrid(cls, f_idle1, f_idle2, f_int1, f_int2, j_coupling, **kwargs) -> ScheduleConfig:
        kwargs.setdefault("tau", HYBRID_TAU_NS)
        return cls(f_idle1, f_idle2, f_int1, f_int2, j_coupling=j_coupling, **kwargs)


def _slepian_or_idle(f_idle, f_int, config: ScheduleConfig, tau: float, pair_detuning: float | None = None):
    if f_idle == f_int:
        # a qubit that does not move stays at idle
        return ConstantWaveform(f_idle)
    if config.j_coupling is None:
        raise ScheduleError("Slepian pulses need j_coupling")
    return SlepianPulse(f_idle, f_int, config.j_coupling, tau=tau, t_start=config.padding,
                        lambdas=tuple(config.lambdas), theta_f=config.theta_f, pair_detuning=pair_detuning)


def build_schedule(kind: ScheduleKind, config: ScheduleConfig) -> PulseSchedule:
    kind = ScheduleKind(kind)
    if config.padding < 0:
        raise ScheduleError(f"padding must be non-negative, got {config.padding}")
    pad = config.padding

    if kind is ScheduleKind.SQUARE_SQUARE:
        if config.hold is None:
            raise ScheduleError("square pulses need a hold time")
        if config.hold == 0:
            q1, q2 = ConstantWaveform(config.f_idle1), ConstantWaveform(config.f_idle2)
        else:
            q1 = SquarePulse(config.f_idle1, config.f_int1, pad, pad + config.hold)
            q2 = SquarePulse(config.f_idle2, config.f_int2, pad, pad + config.hold)
        window = config.hold

    elif kind is ScheduleKind.SLEPIAN_SLEPIAN:
        tau_q2 = config.tau if config.tau_q2 is None else config.tau_q2
        if abs(tau_q2 - config.tau) > _TIME_EPS:
            raise ScheduleError(f"inconsistent pulse lengths: {config.tau} ns and {tau_q2} ns")
        pair = None
        if config.f_idle1 != config.f_int1 and config.f_idle2 != config.f_int2:
            pair = (config.f_idle1 - config.f_int1) - (config.f_idle2 - config.f_int2)
        q1 = _slepian_or_idle(config.f_idle1, config.f_int1, config, config.tau, pair)
        q2 = _slepian_or_idle(config.f_idle2, config.f_int2, config, config.tau, pair)
        window = config.tau

    else:
        if config.hold is not None and abs(config.hold - config.tau) > _TIME_EPS:
            raise ScheduleError(f"inconsistent pulse lengths: hold {config.hold} ns, tau {config.tau} ns")
        if config.slepian_qubit not in (1, 2):
            raise ScheduleError(f"slepian_qubit must be 1 or 2, got {config.slepian_qubit}")
        square = {
            1: SquarePulse(config.f_idle1, config.f_int1, pad, pad + config.tau),
            2: SquarePulse(config.f_idle2, config.f_int2, pad, pad + config.tau),
        }
        if config.slepian_qubit == 1:
            q1, q2 = _slepian_or_idle(config.f_idle1, config.f_int1, config, config.tau), square[2]
        else:
            q1, q2 = square[1], _slepian_or_idle(config.f_idle2, config.f_int2, config, config.tau)
        window = config.tau

    schedule = PulseSchedule(q1, q2, total_time=window + 2 * pad, sample_dt=config.sample_dt, gate_time=window)
    log.debug("built %s schedule: window %.3f ns, total %.3f ns", kind.value, window, schedule.total_time)
    return schedule


def sample_schedule(schedule: PulseSchedule, dt: float | None = None) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(t, f_q1, f_q2) on a uniform grid including both end points."""
    dt = schedule.sample_dt if dt is None else dt
    n = max(1, int(round(schedule.total_time / dt)))
    times = np.linspace(0.0, schedule.total_time, n + 1)
    f1 = np.array([schedule.waveform_q1.frequency(t) for t in times])
    f2 = np.array([schedule.waveform_q2.frequency(t) for t in times])
    return times, f1, f2
