"""
CableQSim - Gate Metrics

Fidelity of a simulated computational-subspace gate, the split of its coherent
error into leakage / swap-angle / conditional-phase parts, the T1 error from
occupancy traces, and the calibration and operating-point searches for the
remote iSWAP and CZ gates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np
from scipy import integrate, optimize

from circuit import CircuitParams, ModeSet
from config import (
    COARSE_STEP_NS,
    CZ_IDLE,
    CZ_INT,
    CZ_RESONANCE_HALF_WIDTH_GHZ,
    CZ_SLEPIAN_COUPLING_SCALE,
    DEFAULT_DT_NS,
    FINE_TOL_NS,
    FIRST_MAX_WINDOW_NS,
    HYBRID_TAU_NS,
    ISWAP_IDLE,
    ISWAP_INT,
    MAX_GATE_DURATION_NS,
    MIN_GATE_FIDELITY,
    PADDING_NS,
    PHASE_INDETERMINATE,
    SLEPIAN_TAU_NS,
    TUNE_DT_NS,
    TUNE_TOL_GHZ,
)
from dynamics import ComputationalGate, computational_gate, idle_basis, occupancy_trajectory, propagate, virtual_z_correct
from errors import (
    CableSimError,
    DomainError,
    GateNotFoundError,
    InfeasibleSearchError,
    LabelAmbiguityError,
    NoCrossingError,
    TraceMismatchError,
)
from hilbert import TruncationSpec, build_hamiltonian, computational_labels
from pool_manager import get_pool_manager
from pulses import ScheduleConfig, ScheduleKind, build_schedule
from spectrum import PairCrossing, diagonalize, eigensystem, locate_pair_crossing, xx_splitting, zz_free_partner

log = logging.getLogger(__name__)


class GateKind(str, Enum):
    ISWAP = "iswap"
    CZ = "cz"


def target_unitary(kind: GateKind) -> np.ndarray:
    """iSWAP with +i off-diagonals, or CZ, in the order |00>, |01>, |10>, |11>."""
    if GateKind(kind) is GateKind.ISWAP:
        return np.array([[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], dtype=complex)
    return np.diag([1, 1, 1, -1]).astype(complex)


def unitary_fidelity(u4: np.ndarray, target: np.ndarray) -> float:
    """F = (|tr(T^dag U)|^2 + tr(U^dag U)) / 20 over the 4-dimensional subspace."""
    u4 = np.asarray(u4)
    overlap = abs(np.trace(target.conj().T @ u4)) ** 2
    norm = np.trace(u4.conj().T @ u4).real
    return float((overlap + norm) / 20)


def model_unitary(theta: float, delta: float, kind: GateKind) -> np.ndarray:
    """Swap block with angle theta and |11> phase offset delta on top of the ideal gate's sign."""
    c, s = np.cos(theta), np.sin(theta)
    corner = 1.0 if GateKind(kind) is GateKind.ISWAP else -1.0
    return np.array([
        [1, 0, 0, 0],
        [0, c, 1j * s, 0],
        [0, 1j * s, c, 0],
        [0, 0, 0, corner * np.exp(1j * delta)],
    ], dtype=complex)


def _wrap(phase: float) -> float:
    return float(np.angle(np.exp(1j * phase)))


@dataclass(frozen=True)
class LossModel:
    gamma_qubit: float   # 1/ns
    gamma_mode: float    # 1/ns

    def __post_init__(self):
        if self.gamma_qubit < 0 or self.gamma_mode < 0:
            raise DomainError("decay rates must be non-negative")

    @classmethod
    def from_params(cls, params: CircuitParams) -> LossModel:
        return cls(gamma_qubit=1 / (1000 * params.t1_qubit), gamma_mode=1 / (1000 * params.t1_cable))

    def scaled(self, factor: float) -> LossModel:
        return LossModel(self.gamma_qubit * factor, self.gamma_mode * factor)


@dataclass
class CoherentError:
    total: float
    leakage: float
    angle_error: float
    cond_phase_error: float
    swap_angle: float
    cond_phase: float
    indeterminate: list[str] = field(default_factory=list)


@dataclass
class IncoherentError:
    qubit_loss: float
    cable_loss: float
    total: float
    basis_total: float = float("nan")
    convention: str = "excited-average"


@dataclass
class GateReport:
    gate_kind: GateKind
    schedule_kind: ScheduleKind
    duration: float
    idle_freqs: tuple[float, float]
    int_freqs: tuple[float, float]
    fidelity: float
    coherent_error: CoherentError
    incoherent_error: IncoherentError | None
    corrected_u4: np.ndarray
    phases: tuple[float, float] = (0.0, 0.0)
    j_coupling: float | None = None

    @property
    def total_error(self) -> float:
        incoherent = self.incoherent_error.total if self.incoherent_error else 0.0
        return self.coherent_error.total + incoherent

    def to_dict(self) -> dict:
        coherent = self.coherent_error
        data = {
            "gate_kind": GateKind(self.gate_kind).value,
            "schedule_kind": ScheduleKind(self.schedule_kind).value,
            "duration_ns": self.duration,
            "idle_freqs_ghz": list(self.idle_freqs),
            "int_freqs_ghz": list(self.int_freqs),
            "fidelity": self.fidelity,
            "coherent_error": {
                "total": coherent.total,
                "leakage": coherent.leakage,
                "angle_error": coherent.angle_error,
                "cond_phase_error": coherent.cond_phase_error,
                "swap_angle_rad": coherent.swap_angle,
                "cond_phase_rad": coherent.cond_phase,
                "indeterminate": list(coherent.indeterminate),
            },
            "incoherent_error": None,
            "total_error": self.total_error,
            "virtual_z_rad": list(self.phases),
            "j_coupling_ghz": self.j_coupling,
            "corrected_u4": {
                "real": self.corrected_u4.real.tolist(),
                "imag": self.corrected_u4.imag.tolist(),
            },
        }
        if self.incoherent_error is not None:
            inc = self.incoherent_error
            data["incoherent_error"] = {
                "qubit_loss": inc.qubit_loss,
                "cable_loss": inc.cable_loss,
                "total": inc.total,
                "basis_total": inc.basis_total,
                "convention": inc.convention,
            }
        return data


def decompose_coherent_error(gate: ComputationalGate, target_kind: GateKind) -> CoherentError:
    """
    Components of the coherent error of an already Z-corrected gate, each the
    fidelity deficit of a model with a single imperfection.
    """
    kind = GateKind(target_kind)
    target = target_unitary(kind)
    u = gate.u4
    indeterminate = []

    theta = float(np.arcsin(np.clip(abs(u[1, 2]), 0.0, 1.0)))
    angle_error = 1 - unitary_fidelity(model_unitary(theta, 0.0, kind), target)

    pair = (u[1, 2], u[2, 1]) if kind is GateKind.ISWAP else (u[1, 1], u[2, 2])
    needed = (u[0, 0], u[3, 3]) + pair
    if min(abs(x) for x in needed) < PHASE_INDETERMINATE:
        indeterminate.append("cond_phase")
        cond_phase, cond_phase_error = float("nan"), float("nan")
    else:
        ideal_pair = (target[1, 2], target[2, 1]) if kind is GateKind.ISWAP else (target[1, 1], target[2, 2])
        cond_phase = float(np.angle(u[0, 0] * u[3, 3] * np.conj(pair[0] * pair[1])))
        ideal = float(np.angle(target[0, 0] * target[3, 3] * np.conj(ideal_pair[0] * ideal_pair[1])))
        ideal_theta = np.pi / 2 if kind is GateKind.ISWAP else 0.0
        model = model_unitary(ideal_theta, _wrap(cond_phase - ideal), kind)
        cond_phase_error = 1 - unitary_fidelity(model, target)

    return CoherentError(
        total=1 - unitary_fidelity(u, target),
        leakage=float(np.mean(gate.leakage_per_state)),
        angle_error=max(0.0, angle_error),
        cond_phase_error=cond_phase_error if np.isnan(cond_phase_error) else max(0.0, cond_phase_error),
        swap_angle=theta,
        cond_phase=cond_phase,
        indeterminate=indeterminate,
    )


def incoherent_error(traces, loss: LossModel) -> IncoherentError:
    """
    T1 error from the bare occupancies of the four computational trajectories
    (|00>, |01>, |10>, |11> order): D = gamma * integral <n> dt, survival
    exp(-D). The reported losses average over the three excited states, the
    ones a T1 process can act on; `basis_total` averages over all four.
    """
    traces = list(traces)
    if len(traces) != 4:
        raise TraceMismatchError(f"need the four computational trajectories, got {len(traces)}")
    times = traces[0].times
    for trace in traces[1:]:
        if trace.times.shape != times.shape or not np.allclose(trace.times, times, atol=1e-9):
            raise TraceMismatchError("occupancy traces are on different time grids")

    d_qubit = np.array([loss.gamma_qubit * integrate.trapezoid(t.qubit_occupancy.sum(axis=1), t.times) for t in traces])
    d_cable = np.array([loss.gamma_mode * integrate.trapezoid(t.mode_occupancy.sum(axis=1), t.times) for t in traces])
    lost = 1 - np.exp(-(d_qubit + d_cable))
    return IncoherentError(
        qubit_loss=float(np.mean(1 - np.exp(-d_qubit[1:]))),
        cable_loss=float(np.mean(1 - np.exp(-d_cable[1:]))),
        total=float(np.mean(lost[1:])),
        basis_total=float(np.mean(lost)),
    )


def corrected_fidelity(u4: np.ndarray, target: np.ndarray, refine: bool = True) -> float:
    corrected, _, _ = virtual_z_correct(u4, target, refine=refine)
    return unitary_fidelity(corrected, target)


def first_maximum(values: np.ndarray, window: int, floor: float = MIN_GATE_FIDELITY) -> int | None:
    """First index that dominates +-window samples and exceeds `floor`."""
    n = len(values)
    for i in range(window, n):
        if values[i] <= floor:
            continue
        lo, hi = max(0, i - window), min(n, i + window + 1)
        if values[i] >= values[lo:hi].max():
            return i
    return None


class _SquareFamily:
    """
    u4 of a square gate as a function of the hold time, from one
    eigendecomposition at the interaction point. The idle padding only adds
    idle-eigenstate phases.
    """

    def __init__(self, params, mode_set, trunc, idle_spectrum, int_freqs, padding):
        w, v = eigensystem(build_hamiltonian(params, mode_set, trunc, *int_freqs))
        vectors, self.freqs = idle_basis(idle_spectrum)
        self.left = vectors.conj().T @ v
        self.right = v.conj().T @ vectors
        self.w = w
        self.padding = padding

    def __call__(self, hold: float) -> np.ndarray:
        middle = (self.left * np.exp(-2j * np.pi * self.w * hold)) @ self.right
        after = np.exp(2j * np.pi * self.freqs * (hold + self.padding))
        before = np.exp(-2j * np.pi * self.freqs * self.padding)
        return after[:, None] * middle * before[None, :]


def _calibrate_hold(family: _SquareFamily, target: np.ndarray) -> float:
    holds = np.arange(0.0, MAX_GATE_DURATION_NS + COARSE_STEP_NS / 2, COARSE_STEP_NS)
    window = int(round(FIRST_MAX_WINDOW_NS / COARSE_STEP_NS))
    coarse = np.empty(len(holds))
    computed, i = 0, None
    # extend the coarse scan until the first maximum has its full window
    while computed < len(holds):
        stop = min(len(holds), computed + 100)
        coarse[computed:stop] = [corrected_fidelity(family(h), target, refine=False) for h in holds[computed:stop]]
        computed = stop
        i = first_maximum(coarse[:computed], window)
        if i is not None and (i + window < computed or computed == len(holds)):
            break
    coarse = coarse[:computed]
    if i is None:
        raise GateNotFoundError(
            f"no fidelity maximum above {MIN_GATE_FIDELITY} within {MAX_GATE_DURATION_NS:.0f} ns (best {coarse.max():.4f})"
        )
    lo, hi = max(0.0, holds[i] - COARSE_STEP_NS), holds[i] + COARSE_STEP_NS
    result = optimize.minimize_scalar(
        lambda h: -corrected_fidelity(family(h), target), bounds=(lo, hi), method="bounded",
        options={"xatol": FINE_TOL_NS},
    )
    hold = float(result.x) if -result.fun >= coarse[i] else float(holds[i])
    log.debug("hold time %.3f ns (coarse %.0f ns, F=%.6f)", hold, holds[i], max(-result.fun, coarse[i]))
    return hold


def cz_resonance(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                 int_freqs: tuple[float, float], half_width: float = CZ_RESONANCE_HALF_WIDTH_GHZ) -> PairCrossing:
    """
    Avoided crossing of |11,00> with the doubly excited state of the lower
    qubit, searched along f1 around int_freqs[0] at fixed f2.
    """
    n = len(mode_set)
    f1, f2 = int_freqs
    doubly = (0, 2) if f1 < f2 else (2, 0)
    return locate_pair_crossing(params, mode_set, trunc, (1, 1) + (0,) * n, doubly + (0,) * n,
                                "f1", (f1 - half_width, f1 + half_width), f2)


def pair_coupling_for(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                      gate_kind: GateKind, int_freqs: tuple[float, float],
                      half_width: float = CZ_RESONANCE_HALF_WIDTH_GHZ) -> float:
    """
    Coupling the Slepian pulse is shaped for: the effective XX coupling for
    iSWAP, J between |11,00> and the doubly excited state of the lower qubit
    for CZ.
    """
    if GateKind(gate_kind) is GateKind.ISWAP:
        f1, f2 = int_freqs
        return xx_splitting(params, mode_set, trunc, 0.5 * (f1 + f2))
    return cz_resonance(params, mode_set, trunc, int_freqs, half_width).j


def shaping_coupling(gate_kind: GateKind, schedule_kind: ScheduleKind, j_coupling: float) -> float:
    """Coupling handed to the pulse shape; Slepian CZ pulses use the full |11>-|02> splitting."""
    if GateKind(gate_kind) is GateKind.CZ and ScheduleKind(schedule_kind) is ScheduleKind.SLEPIAN_SLEPIAN:
        return CZ_SLEPIAN_COUPLING_SCALE * j_coupling
    return j_coupling


def _tune_f1(infidelity, crossing: PairCrossing, what: str) -> float:
    lo, hi = crossing.location - 2 * crossing.j, crossing.location + 2 * crossing.j
    result = optimize.minimize_scalar(infidelity, bounds=(lo, hi), method="bounded", options={"xatol": TUNE_TOL_GHZ})
    f1 = float(result.x)
    log.info("%s: f1 tuned to %.6f GHz (resonance %.6f GHz, error %.3e)", what, f1, crossing.location, result.fun)
    return f1


def _tune_square_cz(params, mode_set, trunc, idle_spectrum, int_freqs, padding, target) -> float:
    """f1 and hold time are tuned together; the hold follows each trial f1."""
    f2 = int_freqs[1]

    def infidelity(f1):
        family = _SquareFamily(params, mode_set, trunc, idle_spectrum, (f1, f2), padding)
        try:
            return 1 - corrected_fidelity(family(_calibrate_hold(family, target)), target)
        except GateNotFoundError:
            return 1.0

    return _tune_f1(infidelity, cz_resonance(params, mode_set, trunc, int_freqs), "square CZ")


def _tune_slepian_cz(params, mode_set, trunc, idle_spectrum, idle_freqs, int_freqs, tau, j_shape,
                     padding, target) -> float:
    """f1 at the pulse midpoint, tuned at the coarse TUNE_DT_NS step."""
    f2 = int_freqs[1]

    def infidelity(f1):
        config = ScheduleConfig(*idle_freqs, f1, f2, tau=tau, j_coupling=j_shape, padding=padding,
                                sample_dt=TUNE_DT_NS)
        schedule = build_schedule(ScheduleKind.SLEPIAN_SLEPIAN, config)
        gate = computational_gate(propagate(params, mode_set, trunc, schedule, TUNE_DT_NS), idle_spectrum)
        return 1 - corrected_fidelity(gate.u4, target)

    return _tune_f1(infidelity, cz_resonance(params, mode_set, trunc, int_freqs), "Slepian CZ")


def calibrate_gate(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                   gate_kind: GateKind, schedule_kind: ScheduleKind,
                   idle_freqs: tuple[float, float], int_freqs: tuple[float, float],
                   loss: LossModel | None = None, tau: float | None = None,
                   j_coupling: float | None = None, slepian_qubit: int = 1,
                   dt: float = DEFAULT_DT_NS, padding: float = PADDING_NS,
                   with_incoherent: bool = True, tune_interaction: bool = True) -> GateReport:
    """
    Calibrate one gate. Square gates scan the hold time to the first fidelity
    maximum; Slepian and hybrid gates are evaluated at their window `tau`.

    With `tune_interaction` a square or Slepian CZ first moves f1 onto the
    |11>-|02> resonance nearest int_freqs and then tunes it within +-2J for
    the best gate; the report carries the tuned interaction point.
    """
    gate_kind, schedule_kind = GateKind(gate_kind), ScheduleKind(schedule_kind)
    if gate_kind is GateKind.CZ:
        trunc.require_second_excited()
    target = target_unitary(gate_kind)
    idle_freqs, int_freqs = tuple(map(float, idle_freqs)), tuple(map(float, int_freqs))
    idle_spectrum = diagonalize(params, mode_set, trunc, *idle_freqs)
    tune = tune_interaction and gate_kind is GateKind.CZ

    if schedule_kind is ScheduleKind.SQUARE_SQUARE:
        if tune:
            int_freqs = (_tune_square_cz(params, mode_set, trunc, idle_spectrum, int_freqs, padding, target),
                         int_freqs[1])
        family = _SquareFamily(params, mode_set, trunc, idle_spectrum, int_freqs, padding)
        hold = _calibrate_hold(family, target)
        config = ScheduleConfig(*idle_freqs, *int_freqs, hold=hold, padding=padding, sample_dt=dt)
    else:
        if tau is None:
            tau = SLEPIAN_TAU_NS if schedule_kind is ScheduleKind.SLEPIAN_SLEPIAN else HYBRID_TAU_NS
        if j_coupling is None:
            j_coupling = pair_coupling_for(params, mode_set, trunc, gate_kind, int_freqs)
        j_shape = shaping_coupling(gate_kind, schedule_kind, j_coupling)
        if tune and schedule_kind is ScheduleKind.SLEPIAN_SLEPIAN:
            int_freqs = (_tune_slepian_cz(params, mode_set, trunc, idle_spectrum, idle_freqs, int_freqs,
                                          tau, j_shape, padding, target), int_freqs[1])
        config = ScheduleConfig(*idle_freqs, *int_freqs, tau=tau, j_coupling=j_shape,
                                slepian_qubit=slepian_qubit, padding=padding, sample_dt=dt)

    schedule = build_schedule(schedule_kind, config)
    gate = computational_gate(propagate(params, mode_set, trunc, schedule, dt), idle_spectrum)
    corrected, phi1, phi2 = virtual_z_correct(gate, target)
    fidelity = unitary_fidelity(corrected, target)
    coherent = decompose_coherent_error(replace(gate, u4=corrected), gate_kind)

    incoherent = None
    if with_incoherent:
        loss = loss or LossModel.from_params(params)
        traces = [
            occupancy_trajectory(params, mode_set, trunc, schedule, label, dt, idle_spectrum)
            for label in computational_labels(len(mode_set))
        ]
        incoherent = incoherent_error(traces, loss)

    log.info("%s/%s at int %s: %.3f ns, coherent error %.3e",
             gate_kind.value, schedule_kind.value, int_freqs, schedule.gate_time, coherent.total)
    return GateReport(
        gate_kind=gate_kind,
        schedule_kind=schedule_kind,
        duration=schedule.gate_time,
        idle_freqs=idle_freqs,
        int_freqs=int_freqs,
        fidelity=fidelity,
        coherent_error=coherent,
        incoherent_error=incoherent,
        corrected_u4=corrected,
        phases=(phi1, phi2),
        j_coupling=j_coupling,
    )


def default_frequencies(gate_kind: GateKind) -> tuple[tuple[float, float], tuple[float, float]]:
    """Published (idle, interaction) frequency pairs."""
    if GateKind(gate_kind) is GateKind.ISWAP:
        return ISWAP_IDLE, ISWAP_INT
    return CZ_IDLE, CZ_INT


def interaction_pair(params: CircuitParams, gate_kind: GateKind, f: float) -> tuple[float, float]:
    """Interaction frequencies for a scan value: both qubits at f (iSWAP), or f2 = f with f1 = f + alpha2 (CZ)."""
    if GateKind(gate_kind) is GateKind.ISWAP:
        return f, f
    return f + params.alpha2, f


@dataclass(frozen=True)
class SearchSpec:
    """
    Grid for optimize_operating_point. With `idle_q2_grid` each Q2 idle
    frequency is paired with its ZZ-free Q1 partner; with `int_grid` the
    interaction point is scanned at the fixed `idle_freqs`.
    """

    idle_q2_grid: tuple[float, ...] = ()
    int_grid: tuple[float, ...] = ()
    schedule_kind: ScheduleKind = ScheduleKind.SQUARE_SQUARE
    idle_freqs: tuple[float, float] | None = None
    int_freqs: tuple[float, float] | None = None
    partner_bracket: tuple[float, float] | None = None

    def __post_init__(self):
        if not self.idle_q2_grid and not self.int_grid:
            raise DomainError("search needs an idle-frequency grid or an interaction-frequency grid")


@dataclass
class ScanRow:
    f_idle1: float
    f_idle2: float
    f_int1: float
    f_int2: float
    duration: float
    fidelity: float
    coherent_error: float
    flag: str = "ok"


def _scan_point(params, mode_set, trunc, gate_kind, schedule_kind, idle, interaction, with_incoherent=False):
    try:
        report = calibrate_gate(params, mode_set, trunc, gate_kind, schedule_kind, idle, interaction,
                                with_incoherent=with_incoherent)
        row = ScanRow(*idle, *report.int_freqs, report.duration, report.fidelity, report.coherent_error.total)
        return row, report
    except LabelAmbiguityError:
        return ScanRow(*idle, *interaction, np.nan, np.nan, np.nan, "ambiguous"), None
    except (GateNotFoundError, NoCrossingError) as e:
        return ScanRow(*idle, *interaction, np.nan, np.nan, np.nan, e.kind), None


@dataclass(frozen=True)
class _Candidate:
    """One operating point to try; `idle` is None when Q2's idle frequency has no ZZ-free partner."""

    idle: tuple[float, float] | None
    interaction: tuple[float, float]
    f_idle2: float


def optimize_operating_point(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                             gate_kind: GateKind, search: SearchSpec) -> tuple[GateReport, list[ScanRow]]:
    gate_kind = GateKind(gate_kind)
    default_idle, default_int = default_frequencies(gate_kind)
    idle_fixed = tuple(search.idle_freqs or default_idle)
    int_fixed = tuple(search.int_freqs or default_int)

    candidates = []
    for f2_idle in search.idle_q2_grid:
        f2_idle = float(f2_idle)
        try:
            f1_idle = zz_free_partner(params, mode_set, trunc, f2_idle, fixed_qubit=2, bracket=search.partner_bracket)
            candidates.append(_Candidate((f1_idle, f2_idle), int_fixed, f2_idle))
        except CableSimError as e:
            log.info("no ZZ-free partner for f2 idle %.4f: %s", f2_idle, e)
            candidates.append(_Candidate(None, int_fixed, f2_idle))
    for f in search.int_grid:
        candidates.append(_Candidate(idle_fixed, interaction_pair(params, gate_kind, float(f)), idle_fixed[1]))

    def evaluate(candidate: _Candidate):
        if candidate.idle is None:
            nan = float("nan")
            return ScanRow(nan, candidate.f_idle2, *candidate.interaction, nan, nan, nan, "no-zz-free-partner"), None
        return _scan_point(params, mode_set, trunc, gate_kind, search.schedule_kind,
                           candidate.idle, candidate.interaction)

    results = get_pool_manager().map(evaluate, candidates)
    rows = [row for row, _ in results]
    feasible = [(row.coherent_error, k) for k, (row, report) in enumerate(results) if report is not None]
    if not feasible:
        raise InfeasibleSearchError("no candidate operating point produced a gate")
    _, best = min(feasible)
    scanned = results[best][1]
    report = calibrate_gate(params, mode_set, trunc, gate_kind, search.schedule_kind,
                            scanned.idle_freqs, scanned.int_freqs, tune_interaction=False)
    return report, rows


@dataclass
class DurationRow:
    f_int: float
    f_int1: float
    f_int2: float
    duration: float
    fidelity: float
    flag: str = "ok"


def duration_scan(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                  gate_kind: GateKind, int_grid, idle_freqs: tuple[float, float] | None = None) -> list[DurationRow]:
    """
    Calibrated square-gate duration per interaction frequency; CZ rows carry
    the tuned f1.
    """
    gate_kind = GateKind(gate_kind)
    idle = tuple(idle_freqs or default_frequencies(gate_kind)[0])

    def point(f):
        interaction = interaction_pair(params, gate_kind, float(f))
        row, _ = _scan_point(params, mode_set, trunc, gate_kind, ScheduleKind.SQUARE_SQUARE, idle, interaction)
        return DurationRow(float(f), row.f_int1, row.f_int2, row.duration, row.fidelity, row.flag)

    return get_pool_manager().map(point, np.asarray(int_grid, dtype=float))
