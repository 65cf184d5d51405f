"""
CableQSim - Dynamics

Time evolution under a PulseSchedule. Shaped segments use the midpoint
piecewise-exponential rule, constant segments one exact exponential; every
exponential comes from a Hermitian eigendecomposition, U = V exp(-2 pi i W dt) V^dag.

Gates are reported in the rotating frame of the labeled idle eigenstates, so an
idle hold maps to the identity.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import linalg, optimize

from circuit import CircuitParams, ModeSet
from config import PHASE_GRID
from errors import DomainError, HamiltonianError
from hilbert import TruncationSpec, build_hamiltonian, computational_labels, hamiltonian_terms
from pulses import PulseSchedule
from spectrum import SpectrumResult, diagonalize

log = logging.getLogger(__name__)

UNITARITY_TOL = 1e-8
CONVERGENCE_TOL = 1e-6


@dataclass
class Propagator:
    matrix: np.ndarray
    schedule: PulseSchedule
    dt_used: float
    converged: bool = True


@dataclass
class ComputationalGate:
    """
    u4 in the basis {|00>, |01>, |10>, |11>} of labeled idle eigenstates.

    frame_freqs are the idle eigenfrequencies of those states and total_time
    the schedule length the frame rotation was removed for.
    """

    u4: np.ndarray
    leakage_per_state: np.ndarray
    duration: float
    total_time: float
    frame_freqs: np.ndarray


@dataclass
class OccupancyTrace:
    times: np.ndarray
    qubit_occupancy: np.ndarray   # (samples, 2)
    mode_occupancy: np.ndarray    # (samples, modes)
    initial_label: tuple[int, ...]
    mode_indices: tuple[int, ...]

    def columns(self) -> list[str]:
        return ["t_ns", "n_q1", "n_q2"] + [f"n_m{m}" for m in self.mode_indices]

    def rows(self):
        for k, t in enumerate(self.times):
            yield [float(t), *self.qubit_occupancy[k], *self.mode_occupancy[k]]

    def total(self) -> np.ndarray:
        return self.qubit_occupancy.sum(axis=1) + self.mode_occupancy.sum(axis=1)


def unitary_step(h: np.ndarray, dt: float) -> np.ndarray:
    """exp(-2 pi i H dt) for Hermitian H in GHz and dt in ns."""
    w, v = linalg.eigh(h)
    return (v * np.exp(-2j * np.pi * w * dt)) @ v.conj().T


def _slices(schedule: PulseSchedule, dt: float, split_constant: bool):
    """(duration, f1, f2) for every time slice, in order."""
    for t0, t1, constant in schedule.segments():
        length = t1 - t0
        if constant and not split_constant:
            yield length, *schedule.frequencies(0.5 * (t0 + t1))
            continue
        n = max(1, math.ceil(length / dt - 1e-9))
        step = length / n
        for k in range(n):
            yield step, *schedule.frequencies(t0 + (k + 0.5) * step)


class _StepCache:
    """Reuses exponentials for repeated (f1, f2, dt) slices."""

    def __init__(self, params, mode_set, trunc):
        self.params, self.mode_set, self.trunc = params, mode_set, trunc
        self.cache = {}

    def __call__(self, step, f1, f2):
        key = (round(step, 12), f1, f2)
        if key not in self.cache:
            h = build_hamiltonian(self.params, self.mode_set, self.trunc, f1, f2).entries
            self.cache[key] = unitary_step(h, step)
        return self.cache[key]


def _evolve(params, mode_set, trunc, schedule, dt) -> np.ndarray:
    dim = hamiltonian_terms(params, mode_set, trunc).dim
    steps = _StepCache(params, mode_set, trunc)
    u = np.eye(dim, dtype=complex)
    for step, f1, f2 in _slices(schedule, dt, split_constant=False):
        u = steps(step, f1, f2) @ u
    return u


def propagate(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
              schedule: PulseSchedule, dt: float | None = None,
              check_convergence: bool = False) -> Propagator:
    dt = schedule.sample_dt if dt is None else dt
    if not dt > 0:
        raise DomainError(f"time step must be positive, got {dt}")

    u = _evolve(params, mode_set, trunc, schedule, dt)
    deviation = float(np.max(np.abs(u.conj().T @ u - np.eye(len(u)))))
    if deviation > UNITARITY_TOL:
        raise HamiltonianError(f"propagator lost unitarity: max |U^dag U - I| = {deviation:.3e}")

    converged = True
    if check_convergence:
        finer = _evolve(params, mode_set, trunc, schedule, 0.5 * dt)
        change = float(np.max(np.abs(finer - u)))
        converged = change <= CONVERGENCE_TOL
        if not converged:
            log.warning("propagation not converged at dt=%.4g ns: halving dt changes U by %.3e", dt, change)
    return Propagator(matrix=u, schedule=schedule, dt_used=dt, converged=converged)


def idle_basis(idle_spectrum: SpectrumResult) -> tuple[np.ndarray, np.ndarray]:
    """Columns and eigenfrequencies of the four labeled computational idle states."""
    labels = computational_labels(idle_spectrum.basis.n_modes)
    vectors = np.column_stack([idle_spectrum.vector(label) for label in labels])
    freqs = np.array([idle_spectrum.energy(label) for label in labels])
    return vectors, freqs


def computational_gate(u: Propagator, idle_spectrum: SpectrumResult) -> ComputationalGate:
    vectors, freqs = idle_basis(idle_spectrum)
    total_time = u.schedule.total_time
    frame = np.exp(2j * np.pi * freqs * total_time)
    u4 = frame[:, None] * (vectors.conj().T @ u.matrix @ vectors)
    return ComputationalGate(
        u4=u4,
        leakage_per_state=np.clip(1 - np.sum(np.abs(u4) ** 2, axis=0), 0.0, 1.0),
        duration=u.schedule.gate_time,
        total_time=total_time,
        frame_freqs=freqs,
    )


def z_frame(phi1: float, phi2: float) -> np.ndarray:
    return np.diag(np.exp(1j * np.array([0.0, phi2, phi1, phi1 + phi2])))


def virtual_z_correct(gate: ComputationalGate | np.ndarray, target: np.ndarray,
                      refine: bool = True) -> tuple[np.ndarray, float, float]:
    """
    Single-qubit Z phases (phi1, phi2) applied after the gate that maximize
    |tr(T^dag D U)|, followed by removal of the global phase. Without `refine`
    only the coarse phase grid is searched.
    """
    u4 = gate.u4 if isinstance(gate, ComputationalGate) else np.asarray(gate)
    c = np.diag(u4 @ target.conj().T)

    def overlap(phi1, phi2):
        return np.abs(c[0] + c[1] * np.exp(1j * phi2) + c[2] * np.exp(1j * phi1) + c[3] * np.exp(1j * (phi1 + phi2))) ** 2

    grid = np.linspace(0, 2 * np.pi, PHASE_GRID, endpoint=False)
    p1, p2 = np.meshgrid(grid, grid, indexing="ij")
    values = overlap(p1, p2)
    i, j = np.unravel_index(int(np.argmax(values)), values.shape)

    phi1, phi2 = grid[i], grid[j]
    if refine:
        result = optimize.minimize(
            lambda x: -overlap(x[0], x[1]), x0=[phi1, phi2], method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-12},
        )
        if -result.fun >= values[i, j]:
            phi1, phi2 = result.x
    phi1, phi2 = float(np.mod(phi1, 2 * np.pi)), float(np.mod(phi2, 2 * np.pi))

    corrected = z_frame(phi1, phi2) @ u4
    trace = np.trace(target.conj().T @ corrected)
    if abs(trace) > 0:
        corrected = corrected * np.exp(-1j * np.angle(trace))
    return corrected, phi1, phi2


def occupancy_trajectory(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                         schedule: PulseSchedule, initial_label, dt: float | None = None,
                         idle_spectrum: SpectrumResult | None = None) -> OccupancyTrace:
    """<n> of each bare qubit and cable mode while the idle eigenstate `initial_label` evolves."""
    dt = schedule.sample_dt if dt is None else dt
    if not dt > 0:
        raise DomainError(f"time step must be positive, got {dt}")
    if idle_spectrum is None:
        idle_spectrum = diagonalize(params, mode_set, trunc, *schedule.idle_frequencies())
    initial_label = tuple(initial_label)
    psi = idle_spectrum.vector(initial_label).astype(complex)

    terms = hamiltonian_terms(params, mode_set, trunc)
    numbers = np.array(terms.number_ops)          # (2 + modes, dim)
    steps = _StepCache(params, mode_set, trunc)

    times, occupancy = [0.0], [numbers @ np.abs(psi) ** 2]
    t = 0.0
    for step, f1, f2 in _slices(schedule, dt, split_constant=True):
        psi = steps(step, f1, f2) @ psi
        t += step
        times.append(t)
        occupancy.append(numbers @ np.abs(psi) ** 2)

    occupancy = np.array(occupancy)
    return OccupancyTrace(
        times=np.array(times),
        qubit_occupancy=occupancy[:, :2],
        mode_occupancy=occupancy[:, 2:],
        initial_label=initial_label,
        mode_indices=tuple(mode_set.indices),
    )
