"""
CableQSim - Circuit

Turns physical circuit parameters (capacitances, cable geometry) into the
Hamiltonian coefficients: transmon anharmonicity, cable-mode frequencies and
qubit-mode coupling strengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from config import CHARGING_GHZ_FF
from errors import DomainError


@dataclass(frozen=True)
class CircuitParams:
    """Physical parameters of the qubit-cable-qubit circuit.

    Capacitances in fF (cable in pF), frequencies in GHz, T1 in us.
    """

    c_q1: float = 90.0
    c_q2: float = 90.0
    c_c1: float = 5.0
    c_c2: float = 5.0
    c_cable: float = 11.75
    fsr: float = 0.440
    f_q1: float = 4.684
    f_q2: float = 4.738
    t1_qubit: float = 100.0
    t1_cable: float = 10.0

    def __post_init__(self):
        for name in ("c_q1", "c_q2", "c_cable", "fsr", "f_q1", "f_q2", "t1_qubit", "t1_cable"):
            value = getattr(self, name)
            if not value > 0:
                raise DomainError(f"{name} must be positive, got {value}")
        # zero coupling capacitance is the decoupled limit
        for name in ("c_c1", "c_c2"):
            value = getattr(self, name)
            if not value >= 0:
                raise DomainError(f"{name} must be non-negative, got {value}")

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.field_names()}

    @property
    def alpha1(self) -> float:
        return anharmonicity(self.c_q1)

    @property
    def alpha2(self) -> float:
        return anharmonicity(self.c_q2)


@dataclass(frozen=True)
class ModeSet:
    """Cable modes kept in the model.

    parity_signs[k] is the sign of the qubit-2 coupling, (-1)^m.
    """

    indices: tuple[int, ...]
    frequencies: tuple[float, ...]
    parity_signs: tuple[int, ...]

    def __len__(self):
        return len(self.indices)

    @classmethod
    def from_indices(cls, indices, fsr: float) -> ModeSet:
        indices = tuple(sorted(int(m) for m in indices))
        if not indices:
            raise DomainError("no cable modes in window")
        if len(set(indices)) != len(indices):
            raise DomainError(f"duplicate cable mode indices: {indices}")
        if indices[0] < 1:
            raise DomainError(f"cable mode indices start at 1, got {indices[0]}")
        return cls(
            indices=indices,
            frequencies=tuple(m * fsr for m in indices),
            parity_signs=tuple(1 if m % 2 == 0 else -1 for m in indices),
        )

    def names(self) -> list[str]:
        return [f"m{m}" for m in self.indices]


def anharmonicity(c_q: float) -> float:
    """Transmon anharmonicity alpha = -E_C/h in GHz for a capacitance in fF."""
    if not c_q > 0:
        raise DomainError(f"capacitance must be positive, got {c_q}")
    return -CHARGING_GHZ_FF / c_q


def coupling_strength(c_c: float, c_q: float, c_m: float, f_q: float, f_m: float) -> float:
    """
    Qubit-mode coupling g/2pi in GHz.

    g = 1/2 * C_c / sqrt(C_q C_m) * sqrt(f_q f_m), with C_c, C_q in fF and
    C_m in pF.
    """
    if c_c < 0:
        raise DomainError(f"coupling capacitance must be non-negative, got {c_c}")
    for name, value in (("c_q", c_q), ("c_m", c_m), ("f_q", f_q), ("f_m", f_m)):
        if not value > 0:
            raise DomainError(f"{name} must be positive, got {value}")
    c_m_ff = c_m * 1000.0
    return 0.5 * c_c / math.sqrt(c_q * c_m_ff) * math.sqrt(f_q * f_m)


def coupling_per_root_frequency(params: CircuitParams, mode_set: ModeSet, qubit: int) -> np.ndarray:
    """g_{i,m} / sqrt(f_i) for every mode, so that g follows the qubit frequency."""
    c_c, c_q = (params.c_c1, params.c_q1) if qubit == 1 else (params.c_c2, params.c_q2)
    return np.array([coupling_strength(c_c, c_q, params.c_cable, 1.0, f_m) for f_m in mode_set.frequencies])


def select_modes(params: CircuitParams, window=None, indices=None) -> ModeSet:
    """
    Pick the cable modes to keep.

    Args:
        window: (lo, hi) in GHz; every mode with lo <= m*fsr <= hi is kept
        indices: explicit mode numbers, used instead of a window
    """
    if indices is not None:
        return ModeSet.from_indices(indices, params.fsr)
    if window is None:
        raise DomainError("either a frequency window or mode indices are required")
    lo, hi = window
    if not hi > lo:
        raise DomainError(f"empty frequency window [{lo}, {hi}]")
    first = max(1, math.ceil(lo / params.fsr - 1e-12))
    chosen = [m for m in range(first, int(hi / params.fsr) + 2) if lo <= m * params.fsr <= hi]
    if not chosen:
        raise DomainError("no cable modes in window")
    return ModeSet.from_indices(chosen, params.fsr)


def adjacent_modes(params: CircuitParams, f_low: float | None = None, f_high: float | None = None) -> ModeSet:
    """The modes bracketing the qubit frequencies: floor(f_low/fsr) .. ceil(f_high/fsr)."""
    f_low = min(params.f_q1, params.f_q2) if f_low is None else f_low
    f_high = max(params.f_q1, params.f_q2) if f_high is None else f_high
    lower = max(1, math.floor(f_low / params.fsr))
    upper = max(lower + 1, math.ceil(f_high / params.fsr))
    return ModeSet.from_indices(range(lower, upper + 1), params.fsr)


def nearest_modes(params: CircuitParams, count: int, f_center: float | None = None) -> ModeSet:
    """The `count` modes closest to f_center, used for mode-count convergence."""
    if count < 1:
        raise DomainError(f"mode count must be at least 1, got {count}")
    if f_center is None:
        f_center = 0.5 * (params.f_q1 + params.f_q2)
    below = math.floor(f_center / params.fsr)
    candidates = [m for m in range(max(1, below - count), below + count + 2)]
    candidates.sort(key=lambda m: (abs(m * params.fsr - f_center), m))
    return ModeSet.from_indices(candidates[:count], params.fsr)


def scale_cable(params: CircuitParams, length_ratio: float) -> CircuitParams:
    """A cable `length_ratio` times as long: FSR ~ 1/L, self capacitance ~ L."""
    if not length_ratio > 0:
        raise DomainError(f"length ratio must be positive, got {length_ratio}")
    values = params.to_dict()
    values["fsr"] = params.fsr / length_ratio
    values["c_cable"] = params.c_cable * length_ratio
    return CircuitParams(**values)
