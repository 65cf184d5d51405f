"""
CableQSim - Hilbert Space

Truncated Fock basis for (qubit 1, qubit 2, cable modes ascending) and the
system Hamiltonian in GHz:

    H = sum_i [f_i n_i + alpha_i/2 n_i(n_i - 1)] + sum_m m*fsr n_m
        + sum_m [g_1m X(a_1, c_m) + (-1)^m g_2m X(a_2, c_m)]

with X = a^dag c + c^dag a under RWA and (a^dag + a)(c^dag + c) for the full
capacitive coupling.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
import qutip as qtp

from circuit import CircuitParams, ModeSet, anharmonicity, coupling_per_root_frequency
from config import DEFAULT_LEVELS_MODE, DEFAULT_LEVELS_QUBIT, HERMITIAN_TOL, MAX_HILBERT_DIM
from errors import DomainError, HamiltonianError, HilbertSpaceTooLarge

log = logging.getLogger(__name__)


class CouplingModel(str, Enum):
    RWA = "rwa"
    FULL = "full"


@dataclass(frozen=True)
class TruncationSpec:
    """
    Which Hilbert space to build and which form of the coupling to use.

    track_coupling: recompute g_{i,m} from the instantaneous qubit frequency
    (g ~ sqrt(f_i)); when False, g is frozen at the idle frequencies in
    CircuitParams.
    """

    levels_qubit: int = DEFAULT_LEVELS_QUBIT
    levels_mode: int = DEFAULT_LEVELS_MODE
    coupling_model: CouplingModel = CouplingModel.FULL
    track_coupling: bool = True
    max_dim: int = MAX_HILBERT_DIM

    def __post_init__(self):
        if self.levels_qubit < 2 or self.levels_mode < 2:
            raise DomainError(
                f"at least two levels per subsystem are required, got qubit={self.levels_qubit}, mode={self.levels_mode}"
            )
        object.__setattr__(self, "coupling_model", CouplingModel(self.coupling_model))

    def dimension(self, n_modes: int) -> int:
        return self.levels_qubit ** 2 * self.levels_mode ** n_modes

    def require_second_excited(self):
        if self.levels_qubit < 3:
            raise DomainError("ZZ and CZ quantities need at least three levels per qubit")


@dataclass(frozen=True)
class FockBasis:
    labels: tuple[tuple[int, ...], ...]
    dims: tuple[int, ...]
    mode_indices: tuple[int, ...]

    def __len__(self):
        return len(self.labels)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n_modes(self) -> int:
        return len(self.mode_indices)

    def index_of(self, label) -> int:
        return bare_index(self, label)


@dataclass(frozen=True)
class HamiltonianMatrix:
    dim: int
    entries: np.ndarray
    basis: FockBasis


def build_basis(mode_set: ModeSet, trunc: TruncationSpec) -> FockBasis:
    """Row-major product basis over (q1, q2, modes ascending)."""
    if len(mode_set) == 0:
        raise DomainError("mode set is empty")
    dim = trunc.dimension(len(mode_set))
    if dim > trunc.max_dim:
        raise HilbertSpaceTooLarge(f"Hilbert space too large: {dim} > {trunc.max_dim}")
    dims = (trunc.levels_qubit, trunc.levels_qubit) + (trunc.levels_mode,) * len(mode_set)
    labels = tuple(itertools.product(*(range(d) for d in dims)))
    return FockBasis(labels=labels, dims=dims, mode_indices=tuple(mode_set.indices))


def bare_index(basis: FockBasis, label) -> int:
    """Dense index of an occupation tuple; the inverse of basis.labels."""
    label = tuple(int(n) for n in label)
    if len(label) != len(basis.dims):
        raise DomainError(f"label {label} has {len(label)} entries, basis needs {len(basis.dims)}")
    index = 0
    for n, d in zip(label, basis.dims):
        if not 0 <= n < d:
            raise DomainError(f"label {label} is outside the truncation {basis.dims}")
        index = index * d + n
    return index


def format_label(label) -> str:
    """|q1 q2, m...> written as '11,00'."""
    label = tuple(label)
    return f"{label[0]}{label[1]}," + "".join(str(n) for n in label[2:])


def parse_label(text: str, n_modes: int) -> tuple[int, ...]:
    """Accepts '10' (modes empty) or '10,00'."""
    qubits, _, modes = text.strip().strip("|>").partition(",")
    if len(qubits) != 2 or not qubits.isdigit():
        raise DomainError(f"cannot parse state label {text!r}")
    modes = modes or "0" * n_modes
    if len(modes) != n_modes or not modes.isdigit():
        raise DomainError(f"state label {text!r} needs {n_modes} mode occupations")
    return tuple(int(c) for c in qubits + modes)


def computational_labels(n_modes: int) -> list[tuple[int, ...]]:
    """|00>, |01>, |10>, |11> with every mode empty."""
    zeros = (0,) * n_modes
    return [(0, 0) + zeros, (0, 1) + zeros, (1, 0) + zeros, (1, 1) + zeros]


def excitation_numbers(basis: FockBasis) -> np.ndarray:
    return np.array([sum(label) for label in basis.labels])


class HamiltonianTerms:
    """
    Operator pieces of H, so that sweeping the qubit frequencies only costs a
    few array additions:

        H(f1, f2) = static + f1 N1 + f2 N2 + r1 K1 + r2 K2

    r_i = sqrt(f_i) when the coupling tracks the qubit frequency, otherwise
    the square root of the idle frequency.
    """

    def __init__(self, params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec):
        self.params = params
        self.mode_set = mode_set
        self.trunc = trunc
        self.basis = build_basis(mode_set, trunc)

        dims = list(self.basis.dims)
        a = [self._embed(qtp.destroy(dims[k]), k, dims) for k in range(len(dims))]
        n = [op.dag() * op for op in a]

        alphas = (anharmonicity(params.c_q1), anharmonicity(params.c_q2))
        static = 0 * n[0]
        for i in range(2):
            static = static + 0.5 * alphas[i] * (a[i].dag() * a[i].dag() * a[i] * a[i])
        for k, f_m in enumerate(mode_set.frequencies):
            static = static + f_m * n[2 + k]

        couplings = []
        for i, qubit in enumerate((1, 2)):
            per_root = coupling_per_root_frequency(params, mode_set, qubit)
            k_op = 0 * n[0]
            for k, sign in enumerate(mode_set.parity_signs):
                weight = per_root[k] * (sign if qubit == 2 else 1)
                k_op = k_op + weight * self._exchange(a[i], a[2 + k])
            couplings.append(k_op)

        self.static = static.full()
        self.number_ops = [op.full().real.diagonal().copy() for op in n]
        self.coupling_ops = [op.full() for op in couplings]
        self.dim = self.basis.dim
        log.debug("Hamiltonian terms built: dim=%d modes=%s model=%s",
                  self.dim, mode_set.indices, trunc.coupling_model.value)

    @staticmethod
    def _embed(op, position, dims):
        factors = [qtp.qeye(d) for d in dims]
        factors[position] = op
        return qtp.tensor(factors)

    def _exchange(self, a_q, c_m):
        if self.trunc.coupling_model is CouplingModel.RWA:
            return a_q.dag() * c_m + c_m.dag() * a_q
        return (a_q.dag() + a_q) * (c_m.dag() + c_m)

    def coupling_scales(self, f_q1: float, f_q2: float) -> tuple[float, float]:
        if self.trunc.track_coupling:
            return np.sqrt(f_q1), np.sqrt(f_q2)
        return np.sqrt(self.params.f_q1), np.sqrt(self.params.f_q2)

    def assemble(self, f_q1: float, f_q2: float) -> np.ndarray:
        r1, r2 = self.coupling_scales(f_q1, f_q2)
        h = self.static + r1 * self.coupling_ops[0] + r2 * self.coupling_ops[1]
        h = h.astype(complex, copy=True)
        diag = f_q1 * self.number_ops[0] + f_q2 * self.number_ops[1]
        h[np.diag_indices(self.dim)] += diag
        return h


@lru_cache(maxsize=64)
def hamiltonian_terms(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec) -> HamiltonianTerms:
    return HamiltonianTerms(params, mode_set, trunc)


def check_hermitian(h: np.ndarray, tol: float = HERMITIAN_TOL):
    scale = max(1.0, float(np.max(np.abs(h))))
    deviation = float(np.max(np.abs(h - h.conj().T)))
    if deviation > tol * scale:
        raise HamiltonianError(f"Hamiltonian is not Hermitian: max |H - H^dag| = {deviation:.3e}")


def build_hamiltonian(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                      f_q1: float, f_q2: float) -> HamiltonianMatrix:
    for name, f in (("f_q1", f_q1), ("f_q2", f_q2)):
        if not 0 < f <= 20:
            raise DomainError(f"{name} must lie in (0, 20] GHz, got {f}")
    terms = hamiltonian_terms(params, mode_set, trunc)
    h = terms.assemble(f_q1, f_q2)
    check_hermitian(h)
    return HamiltonianMatrix(dim=terms.dim, entries=h, basis=terms.basis)


def hamiltonian_entries(h: HamiltonianMatrix):
    """Non-zero entries as (row, col, real, imag), row-major."""
    rows, cols = np.nonzero(h.entries)
    for r, c in zip(rows, cols):
        value = h.entries[r, c]
        yield int(r), int(c), float(value.real), float(value.imag)
