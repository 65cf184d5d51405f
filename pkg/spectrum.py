"""
CableQSim - Spectrum

Exact diagonalization of the cable Hamiltonian, diabatic labeling of the
eigenstates and everything read off the labeled spectrum: the ZZ strength,
numeric XX splittings and pair couplings, ZZ-free points and the 1D/2D scans
built from them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import linalg, optimize

import perturbation
from circuit import CircuitParams, ModeSet, nearest_modes
from perturbation import default_zz_free_bracket
from config import LABEL_THRESHOLD, ROOT_TOL_GHZ, SCAN_POINTS, ZZ_OFF_GHZ
from errors import (
    CableSimError,
    DomainError,
    HamiltonianError,
    LabelAmbiguityError,
    NoCrossingError,
    NoSignChangeError,
)
from hilbert import (
    FockBasis,
    HamiltonianMatrix,
    TruncationSpec,
    build_hamiltonian,
    check_hermitian,
    computational_labels,
    format_label,
    hamiltonian_terms,
)
from pool_manager import get_pool_manager

log = logging.getLogger(__name__)


class TrueCrossingError(NoCrossingError):
    """The two branches cross without repelling: the pair is not coupled."""


@dataclass
class Labeling:
    assignment: dict[tuple, int]
    overlap_quality: dict[tuple, float]
    flagged: dict[tuple, float]


@dataclass
class SpectrumResult:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    assignment: dict[tuple, int]
    overlap_quality: dict[tuple, float]
    flagged: dict[tuple, float]
    basis: FockBasis

    def index(self, label) -> int:
        label = tuple(label)
        if label not in self.assignment:
            best = self.flagged.get(label, 0.0)
            raise LabelAmbiguityError(
                f"state |{format_label(label)}> has no eigenstate above the labeling threshold (best overlap^2 {best:.3f})"
            )
        return self.assignment[label]

    def energy(self, label) -> float:
        return float(self.eigenvalues[self.index(label)])

    def vector(self, label) -> np.ndarray:
        return self.eigenvectors[:, self.index(label)]


@dataclass
class ZZMap:
    f1_axis: np.ndarray
    f2_axis: np.ndarray
    zz: np.ndarray
    flags: np.ndarray

    def __post_init__(self):
        shape = (len(self.f1_axis), len(self.f2_axis))
        if self.zz.shape != shape or self.flags.shape != shape:
            raise DomainError(f"ZZ map arrays do not match the axes {shape}")

    def rows(self):
        for i, f1 in enumerate(self.f1_axis):
            for j, f2 in enumerate(self.f2_axis):
                yield float(f1), float(f2), float(self.zz[i, j]), str(self.flags[i, j])

    def zz_off_mask(self, threshold: float = ZZ_OFF_GHZ) -> np.ndarray:
        with np.errstate(invalid="ignore"):
            return np.abs(self.zz) < threshold

    def zero_crossings(self) -> np.ndarray:
        """
        Points (f1, f2) where xi_ZZ passes through zero along f1 at fixed f2.

        Sign flips across a pole are skipped: at a true zero |xi_ZZ| grows on
        both sides of the crossing.
        """
        points = []
        n1 = len(self.f1_axis)
        for j, f2 in enumerate(self.f2_axis):
            z = self.zz[:, j]
            for i in range(n1 - 1):
                za, zb = z[i], z[i + 1]
                if not (np.isfinite(za) and np.isfinite(zb)) or za * zb > 0 or za == zb:
                    continue
                if i > 0 and np.isfinite(z[i - 1]) and abs(z[i - 1]) < abs(za):
                    continue
                if i + 2 < n1 and np.isfinite(z[i + 2]) and abs(z[i + 2]) < abs(zb):
                    continue
                fa, fb = self.f1_axis[i], self.f1_axis[i + 1]
                points.append((fa + (fb - fa) * za / (za - zb), f2))
        return np.array(points).reshape(-1, 2)


@dataclass
class SpectrumLevel:
    f1: float
    level_index: int
    energy: float
    label: str
    overlap2: float
    manifold: int
    flag: str = ""


@dataclass(frozen=True)
class AvoidedCrossing:
    label_a: str
    label_b: str
    f1: float
    gap: float

    @property
    def flag(self) -> str:
        return f"crossing:{self.label_a}/{self.label_b}"


@dataclass
class SpectrumScan:
    levels: list[SpectrumLevel]
    crossings: list[AvoidedCrossing]


@dataclass
class ProfileRow:
    f: float
    zz_numeric: float
    zz_analytic: float
    g_eff_analytic: float
    g_eff_numeric: float
    flag: str = "ok"


@dataclass
class ConvergenceRow:
    n_modes: int
    mode_indices: tuple[int, ...]
    root: float
    closed_form_root: float = float("nan")
    flag: str = "ok"


@dataclass
class CouplingScan:
    cc_axis: np.ndarray
    detuning_axis: np.ndarray
    f2: float
    zz: np.ndarray
    flags: np.ndarray = field(repr=False)

    def rows(self):
        for i, cc in enumerate(self.cc_axis):
            for j, d in enumerate(self.detuning_axis):
                yield float(cc), float(d), float(self.zz[i, j]), str(self.flags[i, j])


def eigensystem(h) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and orthonormal eigenvectors (columns) of a Hermitian matrix."""
    entries = h.entries if isinstance(h, HamiltonianMatrix) else np.asarray(h)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise HamiltonianError(f"expected a square matrix, got shape {entries.shape}")
    check_hermitian(entries)
    return linalg.eigh(entries)


def label_eigenstates(eigvecs: np.ndarray, basis: FockBasis, threshold: float = LABEL_THRESHOLD) -> Labeling:
    """
    Greedy one-to-one assignment of bare labels to eigenstates by descending
    |<bare|eig>|^2. A label whose best still-available overlap is below
    `threshold` stays unassigned and is reported in `flagged`.
    """
    probs = np.abs(eigvecs) ** 2
    rows, cols = np.nonzero(probs >= threshold)
    values = probs[rows, cols]
    order = np.lexsort((cols, rows, -values))

    assignment, quality = {}, {}
    used_rows, used_cols = set(), set()
    for k in order:
        r, c = int(rows[k]), int(cols[k])
        if r in used_rows or c in used_cols:
            continue
        label = basis.labels[r]
        assignment[label] = c
        quality[label] = float(values[k])
        used_rows.add(r)
        used_cols.add(c)

    flagged = {
        basis.labels[r]: float(probs[r].max())
        for r in range(len(basis.labels))
        if r not in used_rows
    }
    return Labeling(assignment=assignment, overlap_quality=quality, flagged=flagged)


def diagonalize(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                f1: float, f2: float, threshold: float = LABEL_THRESHOLD) -> SpectrumResult:
    h = build_hamiltonian(params, mode_set, trunc, f1, f2)
    evals, evecs = eigensystem(h)
    labeling = label_eigenstates(evecs, h.basis, threshold)
    return SpectrumResult(
        eigenvalues=evals,
        eigenvectors=evecs,
        assignment=labeling.assignment,
        overlap_quality=labeling.overlap_quality,
        flagged=labeling.flagged,
        basis=h.basis,
    )


def zz_strength(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                f1: float, f2: float, threshold: float = LABEL_THRESHOLD) -> float:
    """xi_ZZ = E(11) + E(00) - E(10) - E(01), all cable modes empty."""
    trunc.require_second_excited()
    spec = diagonalize(params, mode_set, trunc, f1, f2, threshold)
    l00, l01, l10, l11 = computational_labels(len(mode_set))
    missing = [format_label(l) for l in (l00, l01, l10, l11) if l not in spec.assignment]
    if missing:
        raise LabelAmbiguityError(
            f"label ambiguity at f1={f1:.6f}, f2={f2:.6f}: no eigenstate for {', '.join(missing)}"
        )
    return spec.energy(l11) + spec.energy(l00) - spec.energy(l10) - spec.energy(l01)


def _frequencies(scan_axis: str, x: float, fixed: float) -> tuple[float, float]:
    return (x, fixed) if scan_axis == "f1" else (fixed, x)


def _branch_by_weight(evecs: np.ndarray, ia: int, ib: int) -> tuple[int, int]:
    """The two eigenstates carrying most of the combined weight on |a> and |b>."""
    weight = np.abs(evecs[ia]) ** 2 + np.abs(evecs[ib]) ** 2
    top = np.argsort(weight)[-2:]
    return int(min(top)), int(max(top))


def _continue_branches(evecs: np.ndarray, previous: list[np.ndarray]) -> list[int]:
    chosen = []
    for vec in previous:
        overlaps = np.abs(evecs.conj().T @ vec) ** 2
        overlaps[chosen] = -1.0
        chosen.append(int(np.argmax(overlaps)))
    return chosen


@dataclass(frozen=True)
class PairCrossing:
    """Avoided crossing of two labeled branches: J = gap / 2 at `location`."""

    j: float
    location: float
    scan_axis: str


def _pair_gap(params, mode_set, trunc, scan_axis, fixed, ia, ib, x) -> float:
    evals, evecs = eigensystem(build_hamiltonian(params, mode_set, trunc, *_frequencies(scan_axis, x, fixed)))
    i, j = _branch_by_weight(evecs, ia, ib)
    return float(evals[j] - evals[i])


def locate_pair_crossing(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                         label_a, label_b, scan_axis: str, interval, fixed: float,
                         points: int = SCAN_POINTS) -> PairCrossing:
    """
    Minimum gap between the eigenbranches that carry label_a and label_b
    while one qubit frequency (`scan_axis`, "f1" or "f2") sweeps `interval`
    and the other stays at `fixed`.

    The coarse scan follows the branches by maximum overlap with the previous
    point; the minimum is then refined with a bounded golden-section search.
    """
    label_a, label_b = tuple(label_a), tuple(label_b)
    if label_a == label_b:
        raise DomainError("pair coupling needs two distinct labels")
    if sum(label_a) != sum(label_b):
        raise DomainError(
            f"|{format_label(label_a)}> and |{format_label(label_b)}> are in different excitation sectors"
        )
    if scan_axis not in ("f1", "f2"):
        raise DomainError(f"scan axis must be 'f1' or 'f2', got {scan_axis!r}")
    lo, hi = interval
    if not hi > lo:
        raise DomainError(f"empty scan interval [{lo}, {hi}]")

    basis = hamiltonian_terms(params, mode_set, trunc).basis
    ia, ib = basis.index_of(label_a), basis.index_of(label_b)

    xs = np.linspace(lo, hi, points)
    splitting = np.empty(points)
    previous = None
    for k, x in enumerate(xs):
        evals, evecs = eigensystem(build_hamiltonian(params, mode_set, trunc, *_frequencies(scan_axis, x, fixed)))
        branches = list(_branch_by_weight(evecs, ia, ib)) if previous is None else _continue_branches(evecs, previous)
        previous = [evecs[:, b] for b in branches]
        splitting[k] = evals[branches[1]] - evals[branches[0]]

    gaps = np.abs(splitting)
    k_min = int(np.argmin(gaps))
    pair = f"|{format_label(label_a)}>/|{format_label(label_b)}>"
    if np.any(np.sign(splitting[1:]) * np.sign(splitting[:-1]) < 0) or gaps[k_min] < 2 * ROOT_TOL_GHZ:
        raise TrueCrossingError(f"{pair} cross without an avoided crossing in [{lo}, {hi}]")
    if k_min in (0, points - 1):
        raise NoCrossingError(f"no avoided crossing of {pair} in [{lo}, {hi}]: the gap is monotonic")

    result = optimize.minimize_scalar(
        lambda x: _pair_gap(params, mode_set, trunc, scan_axis, fixed, ia, ib, x),
        bounds=(xs[k_min - 1], xs[k_min + 1]), method="bounded", options={"xatol": ROOT_TOL_GHZ},
    )
    if float(result.fun) <= gaps[k_min]:
        gap, location = float(result.fun), float(result.x)
    else:
        gap, location = float(gaps[k_min]), float(xs[k_min])
    log.debug("%s: minimum gap %.6e GHz at %s=%.6f", pair, gap, scan_axis, location)
    return PairCrossing(j=0.5 * gap, location=location, scan_axis=scan_axis)


def extract_pair_coupling(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                          label_a, label_b, scan_axis: str, interval, fixed: float,
                          points: int = SCAN_POINTS) -> float:
    """Half the minimum gap between the branches of label_a and label_b (see locate_pair_crossing)."""
    return locate_pair_crossing(params, mode_set, trunc, label_a, label_b, scan_axis, interval, fixed, points).j


def xx_splitting(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                 f_center: float, half_width: float = 0.01) -> float:
    """Numeric effective XX coupling: half the |10>/|01> gap as f1 sweeps through f2 = f_center."""
    nearest = min(abs(f_center - f_m) for f_m in mode_set.frequencies)
    if nearest <= 2 * half_width:
        raise NoCrossingError(
            f"single-excitation branches at {f_center} GHz are not separable from a cable mode {nearest:.4f} GHz away"
        )
    n = len(mode_set)
    l10, l01 = (1, 0) + (0,) * n, (0, 1) + (0,) * n
    try:
        return extract_pair_coupling(params, mode_set, trunc, l10, l01, "f1",
                                     (f_center - half_width, f_center + half_width), f_center)
    except TrueCrossingError:
        return 0.0


def _bisect_zz(fn, bracket, what: str) -> float:
    a, b = bracket
    za, zb = fn(a), fn(b)
    if za == 0:
        return a
    if zb == 0:
        return b
    if za * zb > 0:
        raise NoSignChangeError(
            f"xi_ZZ does not change sign for {what} in [{a}, {b}] ({za:.3e} and {zb:.3e} GHz)"
        )
    root = optimize.bisect(fn, a, b, xtol=ROOT_TOL_GHZ)
    log.info("ZZ-free %s: %.6f GHz", what, root)
    return float(root)


def zz_free_point(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                  detuning: float = 0.0, bracket=None) -> float:
    """Centre frequency f with xi_ZZ(f + d/2, f - d/2) = 0, by bisection."""
    bracket = bracket or default_zz_free_bracket(params, mode_set)

    def zz(f):
        return zz_strength(params, mode_set, trunc, f + 0.5 * detuning, f - 0.5 * detuning)

    return _bisect_zz(zz, bracket, f"centre frequency at detuning {detuning * 1e3:.3f} MHz")


def zz_free_partner(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                    f_fixed: float, fixed_qubit: int = 2, bracket=None) -> float:
    """Frequency of one qubit that switches ZZ off while the other sits at f_fixed."""
    if fixed_qubit not in (1, 2):
        raise DomainError(f"fixed qubit must be 1 or 2, got {fixed_qubit}")
    bracket = bracket or default_zz_free_bracket(params, mode_set)

    def zz(f):
        f1, f2 = (f_fixed, f) if fixed_qubit == 1 else (f, f_fixed)
        return zz_strength(params, mode_set, trunc, f1, f2)

    return _bisect_zz(zz, bracket, f"partner of qubit {fixed_qubit} at {f_fixed:.6f} GHz")


def _zz_cell(params, mode_set, trunc, f1, f2) -> tuple[float, str]:
    try:
        return zz_strength(params, mode_set, trunc, f1, f2), "ok"
    except LabelAmbiguityError:
        return float("nan"), "ambiguous"


def zz_map(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec, f1_grid, f2_grid) -> ZZMap:
    f1_axis = np.asarray(f1_grid, dtype=float)
    f2_axis = np.asarray(f2_grid, dtype=float)
    trunc.require_second_excited()

    def row(f1):
        return [_zz_cell(params, mode_set, trunc, f1, f2) for f2 in f2_axis]

    cells = get_pool_manager().map(row, f1_axis)
    zz = np.array([[value for value, _ in r] for r in cells], dtype=float).reshape(len(f1_axis), len(f2_axis))
    flags = np.array([[flag for _, flag in r] for r in cells], dtype=object).reshape(zz.shape)
    log.info("ZZ map: %d cells, %d flagged", zz.size, int(np.sum(flags != "ok")))
    return ZZMap(f1_axis=f1_axis, f2_axis=f2_axis, zz=zz, flags=flags)


def spectrum_crossing_pairs(mode_set: ModeSet) -> list[tuple[tuple, tuple]]:
    """
    Level pairs whose avoided crossings energy_spectrum_scan looks for:
    |10,00>/|01,00> (f1 = f2) and |11,00> against every two-photon state
    with one photon in each of two different modes.
    """
    n = len(mode_set)
    empty = (0,) * n
    pairs = [((1, 0) + empty, (0, 1) + empty)]
    for k in range(n):
        for l in range(k + 1, n):
            photons = tuple(1 if m in (k, l) else 0 for m in range(n))
            pairs.append(((1, 1) + empty, (0, 0) + photons))
    return pairs


def _interior_minimum(gaps: np.ndarray) -> int | None:
    k = int(np.argmin(gaps))
    return k if 0 < k < len(gaps) - 1 else None


def energy_spectrum_scan(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                         f1_range, f2: float, max_manifold: int = 2, pairs=None) -> SpectrumScan:
    """
    Labeled levels for every f1 sample at fixed f2. Levels labeled with up to
    `max_manifold` excitations are kept, plus unlabeled levels below the
    highest kept one; `manifold` is -1 for unlabeled levels.

    For each pair in `pairs` (default: spectrum_crossing_pairs) the gap
    between the two branches carrying the pair is tracked along f1; an
    interior minimum is refined and reported as an avoided crossing, and the
    two levels at the nearest sample are flagged.
    """
    f1_axis = np.asarray(f1_range, dtype=float)
    basis = hamiltonian_terms(params, mode_set, trunc).basis
    pairs = [(tuple(a), tuple(b)) for a, b in (pairs or spectrum_crossing_pairs(mode_set))]
    indices = [(basis.index_of(a), basis.index_of(b)) for a, b in pairs]

    def sample(f1):
        spec = diagonalize(params, mode_set, trunc, f1, f2)
        by_index = {index: label for label, index in spec.assignment.items()}
        kept = [i for i, label in by_index.items() if sum(label) <= max_manifold]
        ceiling = max(spec.eigenvalues[i] for i in kept) if kept else -np.inf
        levels = []
        for i, energy in enumerate(spec.eigenvalues):
            label = by_index.get(i)
            if label is not None and sum(label) <= max_manifold:
                levels.append(SpectrumLevel(float(f1), i, float(energy), format_label(label),
                                            spec.overlap_quality[label], sum(label)))
            elif label is None and energy <= ceiling:
                levels.append(SpectrumLevel(float(f1), i, float(energy), "", float("nan"), -1))
        branches = [_branch_by_weight(spec.eigenvectors, ia, ib) for ia, ib in indices]
        gaps = [float(spec.eigenvalues[j] - spec.eigenvalues[i]) for i, j in branches]
        return levels, branches, gaps

    samples = get_pool_manager().map(sample, f1_axis)
    crossings = []
    if len(f1_axis) >= 3:
        for p, ((a, b), (ia, ib)) in enumerate(zip(pairs, indices)):
            gaps = np.array([s[2][p] for s in samples])
            k = _interior_minimum(gaps)
            if k is None:
                continue
            result = optimize.minimize_scalar(
                lambda x: _pair_gap(params, mode_set, trunc, "f1", f2, ia, ib, x),
                bounds=(f1_axis[k - 1], f1_axis[k + 1]), method="bounded", options={"xatol": ROOT_TOL_GHZ},
            )
            gap, location = (float(result.fun), float(result.x)) if result.fun <= gaps[k] else (gaps[k], f1_axis[k])
            crossing = AvoidedCrossing(format_label(a), format_label(b), float(location), float(gap))
            crossings.append(crossing)
            flagged = set(samples[k][1][p])
            for level in samples[k][0]:
                if level.level_index in flagged:
                    level.flag = crossing.flag
            log.info("avoided crossing %s at f1=%.6f GHz, gap %.3e GHz", crossing.flag, location, gap)

    levels = [level for s in samples for level in s[0]]
    return SpectrumScan(levels=levels, crossings=crossings)


def interaction_profile(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                        f_grid, detuning: float = 1e-4) -> list[ProfileRow]:
    """XX and ZZ strengths of a near-resonant pair versus its mean frequency, numeric and closed form."""

    def point(f):
        row = ProfileRow(f=float(f), zz_numeric=np.nan, zz_analytic=np.nan,
                         g_eff_analytic=np.nan, g_eff_numeric=np.nan)
        try:
            row.zz_numeric = zz_strength(params, mode_set, trunc, f + 0.5 * detuning, f - 0.5 * detuning)
        except LabelAmbiguityError:
            row.flag = "ambiguous"
        try:
            row.zz_analytic = perturbation.zz_resonant_approx(params, mode_set, f, params.alpha1)
            row.g_eff_analytic = perturbation.g_eff(params, mode_set, f, f)
        except CableSimError:
            row.flag = "singular"
        try:
            row.g_eff_numeric = xx_splitting(params, mode_set, trunc, f)
        except NoCrossingError:
            pass
        return row

    return get_pool_manager().map(point, np.asarray(f_grid, dtype=float))


def mode_convergence(params: CircuitParams, trunc: TruncationSpec, counts=(2, 3, 4),
                     detuning: float = 0.0, bracket=None) -> list[ConvergenceRow]:
    """
    ZZ-free root as cable modes are added nearest-first around the qubits,
    numeric and closed form. The two follow each other; neither settles
    within a few modes because the exchange amplitude alternates in sign
    from mode to mode.
    """
    rows = []
    for count in counts:
        mode_set = nearest_modes(params, count)
        try:
            root = zz_free_point(params, mode_set, trunc, detuning, bracket)
            try:
                estimate = perturbation.closed_form_root(params, mode_set, detuning, bracket)
            except CableSimError as e:
                log.info("no closed-form root with %d modes: %s", count, e)
                estimate = float("nan")
            rows.append(ConvergenceRow(count, mode_set.indices, root, estimate))
        except CableSimError as e:
            log.warning("ZZ-free root with %d modes failed: %s", count, e)
            rows.append(ConvergenceRow(count, mode_set.indices, float("nan"), flag=e.kind))
    return rows


def zz_coupling_scan(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                     cc_values, detunings, f2: float = 4.752) -> CouplingScan:
    """xi_ZZ versus the (common) coupling capacitance and the detuning f1 - f2 at fixed f2."""
    cc_axis = np.asarray(cc_values, dtype=float)
    d_axis = np.asarray(detunings, dtype=float)
    trunc.require_second_excited()

    def row(cc):
        scaled = replace(params, c_c1=cc, c_c2=cc)
        return [_zz_cell(scaled, mode_set, trunc, f2 + d, f2) for d in d_axis]

    cells = get_pool_manager().map(row, cc_axis)
    zz = np.array([[value for value, _ in r] for r in cells], dtype=float).reshape(len(cc_axis), len(d_axis))
    flags = np.array([[flag for _, flag in r] for r in cells], dtype=object).reshape(zz.shape)
    return CouplingScan(cc_axis=cc_axis, detuning_axis=d_axis, f2=float(f2), zz=zz, flags=flags)


def second_excited_repulsions(params: CircuitParams, mode_set: ModeSet, trunc: TruncationSpec,
                              f1: float, f2: float) -> dict[str, float]:
    """
    Bare energies of the two-excitation states that repel |11,00>, relative
    to it (GHz). Negative values push |11,00> up.
    """
    trunc.require_second_excited()
    terms = hamiltonian_terms(params, mode_set, trunc)
    diagonal = terms.assemble(f1, f2).diagonal().real
    basis = terms.basis
    n = len(mode_set)
    empty = (0,) * n

    def mode_label(*occupied):
        modes = [0] * n
        for k in occupied:
            modes[k] += 1
        return (0, 0) + tuple(modes)

    candidates = [(0, 2) + empty, (2, 0) + empty]
    if trunc.levels_mode >= 3:
        candidates += [mode_label(k, k) for k in range(n)]
    candidates += [mode_label(k, l) for k in range(n) for l in range(k + 1, n)]

    reference = diagonal[basis.index_of((1, 1) + empty)]
    return {format_label(label): float(diagonal[basis.index_of(label)] - reference) for label in candidates}
