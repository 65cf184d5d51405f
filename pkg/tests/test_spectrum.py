from dataclasses import replace
from pathlib import Path

import numpy as np
import pytest

import spectrum
from circuit import adjacent_modes, coupling_strength, select_modes
from errors import DomainError, LabelAmbiguityError, NoCrossingError, NoSignChangeError
from hilbert import FockBasis, TruncationSpec
from params_manager import load_params
from spectrum import (
    TrueCrossingError,
    ZZMap,
    default_zz_free_bracket,
    diagonalize,
    eigensystem,
    energy_spectrum_scan,
    extract_pair_coupling,
    label_eigenstates,
    mode_convergence,
    second_excited_repulsions,
    xx_splitting,
    zz_free_partner,
    zz_map,
    zz_strength,
)

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def test_eigensystem_reconstructs_random_hermitian():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(12, 12)) + 1j * rng.normal(size=(12, 12))
    h = a + a.conj().T
    w, v = eigensystem(h)
    assert np.all(np.diff(w) >= 0)
    np.testing.assert_allclose(v @ np.diag(w) @ v.conj().T, h, atol=1e-10)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(12), atol=1e-10)


def test_decoupled_labels_are_bare_states(decoupled, mode_set, trunc):
    spec = diagonalize(decoupled, mode_set, trunc, 4.6, 4.7)
    assert not spec.flagged
    assert len(spec.assignment) == trunc.dimension(len(mode_set))
    assert spec.energy((1, 0, 0, 0)) == pytest.approx(4.6)
    assert spec.energy((0, 0, 0, 1)) == pytest.approx(4.84)


def test_decoupled_zz_vanishes(decoupled, mode_set, trunc):
    assert zz_strength(decoupled, mode_set, trunc, 4.6, 4.7) == pytest.approx(0.0, abs=1e-12)


def test_zz_vanishes_with_one_qubit_decoupled(params, mode_set, trunc):
    one_sided = replace(params, c_c2=0.0)
    assert zz_strength(one_sided, mode_set, trunc, 4.6, 4.7) == pytest.approx(0.0, abs=1e-9)


def test_zz_needs_second_excited_states(params, mode_set, qubit_trunc):
    with pytest.raises(DomainError):
        zz_strength(params, mode_set, qubit_trunc, 4.6, 4.7)


def test_symmetric_hybridization_is_flagged():
    basis = FockBasis(labels=((1, 0), (0, 1)), dims=(2, 2), mode_indices=())
    vecs = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2)

    labeling = label_eigenstates(vecs, basis)
    assert labeling.assignment == {(1, 0): 0, (0, 1): 1}
    assert labeling.overlap_quality[(1, 0)] == pytest.approx(0.5)

    strict = label_eigenstates(vecs, basis, threshold=0.6)
    assert strict.assignment == {}
    assert strict.flagged == pytest.approx({(1, 0): 0.5, (0, 1): 0.5})


def test_unlabeled_state_raises(decoupled, mode_set, trunc):
    spec = diagonalize(decoupled, mode_set, trunc, 4.6, 4.7)
    spec.assignment.pop((1, 1, 0, 0))
    with pytest.raises(LabelAmbiguityError):
        spec.index((1, 1, 0, 0))


def test_jaynes_cummings_pair_coupling(jaynes_cummings):
    params, modes, trunc = jaynes_cummings
    g = coupling_strength(params.c_c1, params.c_q1, params.c_cable, 4.4, 4.4)
    coupling = extract_pair_coupling(params, modes, trunc, (1, 0, 0), (0, 0, 1), "f1", (4.38, 4.42), 4.738)
    assert coupling == pytest.approx(g, rel=1e-6)


def test_jaynes_cummings_doublet_splitting(jaynes_cummings):
    params, modes, trunc = jaynes_cummings
    spec = diagonalize(params, modes, trunc, 4.4, 4.738)
    g = coupling_strength(params.c_c1, params.c_q1, params.c_cable, 4.4, 4.4)
    single = sorted(e for e in spec.eigenvalues if 4.3 < e < 4.5)
    assert single[1] - single[0] == pytest.approx(2 * g, rel=1e-9)


def test_uncoupled_pair_is_a_true_crossing(decoupled, mode_set, trunc):
    with pytest.raises(TrueCrossingError):
        extract_pair_coupling(decoupled, mode_set, trunc, (1, 0, 0, 0), (0, 1, 0, 0), "f1", (4.70, 4.78), 4.7391)


def test_xx_splitting_zero_without_coupling(decoupled, mode_set, trunc):
    assert xx_splitting(decoupled, mode_set, trunc, 4.6391) == 0.0


def test_xx_splitting_refuses_point_next_to_mode(params, mode_set, trunc):
    with pytest.raises(NoCrossingError):
        xx_splitting(params, mode_set, trunc, 4.41)


def test_pair_coupling_rejects_different_sectors(params, mode_set, trunc):
    with pytest.raises(DomainError):
        extract_pair_coupling(params, mode_set, trunc, (1, 1, 0, 0), (1, 0, 0, 0), "f1", (4.5, 4.6), 4.7)


def test_default_zz_free_bracket(params, mode_set):
    lo, hi = default_zz_free_bracket(params, mode_set)
    assert lo == pytest.approx(0.5 * (4.40 + 4.84) + 0.015)
    assert hi == pytest.approx(4.80)


def test_bisection_needs_sign_change():
    with pytest.raises(NoSignChangeError):
        spectrum._bisect_zz(lambda f: 1.0 + f, (0.0, 1.0), "test")
    assert spectrum._bisect_zz(lambda f: f - 0.3, (0.0, 1.0), "test") == pytest.approx(0.3, abs=1e-6)


def test_zz_map_zero_crossings_skip_poles():
    axis = np.array([0.0, 1.0, 2.0, 3.0])
    flags = np.full((4, 1), "ok", dtype=object)
    zero = ZZMap(axis, np.array([5.0]), np.array([[-2.0], [-1.0], [1.0], [2.0]]), flags)
    np.testing.assert_allclose(zero.zero_crossings(), [[1.5, 5.0]])

    pole = ZZMap(axis, np.array([5.0]), np.array([[1.0], [2.0], [-2.0], [-1.0]]), flags)
    assert pole.zero_crossings().shape == (0, 2)


def test_zz_off_mask_ignores_flagged_cells():
    flags = np.array([["ok", "ambiguous"]], dtype=object)
    zz = ZZMap(np.array([4.6]), np.array([4.7, 4.8]), np.array([[5e-6, np.nan]]), flags)
    assert zz.zz_off_mask().tolist() == [[True, False]]
    assert list(zz.rows())[1][3] == "ambiguous"


def test_zz_map_shape_mismatch():
    with pytest.raises(DomainError):
        ZZMap(np.array([1.0]), np.array([1.0, 2.0]), np.zeros((1, 1)), np.zeros((1, 1), dtype=object))


def test_zz_map_does_not_depend_on_thread_count(params, mode_set, trunc, single_thread_pool):
    f1, f2 = [4.55, 4.60, 4.65], [4.70, 4.75]
    serial = zz_map(params, mode_set, trunc, f1, f2)
    single_thread_pool.set_threads(3)
    threaded = zz_map(params, mode_set, trunc, f1, f2)
    np.testing.assert_array_equal(serial.zz, threaded.zz)
    assert serial.flags.tolist() == threaded.flags.tolist()


def test_energy_spectrum_scan_keeps_two_excitation_manifold(decoupled, mode_set, trunc):
    scan = energy_spectrum_scan(decoupled, mode_set, trunc, [4.50, 4.55], 4.70)
    assert scan.crossings == []
    levels = scan.levels
    # 1 + 4 + 8 bare states with at most two excitations
    assert len(levels) == 2 * 13
    assert all(0 <= lv.manifold <= 2 for lv in levels)
    assert {lv.label for lv in levels if lv.f1 == 4.50} >= {"00,00", "10,00", "20,00", "00,11"}


def test_second_excited_repulsions(decoupled, mode_set):
    levels = second_excited_repulsions(decoupled, mode_set, TruncationSpec(levels_qubit=3, levels_mode=3), 4.6, 4.7)
    assert set(levels) == {"02,00", "20,00", "00,20", "00,02", "00,11"}
    assert levels["20,00"] == pytest.approx(4.6 - 4.7 + decoupled.alpha1)
    assert levels["00,11"] == pytest.approx(4.40 + 4.84 - 4.6 - 4.7)


def test_dispersive_zz_scales_as_fourth_power_of_coupling(params, mode_set, trunc):
    strong = zz_strength(params, mode_set, trunc, 4.65, 4.752)
    weak = zz_strength(replace(params, c_c1=2.5, c_c2=2.5), mode_set, trunc, 4.65, 4.752)
    assert strong / weak == pytest.approx(16.0, rel=0.1)


def test_energy_spectrum_scan_flags_avoided_crossings(params, mode_set, trunc):
    scan = energy_spectrum_scan(params, mode_set, trunc, np.arange(4.50, 4.761, 0.02), 4.70)
    found = {(c.label_a, c.label_b): c for c in scan.crossings}
    assert set(found) == {("10,00", "01,00"), ("11,00", "00,11")}
    # qubit-qubit resonance at f1 = f2, |11,00>/|00,11> at f1 + f2 = 4.40 + 4.84
    assert found["10,00", "01,00"].f1 == pytest.approx(4.70, abs=0.015)
    assert found["11,00", "00,11"].f1 == pytest.approx(4.54, abs=0.015)
    for crossing in scan.crossings:
        assert crossing.gap > 0
        assert sum(level.flag == crossing.flag for level in scan.levels) == 2


def test_numeric_zz_symmetric_in_qubits(params, mode_set, trunc):
    forward = zz_strength(params, mode_set, trunc, 4.65, 4.752)
    swapped = zz_strength(params, mode_set, trunc, 4.752, 4.65)
    assert forward == pytest.approx(swapped, rel=1e-6)


def test_dispersive_point_labels_are_clean(params, mode_set):
    spec = diagonalize(params, mode_set, TruncationSpec(levels_qubit=3, levels_mode=3), 4.684, 4.738)
    for label in ((0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)):
        assert spec.overlap_quality[label] > 0.9


def test_stronger_coupling_moves_partner_closer(params, mode_set):
    trunc = TruncationSpec(levels_qubit=3, levels_mode=3)
    weak = zz_free_partner(params, mode_set, trunc, 4.738, bracket=(4.60, 4.735))
    strong = zz_free_partner(replace(params, c_c1=10.0, c_c2=10.0), mode_set, trunc, 4.738, bracket=(4.60, 4.735))
    assert 4.738 - strong < 4.738 - weak - 0.005


def _contour_curvature(params, mode_set, f2_values):
    trunc = TruncationSpec(levels_qubit=3, levels_mode=3)
    partners = [zz_free_partner(params, mode_set, trunc, f2, bracket=(f2 - 0.15, f2 - 0.003)) for f2 in f2_values]
    fit = np.polyval(np.polyfit(f2_values, partners, 1), f2_values)
    return np.max(np.abs(partners - fit)) / abs(partners[-1] - partners[0])


def test_zz_free_contour_curves_with_larger_mode_spacing(params):
    near = _contour_curvature(params, select_modes(params, indices=[10, 11]), [4.72, 4.74, 4.76, 4.78])
    wide = load_params(CONFIGS / "fsr917.json")
    far = _contour_curvature(wide, select_modes(wide, indices=[5, 6]), [5.34, 5.36, 5.38, 5.40, 5.42])
    assert near < 0.03
    assert far > 0.04
    assert far > 3 * near


def test_cross_mode_map_has_zz_free_points():
    crossed = load_params(CONFIGS / "crossmode.json")
    modes = adjacent_modes(crossed)
    assert modes.indices == (10, 11, 12)
    zz = zz_map(crossed, modes, TruncationSpec(levels_qubit=3, levels_mode=3), [4.68, 4.70, 4.72, 4.74, 4.76], [4.88])
    zeros = zz.zero_crossings()
    assert len(zeros) == 1
    assert 4.70 < zeros[0, 0] < 4.72
    assert zeros[0, 1] == 4.88


def test_mode_convergence_reports_closed_form(params, trunc):
    (row,) = mode_convergence(params, trunc, counts=(2,))
    assert row.flag == "ok"
    assert np.isfinite(row.closed_form_root)
    assert row.closed_form_root == pytest.approx(row.root, abs=0.003)
