"""
CableQSim - Perturbation Theory

Closed-form estimates of the cable-mediated interactions, summed over the
supplied cable modes:

- g_eff: effective XX coupling of two dispersively coupled qubits
- zz_fourth_order: fourth-order ZZ strength for arbitrary detuning
- zz_resonant_approx: its near-resonant limit (f1 = f2 = f, equal alpha)

The ZZ expressions keep every fourth-order route between |11,00> and the
other two-excitation states, including routes that pass through two
different cable modes. With several modes these cross-mode routes are as
large as the single-mode ones, so the mode sum runs over amplitudes, not
over per-mode energy shifts.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from circuit import CircuitParams, ModeSet, coupling_strength
from config import ROOT_TOL_GHZ, SINGULARITY_GUARD_GHZ
from errors import DomainError, NoSignChangeError, SingularityError

log = logging.getLogger(__name__)

# Order of the rows returned by zz_resonant_terms
RESONANT_TERMS = ("second_excited", "exchange", "lamb", "two_photon")


@dataclass(frozen=True)
class Detunings:
    """
    delta_im[i, k] = f_i - m_k fsr and sigma_im[i, k] = f_i + m_k fsr for qubit
    i (0-based); delta_m / sigma_m use the mean frequency of the pair.
    """

    delta_im: np.ndarray
    sigma_im: np.ndarray
    delta_12: float
    sigma_12: float
    delta_m: np.ndarray
    sigma_m: np.ndarray


def detunings(mode_set: ModeSet, f1: float, f2: float) -> Detunings:
    f_m = np.asarray(mode_set.frequencies)
    f = np.array([[f1], [f2]])
    mean = 0.5 * (f1 + f2)
    return Detunings(
        delta_im=f - f_m,
        sigma_im=f + f_m,
        delta_12=f1 - f2,
        sigma_12=f1 + f2,
        delta_m=mean - f_m,
        sigma_m=mean + f_m,
    )


def _guard(**denominators):
    for name, value in denominators.items():
        value = np.atleast_1d(value)
        small = np.abs(value) < SINGULARITY_GUARD_GHZ
        if np.any(small):
            raise SingularityError(f"vanishing denominator {name} = {value[small][0]:.3e} GHz")


def _couplings(params: CircuitParams, mode_set: ModeSet, f1: float, f2: float) -> tuple[np.ndarray, np.ndarray]:
    """g1 and g2 per mode; g2 carries the parity sign of the far cable end."""
    g1 = np.array([coupling_strength(params.c_c1, params.c_q1, params.c_cable, f1, f_m) for f_m in mode_set.frequencies])
    g2 = np.array([coupling_strength(params.c_c2, params.c_q2, params.c_cable, f2, f_m) for f_m in mode_set.frequencies])
    return g1, g2 * np.asarray(mode_set.parity_signs)


def default_zz_free_bracket(params: CircuitParams, mode_set: ModeSet) -> tuple[float, float]:
    """
    Between the |11,00>/|00,11>-type pole at the mid-point of the two modes
    around the qubits and the upper mode itself.
    """
    f_mean = 0.5 * (params.f_q1 + params.f_q2)
    below = [f for f in mode_set.frequencies if f < f_mean]
    above = [f for f in mode_set.frequencies if f > f_mean]
    if not below or not above:
        raise DomainError(f"the mode set {mode_set.indices} does not bracket {f_mean:.4f} GHz")
    f_lo, f_hi = max(below), min(above)
    return 0.5 * (f_lo + f_hi) + 0.015, f_hi - 0.04


def g_eff_terms(params: CircuitParams, mode_set: ModeSet, f1: float, f2: float) -> np.ndarray:
    """Contribution of every cable mode to g_eff, in mode order."""
    d = detunings(mode_set, f1, f2)
    _guard(delta_1m=d.delta_im[0], delta_2m=d.delta_im[1])
    g1, g2 = _couplings(params, mode_set, f1, f2)
    return 0.5 * g1 * g2 * (
        1 / d.delta_im[0] + 1 / d.delta_im[1] - 1 / d.sigma_im[0] - 1 / d.sigma_im[1]
    )


def g_eff(params: CircuitParams, mode_set: ModeSet, f1: float, f2: float) -> float:
    """Effective XX coupling (GHz) mediated by the cable modes."""
    return float(np.sum(g_eff_terms(params, mode_set, f1, f2)))


def _two_photon_matrix(g1, g2, d1, d2) -> np.ndarray:
    """
    Amplitude from |11,00> to the two-photon state |00,1_k 1_l>, as a
    symmetric matrix; the diagonal holds sqrt(2) times the |00,2_k> amplitude.
    """
    x, y = g2 / d2, g1 / d1
    return np.outer(x, g1) + np.outer(g1, x) + np.outer(y, g2) + np.outer(g2, y)


def zz_fourth_order(params: CircuitParams, mode_set: ModeSet, f1: float, f2: float,
                    alpha1: float | None = None, alpha2: float | None = None,
                    cross_mode: bool = True, counter_rotating: bool = True) -> float:
    """
    Fourth-order ZZ strength (GHz); anharmonicities default to the circuit's.

    `cross_mode=False` drops every route that involves two different modes
    (the per-mode sum); `counter_rotating=False` drops the f_i + f_m
    denominators of the exchange amplitudes.
    """
    a1 = params.alpha1 if alpha1 is None else alpha1
    a2 = params.alpha2 if alpha2 is None else alpha2
    d = detunings(mode_set, f1, f2)
    d1, d2 = d.delta_im
    s1, s2 = d.sigma_im
    f_m = np.asarray(mode_set.frequencies)
    pair_sum = d.sigma_12 - f_m[:, None] - f_m[None, :]
    if not cross_mode:
        pair_sum = np.diag(pair_sum)
    _guard(
        delta_12=d.delta_12,
        delta_12_minus_alpha2=d.delta_12 - a2,
        delta_12_plus_alpha1=d.delta_12 + a1,
        delta_1m=d1,
        delta_2m=d2,
        sigma_12_minus_f_k_minus_f_l=pair_sum,
    )
    cr = 1.0 if counter_rotating else 0.0
    if counter_rotating:
        _guard(sigma_1m=s1, sigma_2m=s2, sigma_1m_plus_alpha1=s1 + a1, sigma_2m_plus_alpha2=s2 + a2)
    g1, g2 = _couplings(params, mode_set, f1, f2)
    gg = g1 * g2

    # exchange amplitudes: qubit 1 emits first (1) or qubit 2 emits first (2)
    e1, e2 = gg * (1 / d1 - cr / s2), gg * (1 / d2 - cr / s1)
    e1a, e2a = gg * (1 / d1 - cr / (s2 + a2)), gg * (1 / d2 - cr / (s1 + a1))
    p1, p2 = g1 ** 2 / d1, g2 ** 2 / d2
    q1, q2 = g1 ** 2 / d1 ** 2, g2 ** 2 / d2 ** 2
    v = _two_photon_matrix(g1, g2, d1, d2)

    if cross_mode:
        exchange = (e2.sum() ** 2 - e1.sum() ** 2) / d.delta_12
        second_excited = 2 * e1a.sum() ** 2 / (d.delta_12 - a2) - 2 * e2a.sum() ** 2 / (d.delta_12 + a1)
        lamb = -(p1.sum() * q2.sum() + p2.sum() * q1.sum())
        two_photon = 0.5 * np.sum(v ** 2 / pair_sum)
    else:
        exchange = np.sum(e2 ** 2 - e1 ** 2) / d.delta_12
        second_excited = np.sum(2 * e1a ** 2 / (d.delta_12 - a2) - 2 * e2a ** 2 / (d.delta_12 + a1))
        lamb = -np.sum(p1 * q2 + p2 * q1)
        two_photon = 0.5 * np.sum(np.diag(v) ** 2 / pair_sum)
    return float(exchange + second_excited + lamb + two_photon)


def zz_resonant_terms(params: CircuitParams, mode_set: ModeSet, f: float, alpha: float | None = None) -> np.ndarray:
    """
    The four near-resonant ZZ contributions in RESONANT_TERMS order: repulsion
    from the qubits' second excited states, the exchange correction, the
    Lamb-shift cross term and the two-photon cable states.
    """
    alpha = params.alpha1 if alpha is None else alpha
    if alpha == 0:
        raise DomainError("anharmonicity must be non-zero")
    d = detunings(mode_set, f, f)
    dm, sm = d.delta_m, d.sigma_m
    pair_sum = dm[:, None] + dm[None, :]
    _guard(delta_m=dm, sigma_m=sm, sigma_m_plus_alpha=sm + alpha, delta_k_plus_delta_l=pair_sum)
    g1, g2 = _couplings(params, mode_set, f, f)
    gg = g1 * g2

    a_alpha = np.sum(gg * (1 / dm - 1 / (sm + alpha)))
    a_zero = np.sum(gg * (1 / dm - 1 / sm))
    b = np.sum(gg * (1 / dm ** 2 + 1 / sm ** 2))
    lamb = -(np.sum(g1 ** 2 / dm) * np.sum(g2 ** 2 / dm ** 2) + np.sum(g2 ** 2 / dm) * np.sum(g1 ** 2 / dm ** 2))
    mixed = np.outer(g2, g1) + np.outer(g1, g2)
    two_photon = 0.5 * np.sum(mixed ** 2 * pair_sum / np.outer(dm ** 2, dm ** 2))
    return np.array([-4 * a_alpha ** 2 / alpha, 2 * a_zero * b, lamb, two_photon])


def zz_resonant_approx(params: CircuitParams, mode_set: ModeSet, f: float, alpha: float | None = None) -> float:
    """Near-resonant ZZ strength (GHz) for two qubits at the common frequency f."""
    return float(np.sum(zz_resonant_terms(params, mode_set, f, alpha)))


def resonant_root(params: CircuitParams, mode_set: ModeSet, bracket=None, alpha: float | None = None) -> float:
    """
    Zero of the near-resonant ZZ estimate, by default searched in the same
    window as the numeric ZZ-free point.
    """
    a, b = bracket or default_zz_free_bracket(params, mode_set)

    def zz(f):
        return zz_resonant_approx(params, mode_set, f, alpha)

    za, zb = zz(a), zz(b)
    if za * zb > 0:
        raise NoSignChangeError(f"near-resonant ZZ estimate does not change sign in [{a}, {b}]")
    root = float(optimize.bisect(zz, a, b, xtol=ROOT_TOL_GHZ))
    log.debug("near-resonant ZZ estimate vanishes at %.6f GHz", root)
    return root


def closed_form_root(params: CircuitParams, mode_set: ModeSet, detuning: float = 0.0, bracket=None) -> float:
    """
    Closed-form counterpart of the numeric ZZ-free centre frequency: the
    near-resonant root for zero detuning, otherwise the zero of the
    fourth-order ZZ at f1 - f2 = detuning.
    """
    if detuning == 0:
        return resonant_root(params, mode_set, bracket)
    a, b = bracket or default_zz_free_bracket(params, mode_set)

    def zz(f):
        return zz_fourth_order(params, mode_set, f + 0.5 * detuning, f - 0.5 * detuning)

    if zz(a) * zz(b) > 0:
        raise NoSignChangeError(f"fourth-order ZZ does not change sign in [{a}, {b}] at detuning {detuning} GHz")
    return float(optimize.bisect(zz, a, b, xtol=ROOT_TOL_GHZ))
