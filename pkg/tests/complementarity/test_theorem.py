# tests/complementarity/test_theorem.py

import logging
import math

import numpy as np
import pytest

from qwalk_mub.complementarity.theorem import (
    amplitude_factor,
    check_theorem1,
    mub_check_theta0,
    theorem1_inner_overlap,
)
from qwalk_mub.core.exceptions import DimensionCap, InvalidParameterError, UnsupportedRegime
from qwalk_mub.core.params import CoinParams
from qwalk_mub.spectra.analytic import EigenLabel, beta_closed_form, full_eigenbasis
from tests.fixtures.sample_coins import (
    ACCEPTANCE_COINS,
    GENERAL,
    HADAMARD,
    IDENTITY,
    PHASED_DIAGONAL,
    PRIMES_TO_31,
    SQRT_HALF,
    random_coins,
)


# --- Bound checks ---

def test_prime_cycle_satisfies_bound():
    report = check_theorem1(31, 1, 7, HADAMARD)
    assert report.bound_satisfied
    assert report.analytic
    assert report.violations == [] and report.violation_count == 0
    assert report.max_squared <= 1 / 31 + 1e-9
    assert report.bound == pytest.approx(1 / math.sqrt(31))
    assert report.amub


def test_composite_cycle_violates_bound():
    report = check_theorem1(33, 1, 7, HADAMARD)
    assert not report.bound_satisfied
    assert not report.analytic
    assert report.max_squared > 1 / 33
    assert report.max_overlap == report.max_entry
    assert report.subspace_max_overlap >= report.max_overlap - 1e-12


def test_analytic_report_has_no_subspace_maximum():
    report = check_theorem1(31, 1, 7, HADAMARD)
    assert report.subspace_max_overlap is None
    assert report.to_dict()["subspace_max_overlap"] is None


def test_composite_extreme_pair():
    report = check_theorem1(16, 0, 8, HADAMARD)
    assert report.subspace_max_overlap == pytest.approx(SQRT_HALF, abs=1e-6)
    assert report.max_overlap <= SQRT_HALF + 1e-6


def _scan(d):
    return [
        check_theorem1(d, q, q_prime, HADAMARD, keep_matrix=False)
        for q in range(d) for q_prime in range(d) if q != q_prime
    ]


def test_composite_scan_maximum_d16():
    reports = _scan(16)
    assert max(r.max_overlap for r in reports) == pytest.approx(SQRT_HALF, abs=1e-6)
    # cluster maximum goes past the entry-wise one
    assert max(r.subspace_max_overlap for r in reports) ** 2 == pytest.approx(0.537457, abs=1e-5)


def test_composite_scan_maximum_d18():
    reports = _scan(18)
    squared = np.array([r.max_squared for r in reports])
    assert squared.max() == pytest.approx(0.5, abs=1e-6)
    assert int(np.sum(np.abs(squared - 0.5) <= 1e-6)) == 18
    assert not np.any(np.abs(squared - 1 / 3) <= 1e-6)
    assert max(r.subspace_max_overlap for r in reports) ** 2 == pytest.approx(0.506941, abs=1e-5)


def test_bound_violation_not_logged_for_composite(caplog):
    with caplog.at_level(logging.WARNING, logger="qwalk_mub.complementarity.theorem"):
        check_theorem1(33, 1, 7, HADAMARD)
    assert "violated for prime d" not in caplog.text


@pytest.mark.parametrize("d", PRIMES_TO_31)
def test_bound_holds_on_every_prime_pair(d):
    for seed, coin in enumerate(ACCEPTANCE_COINS):
        for q in range(d):
            for q_prime in range(d):
                if q == q_prime:
                    continue
                report = check_theorem1(d, q, q_prime, coin, seed=seed, keep_matrix=False)
                assert report.max_squared <= 1 / d + 1e-9, (d, q, q_prime, coin)
                assert report.bound_satisfied
                assert report.seed == seed
                assert report.matrix is None


def test_phase_indices_reduced_mod_d():
    report = check_theorem1(7, 8, 2, HADAMARD)
    assert (report.q, report.q_prime) == (1, 2)
    with pytest.raises(InvalidParameterError, match="must differ"):
        check_theorem1(7, 3, 10, HADAMARD)


def test_report_to_dict():
    row = check_theorem1(5, 1, 3, GENERAL, seed=9).to_dict()
    assert row["d"] == 5 and row["q"] == 1 and row["q_prime"] == 3
    assert row["seed"] == 9
    assert row["max_squared"] == pytest.approx(row["max_overlap"] ** 2)
    assert set(row) >= {"bound", "bound_satisfied", "violation_count", "amub", "is_mub", "analytic"}


def test_oracle_respects_cap():
    with pytest.raises(DimensionCap):
        check_theorem1(35, 1, 2, HADAMARD, cap=30)


# --- Diagonal coin ---

def test_diagonal_coin_gives_mubs():
    result = mub_check_theta0(7, 1, 2)
    assert result.holds
    assert result.max_deviation <= 1e-10
    assert result.max_cross <= 1e-12


@pytest.mark.parametrize("d", PRIMES_TO_31)
def test_diagonal_coin_every_pair(d):
    for coin in (IDENTITY, PHASED_DIAGONAL):
        for q in range(d):
            for q_prime in range(d):
                if q == q_prime:
                    continue
                result = mub_check_theta0(d, q, q_prime, coin)
                assert result.max_deviation <= 1e-10, (d, q, q_prime)
                assert result.max_cross <= 1e-12, (d, q, q_prime)
                assert result.holds


def test_diagonal_report_is_not_entrywise_unbiased():
    report = check_theorem1(7, 2, 5, IDENTITY)
    assert report.is_mub is False  # cross-chirality entries vanish
    assert report.bound_satisfied


def test_mub_check_rejections():
    with pytest.raises(UnsupportedRegime):
        mub_check_theta0(9, 1, 2)
    with pytest.raises(InvalidParameterError, match="sin"):
        mub_check_theta0(7, 1, 2, HADAMARD)
    with pytest.raises(InvalidParameterError, match="must differ"):
        mub_check_theta0(7, 3, 3)


# --- Gauss-sum overlaps ---

def _direct(d, q, q_prime, coin):
    first = {pair.label: pair for pair in full_eigenbasis(q, coin, d)}
    second = {pair.label: pair for pair in full_eigenbasis(q_prime, coin, d)}
    return first, second


@pytest.mark.parametrize("q, q_prime, coin", [
    (3, 5, HADAMARD),
    (1, 7, GENERAL),
    (4, 0, HADAMARD),
    (0, 6, GENERAL),
    (2, 9, PHASED_DIAGONAL),
    (5, 0, PHASED_DIAGONAL),
])
def test_inner_overlap_matches_vectors(q, q_prime, coin):
    d = 31
    first, second = _direct(d, q, q_prime, coin)
    for m in (0, 5, 17, 30):
        for m_prime in (0, 11, 30):
            for tau in (1, -1):
                for tau_prime in (1, -1):
                    label, label_prime = EigenLabel(q, m, tau), EigenLabel(q_prime, m_prime, tau_prime)
                    expected = second[label_prime].vector.inner(first[label].vector)
                    value = theorem1_inner_overlap(d, q, q_prime, label, label_prime, coin)
                    assert abs(value - expected) <= 1e-10


def test_inner_overlap_rejections():
    label, label_prime = EigenLabel(1, 0, 1), EigenLabel(2, 0, 1)
    with pytest.raises(UnsupportedRegime):
        theorem1_inner_overlap(9, 1, 2, label, label_prime, HADAMARD)
    with pytest.raises(InvalidParameterError, match="must differ"):
        theorem1_inner_overlap(7, 1, 8, label, label, HADAMARD)
    with pytest.raises(InvalidParameterError, match="do not belong"):
        theorem1_inner_overlap(7, 1, 3, label, label_prime, HADAMARD)


# --- Amplitude factor ---

def test_amplitude_factor_values():
    assert amplitude_factor(0.0, 0.0) == pytest.approx(1.0)
    assert amplitude_factor(1.0, 1.0) == pytest.approx(1.0)
    assert amplitude_factor(1.0, 0.0) == pytest.approx(SQRT_HALF)
    assert amplitude_factor(1j, -1.0) == pytest.approx(1.0)


def test_amplitude_factor_bounds_spinor_product():
    d = 13
    for coin in random_coins(4):
        for label in (EigenLabel(2, 3, 1), EigenLabel(5, 0, -1)):
            for label_prime in (EigenLabel(7, 8, -1), EigenLabel(1, 12, 1)):
                beta = beta_closed_form(label, coin, d)
                beta_prime = beta_closed_form(label_prime, coin, d)
                factor = amplitude_factor(beta, beta_prime)
                exact = abs(1.0 + np.conj(beta_prime) * beta) / math.sqrt(
                    (1.0 + abs(beta) ** 2) * (1.0 + abs(beta_prime) ** 2)
                )
                assert exact <= factor + 1e-12
                assert factor <= 1.0 + 1e-12


def test_amplitude_factor_with_hadamard_coin():
    beta = beta_closed_form(EigenLabel(0, 0, 1), CoinParams.hadamard(), 6)
    assert amplitude_factor(beta, beta) == pytest.approx(1.0)
