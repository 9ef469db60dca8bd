# tests/dirac/test_modes.py

import math

import numpy as np
import pytest

from qwalk_mub.core.exceptions import DegenerateSpinor, InvalidParameterError
from qwalk_mub.core.params import DiracMode
from qwalk_mub.dirac.modes import (
    dirac_energy,
    dirac_operator_residual,
    dirac_spinor,
    dirac_wavefunction,
    gamma_factor,
    spinor_components,
)


@pytest.mark.parametrize("k, m, band, expected", [
    (3.0, 4.0, 1, 5.0),
    (3.0, 4.0, -1, -5.0),
    (0.0, 1.0, 1, 1.0),
    (-2.0, 0.0, 1, 2.0),
])
def test_energy(k, m, band, expected):
    assert dirac_energy(k, m, band) == pytest.approx(expected)


def test_energy_rejects_bad_input():
    with pytest.raises(InvalidParameterError, match="mass"):
        dirac_energy(1.0, -0.5)
    with pytest.raises(InvalidParameterError, match="band"):
        dirac_energy(1.0, 1.0, band=0)


def test_spinor_at_rest():
    upper, lower = spinor_components(0.0, 1.0)
    assert upper == pytest.approx(1 / math.sqrt(2))
    assert lower == pytest.approx(1 / math.sqrt(2))


def test_spinor_stable_for_large_momentum():
    # E − k ≈ m²/(2k) would cancel to zero in a direct difference
    upper, lower = spinor_components(1e9, 1.0)
    assert lower == pytest.approx(0.5e-9, rel=1e-6)
    assert upper == pytest.approx(1.0)


def test_massless_spinors():
    assert spinor_components(-2.0, 0.0, 1) == pytest.approx((0.0, 1.0))
    with pytest.raises(DegenerateSpinor):
        spinor_components(2.0, 0.0, 1)


def test_wavefunction_has_unit_density():
    mode = DiracMode(m=0.7, mu=1.3, k=-0.4, band=-1)
    x = np.linspace(-10.0, 10.0, 101)
    psi = dirac_wavefunction(x, mode)
    assert psi.shape == (101, 2)
    assert np.abs(np.sum(np.abs(psi) ** 2, axis=-1) - 1.0).max() <= 1e-12


def test_spinor_sample():
    mode = DiracMode(m=1.0, mu=0.0, k=0.0)
    sample = dirac_spinor(2.5, mode)
    assert sample.x == 2.5
    assert sample.norm_squared == pytest.approx(1.0)
    assert sample.upper == pytest.approx(sample.lower)


@pytest.mark.parametrize("mode", [
    DiracMode(m=1.0, mu=0.5, k=0.3),
    DiracMode(m=0.2, mu=-0.5, k=0.1, band=-1),
    DiracMode(m=1.0, mu=0.0, k=0.4),
])
def test_modes_solve_dirac_equation(mode):
    x = np.linspace(-1.0, 1.0, 41)
    assert dirac_operator_residual(x, mode, h=1e-4) <= 1e-8


# --- Γ ---

def test_gamma_of_identical_modes():
    assert gamma_factor(0.8, 0.8, 1, 1, 0.5) == pytest.approx(1.0)


def test_gamma_of_opposite_bands_at_rest():
    assert gamma_factor(0.0, 0.0, 1, -1, 1.0) == pytest.approx(0.0, abs=1e-15)


def test_gamma_bounded():
    rng = np.random.default_rng(17)
    for _ in range(200):
        k, k_prime = rng.normal(scale=3.0, size=2)
        band, band_prime = rng.choice([1, -1], size=2)
        m = rng.uniform(0.01, 2.0)
        assert abs(gamma_factor(k, k_prime, int(band), int(band_prime), m)) <= 1.0 + 1e-12
