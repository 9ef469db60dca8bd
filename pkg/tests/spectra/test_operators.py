# tests/spectra/test_operators.py

import numpy as np
import pytest

from qwalk_mub.core.exceptions import DimensionCap
from qwalk_mub.core.params import CoinParams, WalkConfig
from qwalk_mub.spectra.operators import build_unitary, coin_operator, phase_operator, shift_operator
from qwalk_mub.walk.evolution import step
from qwalk_mub.walk.state import PureState
from tests.fixtures.sample_coins import GENERAL, HADAMARD, random_coins


def test_identity_coin_without_phase_is_permutation():
    unitary = build_unitary(WalkConfig(3, 0, CoinParams(theta=0.0)))
    assert np.all(np.isin(unitary, (0, 1)))
    assert unitary.sum(axis=0).tolist() == [1] * 6
    assert unitary.sum(axis=1).tolist() == [1] * 6


def test_shift_moves_chiralities_apart():
    shift = shift_operator(4)
    # |1,+⟩ -> |2,+⟩ and |1,−⟩ -> |0,−⟩
    assert shift[2 * 2, 2 * 1] == 1
    assert shift[2 * 0 + 1, 2 * 1 + 1] == 1


@pytest.mark.parametrize("coin", [HADAMARD, GENERAL, *random_coins(2)])
def test_unitary_is_unitary(coin):
    unitary = build_unitary(WalkConfig(10, 3, coin))
    assert np.abs(unitary.conj().T @ unitary - np.eye(20)).max() <= 1e-12


def test_unitary_is_product_of_factors():
    d, q = 6, 5
    product = shift_operator(d) @ coin_operator(d, GENERAL) @ phase_operator(d, q)
    assert np.abs(build_unitary(WalkConfig(d, q, GENERAL)) - product).max() <= 1e-14


def test_columns_are_single_steps():
    config = WalkConfig(7, 2, GENERAL)
    unitary = build_unitary(config)
    for j in range(14):
        column = step(PureState.basis(7, j // 2, j % 2), config).amplitudes
        assert np.abs(unitary[:, j] - column).max() <= 1e-14


def test_phase_operator_reduces_mod_d():
    assert np.array_equal(phase_operator(5, 7), phase_operator(5, 2))


@pytest.mark.parametrize("builder", [
    lambda: build_unitary(WalkConfig(40, 1, HADAMARD), cap=32),
    lambda: shift_operator(40, cap=32),
    lambda: phase_operator(40, 1, cap=32),
    lambda: coin_operator(40, HADAMARD, cap=32),
])
def test_dimension_cap(builder):
    with pytest.raises(DimensionCap) as excinfo:
        builder()
    assert excinfo.value.d == 40
