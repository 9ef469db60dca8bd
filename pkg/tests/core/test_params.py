# tests/core/test_params.py

import math

import numpy as np
import pytest

from qwalk_mub.core.exceptions import InvalidParameterError, QwalkError
from qwalk_mub.core.params import CoinParams, DiracMode, WalkConfig
from qwalk_mub.core.status import EigenRegime

# --- CoinParams ---

def test_hadamard_preset():
    coin = CoinParams.hadamard()
    assert coin.theta == pytest.approx(math.pi / 4)
    assert coin.c == pytest.approx(1 / math.sqrt(2))
    assert coin.s == pytest.approx(1 / math.sqrt(2))
    assert not coin.is_diagonal


def test_identity_is_diagonal():
    assert CoinParams.identity().is_diagonal
    assert CoinParams(theta=0.0, gamma=1.0).is_diagonal


@pytest.mark.parametrize("name", ["hadamard", "HADAMARD", "identity"])
def test_from_name(name):
    assert CoinParams.from_name(name) == getattr(CoinParams, name.lower())()


def test_from_name_unknown():
    with pytest.raises(InvalidParameterError, match="unknown coin preset"):
        CoinParams.from_name("grover")


@pytest.mark.parametrize("theta", [-0.1, math.pi / 2 + 0.1, float("nan"), float("inf")])
def test_theta_out_of_range(theta):
    with pytest.raises(InvalidParameterError, match="theta"):
        CoinParams(theta=theta)


def test_phases_reduced_mod_two_pi():
    coin = CoinParams(theta=0.3, gamma=2 * math.pi + 0.5, sigma=-0.5)
    assert coin.gamma == pytest.approx(0.5)
    assert coin.sigma == pytest.approx(2 * math.pi - 0.5)


def test_random_coin_reproducible():
    first = CoinParams.random(np.random.default_rng(7))
    second = CoinParams.random(np.random.default_rng(7))
    assert first == second
    assert 0.0 <= first.theta <= math.pi / 2


def test_invalid_parameter_is_value_error():
    with pytest.raises(ValueError):
        CoinParams(theta=5.0)
    assert issubclass(InvalidParameterError, QwalkError)


# --- WalkConfig ---

def test_walk_config_derived_angles():
    config = WalkConfig(d=8, q=3, coin=CoinParams.hadamard())
    assert config.epsilon == pytest.approx(math.pi / 4)
    assert config.phi == pytest.approx(3 * math.pi / 4)


@pytest.mark.parametrize("d, q", [(1, 0), (5, 5), (5, -1), (2.5, 0), (True, 0)])
def test_walk_config_rejects(d, q):
    with pytest.raises(InvalidParameterError):
        WalkConfig(d=d, q=q, coin=CoinParams.identity())


def test_walk_config_to_dict():
    data = WalkConfig(5, 2, CoinParams.identity()).to_dict()
    assert data["d"] == 5 and data["q"] == 2
    assert data["coin"]["theta"] == 0.0


# --- DiracMode ---

def test_dirac_mode_energy():
    assert DiracMode(m=4.0, mu=1.0, k=3.0, band=-1).energy == pytest.approx(-5.0)


@pytest.mark.parametrize("kwargs, field", [
    ({"m": -1.0, "mu": 0.0, "k": 0.0}, "m"),
    ({"m": 1.0, "mu": 0.0, "k": 0.0, "band": 0}, "band"),
    ({"m": 1.0, "mu": float("nan"), "k": 0.0}, "mu"),
])
def test_dirac_mode_rejects(kwargs, field):
    with pytest.raises(InvalidParameterError, match=field):
        DiracMode(**kwargs)


# --- EigenRegime ---

def test_regime_flags():
    assert EigenRegime.GENERIC.is_analytic
    assert not EigenRegime.NUMERICAL.is_analytic
    assert str(EigenRegime.Q_ZERO) == "Q_ZERO"
