# qwalk_mub/spectra/operators.py

"""
Dense 2d×2d operators in the PureState layout (index 2x + b).

These are oracles for the O(d) kernels in qwalk_mub.walk and for small-d
diagonalization; the cap guards against accidental dense builds at large d.
"""

import logging

import numpy as np
from numpy.typing import NDArray

from qwalk_mub.core.constants import DEFAULT_DIMENSION_CAP
from qwalk_mub.core.exceptions import DimensionCap
from qwalk_mub.core.params import CoinParams, WalkConfig
from qwalk_mub.walk.evolution import coin_matrix, phase_factors

logger = logging.getLogger(__name__)


def _check_cap(d: int, cap: int) -> None:
    if d > cap:
        raise DimensionCap(d, cap)


def _shift_sources(d: int) -> NDArray[np.int64]:
    """Row r of S·M is row _shift_sources(d)[r] of M."""
    x = np.arange(d)
    sources = np.empty(2 * d, dtype=np.int64)
    sources[0::2] = 2 * ((x - 1) % d)
    sources[1::2] = 2 * ((x + 1) % d) + 1
    return sources


def shift_operator(d: int, cap: int = DEFAULT_DIMENSION_CAP) -> NDArray[np.complex128]:
    """Conditional translation S = X⊗P₊ + X†⊗P₋ as a permutation matrix."""
    _check_cap(d, cap)
    return np.eye(2 * d, dtype=np.complex128)[_shift_sources(d)]


def phase_operator(d: int, q: int, cap: int = DEFAULT_DIMENSION_CAP) -> NDArray[np.complex128]:
    """Diagonal F with e^{iφx} on (x, +) and e^{−iφx} on (x, −)."""
    _check_cap(d, cap)
    return np.diag(_interleaved_phases(d, q))


def coin_operator(d: int, coin: CoinParams, cap: int = DEFAULT_DIMENSION_CAP) -> NDArray[np.complex128]:
    """1⊗C, block diagonal."""
    _check_cap(d, cap)
    return np.kron(np.eye(d), coin_matrix(coin))


def _interleaved_phases(d: int, q: int) -> NDArray[np.complex128]:
    factors = phase_factors(d, q)
    diagonal = np.empty(2 * d, dtype=np.complex128)
    diagonal[0::2] = factors
    diagonal[1::2] = factors.conj()
    return diagonal


def build_unitary(config: WalkConfig, cap: int = DEFAULT_DIMENSION_CAP) -> NDArray[np.complex128]:
    """
    Dense U = S·(1⊗C)·F; column j is one walk step applied to basis state j.

    Raises:
        DimensionCap: If d exceeds cap.
    """
    _check_cap(config.d, cap)
    coined = coin_operator(config.d, config.coin, cap) * _interleaved_phases(config.d, config.q)[None, :]
    unitary = coined[_shift_sources(config.d)]
    logger.debug(f"Built dense unitary for d={config.d}, q={config.q}")
    return unitary
