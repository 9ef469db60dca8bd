# qwalk_mub/walk/state.py

"""
Pure states of a walker on the d-cycle and the standard states built from them.

Layout: amplitude index = 2x + b, with x the position and b = 0 for coin |+⟩,
b = 1 for coin |−⟩ (position-major).
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from qwalk_mub.core.constants import NORM_TOL
from qwalk_mub.core.exceptions import DimensionMismatch, InvalidParameterError

logger = logging.getLogger(__name__)

COIN_PLUS = 0
COIN_MINUS = 1


@dataclass(frozen=True, eq=False)
class PureState:
    """
    2d complex amplitudes α_{x,b} over (position, coin), normalized to 1 within NORM_TOL.

    Operations on a PureState never modify it in place; they return new states.
    """
    amplitudes: NDArray[np.complex128]

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128, copy=True).reshape(-1)
        if amps.size < 4 or amps.size % 2:
            raise InvalidParameterError(
                f"expected 2d amplitudes with d >= 2, got {amps.size}", field="amplitudes"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        if not self.is_normalized():
            raise InvalidParameterError(
                f"amplitudes must have unit norm, got {self.norm():.12g}", field="amplitudes"
            )

    # --- Construction ---

    @classmethod
    def from_components(cls, upper: NDArray[np.complex128], lower: NDArray[np.complex128]) -> "PureState":
        """Interleaves the coin-|+⟩ and coin-|−⟩ position amplitudes."""
        upper = np.asarray(upper, dtype=np.complex128)
        lower = np.asarray(lower, dtype=np.complex128)
        if upper.shape != lower.shape:
            raise DimensionMismatch(upper.size, lower.size, what="coin components")
        amps = np.empty(2 * upper.size, dtype=np.complex128)
        amps[0::2] = upper
        amps[1::2] = lower
        return cls(amps)

    @classmethod
    def basis(cls, d: int, x: int, coin: int = COIN_PLUS) -> "PureState":
        """The localized state |x⟩ ⊗ |±⟩."""
        if not 0 <= x < d:
            raise InvalidParameterError(f"position must lie in [0, {d}), got {x}", field="x")
        if coin not in (COIN_PLUS, COIN_MINUS):
            raise InvalidParameterError(f"coin index must be 0 or 1, got {coin}", field="coin")
        amps = np.zeros(2 * d, dtype=np.complex128)
        amps[2 * x + coin] = 1.0
        return cls(amps)

    @classmethod
    def random(cls, d: int, rng: np.random.Generator) -> "PureState":
        """Haar-like random state (normalized complex Gaussian vector)."""
        amps = rng.normal(size=2 * d) + 1j * rng.normal(size=2 * d)
        return cls(amps / np.linalg.norm(amps))

    # --- Views ---

    @property
    def d(self) -> int:
        return self.amplitudes.size // 2

    @property
    def upper(self) -> NDArray[np.complex128]:
        """Position amplitudes of coin |+⟩."""
        return self.amplitudes[0::2]

    @property
    def lower(self) -> NDArray[np.complex128]:
        """Position amplitudes of coin |−⟩."""
        return self.amplitudes[1::2]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def inner(self, other: "PureState") -> complex:
        """⟨self|other⟩."""
        if other.d != self.d:
            raise DimensionMismatch(2 * self.d, 2 * other.d, what="state")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def distance(self, other: "PureState") -> float:
        """‖self − other‖₂."""
        if other.d != self.d:
            raise DimensionMismatch(2 * self.d, 2 * other.d, what="state")
        return float(np.linalg.norm(self.amplitudes - other.amplitudes))

    def scaled(self, factor: complex) -> "PureState":
        """Global phase factor; |factor| must be 1."""
        return PureState(self.amplitudes * factor)


def momentum_state(k: int, d: int) -> NDArray[np.complex128]:
    """
    Position amplitudes of the normalized momentum state |k⟩:
    (1/√d)·exp(ikεx) for x in [0, d).
    """
    if not 0 <= k < d:
        raise InvalidParameterError(f"momentum must lie in [0, {d}), got {k}", field="k")
    x = np.arange(d)
    # reduce kx mod d exactly before exponentiating
    return np.exp(1j * (2.0 * math.pi / d) * ((k * x) % d)) / math.sqrt(d)


def fig2_initial_state(d: int) -> PureState:
    """
    (1/√2)·|k=0⟩ ⊗ (|+⟩ + i|−⟩): uniform over positions and, for the
    Hadamard-type coin at q = 0, the (m=0, τ=+1) eigenvector.
    """
    if d < 2:
        raise InvalidParameterError(f"cycle size must be >= 2, got {d}", field="d")
    spatial = momentum_state(0, d) / math.sqrt(2.0)
    return PureState.from_components(spatial, 1j * spatial)


def position_distribution(state: PureState) -> NDArray[np.float64]:
    """p(x) = |α_{x,+}|² + |α_{x,−}|²."""
    return np.abs(state.upper) ** 2 + np.abs(state.lower) ** 2


def total_variation(p: NDArray[np.float64], u: Optional[NDArray[np.float64]] = None) -> float:
    """
    Total-variation distance (1/2)·Σ|p(x) − u(x)|; u defaults to the uniform distribution.
    """
    p = np.asarray(p, dtype=np.float64)
    if u is None:
        return 0.5 * float(np.abs(p - 1.0 / p.size).sum())
    u = np.asarray(u, dtype=np.float64)
    if u.shape != p.shape:
        raise DimensionMismatch(p.size, u.size, what="distribution")
    return 0.5 * float(np.abs(p - u).sum())
