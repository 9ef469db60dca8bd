# qwalk_mub/dirac/modes.py

"""
Eigenmodes of the 1D Dirac operator in the linear gauge potential A(x) = μx:

    [[-i∂x - μx, m], [m, i∂x + μx]] ψ = E ψ,

    ψ(x) = e^{i(μx²/2 + kx)}·(m, E − k)/√N,   E = band·√(k² + m²),

with N = m² + (E − k)² = 2(k² + m² − band·k·√(k² + m²)), so |ψ(x)|² = 1 pointwise.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from qwalk_mub.core.exceptions import DegenerateSpinor, InvalidParameterError
from qwalk_mub.core.params import DiracMode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpinorSample:
    """ψ evaluated at one position."""
    x: float
    upper: complex
    lower: complex

    @property
    def norm_squared(self) -> float:
        return abs(self.upper) ** 2 + abs(self.lower) ** 2


def dirac_energy(k: float, m: float, band: int = 1) -> float:
    """band·√(k² + m²); independent of the gauge slope."""
    if m < 0:
        raise InvalidParameterError(f"mass must be >= 0, got {m!r}", field="m")
    if band not in (1, -1):
        raise InvalidParameterError(f"band must be +1 or -1, got {band!r}", field="band")
    return band * math.hypot(k, m)


def spinor_components(k: float, m: float, band: int = 1) -> Tuple[float, float]:
    """
    The normalized real spinor (m, E − k)/√N.

    E − k is evaluated as band·m²/(√(k²+m²) + |k|) when band·k > 0, where the
    direct difference would cancel.

    Raises:
        DegenerateSpinor: If m = 0 and band·|k| = k (the spinor vanishes).
    """
    energy = dirac_energy(k, m, band)
    if band * k > 0:
        gap = band * m * m / (math.hypot(k, m) + abs(k))
    else:
        gap = energy - k
    norm = math.hypot(m, gap)
    if norm == 0.0:
        raise DegenerateSpinor(k, m, band)
    return m / norm, gap / norm


def dirac_phase(x: ArrayLike, mu: float, k: float) -> NDArray[np.float64]:
    """f(x) = (μ/2)x² + kx."""
    x = np.asarray(x, dtype=np.float64)
    return 0.5 * mu * x * x + k * x


def dirac_wavefunction(x: ArrayLike, mode: DiracMode) -> NDArray[np.complex128]:
    """ψ at every x, shape (..., 2) with the upper component first."""
    upper, lower = spinor_components(mode.k, mode.m, mode.band)
    wave = np.exp(1j * dirac_phase(x, mode.mu, mode.k))
    return np.stack([upper * wave, lower * wave], axis=-1)


def dirac_spinor(x: float, mode: DiracMode) -> SpinorSample:
    """
    ψ(x) for one mode.

    Raises:
        DegenerateSpinor: For the massless mode whose spinor vanishes.
    """
    upper, lower = dirac_wavefunction(x, mode)
    return SpinorSample(x=float(x), upper=complex(upper), lower=complex(lower))


def gamma_factor(k: float, k_prime: float, band: int, band_prime: int, m: float) -> float:
    """
    Γ = (m·m + (E − k)(E' − k'))/(√N·√N'), the spinor inner product of two modes
    of equal mass. |Γ| <= 1.

    Raises:
        DegenerateSpinor: If either spinor vanishes.
    """
    upper, lower = spinor_components(k, m, band)
    upper_prime, lower_prime = spinor_components(k_prime, m, band_prime)
    return upper * upper_prime + lower * lower_prime


def dirac_operator_residual(x: ArrayLike, mode: DiracMode, h: float = 1e-4) -> float:
    """
    max |Hψ − Eψ| over x, with ∂x taken by central differences of step h.
    """
    x = np.asarray(x, dtype=np.float64)
    psi = dirac_wavefunction(x, mode)
    derivative = (dirac_wavefunction(x + h, mode) - dirac_wavefunction(x - h, mode)) / (2.0 * h)
    potential = mode.mu * x
    upper = -1j * derivative[..., 0] - potential * psi[..., 0] + mode.m * psi[..., 1]
    lower = mode.m * psi[..., 0] + 1j * derivative[..., 1] + potential * psi[..., 1]
    applied = np.stack([upper, lower], axis=-1)
    return float(np.abs(applied - mode.energy * psi).max())
