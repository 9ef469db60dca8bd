# qwalk_mub/dirac/overlap.py

"""
Overlaps ∫ψ_A(x)·ψ_B(x)* dx between Dirac modes with different gauge slopes.

With Δ = (μ_A − μ_B)/2 and δ = k_A − k_B the integrand is Γ·e^{iφ(x)},
φ(x) = Δx² + δx, so the full-line overlap is a Fresnel integral:

    Γ·e^{−iδ²/(4Δ)}·√(π/|Δ|)·e^{i·sign(Δ)·π/4},   |·| <= √(2π/|μ_A − μ_B|).
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.special import fresnel

from qwalk_mub.core.constants import (
    DELTA_NORMALIZATION,
    GAUSS_LEGENDRE_ORDER,
    SAMPLES_PER_PERIOD,
    THETA_ZERO_TOL,
)
from qwalk_mub.core.exceptions import EqualSlopes, InvalidParameterError, ParallelQuadratures
from qwalk_mub.core.params import DiracMode
from .modes import dirac_wavefunction, gamma_factor

logger = logging.getLogger(__name__)

MASSLESS_TOL = 1e-10


@dataclass(frozen=True)
class QuadratureResult:
    """
    Attributes:
        window: Half-width W of the integration interval.
        value: ∫_{−W}^{W} ψ_A ψ_B* dx.
        error_estimate: Endpoint (stationary-phase tail) bound on |full-line − value|.
        tail_corrected: value plus the leading endpoint asymptotics of both tails.
        panels: Number of Gauss–Legendre panels used.
    """
    window: float
    value: complex
    error_estimate: float
    tail_corrected: complex
    panels: int


@dataclass(frozen=True)
class XThetaCheck:
    holds: bool
    deviation: float
    value: float
    expected: float


def _chirp_parameters(mode_a: DiracMode, mode_b: DiracMode) -> Tuple[float, float]:
    """(Δ, δ) = ((μ_A − μ_B)/2, k_A − k_B)."""
    if mode_a.mu == mode_b.mu:
        raise EqualSlopes(mode_a.mu)
    if mode_a.m != mode_b.m:
        raise InvalidParameterError(
            f"modes must share the mass, got {mode_a.m!r} and {mode_b.m!r}", field="m"
        )
    return 0.5 * (mode_a.mu - mode_b.mu), mode_a.k - mode_b.k


def _full_line(gamma: float, delta_half: float, delta_k: float) -> complex:
    """Γ·∫ e^{i(Δx² + δx)} dx over the real line."""
    sign = 1.0 if delta_half > 0 else -1.0
    return (gamma * cmath.exp(-1j * delta_k * delta_k / (4.0 * delta_half))
            * math.sqrt(math.pi / abs(delta_half)) * cmath.exp(1j * sign * math.pi / 4.0))


def overlap_closed_form(mode_a: DiracMode, mode_b: DiracMode) -> complex:
    """
    Full-line overlap of two modes with μ_A != μ_B.

    Raises:
        EqualSlopes: If μ_A = μ_B.
        DegenerateSpinor: If either spinor vanishes.
    """
    delta_half, delta_k = _chirp_parameters(mode_a, mode_b)
    gamma = gamma_factor(mode_a.k, mode_b.k, mode_a.band, mode_b.band, mode_a.m)
    return _full_line(gamma, delta_half, delta_k)


def overlap_bound(mu: float, mu_prime: float) -> float:
    """√(2π/|μ − μ'|)."""
    if mu == mu_prime:
        raise EqualSlopes(mu)
    return math.sqrt(2.0 * math.pi / abs(mu - mu_prime))


def quadrature_overlap(mode_a: DiracMode, mode_b: DiracMode, window: float,
                       samples_per_period: int = SAMPLES_PER_PERIOD,
                       order: int = GAUSS_LEGENDRE_ORDER) -> QuadratureResult:
    """
    ∫_{−W}^{W} ψ_A ψ_B* dx by composite Gauss–Legendre quadrature.

    Panels are uniform and sized so that the shortest local period of the
    integrand, 2π/(2|Δ|W + |δ|), holds at least samples_per_period nodes.

    Raises:
        EqualSlopes: If μ_A = μ_B.
        InvalidParameterError: If window < 0.
    """
    if window < 0:
        raise InvalidParameterError(f"window must be >= 0, got {window!r}", field="window")
    delta_half, delta_k = _chirp_parameters(mode_a, mode_b)
    gamma = gamma_factor(mode_a.k, mode_b.k, mode_a.band, mode_b.band, mode_a.m)
    if window == 0:
        return QuadratureResult(window=0.0, value=0j, error_estimate=0.0, tail_corrected=0j, panels=0)

    period = 2.0 * math.pi / (2.0 * abs(delta_half) * window + abs(delta_k))
    panel_width = period * order / samples_per_period
    panels = max(1, math.ceil(2.0 * window / panel_width))

    nodes, weights = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(-window, window, panels + 1)
    centers = 0.5 * (edges[1:] + edges[:-1])
    half_widths = 0.5 * (edges[1:] - edges[:-1])
    x = (centers[:, None] + half_widths[:, None] * nodes[None, :]).ravel()
    w = (half_widths[:, None] * weights[None, :]).ravel()

    integrand = np.sum(dirac_wavefunction(x, mode_a) * dirac_wavefunction(x, mode_b).conj(), axis=-1)
    value = complex(np.dot(w, integrand))

    def phase(x0: float) -> float:
        return delta_half * x0 * x0 + delta_k * x0

    slope_right = 2.0 * delta_half * window + delta_k
    slope_left = -2.0 * delta_half * window + delta_k
    if slope_right == 0.0 or slope_left == 0.0:
        error_estimate = math.inf
        tail_corrected = value
    else:
        error_estimate = abs(gamma) * (1.0 / abs(slope_right) + 1.0 / abs(slope_left))
        tail_corrected = value + 1j * gamma * (
            cmath.exp(1j * phase(window)) / slope_right - cmath.exp(1j * phase(-window)) / slope_left
        )
    logger.debug(f"Quadrature W={window}: {panels} panels, error estimate {error_estimate:.2e}")
    return QuadratureResult(
        window=float(window),
        value=value,
        error_estimate=error_estimate,
        tail_corrected=tail_corrected,
        panels=panels,
    )


def windowed_fresnel_overlap(mode_a: DiracMode, mode_b: DiracMode, window: float) -> complex:
    """
    ∫_{−W}^{W} ψ_A ψ_B* dx exactly, from Fresnel integrals after completing the square.

    Raises:
        EqualSlopes: If μ_A = μ_B.
    """
    if window < 0:
        raise InvalidParameterError(f"window must be >= 0, got {window!r}", field="window")
    delta_half, delta_k = _chirp_parameters(mode_a, mode_b)
    gamma = gamma_factor(mode_a.k, mode_b.k, mode_a.band, mode_b.band, mode_a.m)
    if window == 0:
        return 0j

    shift = delta_k / (2.0 * delta_half)
    scale = math.sqrt(2.0 * abs(delta_half) / math.pi)
    s_values, c_values = fresnel(np.array([-window + shift, window + shift]) * scale)
    sign = 1.0 if delta_half > 0 else -1.0
    inner = math.sqrt(math.pi / (2.0 * abs(delta_half))) * complex(
        c_values[1] - c_values[0], sign * (s_values[1] - s_values[0])
    )
    return gamma * cmath.exp(-1j * delta_k * delta_k / (4.0 * delta_half)) * inner


def xtheta_slope(theta: float) -> float:
    """
    μ = −cotθ, the gauge slope for which H = γ·x_θ·σ_z + m·σ_x with γ = 1/sinθ.

    Raises:
        InvalidParameterError: If sinθ = 0 (x_θ = ±x has no finite slope).
    """
    sin_theta = math.sin(theta)
    if abs(sin_theta) < THETA_ZERO_TOL:
        raise InvalidParameterError(f"sin(theta) vanishes for theta={theta!r}", field="theta")
    return -math.cos(theta) / sin_theta


def massless_overlap(theta: float, theta_prime: float, k: float = 0.0, k_prime: float = 0.0) -> complex:
    """
    ⟨x_θ'|x_θ⟩-style overlap of two delta-normalized massless modes of equal chirality.

    Each mode is e^{i(μx²/2 + kx)}/√(2π|sinθ|) with μ = −cotθ (Γ = 1). When
    sinθ = 0 the mode is a position eigenstate at x = k and the overlap is the
    other mode's amplitude there.

    Raises:
        ParallelQuadratures: If sin(θ − θ') = 0.
    """
    if abs(math.sin(theta - theta_prime)) < THETA_ZERO_TOL:
        raise ParallelQuadratures(theta, theta_prime)
    if abs(math.sin(theta)) < THETA_ZERO_TOL:
        mu_prime = xtheta_slope(theta_prime)
        amplitude = DELTA_NORMALIZATION / math.sqrt(abs(math.sin(theta_prime)))
        return amplitude * cmath.exp(-1j * (0.5 * mu_prime * k * k + k_prime * k))
    if abs(math.sin(theta_prime)) < THETA_ZERO_TOL:
        return massless_overlap(theta_prime, theta, k_prime, k).conjugate()

    mu, mu_prime = xtheta_slope(theta), xtheta_slope(theta_prime)
    normalization = DELTA_NORMALIZATION ** 2 / math.sqrt(abs(math.sin(theta) * math.sin(theta_prime)))
    return normalization * _full_line(1.0, 0.5 * (mu - mu_prime), k - k_prime)


def massless_xtheta_check(theta: float, theta_prime: float, k: float = 0.0, k_prime: float = 0.0,
                          tol: float = MASSLESS_TOL) -> XThetaCheck:
    """
    Compares |massless_overlap| with 1/√(2π|sin(θ − θ')|).

    Raises:
        ParallelQuadratures: If sin(θ − θ') = 0.
    """
    value = abs(massless_overlap(theta, theta_prime, k, k_prime))
    expected = DELTA_NORMALIZATION / math.sqrt(abs(math.sin(theta - theta_prime)))
    deviation = abs(value - expected)
    return XThetaCheck(holds=deviation <= tol, deviation=deviation, value=value, expected=expected)
