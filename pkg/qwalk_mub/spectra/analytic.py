# qwalk_mub/spectra/analytic.py

"""
Closed-form spectrum of U = S(1⊗C)F.

For a given q the eigenvalues are λ = e^{i(δ + qε/2 + τξ_m)} with
cos ξ_m = (−1)^q·cosθ·cos((m+q)ε − γ), m ∈ [0, d), τ = ±1.
Eigenvectors come in three constructions (see EigenRegime):

  Q_ZERO      |m⟩ ⊗ spinor, any d
  GENERIC     N·(1/√d)·Σ_j e^{iχ_{m,j}}|jq⟩ ⊗ (1, β·e^{i2qεj}), d prime, sinθ ≠ 0
  THETA_ZERO  (1/√d)·Σ_j e^{iχ_{m,j}}|jq⟩ ⊗ |τ⟩, d prime, diagonal coin

with χ_{m,j} = −(qε/2)j² + (mε + qπ)j. All phases whose argument is a rational
multiple of π are reduced exactly (as integers mod 2d) before exponentiating.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from qwalk_mub.core.exceptions import DegenerateBranch, InvalidParameterError, UnsupportedRegime
from qwalk_mub.core.params import CoinParams
from qwalk_mub.core.status import EigenRegime
from qwalk_mub.utils.numtheory import is_prime
from qwalk_mub.walk.state import PureState, momentum_state

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class EigenLabel:
    """(q, m, τ) label of an eigenpair; τ = +1 or −1."""
    q: int
    m: int
    tau: int

    def __post_init__(self):
        if self.tau not in (1, -1):
            raise InvalidParameterError(f"tau must be +1 or -1, got {self.tau!r}", field="tau")

    @property
    def sort_key(self) -> Tuple[int, int]:
        """Canonical order: m ascending, τ = +1 before τ = −1."""
        return (self.m, -self.tau)

    def __str__(self):
        return f"(q={self.q}, m={self.m}, tau={self.tau:+d})"


@dataclass(frozen=True, eq=False)
class EigenPair:
    """A labelled eigenvalue with its normalized eigenvector."""
    label: EigenLabel
    eigenvalue: complex
    vector: PureState
    regime: EigenRegime

    @property
    def angle(self) -> float:
        """Eigenvalue angle in [0, 2π)."""
        return cmath.phase(self.eigenvalue) % (2.0 * math.pi)


def _unit(angle: float) -> complex:
    return complex(math.cos(angle), math.sin(angle))


def _pi_phase(numerator: int, d: int) -> complex:
    """e^{iπ·numerator/d}, numerator reduced exactly mod 2d."""
    return _unit(math.pi * (numerator % (2 * d)) / d)


def chirp(m: int, q: int, d: int) -> NDArray[np.complex128]:
    """e^{iχ_{m,j}} for j in [0, d); χ_{m,j} = (π/d)·(−qj² + 2mj + qdj)."""
    j = np.arange(d, dtype=np.int64)
    two_d = 2 * d
    numerators = (-q * ((j * j) % two_d) + 2 * m * j + ((q * d) % two_d) * j) % two_d
    return np.exp(1j * math.pi * numerators / d)


def select_regime(q: int, coin: CoinParams, d: int) -> EigenRegime:
    """
    Picks the closed-form construction for (q, coin, d).

    Raises:
        UnsupportedRegime: For composite d with q != 0.
    """
    if not 0 <= q < d:
        raise InvalidParameterError(f"phase index must lie in [0, {d}), got {q}", field="q")
    if q == 0:
        return EigenRegime.Q_ZERO
    if not is_prime(d):
        raise UnsupportedRegime(d, q, coin.theta)
    return EigenRegime.THETA_ZERO if coin.is_diagonal else EigenRegime.GENERIC


def xi_angle(m: int, q: int, coin: CoinParams, d: int) -> float:
    """
    ξ in [0, π] with cos ξ = (−1)^q·cosθ·cos((m+q)ε − γ).

    Evaluated as atan2(sin ξ, cos ξ) with sin²ξ = sin²θ + cos²θ·sin²(·), which
    stays accurate where arccos would lose half the digits (cos ξ near ±1).
    """
    alpha = 2.0 * math.pi * ((m + q) % d) / d - coin.gamma
    sign = -1.0 if q % 2 else 1.0
    cos_xi = sign * math.cos(coin.theta) * math.cos(alpha)
    sin_xi = math.hypot(math.sin(coin.theta), math.cos(coin.theta) * math.sin(alpha))
    return math.atan2(sin_xi, cos_xi)


def analytic_eigenvalue(label: EigenLabel, coin: CoinParams, d: int) -> complex:
    """
    λ for one label, in the construction selected by select_regime.

    On the θ=0 branch the τ=-1 eigenvalues carry the label of the eigenvector
    they belong to: label m holds e^{i(δ-γ)}·e^{-i(-qε/2 + m'ε + qπ)} with
    m' = (q - m) mod d. The branch therefore matches e^{i(δ+τγ)}·e^{-i(τqε/2 + mε + qπ)}
    label by label for τ=+1 and only as a multiset for τ=-1.
    """
    select_regime(label.q, coin, d)
    q, m, tau = label.q, label.m, label.tau
    if coin.is_diagonal:
        # e^{i(δ + τγ)}·e^{−i(qε/2 + τ(mε + qπ))}
        return _unit(coin.delta + tau * coin.gamma) * _pi_phase(-(q + tau * (2 * m + q * d)), d)
    return _unit(coin.delta + tau * xi_angle(m, q, coin, d)) * _pi_phase(q, d)


def analytic_eigenvalues(q: int, coin: CoinParams, d: int) -> List[Tuple[EigenLabel, complex]]:
    """
    The full labelled spectrum for phase index q, in canonical label order.

    Raises:
        UnsupportedRegime: When no closed form applies (composite d, q != 0).
    """
    select_regime(q, coin, d)
    return [
        (label, analytic_eigenvalue(label, coin, d))
        for label in (EigenLabel(q, m, tau) for m in range(d) for tau in (1, -1))
    ]


def _spinor(block: NDArray[np.complex128], eigenvalue: complex) -> Tuple[complex, complex]:
    """
    Normalized eigenvector (u, w) of a 2×2 block with u real and >= 0.

    Uses whichever of the two row-derived candidates has the larger norm.
    """
    first = np.array([block[0, 1], eigenvalue - block[0, 0]])
    second = np.array([eigenvalue - block[1, 1], block[1, 0]])
    vec = first if np.linalg.norm(first) >= np.linalg.norm(second) else second
    vec = vec / np.linalg.norm(vec)
    u, w = complex(vec[0]), complex(vec[1])
    if abs(u) > 0.0:
        rotation = abs(u) / u
        u, w = abs(u), w * rotation
    return u, w


def _su2(coin: CoinParams) -> NDArray[np.complex128]:
    c, s = coin.c, coin.s
    return np.array([[c, s], [-s.conjugate(), c.conjugate()]], dtype=np.complex128)


def spinor_coefficients(label: EigenLabel, coin: CoinParams, d: int) -> Tuple[complex, complex]:
    """
    (N, N·β): the coin-space coefficients of the j = 0 term of an eigenvector.

    For q = 0 the spinor is an eigenvector of diag(e^{−imε}, e^{imε})·C; for
    q != 0 of diag(1, e^{2iΞ})·C with Ξ = (m+q)ε + qπ, where β picks up e^{−2iΞ}.
    C is taken without its global phase δ.

    Raises:
        DegenerateBranch: If sinθ = 0 (the spinor is |τ⟩, not of this form).
    """
    if coin.is_diagonal:
        raise DegenerateBranch(coin.theta)
    q, m, tau = label.q, label.m, label.tau
    xi = xi_angle(m, q, coin, d)
    su2 = _su2(coin)
    if q == 0:
        rotation = np.diag([_pi_phase(-2 * m, d), _pi_phase(2 * m, d)])
        return _spinor(rotation @ su2, _unit(tau * xi))
    # e^{iΞ} = (−1)^q·e^{i(m+q)ε}
    big_xi = _pi_phase(2 * (m + q) + q * d, d)
    block = np.diag([1.0, big_xi * big_xi]) @ su2
    u, w_tilde = _spinor(block, _unit(tau * xi) * big_xi)
    return u, w_tilde / (big_xi * big_xi)


def beta_closed_form(label: EigenLabel, coin: CoinParams, d: int) -> complex:
    """
    β straight from its closed form (no 2×2 solve).

    q != 0: [(−1)^q e^{iτξ} e^{−i(m+q)ε} − cosθ e^{−2i(m+q)ε} e^{iγ}] / (sinθ e^{iσ})
    q = 0:  [e^{iτξ} e^{imε} − cosθ e^{iγ}] / (sinθ e^{iσ})
    """
    if coin.is_diagonal:
        raise DegenerateBranch(coin.theta)
    q, m, tau = label.q, label.m, label.tau
    xi = xi_angle(m, q, coin, d)
    c, s = coin.c, coin.s
    if q == 0:
        return (_unit(tau * xi) * _pi_phase(2 * m, d) - c) / s
    sign = -1.0 if q % 2 else 1.0
    shift = _pi_phase(-2 * (m + q), d)
    return (sign * _unit(tau * xi) * shift - c * shift * shift) / s


def analytic_eigenvector(label: EigenLabel, coin: CoinParams, d: int,
                         regime: Optional[EigenRegime] = None) -> EigenPair:
    """
    Closed-form eigenpair for a label.

    Args:
        label: (q, m, τ) with 0 <= m < d.
        coin: Coin parameters.
        d: Cycle size.
        regime: Forces a construction; GENERIC on a diagonal coin raises DegenerateBranch.

    Raises:
        UnsupportedRegime: Composite d with q != 0.
        DegenerateBranch: GENERIC forced with sinθ = 0.
    """
    if not 0 <= label.m < d:
        raise InvalidParameterError(f"m must lie in [0, {d}), got {label.m}", field="m")
    selected = select_regime(label.q, coin, d)
    if regime is EigenRegime.GENERIC and coin.is_diagonal:
        raise DegenerateBranch(coin.theta)
    if regime is not None and regime is not selected:
        raise InvalidParameterError(f"regime {regime} does not apply to {label} with d={d}", field="regime")
    regime = selected

    q, m, tau = label.q, label.m, label.tau
    eigenvalue = analytic_eigenvalue(label, coin, d)

    if regime is EigenRegime.Q_ZERO:
        spatial = momentum_state(m, d)
        if coin.is_diagonal:
            u, w = (1.0, 0.0) if tau == 1 else (0.0, 1.0)
        else:
            u, w = spinor_coefficients(label, coin, d)
        vector = PureState.from_components(u * spatial, w * spatial)
        return EigenPair(label, eigenvalue, vector, regime)

    phases = chirp(m, q, d) / math.sqrt(d)
    support = (np.arange(d, dtype=np.int64) * q) % d
    upper_k = np.zeros(d, dtype=np.complex128)
    lower_k = np.zeros(d, dtype=np.complex128)
    if regime is EigenRegime.THETA_ZERO:
        (upper_k if tau == 1 else lower_k)[support] = phases
    else:
        u, w = spinor_coefficients(label, coin, d)
        # e^{i2qεj} = e^{iπ·4qj/d}
        j = np.arange(d, dtype=np.int64)
        drift = np.exp(1j * math.pi * ((4 * q * j) % (2 * d)) / d)
        upper_k[support] = u * phases
        lower_k[support] = w * phases * drift

    # Σ_k a_k|k⟩ in the position basis is the unitary inverse DFT of a
    vector = PureState.from_components(np.fft.ifft(upper_k, norm="ortho"),
                                       np.fft.ifft(lower_k, norm="ortho"))
    return EigenPair(label, eigenvalue, vector, regime)


def full_eigenbasis(q: int, coin: CoinParams, d: int) -> List[EigenPair]:
    """
    All 2d closed-form eigenpairs, sorted by (m ascending, τ=+1 before τ=−1).

    Raises:
        UnsupportedRegime: Composite d with q != 0.
    """
    regime = select_regime(q, coin, d)
    pairs = [analytic_eigenvector(EigenLabel(q, m, tau), coin, d) for m in range(d) for tau in (1, -1)]
    logger.debug(f"Built analytic eigenbasis d={d}, q={q}, regime={regime}")
    return pairs
