# qwalk_mub/complementarity/theorem.py

"""
Complementarity checks between eigenbases of U for two phase indices q != q'.

For prime d every overlap is bounded by 1/√d (the bases are almost mutually
unbiased); for a diagonal coin they are exactly unbiased within each coin
sector. For composite d the bound can fail and the oracle bases are used.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from qwalk_mub.core.constants import (
    BOUND_TOL,
    DEFAULT_DIMENSION_CAP,
    MUB_TOL,
    ORTHOGONAL_TOL,
    VIOLATION_CAP,
)
from qwalk_mub.core.exceptions import InvalidParameterError, UnsupportedRegime
from qwalk_mub.core.params import CoinParams
from qwalk_mub.spectra.analytic import (
    EigenLabel,
    EigenPair,
    chirp,
    full_eigenbasis,
    spinor_coefficients,
)
from qwalk_mub.spectra.numerical import eigenbasis
from qwalk_mub.utils.numtheory import companion_index, gauss_sum, half, is_prime, mod_inverse
from .overlaps import OverlapEntry, OverlapMatrix, overlap_matrix, subspace_max_overlap

logger = logging.getLogger(__name__)


@dataclass
class ComplementarityReport:
    """
    Outcome of comparing the q- and q'-eigenbases against the 1/√d bound.

    Attributes:
        max_overlap: Largest entry of the overlap grid.
        max_entry: Same as max_overlap; kept as the grid-level name in output rows.
        bound: 1/√d.
        bound_satisfied: max_overlap² <= 1/d + BOUND_TOL.
        violations: Entries whose square exceeds 1/d + BOUND_TOL, largest
            first, at most VIOLATION_CAP of them.
        violation_count: Total number of violating entries.
        is_mub: Every squared entry equals 1/d within MUB_TOL.
        analytic: Both bases came from closed forms.
        seed: Seed of the coin draw, when the coin was random.
        subspace_max_overlap: Largest overlap over degenerate eigenvalue clusters,
            independent of the oracle's basis choice. Only set when an oracle
            basis is involved.
        matrix: The overlap grid, unless the caller dropped it.
    """
    d: int
    q: int
    q_prime: int
    max_overlap: float
    max_entry: float
    bound: float
    bound_satisfied: bool
    violations: List[OverlapEntry] = field(default_factory=list)
    violation_count: int = 0
    is_mub: bool = False
    analytic: bool = True
    seed: Optional[int] = None
    subspace_max_overlap: Optional[float] = None
    coin: Optional[CoinParams] = None
    matrix: Optional[OverlapMatrix] = field(default=None, repr=False)

    @property
    def amub(self) -> bool:
        """Bounded by 1/√d without being exactly unbiased."""
        return self.bound_satisfied and not self.is_mub

    @property
    def max_squared(self) -> float:
        return self.max_overlap ** 2

    def to_dict(self) -> Dict[str, Any]:
        """Flat row for csv/json output; violations are summarized by their count."""
        return {
            "d": self.d,
            "q": self.q,
            "q_prime": self.q_prime,
            "max_overlap": self.max_overlap,
            "max_squared": self.max_squared,
            "max_entry": self.max_entry,
            "bound": self.bound,
            "bound_satisfied": self.bound_satisfied,
            "violation_count": self.violation_count,
            "amub": self.amub,
            "is_mub": self.is_mub,
            "analytic": self.analytic,
            "seed": self.seed,
            "subspace_max_overlap": self.subspace_max_overlap,
        }


@dataclass(frozen=True)
class MubCheck:
    """Result of an exact-MUB check; deviations are absolute."""
    holds: bool
    max_deviation: float
    max_cross: float


@lru_cache(maxsize=256)
def cached_eigenbasis(q: int, coin: CoinParams, d: int, cap: int = DEFAULT_DIMENSION_CAP) -> Tuple[EigenPair, ...]:
    """eigenbasis() memoized per (q, coin, d); sweeps reuse each basis for many pairs."""
    return tuple(eigenbasis(q, coin, d, cap))


def build_report(matrix: OverlapMatrix, subspace_max: Optional[float] = None,
                 analytic: bool = True, seed: Optional[int] = None) -> ComplementarityReport:
    """Summarizes an overlap matrix against the 1/√d bound."""
    d = matrix.d
    threshold = 1.0 / d + BOUND_TOL
    squared = matrix.squared
    max_entry = matrix.max_entry

    flagged = np.flatnonzero(squared.ravel() > threshold)
    order = flagged[np.argsort(-squared.ravel()[flagged], kind="stable")][:VIOLATION_CAP]
    size = squared.shape[1]
    violations = [
        (matrix.row_labels[i // size], matrix.col_labels[i % size], float(matrix.entries.ravel()[i]))
        for i in order
    ]

    return ComplementarityReport(
        d=d,
        q=matrix.q,
        q_prime=matrix.q_prime,
        max_overlap=max_entry,
        max_entry=max_entry,
        bound=1.0 / math.sqrt(d),
        bound_satisfied=max_entry ** 2 <= threshold,
        violations=violations,
        violation_count=int(flagged.size),
        is_mub=bool(np.all(np.abs(squared - 1.0 / d) <= MUB_TOL)),
        analytic=analytic,
        seed=seed,
        subspace_max_overlap=subspace_max,
        coin=matrix.coin,
        matrix=matrix,
    )


def check_theorem1(d: int, q: int, q_prime: int, coin: CoinParams, seed: Optional[int] = None,
                   cap: int = DEFAULT_DIMENSION_CAP, keep_matrix: bool = True) -> ComplementarityReport:
    """
    Compares the q- and q'-eigenbases of U against the 1/√d bound.

    Closed-form bases are used where they exist, the dense oracle otherwise.

    Args:
        keep_matrix: Attach the overlap grid to the report (sweeps drop it).

    Raises:
        InvalidParameterError: If q == q' (mod d).
        DimensionCap: If an oracle basis is needed beyond cap.
    """
    q, q_prime = q % d, q_prime % d
    if q == q_prime:
        raise InvalidParameterError(f"phase indices must differ, got q = q' = {q}", field="q_prime")

    basis_a = cached_eigenbasis(q, coin, d, cap)
    basis_b = cached_eigenbasis(q_prime, coin, d, cap)
    matrix = overlap_matrix(basis_a, basis_b, coin=coin)

    analytic = all(pair.regime.is_analytic for pair in basis_a + basis_b)
    subspace_max = None if analytic else subspace_max_overlap(basis_a, basis_b)
    report = build_report(matrix, subspace_max=subspace_max, analytic=analytic, seed=seed)
    if not keep_matrix:
        report.matrix = None

    if not report.bound_satisfied and is_prime(d):
        logger.warning(
            f"Bound 1/sqrt({d}) violated for prime d: q={q}, q'={q_prime}, "
            f"max overlap^2 = {report.max_squared:.3e} ({report.violation_count} entries)"
        )
    logger.debug(f"Checked d={d}, q={q}, q'={q_prime}: max overlap^2 = {report.max_squared:.6f}")
    return report


def mub_check_theta0(d: int, q: int, q_prime: int, coin: Optional[CoinParams] = None) -> MubCheck:
    """
    Exact unbiasedness for a diagonal coin: |⟨Ψ'|Ψ⟩|² = δ_{ττ'}/d.

    Args:
        coin: Any coin with sinθ = 0; defaults to the identity coin.

    Raises:
        UnsupportedRegime: For composite d.
        InvalidParameterError: If q == q' or the coin is not diagonal.
    """
    coin = CoinParams.identity() if coin is None else coin
    if not coin.is_diagonal:
        raise InvalidParameterError(f"coin must have sin(theta) = 0, got theta={coin.theta!r}", field="coin")
    q, q_prime = q % d, q_prime % d
    if not is_prime(d):
        raise UnsupportedRegime(d, q or q_prime, coin.theta)
    if q == q_prime:
        raise InvalidParameterError(f"phase indices must differ, got q = q' = {q}", field="q_prime")

    matrix = overlap_matrix(full_eigenbasis(q, coin, d), full_eigenbasis(q_prime, coin, d))
    same = np.array([[a.tau == b.tau for b in matrix.col_labels] for a in matrix.row_labels])
    max_deviation = float(np.abs(matrix.squared[same] - 1.0 / d).max())
    max_cross = float(matrix.entries[~same].max())
    holds = max_deviation <= MUB_TOL and max_cross <= ORTHOGONAL_TOL
    logger.debug(f"theta=0 MUB check d={d}, q={q}, q'={q_prime}: deviation {max_deviation:.2e}, cross {max_cross:.2e}")
    return MubCheck(holds=holds, max_deviation=max_deviation, max_cross=max_cross)


def _coin_part(label: EigenLabel, coin: CoinParams, d: int) -> Tuple[complex, complex]:
    """(N, Nβ) of a closed-form eigenvector, or |τ⟩ for a diagonal coin."""
    if coin.is_diagonal:
        return (1.0, 0.0) if label.tau == 1 else (0.0, 1.0)
    return spinor_coefficients(label, coin, d)


def theorem1_inner_overlap(d: int, q: int, q_prime: int, label: EigenLabel, label_prime: EigenLabel,
                           coin: CoinParams) -> complex:
    """
    ⟨ψ'_{m',τ'}|ψ_{m,τ}⟩ from the closed forms, without building the 2d-vectors.

    For q, q' != 0 the momentum supports pair up through the companion index
    j̃ = q·q'⁻¹·j and the chirp difference collapses to a quadratic Gauss sum:

        ⟨ψ'|ψ⟩ = (N'N + N'β'*·Nβ)·S(x, y, d)/d,
        x = h·q·(Q − 1), y = m − m'Q, Q = q·q'⁻¹, h = 2⁻¹ (mod d).

    For q' = 0 the sum has the single term j̃ = m'·q⁻¹; q = 0 is the
    conjugate of the swapped call.

    Raises:
        UnsupportedRegime: For composite d.
        InvalidParameterError: If q == q' or the labels do not match q, q'.
    """
    q, q_prime = q % d, q_prime % d
    if not is_prime(d):
        raise UnsupportedRegime(d, q or q_prime, coin.theta)
    if q == q_prime:
        raise InvalidParameterError(f"phase indices must differ, got q = q' = {q}", field="q_prime")
    if label.q != q or label_prime.q != q_prime:
        raise InvalidParameterError(
            f"labels {label} and {label_prime} do not belong to q={q}, q'={q_prime}", field="label"
        )
    if q == 0:
        return theorem1_inner_overlap(d, q_prime, q, label_prime, label, coin).conjugate()

    u, w = _coin_part(label, coin, d)
    u_prime, w_prime = _coin_part(label_prime, coin, d)

    if q_prime == 0:
        j = (label_prime.m * mod_inverse(q, d)) % d
        # e^{i2qεj} = e^{iπ·4qj/d}; the diagonal-coin vectors carry no drift
        drift = 1.0 if coin.is_diagonal else np.exp(1j * math.pi * ((4 * q * j) % (2 * d)) / d)
        spinor = np.conj(u_prime) * u + np.conj(w_prime) * w * drift
        return complex(chirp(label.m, q, d)[j] * spinor / math.sqrt(d))

    h = half(d)
    ratio = companion_index(1, q, q_prime, d)
    x = (h * q * (ratio - 1)) % d
    y = (label.m - label_prime.m * ratio) % d
    spinor = np.conj(u_prime) * u + np.conj(w_prime) * w
    return complex(spinor * gauss_sum(x, y, d) / d)


def amplitude_factor(beta: complex, beta_prime: complex) -> float:
    """
    N'N·(1 + |β'||β|) with N = (1 + |β|²)^{-1/2}.

    Bounds |N'N·(1 + β'*β)| from above and never exceeds 1, since
    (1 + |a|²)(1 + |b|²) >= (1 + |a||b|)².
    """
    a, b = abs(beta), abs(beta_prime)
    return (1.0 + a * b) / math.sqrt((1.0 + a * a) * (1.0 + b * b))
