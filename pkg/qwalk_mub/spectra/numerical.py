# qwalk_mub/spectra/numerical.py

"""
Dense eigendecomposition oracle, residual checks and multiset spectrum comparison.

The oracle works for any d (it is the only source of eigenbases for composite d
with q != 0). Labels are synthesized from the eigenvalue-angle order.
"""

import logging
import math
from typing import List, Sequence, Union

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import schur

from qwalk_mub.core.constants import (
    CLUSTER_ANGLE_TOL,
    DEFAULT_DIMENSION_CAP,
    NON_UNITARY_TOL,
    NUMERICAL_RESIDUAL_TOL,
)
from qwalk_mub.core.exceptions import DimensionMismatch, NonUnitaryInput, UnsupportedRegime
from qwalk_mub.core.params import CoinParams, TWO_PI, WalkConfig
from qwalk_mub.core.status import EigenRegime
from qwalk_mub.walk.evolution import step
from qwalk_mub.walk.state import PureState
from .analytic import EigenLabel, EigenPair, full_eigenbasis
from .operators import build_unitary

logger = logging.getLogger(__name__)

AngleSource = Union[Sequence[EigenPair], Sequence[complex], NDArray]


def _angles(values: AngleSource) -> NDArray[np.float64]:
    """Eigenvalue angles in [0, 2π) from eigenpairs or raw eigenvalues."""
    items = list(values)
    if items and isinstance(items[0], EigenPair):
        items = [pair.eigenvalue for pair in items]
    return np.mod(np.angle(np.asarray(items, dtype=np.complex128)), TWO_PI)


def eigenvalue_clusters(values: AngleSource, tol: float = CLUSTER_ANGLE_TOL) -> List[List[int]]:
    """
    Groups indices whose eigenvalue angles lie within tol of a neighbour.

    Angles are compared on the circle, so a cluster may straddle 0 ≡ 2π.
    Each cluster lists its indices in ascending angle order.
    """
    angles = _angles(values)
    if angles.size == 0:
        return []
    order = np.argsort(angles, kind="stable")
    clusters: List[List[int]] = [[int(order[0])]]
    for prev, idx in zip(order[:-1], order[1:]):
        if angles[idx] - angles[prev] <= tol:
            clusters[-1].append(int(idx))
        else:
            clusters.append([int(idx)])
    if len(clusters) > 1 and angles[order[0]] + TWO_PI - angles[order[-1]] <= tol:
        clusters[0] = clusters.pop() + clusters[0]
    return clusters


def numerical_eigenbasis(unitary: NDArray[np.complex128], q: int = 0,
                         tol: float = CLUSTER_ANGLE_TOL) -> List[EigenPair]:
    """
    Complete eigendecomposition of a dense unitary via the complex Schur form.

    For a normal matrix the Schur form is diagonal, so the Schur vectors are
    orthonormal eigenvectors. Vectors inside a degenerate cluster are
    re-orthonormalized with a QR step.

    Args:
        unitary: 2d×2d matrix, unitary within NON_UNITARY_TOL.
        q: Phase index recorded in the synthesized labels.
        tol: Angle tolerance for degenerate clusters.

    Returns:
        2d EigenPairs sorted by eigenvalue angle; the i-th gets label
        m = i // 2, τ = +1 for even i and −1 for odd i.

    Raises:
        NonUnitaryInput: If ‖U†U − I‖_max exceeds NON_UNITARY_TOL.
    """
    unitary = np.asarray(unitary, dtype=np.complex128)
    size = unitary.shape[0]
    if unitary.ndim != 2 or unitary.shape[1] != size:
        raise DimensionMismatch(size, unitary.shape[1] if unitary.ndim == 2 else 0, what="square matrix")
    if size % 2:
        raise DimensionMismatch(size + 1, size, what="walk operator (2d rows)")

    deviation = float(np.abs(unitary.conj().T @ unitary - np.eye(size)).max()) if size else 0.0
    if deviation > NON_UNITARY_TOL:
        raise NonUnitaryInput(deviation, NON_UNITARY_TOL)

    triangular, vectors = schur(unitary, output="complex")
    eigenvalues = np.diag(triangular)
    eigenvalues = eigenvalues / np.abs(eigenvalues)

    angles = np.mod(np.angle(eigenvalues), TWO_PI)
    order = np.argsort(angles, kind="stable")
    angles, vectors = angles[order], vectors[:, order]

    clusters = eigenvalue_clusters(np.exp(1j * angles), tol)
    for cluster in clusters:
        if len(cluster) > 1:
            q_factor, _ = np.linalg.qr(vectors[:, cluster])
            vectors[:, cluster] = q_factor
    logger.debug(
        f"Schur oracle: size={size}, deviation={deviation:.2e}, "
        f"{sum(1 for c in clusters if len(c) > 1)} degenerate clusters"
    )

    return [
        EigenPair(
            label=EigenLabel(q, i // 2, 1 if i % 2 == 0 else -1),
            eigenvalue=complex(math.cos(angles[i]), math.sin(angles[i])),
            vector=PureState(vectors[:, i]),
            regime=EigenRegime.NUMERICAL,
        )
        for i in range(size)
    ]


def residual(config: WalkConfig, pair: EigenPair) -> float:
    """‖U·v − λ·v‖₂, with U applied through the O(d) step kernels."""
    if pair.vector.d != config.d:
        raise DimensionMismatch(2 * config.d, 2 * pair.vector.d, what="eigenvector")
    image = step(pair.vector, config)
    return float(np.linalg.norm(image.amplitudes - pair.eigenvalue * pair.vector.amplitudes))


def _cut_angle(angles: NDArray[np.float64]) -> float:
    """Midpoint of the largest gap between consecutive angles on the circle."""
    ordered = np.sort(angles)
    gaps = np.diff(np.append(ordered, ordered[0] + TWO_PI))
    k = int(np.argmax(gaps))
    return float((ordered[k] + gaps[k] / 2.0) % TWO_PI)


def spectrum_distance(first: AngleSource, second: AngleSource) -> float:
    """
    Largest angular distance after matching two eigenvalue multisets in sorted order.

    Both sets are unrolled at the largest gap of their union, so a cluster
    that straddles angle 0 is not split between the two ends.

    Raises:
        DimensionMismatch: If the multisets differ in size.
    """
    a, b = _angles(first), _angles(second)
    if a.size != b.size:
        raise DimensionMismatch(a.size, b.size, what="spectrum")
    if a.size == 0:
        return 0.0
    cut = _cut_angle(np.concatenate([a, b]))
    a = np.sort(np.mod(a - cut, TWO_PI))
    b = np.sort(np.mod(b - cut, TWO_PI))
    diff = np.abs(a - b)
    return float(np.minimum(diff, TWO_PI - diff).max())


def spectrum_matches(first: AngleSource, second: AngleSource, tol: float = NUMERICAL_RESIDUAL_TOL) -> bool:
    return spectrum_distance(first, second) <= tol


def eigenbasis(q: int, coin: CoinParams, d: int, cap: int = DEFAULT_DIMENSION_CAP) -> List[EigenPair]:
    """
    Eigenbasis of U for (d, q, coin): closed form where it applies, Schur oracle otherwise.

    Raises:
        DimensionCap: If the oracle is needed and d exceeds cap.
    """
    try:
        return full_eigenbasis(q, coin, d)
    except UnsupportedRegime as exc:
        logger.warning(f"{exc} Falling back to the dense oracle.")
    return numerical_eigenbasis(build_unitary(WalkConfig(d, q, coin), cap), q=q)
