# qwalk_mub/complementarity/overlaps.py

"""
Overlap matrices between two eigenbases of the walk.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from qwalk_mub.core.constants import CLUSTER_ANGLE_TOL, STOCHASTIC_TOL
from qwalk_mub.core.exceptions import DimensionMismatch
from qwalk_mub.core.params import CoinParams
from qwalk_mub.spectra.analytic import EigenLabel, EigenPair
from qwalk_mub.spectra.numerical import eigenvalue_clusters

logger = logging.getLogger(__name__)

# (row label, column label, |⟨row|col⟩|)
OverlapEntry = Tuple[EigenLabel, EigenLabel, float]


@dataclass(frozen=True, eq=False)
class OverlapMatrix:
    """
    entries[i, j] = |⟨row_i|col_j⟩| for row_i in the q-basis and col_j in the q'-basis.

    Rows and columns keep the order of the bases they came from (canonical
    label order for closed-form bases, angle order for oracle bases).
    """
    row_labels: Tuple[EigenLabel, ...]
    col_labels: Tuple[EigenLabel, ...]
    entries: NDArray[np.float64]
    d: int
    q: int
    q_prime: int
    coin: Optional[CoinParams] = None

    @property
    def squared(self) -> NDArray[np.float64]:
        return self.entries ** 2

    @property
    def max_entry(self) -> float:
        return float(self.entries.max())

    def row_sums(self) -> NDArray[np.float64]:
        """Σ_j |⟨row_i|col_j⟩|², one per row."""
        return self.squared.sum(axis=1)

    def column_sums(self) -> NDArray[np.float64]:
        return self.squared.sum(axis=0)

    def is_doubly_stochastic(self, tol: float = STOCHASTIC_TOL) -> bool:
        """True when every row and column of the squared matrix sums to 1."""
        return bool(
            np.all(np.abs(self.row_sums() - 1.0) <= tol)
            and np.all(np.abs(self.column_sums() - 1.0) <= tol)
        )

    def top_entries(self, count: int) -> List[OverlapEntry]:
        """The `count` largest entries, largest first (ties in row-major order)."""
        flat = self.entries.ravel()
        order = np.argsort(-flat, kind="stable")[:max(count, 0)]
        size = self.entries.shape[1]
        return [
            (self.row_labels[i // size], self.col_labels[i % size], float(flat[i]))
            for i in order
        ]


def _vectors(basis: Sequence[EigenPair]) -> NDArray[np.complex128]:
    """Eigenvectors as the columns of a 2d×2d matrix."""
    return np.column_stack([pair.vector.amplitudes for pair in basis])


def _check_bases(basis_a: Sequence[EigenPair], basis_b: Sequence[EigenPair]) -> int:
    if not basis_a:
        raise DimensionMismatch(len(basis_b), 0, what="basis")
    d = basis_a[0].vector.d
    for name, basis in (("first basis", basis_a), ("second basis", basis_b)):
        if len(basis) != 2 * d:
            raise DimensionMismatch(2 * d, len(basis), what=name)
        for pair in basis:
            if pair.vector.d != d:
                raise DimensionMismatch(2 * d, 2 * pair.vector.d, what=f"{name} vector")
    return d


def overlap_matrix(basis_a: Sequence[EigenPair], basis_b: Sequence[EigenPair],
                   coin: Optional[CoinParams] = None) -> OverlapMatrix:
    """
    All 4d² overlap magnitudes |⟨a_i|b_j⟩| between two complete bases.

    Raises:
        DimensionMismatch: If a basis is incomplete or the bases live on different cycles.
    """
    d = _check_bases(basis_a, basis_b)
    gram = _vectors(basis_a).conj().T @ _vectors(basis_b)
    matrix = OverlapMatrix(
        row_labels=tuple(pair.label for pair in basis_a),
        col_labels=tuple(pair.label for pair in basis_b),
        entries=np.abs(gram),
        d=d,
        q=basis_a[0].label.q,
        q_prime=basis_b[0].label.q,
        coin=coin,
    )
    logger.debug(f"Overlap matrix d={d}, q={matrix.q}, q'={matrix.q_prime}: max entry {matrix.max_entry:.6f}")
    return matrix


def subspace_max_overlap(basis_a: Sequence[EigenPair], basis_b: Sequence[EigenPair],
                         tol: float = CLUSTER_ANGLE_TOL) -> float:
    """
    Largest overlap attainable by any choice of eigenvectors of the two operators.

    For every pair of eigenvalue clusters this is the largest singular value of
    the overlap block; for non-degenerate spectra it reduces to the largest entry.
    Unlike the entry-wise maximum it does not depend on the basis chosen inside
    a degenerate eigenspace.
    """
    _check_bases(basis_a, basis_b)
    gram = _vectors(basis_a).conj().T @ _vectors(basis_b)
    best = float(np.abs(gram).max())
    clusters_a = eigenvalue_clusters(basis_a, tol)
    clusters_b = eigenvalue_clusters(basis_b, tol)
    for rows in clusters_a:
        for cols in clusters_b:
            if len(rows) == 1 and len(cols) == 1:
                continue
            best = max(best, float(np.linalg.norm(gram[np.ix_(rows, cols)], 2)))
    return best
