# qwalk_mub/complementarity/weyl.py

"""
Clock and shift operators on Z_d and the d + 1 mutually unbiased bases they
generate for prime d.

The walk factors are built from the same operators: the conditional
translation is S = X⊗P₊ + X†⊗P₋ and the phase shift is F = Z^q⊗P₊ + (Z^q)†⊗P₋.
"""

import logging
import math
from itertools import combinations
from typing import List, Sequence

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import schur

from qwalk_mub.core.constants import MUB_TOL
from qwalk_mub.core.exceptions import InvalidParameterError
from qwalk_mub.utils.numtheory import is_prime

logger = logging.getLogger(__name__)

_P_PLUS = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=np.complex128)
_P_MINUS = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=np.complex128)


def clock_matrix(d: int) -> NDArray[np.complex128]:
    """Z = diag(ω^x), ω = e^{2πi/d}."""
    x = np.arange(d)
    return np.diag(np.exp(2j * math.pi * x / d))


def shift_matrix(d: int) -> NDArray[np.complex128]:
    """X|x⟩ = |x+1 mod d⟩."""
    return np.roll(np.eye(d, dtype=np.complex128), 1, axis=0)


def walk_shift_from_weyl(d: int) -> NDArray[np.complex128]:
    """S = X⊗P₊ + X†⊗P₋ in the 2x + b layout."""
    x = shift_matrix(d)
    return np.kron(x, _P_PLUS) + np.kron(x.conj().T, _P_MINUS)


def walk_phase_from_weyl(d: int, q: int) -> NDArray[np.complex128]:
    """F = Z^q⊗P₊ + (Z^q)†⊗P₋ in the 2x + b layout."""
    z_q = np.linalg.matrix_power(clock_matrix(d), q % d)
    return np.kron(z_q, _P_PLUS) + np.kron(z_q.conj().T, _P_MINUS)


def weyl_eigenbases(d: int) -> List[NDArray[np.complex128]]:
    """
    Eigenbases (as column matrices) of Z, X and XZ^k for k = 1..d-1.

    For prime d each of these operators has a non-degenerate spectrum, so the
    Schur vectors are its eigenvectors.
    """
    z, x = clock_matrix(d), shift_matrix(d)
    bases = [np.eye(d, dtype=np.complex128)]
    power = np.eye(d, dtype=np.complex128)
    for _ in range(d):
        _, vectors = schur(x @ power, output="complex")
        bases.append(vectors)
        power = power @ z
    return bases


def mub_deviation(bases: Sequence[NDArray[np.complex128]]) -> float:
    """max over basis pairs and vectors of | |⟨a|b⟩|² − 1/d |."""
    if not bases:
        return 0.0
    d = bases[0].shape[0]
    deviation = 0.0
    for first, second in combinations(bases, 2):
        squared = np.abs(first.conj().T @ second) ** 2
        deviation = max(deviation, float(np.abs(squared - 1.0 / d).max()))
    return deviation


def check_weyl_mubs(d: int, tol: float = MUB_TOL) -> bool:
    """
    Whether the d + 1 clock/shift eigenbases are mutually unbiased.

    Raises:
        InvalidParameterError: For composite d.
    """
    if not is_prime(d):
        raise InvalidParameterError(f"clock/shift MUBs need prime d, got {d}", field="d")
    deviation = mub_deviation(weyl_eigenbases(d))
    logger.debug(f"Clock/shift MUB deviation for d={d}: {deviation:.2e}")
    return deviation <= tol
