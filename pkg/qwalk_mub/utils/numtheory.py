# qwalk_mub/utils/numtheory.py

"""
Exact integer arithmetic on residues modulo d.

Residues are plain Python ints reduced into [0, d). Phases are only
exponentiated at the very end (gauss_sum), after the exponent has been
reduced exactly modulo d.
"""

import logging
import math
from typing import Tuple

import numpy as np

from qwalk_mub.core.constants import MILLER_RABIN_WITNESSES
from qwalk_mub.core.exceptions import InvalidParameterError, NotInvertible

logger = logging.getLogger(__name__)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """
    Deterministic Miller-Rabin primality test.

    The fixed witness set makes the answer exact for every n < 3.3e24,
    which covers all 64-bit inputs.

    Args:
        n: Positive integer.

    Returns:
        True iff n is prime.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p

    # n - 1 = r * 2^s with r odd
    r, s = n - 1, 0
    while r % 2 == 0:
        r //= 2
        s += 1

    for a in MILLER_RABIN_WITNESSES:
        x = pow(a, r, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Returns (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
        old_y, y = y, old_y - quot * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, d: int) -> int:
    """
    Multiplicative inverse of a modulo d.

    Raises:
        NotInvertible: If gcd(a, d) != 1.
        InvalidParameterError: If d < 1.
    """
    if d < 1:
        raise InvalidParameterError(f"modulus must be positive, got {d}", field="d")
    a %= d
    g, x, _ = extended_gcd(a, d)
    if g != 1:
        raise NotInvertible(a, d, g)
    return x % d


def companion_index(j: int, q: int, q_prime: int, d: int) -> int:
    """
    The unique j̃ in [0, d) with j̃·q' ≡ j·q (mod d).

    Pairs the momentum support |jq⟩ of one eigenbasis with the support
    |j̃q'⟩ of another.

    Raises:
        NotInvertible: If gcd(q', d) != 1.
    """
    ratio = (q * mod_inverse(q_prime, d)) % d
    return (ratio * j) % d


def gauss_sum(x: int, y: int, d: int) -> complex:
    """
    Generalized quadratic Gauss sum S = Σ_{j=0}^{d-1} exp(iε(xj² + yj)), ε = 2π/d.

    Evaluated by direct summation; the exponents are reduced exactly modulo d
    before the complex exponential is taken.
    """
    if d < 1:
        raise InvalidParameterError(f"modulus must be positive, got {d}", field="d")
    j = np.arange(d, dtype=np.int64)
    x, y = x % d, y % d
    # j*j < d² stays well inside int64 for every d this package handles
    exponents = (x * ((j * j) % d) + y * j) % d
    return complex(np.exp(1j * (2.0 * math.pi / d) * exponents).sum())


def half(d: int) -> int:
    """The residue h with 2h ≡ 1 (mod d), for odd d."""
    return mod_inverse(2, d)
