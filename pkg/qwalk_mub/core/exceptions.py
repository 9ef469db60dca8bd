# qwalk_mub/core/exceptions.py

"""Custom exceptions for the qwalk_mub library."""

from typing import Optional


class QwalkError(Exception):
    """Base exception class for all qwalk_mub errors."""
    def __init__(self, message="An unspecified quantum-walk error occurred."):
        super().__init__(message)


class InvalidParameterError(QwalkError, ValueError):
    """Raised when a parameter object (coin, walk config, Dirac mode, run config) is malformed."""
    def __init__(self, message="Invalid parameter.", field: Optional[str] = None):
        msg = message if field is None else f"Invalid value for '{field}': {message}"
        super().__init__(msg)
        self.field = field


# --- Exact arithmetic ---

class ArithmeticDomainError(QwalkError):
    """Base exception for modular-arithmetic failures."""
    def __init__(self, message="Modular arithmetic error."):
        super().__init__(message)


class NotInvertible(ArithmeticDomainError):
    """Raised when a residue has no inverse modulo d (gcd(a, d) != 1)."""
    def __init__(self, a: int, modulus: int, gcd: int):
        super().__init__(
            f"{a} has no inverse modulo {modulus}: gcd({a}, {modulus}) = {gcd}, not 1."
        )
        self.a = a
        self.modulus = modulus
        self.gcd = gcd


# --- Schedules ---

class ScheduleError(QwalkError):
    """Base exception for malformed q-schedules."""
    def __init__(self, message="Invalid q-schedule."):
        super().__init__(message)


class ScheduleGap(ScheduleError):
    """
    Raised when a schedule does not cover the requested step range [0, T)
    contiguously (a gap, an overlap, or a short tail).
    """
    def __init__(self, expected_start: int, found_start: Optional[int], total_steps: int):
        if found_start is None:
            message = f"Schedule ends at step {expected_start} but {total_steps} steps were requested."
        else:
            message = (
                f"Schedule segment starts at step {found_start}, expected {expected_start} "
                f"(requested {total_steps} steps)."
            )
        super().__init__(message)
        self.expected_start = expected_start
        self.found_start = found_start
        self.total_steps = total_steps


# --- Spectra ---

class SpectrumError(QwalkError):
    """Base exception for eigen-solver failures."""
    def __init__(self, message="Spectral computation failed."):
        super().__init__(message)


class UnsupportedRegime(SpectrumError):
    """
    Raised when the closed-form eigen-solver is asked for a walk outside its
    validity domain (composite d with q != 0). Callers fall back to the dense oracle.
    """
    def __init__(self, d: int, q: int, theta: float):
        super().__init__(
            f"No closed-form eigenbasis for d={d}, q={q}, theta={theta:.6g}: "
            f"d is composite and q != 0. Use the numerical oracle."
        )
        self.d = d
        self.q = q
        self.theta = theta


class DegenerateBranch(SpectrumError):
    """Raised when the θ != 0 formulas are forced on a coin with sinθ = 0."""
    def __init__(self, theta: float):
        super().__init__(f"sin(theta) vanishes for theta={theta!r}; the theta=0 branch must be used.")
        self.theta = theta


class DimensionCap(SpectrumError):
    """Raised when a dense operator would exceed the configured dimension cap."""
    def __init__(self, d: int, cap: int):
        super().__init__(f"Cycle size d={d} exceeds the dense-operator cap of {cap}.")
        self.d = d
        self.cap = cap


class NonUnitaryInput(SpectrumError):
    """Raised when the numerical oracle receives a matrix that is not unitary."""
    def __init__(self, deviation: float, tolerance: float):
        super().__init__(
            f"Matrix is not unitary: max |U^H U - I| = {deviation:.3e} exceeds {tolerance:.1e}."
        )
        self.deviation = deviation
        self.tolerance = tolerance


# --- Overlaps ---

class OverlapError(QwalkError):
    """Base exception for overlap and complementarity computations."""
    def __init__(self, message="Overlap computation failed."):
        super().__init__(message)


class DimensionMismatch(OverlapError):
    """Raised when two bases (or vectors) do not live in the same 2d-dimensional space."""
    def __init__(self, expected: int, found: int, what: str = "basis"):
        super().__init__(f"Dimension mismatch for {what}: expected {expected}, found {found}.")
        self.expected = expected
        self.found = found


# --- Dirac continuum ---

class DiracError(QwalkError):
    """Base exception for the continuum Dirac computations."""
    def __init__(self, message="Dirac computation failed."):
        super().__init__(message)


class DegenerateSpinor(DiracError):
    """
    Raised when the massive-branch spinor (m, E - k) is the zero vector,
    i.e. m = 0 and band·|k| = k. The massless plane-wave branch applies instead.
    """
    def __init__(self, k: float, m: float, band: int):
        super().__init__(
            f"Spinor vanishes for k={k!r}, m={m!r}, band={band:+d}; use the massless plane-wave branch."
        )
        self.k = k
        self.m = m
        self.band = band


class EqualSlopes(DiracError):
    """Raised when both modes share the gauge slope μ (the overlap is a delta distribution)."""
    def __init__(self, mu: float):
        super().__init__(f"Gauge slopes are equal (mu = mu' = {mu!r}); the overlap is not a finite number.")
        self.mu = mu


class ParallelQuadratures(DiracError):
    """Raised when sin(θ - θ') = 0 in the x_θ overlap check."""
    def __init__(self, theta: float, theta_prime: float):
        super().__init__(
            f"Quadratures are parallel: sin(theta - theta') = 0 for theta={theta!r}, theta'={theta_prime!r}."
        )
        self.theta = theta
        self.theta_prime = theta_prime
