"""Closed-form and numerical spectra of the walk operator."""

from .analytic import (
    EigenLabel,
    EigenPair,
    analytic_eigenvalue,
    analytic_eigenvalues,
    analytic_eigenvector,
    beta_closed_form,
    chirp,
    full_eigenbasis,
    select_regime,
    spinor_coefficients,
    xi_angle,
)
from .numerical import (
    eigenbasis,
    eigenvalue_clusters,
    numerical_eigenbasis,
    residual,
    spectrum_distance,
    spectrum_matches,
)
from .operators import build_unitary, coin_operator, phase_operator, shift_operator

__all__ = [
    'EigenLabel',
    'EigenPair',
    'xi_angle',
    'select_regime',
    'analytic_eigenvalue',
    'analytic_eigenvalues',
    'analytic_eigenvector',
    'spinor_coefficients',
    'beta_closed_form',
    'chirp',
    'full_eigenbasis',
    'build_unitary',
    'shift_operator',
    'phase_operator',
    'coin_operator',
    'numerical_eigenbasis',
    'eigenvalue_clusters',
    'residual',
    'spectrum_distance',
    'spectrum_matches',
    'eigenbasis',
]
