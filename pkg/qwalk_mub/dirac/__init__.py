"""Continuum Dirac modes in a linear gauge potential and their cross-gauge overlaps."""

from .modes import (
    SpinorSample,
    dirac_energy,
    dirac_operator_residual,
    dirac_phase,
    dirac_spinor,
    dirac_wavefunction,
    gamma_factor,
    spinor_components,
)
from .overlap import (
    QuadratureResult,
    XThetaCheck,
    massless_overlap,
    massless_xtheta_check,
    overlap_bound,
    overlap_closed_form,
    quadrature_overlap,
    windowed_fresnel_overlap,
    xtheta_slope,
)

__all__ = [
    'SpinorSample',
    'dirac_energy',
    'spinor_components',
    'dirac_phase',
    'dirac_wavefunction',
    'dirac_spinor',
    'gamma_factor',
    'dirac_operator_residual',
    'QuadratureResult',
    'XThetaCheck',
    'overlap_closed_form',
    'overlap_bound',
    'quadrature_overlap',
    'windowed_fresnel_overlap',
    'xtheta_slope',
    'massless_overlap',
    'massless_xtheta_check',
]
