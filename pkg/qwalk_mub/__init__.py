"""qwalk_mub - Spectra, complementarity and dynamics of phase-kicked quantum walks on a cycle."""

from .core import (
    CoinParams,
    DiracMode,
    EigenRegime,
    QwalkError,
    InvalidParameterError,
    UnsupportedRegime,
    WalkConfig,
)
from .walk import PureState, QSchedule, create_schedule, evolve_schedule, step
from .spectra import EigenPair, eigenbasis, full_eigenbasis, numerical_eigenbasis
from .complementarity import ComplementarityReport, check_theorem1, mub_check_theta0, sweep
from .dirac import overlap_bound, overlap_closed_form, quadrature_overlap

__version__ = '0.2.0'

__all__ = [
    # Parameters
    'CoinParams',
    'WalkConfig',
    'DiracMode',
    'EigenRegime',
    # Exceptions
    'QwalkError',
    'InvalidParameterError',
    'UnsupportedRegime',
    # Walk
    'PureState',
    'QSchedule',
    'step',
    'evolve_schedule',
    'create_schedule',
    # Spectra
    'EigenPair',
    'full_eigenbasis',
    'numerical_eigenbasis',
    'eigenbasis',
    # Complementarity
    'ComplementarityReport',
    'check_theorem1',
    'mub_check_theta0',
    'sweep',
    # Dirac
    'overlap_closed_form',
    'overlap_bound',
    'quadrature_overlap',
]
