"""Core components: parameters, regimes and exceptions."""

from .params import CoinParams, DiracMode, WalkConfig
from .status import EigenRegime
from .exceptions import (
    QwalkError,
    InvalidParameterError,
    ArithmeticDomainError,
    NotInvertible,
    ScheduleError,
    ScheduleGap,
    SpectrumError,
    UnsupportedRegime,
    DegenerateBranch,
    DimensionCap,
    NonUnitaryInput,
    OverlapError,
    DimensionMismatch,
    DiracError,
    DegenerateSpinor,
    EqualSlopes,
    ParallelQuadratures,
)

__all__ = [
    'CoinParams',
    'WalkConfig',
    'DiracMode',
    'EigenRegime',
    'QwalkError',
    'InvalidParameterError',
    'ArithmeticDomainError',
    'NotInvertible',
    'ScheduleError',
    'ScheduleGap',
    'SpectrumError',
    'UnsupportedRegime',
    'DegenerateBranch',
    'DimensionCap',
    'NonUnitaryInput',
    'OverlapError',
    'DimensionMismatch',
    'DiracError',
    'DegenerateSpinor',
    'EqualSlopes',
    'ParallelQuadratures',
]
