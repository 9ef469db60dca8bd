"""Overlaps between eigenbases, the 1/√d bound and bound sweeps."""

from .overlaps import OverlapMatrix, overlap_matrix, subspace_max_overlap
from .theorem import (
    ComplementarityReport,
    MubCheck,
    amplitude_factor,
    build_report,
    cached_eigenbasis,
    check_theorem1,
    mub_check_theta0,
    theorem1_inner_overlap,
)
from .weyl import (
    check_weyl_mubs,
    clock_matrix,
    mub_deviation,
    shift_matrix,
    walk_phase_from_weyl,
    walk_shift_from_weyl,
    weyl_eigenbases,
)
from .sweep import SweepRow, SweepSummary, select_pairs, summarize, sweep, sweep_async

__all__ = [
    'OverlapMatrix',
    'overlap_matrix',
    'subspace_max_overlap',
    'ComplementarityReport',
    'MubCheck',
    'build_report',
    'cached_eigenbasis',
    'check_theorem1',
    'mub_check_theta0',
    'theorem1_inner_overlap',
    'amplitude_factor',
    'clock_matrix',
    'shift_matrix',
    'walk_shift_from_weyl',
    'walk_phase_from_weyl',
    'weyl_eigenbases',
    'mub_deviation',
    'check_weyl_mubs',
    'SweepRow',
    'SweepSummary',
    'select_pairs',
    'sweep',
    'sweep_async',
    'summarize',
]
