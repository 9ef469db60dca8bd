"""Walker states, O(d) evolution kernels and q-schedules."""

from .state import (
    COIN_MINUS,
    COIN_PLUS,
    PureState,
    fig2_initial_state,
    momentum_state,
    position_distribution,
    total_variation,
)
from .evolution import (
    EvolutionResult,
    apply_coin,
    apply_phase,
    apply_shift,
    coin_matrix,
    evolve_schedule,
    phase_factors,
    step,
)
from .schedule import QSchedule, ScheduleSegment
from .scenarios import (
    create_schedule,
    get_installed_scenarios,
    list_scenarios,
    parse_breakpoints,
    register_scenario,
)

__all__ = [
    'COIN_PLUS',
    'COIN_MINUS',
    'PureState',
    'momentum_state',
    'fig2_initial_state',
    'position_distribution',
    'total_variation',
    'coin_matrix',
    'phase_factors',
    'apply_phase',
    'apply_coin',
    'apply_shift',
    'step',
    'evolve_schedule',
    'EvolutionResult',
    'QSchedule',
    'ScheduleSegment',
    'register_scenario',
    'create_schedule',
    'list_scenarios',
    'get_installed_scenarios',
    'parse_breakpoints',
]
