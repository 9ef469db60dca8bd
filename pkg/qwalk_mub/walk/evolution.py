# qwalk_mub/walk/evolution.py

"""
Evolution kernels for U = S·(1⊗C)·F, all O(d) in the position basis.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from numpy.typing import NDArray

from qwalk_mub.core.exceptions import InvalidParameterError
from qwalk_mub.core.params import CoinParams, WalkConfig
from .schedule import QSchedule
from .state import PureState, position_distribution

logger = logging.getLogger(__name__)


def coin_matrix(coin: CoinParams) -> NDArray[np.complex128]:
    """e^{iδ}·[[c, s], [−s*, c*]] with c = cosθ·e^{iγ}, s = sinθ·e^{iσ}."""
    c, s = coin.c, coin.s
    global_phase = complex(math.cos(coin.delta), math.sin(coin.delta))
    return global_phase * np.array([[c, s], [-s.conjugate(), c.conjugate()]], dtype=np.complex128)


def phase_factors(d: int, q: int) -> NDArray[np.complex128]:
    """e^{iφx} for x in [0, d), φ = 2πq/d, with qx reduced exactly mod d."""
    x = np.arange(d, dtype=np.int64)
    return np.exp(1j * (2.0 * math.pi / d) * ((q * x) % d))


# --- Array kernels (shared by the PureState API and the scheduled evolution) ---

def _phase(upper, lower, factors):
    return upper * factors, lower * factors.conj()


def _coin(upper, lower, matrix):
    return (matrix[0, 0] * upper + matrix[0, 1] * lower,
            matrix[1, 0] * upper + matrix[1, 1] * lower)


def _shift(upper, lower):
    # |x,+⟩ -> |x+1,+⟩ and |x,−⟩ -> |x−1,−⟩
    return np.roll(upper, 1), np.roll(lower, -1)


def apply_phase(state: PureState, config: WalkConfig) -> PureState:
    """Multiplies α_{x,+} by e^{iφx} and α_{x,−} by e^{−iφx}."""
    if config.q == 0:
        return state
    upper, lower = _phase(state.upper, state.lower, phase_factors(config.d, config.q))
    return PureState.from_components(upper, lower)


def apply_coin(state: PureState, coin: CoinParams) -> PureState:
    """Applies the 2×2 coin at every position."""
    upper, lower = _coin(state.upper, state.lower, coin_matrix(coin))
    return PureState.from_components(upper, lower)


def apply_shift(state: PureState, d: int) -> PureState:
    """Conditional translation S on the d-cycle."""
    if state.d != d:
        raise InvalidParameterError(f"state lives on a {state.d}-cycle, not d={d}", field="d")
    upper, lower = _shift(state.upper, state.lower)
    return PureState.from_components(upper, lower)


def step(state: PureState, config: WalkConfig) -> PureState:
    """One application of U: phase F first, then the coin, then the shift S."""
    return apply_shift(apply_coin(apply_phase(state, config), config.coin), config.d)


@dataclass
class EvolutionResult:
    """
    Output of a scheduled evolution.

    Attributes:
        final_state: State after all steps.
        q_values: The reduced q used at each step t.
        recorded_steps: Step counts at which distributions were recorded (0 = initial state).
        distributions: One row p(x) per recorded step.
    """
    final_state: PureState
    q_values: NDArray[np.int64]
    recorded_steps: List[int] = field(default_factory=list)
    distributions: Optional[NDArray[np.float64]] = None
    states: List[PureState] = field(default_factory=list)


def evolve_schedule(
    state: PureState,
    d: int,
    coin: CoinParams,
    schedule: QSchedule,
    steps: int,
    record_every: int = 1,
    record_distributions: bool = True,
    keep_states: bool = False,
) -> EvolutionResult:
    """
    Applies `steps` walk steps, the q of step t taken from the schedule.

    Args:
        state: Initial state on the d-cycle.
        d: Cycle size.
        coin: Coin used at every step.
        schedule: Must cover [0, steps).
        steps: Number of steps T (0 returns the initial state).
        record_every: Recording cadence in steps; the initial and final states are always recorded.
        record_distributions: Whether to record position distributions.
        keep_states: Whether to also keep the recorded PureStates.

    Returns:
        EvolutionResult with the final state and the recorded data.

    Raises:
        ScheduleGap: If the schedule does not cover [0, steps).
    """
    if state.d != d:
        raise InvalidParameterError(f"state lives on a {state.d}-cycle, not d={d}", field="d")
    if steps < 0:
        raise InvalidParameterError(f"step count must be >= 0, got {steps}", field="steps")
    if record_every < 1:
        raise InvalidParameterError(f"recording cadence must be >= 1, got {record_every}", field="record_every")

    q_values = schedule.q_values(steps, d)
    matrix = coin_matrix(coin)
    factor_cache: Dict[int, NDArray[np.complex128]] = {}

    recorded_steps: List[int] = []
    rows: List[NDArray[np.float64]] = []
    states: List[PureState] = []

    def record(t: int, current: PureState) -> None:
        recorded_steps.append(t)
        if record_distributions:
            rows.append(position_distribution(current))
        if keep_states:
            states.append(current)

    record(0, state)
    upper, lower = np.array(state.upper), np.array(state.lower)
    current = state
    for t, q in enumerate(q_values):
        if q != 0:
            factors = factor_cache.get(int(q))
            if factors is None:
                factors = factor_cache[int(q)] = phase_factors(d, int(q))
            upper, lower = _phase(upper, lower, factors)
        upper, lower = _shift(*_coin(upper, lower, matrix))
        done = t + 1
        if done % record_every == 0 or done == steps:
            current = PureState.from_components(upper, lower)
            record(done, current)

    logger.debug(f"Evolved {steps} steps on d={d}, {len(factor_cache)} distinct nonzero q values")
    return EvolutionResult(
        final_state=current,
        q_values=q_values,
        recorded_steps=recorded_steps,
        distributions=np.vstack(rows) if rows else None,
        states=states,
    )
