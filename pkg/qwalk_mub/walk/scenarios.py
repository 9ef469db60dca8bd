# qwalk_mub/walk/scenarios.py

"""
Registry of named q-schedule scenarios (the dynamics panels and custom schedules).
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from qwalk_mub.core.constants import DEFAULT_SWITCH_STEP
from qwalk_mub.core.exceptions import InvalidParameterError
from .schedule import QSchedule, ScheduleSegment

logger = logging.getLogger(__name__)

# A builder turns (steps, switch_step, **options) into a schedule
ScenarioBuilder = Callable[..., QSchedule]

# Maps scenario name to (builder, description)
_scenario_registry: Dict[str, Tuple[ScenarioBuilder, str]] = {}


def register_scenario(name: str, builder: ScenarioBuilder, description: Optional[str] = None):
    """
    Registers a schedule builder under a name.

    Args:
        name: Scenario name used on the command line (e.g. "left").
        builder: Callable (steps, switch_step, **options) -> QSchedule.
        description: Short human-readable summary; defaults to the builder docstring.

    Raises:
        ValueError: If the name is empty or the builder is not callable.
    """
    if not isinstance(name, str) or not name:
        raise ValueError("Scenario name must be a non-empty string.")
    if not callable(builder):
        raise ValueError(f"builder must be callable, got {builder!r}")

    if name in _scenario_registry:
        logger.warning(f"Scenario '{name}' is already registered. Overwriting.")

    logger.debug(f"Registering scenario '{name}'")
    _scenario_registry[name] = (builder, description or (builder.__doc__ or "").strip())


def get_scenario_builder(name: str) -> Optional[ScenarioBuilder]:
    """Returns the builder registered under name, or None."""
    entry = _scenario_registry.get(name)
    return entry[0] if entry else None


def create_schedule(name: str, steps: int, switch_step: int = DEFAULT_SWITCH_STEP, **options) -> QSchedule:
    """
    Builds the schedule of a registered scenario.

    Raises:
        InvalidParameterError: If the scenario is unknown or its options are invalid.
    """
    builder = get_scenario_builder(name)
    if builder is None:
        raise InvalidParameterError(
            f"scenario {name!r} is not registered. Available: {list_scenarios()}", field="scenario"
        )
    if switch_step < 0:
        raise InvalidParameterError(f"switch step must be >= 0, got {switch_step}", field="switch_step")
    schedule = builder(steps, switch_step, **options)
    logger.info(f"Built scenario '{name}' for {steps} steps (switch at {switch_step})")
    return schedule


def list_scenarios() -> List[str]:
    """Returns the names of all registered scenarios."""
    return list(_scenario_registry.keys())


def get_installed_scenarios() -> List[Dict[str, str]]:
    """Returns name and description of every registered scenario."""
    return [
        {"name": name, "description": description or "No description available"}
        for name, (_, description) in _scenario_registry.items()
    ]


def parse_breakpoints(text: str) -> List[Tuple[int, int]]:
    """
    Parses "start:q,start:q,..." (e.g. "0:0,100:1,101:0") into sorted (start, q) pairs.

    Raises:
        InvalidParameterError: On malformed items or a first start other than 0.
    """
    pairs: List[Tuple[int, int]] = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        try:
            start_text, q_text = item.split(":")
            pairs.append((int(start_text), int(q_text)))
        except ValueError:
            raise InvalidParameterError(f"expected 'start:q', got {item!r}", field="schedule") from None
    pairs.sort()
    if not pairs or pairs[0][0] != 0:
        raise InvalidParameterError("schedule must start at step 0", field="schedule")
    return pairs


# --- Built-in scenarios ---

def _constant(steps: int, switch_step: int, q: int = 0) -> QSchedule:
    """Same q at every step."""
    return QSchedule.constant(q, steps)


def _left(steps: int, switch_step: int) -> QSchedule:
    """q=0 before the switch step, q=1 from it on."""
    return QSchedule.from_breakpoints([(0, 0), (switch_step, 1)], steps)


def _middle(steps: int, switch_step: int) -> QSchedule:
    """q=1 at the switch step only, q=0 elsewhere."""
    return QSchedule.from_breakpoints([(0, 0), (switch_step, 1), (switch_step + 1, 0)], steps)


def _right(steps: int, switch_step: int) -> QSchedule:
    """q=0 before the switch step, q=t (mod d) from it on."""
    return QSchedule((
        ScheduleSegment(0, switch_step, 0),
        ScheduleSegment(switch_step, max(steps, switch_step), 0, ramp=True),
    ))


def _custom(steps: int, switch_step: int, breakpoints: str = "0:0") -> QSchedule:
    """Explicit 'start:q' list; switch_step is ignored."""
    return QSchedule.from_breakpoints(parse_breakpoints(breakpoints), steps)


for _name, _builder in (
    ("constant", _constant),
    ("left", _left),
    ("middle", _middle),
    ("right", _right),
    ("custom", _custom),
):
    register_scenario(_name, _builder)
