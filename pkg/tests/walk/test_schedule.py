# tests/walk/test_schedule.py

import pytest

from qwalk_mub.core.exceptions import InvalidParameterError, ScheduleGap
from qwalk_mub.walk import scenarios
from qwalk_mub.walk.scenarios import (
    create_schedule,
    get_installed_scenarios,
    get_scenario_builder,
    list_scenarios,
    parse_breakpoints,
    register_scenario,
)
from qwalk_mub.walk.schedule import QSchedule, ScheduleSegment

BUILTIN_SCENARIOS = ["constant", "left", "middle", "right", "custom"]


# --- QSchedule ---

def test_constant_schedule():
    assert QSchedule.constant(3, 4).q_values(4, 5).tolist() == [3, 3, 3, 3]


def test_q_values_reduced_mod_d():
    assert QSchedule.constant(7, 2).q_values(2, 5).tolist() == [2, 2]


def test_from_breakpoints():
    schedule = QSchedule.from_breakpoints([(0, 0), (2, 1), (3, 0)], 5)
    assert schedule.q_values(5, 7).tolist() == [0, 0, 1, 0, 0]
    assert [segment.stop for segment in schedule.segments] == [2, 3, 5]


def test_iter_q_is_lazy_and_validates():
    values = QSchedule.constant(4, 3).iter_q(3, 3)
    assert next(values) == 1
    assert list(values) == [1, 1]
    with pytest.raises(ScheduleGap):
        list(QSchedule.constant(0, 2).iter_q(3, 5))


def test_ramp_segment_uses_step_index():
    schedule = QSchedule((ScheduleSegment(0, 2, 0), ScheduleSegment(2, 6, 0, ramp=True)))
    assert schedule.q_values(6, 4).tolist() == [0, 0, 2, 3, 0, 1]


def test_schedule_may_run_past_requested_steps():
    assert QSchedule.constant(1, 10).q_values(3, 5).tolist() == [1, 1, 1]


@pytest.mark.parametrize("segments, steps, expected, found", [
    ((ScheduleSegment(0, 2), ScheduleSegment(3, 5)), 5, 2, 3),   # gap
    ((ScheduleSegment(0, 3), ScheduleSegment(2, 5)), 5, 3, 2),   # overlap
    ((ScheduleSegment(0, 3),), 5, 3, None),                      # short tail
    ((ScheduleSegment(1, 5),), 5, 0, 1),                         # late start
])
def test_validate_reports_first_defect(segments, steps, expected, found):
    with pytest.raises(ScheduleGap) as excinfo:
        QSchedule(segments).validate(steps)
    assert excinfo.value.expected_start == expected
    assert excinfo.value.found_start == found
    assert excinfo.value.total_steps == steps


def test_segment_bounds_checked():
    with pytest.raises(InvalidParameterError, match="segment"):
        ScheduleSegment(3, 2)


def test_to_breakpoints():
    schedule = QSchedule((
        ScheduleSegment(0, 2, 0),
        ScheduleSegment(2, 4, 0, ramp=True),
        ScheduleSegment(4, 6, 1, ramp=True),
    ))
    assert schedule.to_breakpoints() == [(0, "0"), (2, "t"), (4, "t+1")]


# --- Scenarios ---

def test_builtin_scenarios_registered():
    assert set(BUILTIN_SCENARIOS) <= set(list_scenarios())
    descriptions = {entry["name"]: entry["description"] for entry in get_installed_scenarios()}
    assert descriptions["middle"]


def test_get_scenario_builder():
    builder = get_scenario_builder("middle")
    assert builder(5, 2).q_values(5, 7).tolist() == [0, 0, 1, 0, 0]
    assert get_scenario_builder("sideways") is None


def test_left_scenario():
    assert create_schedule("left", 5, 2).q_values(5, 7).tolist() == [0, 0, 1, 1, 1]


def test_middle_scenario():
    assert create_schedule("middle", 5, 2).q_values(5, 7).tolist() == [0, 0, 1, 0, 0]


def test_right_scenario():
    assert create_schedule("right", 6, 2).q_values(6, 4).tolist() == [0, 0, 2, 3, 0, 1]


def test_constant_scenario_option():
    assert create_schedule("constant", 3, q=4).q_values(3, 7).tolist() == [4, 4, 4]


def test_custom_scenario():
    schedule = create_schedule("custom", 4, breakpoints="2:5, 0:1")
    assert schedule.q_values(4, 7).tolist() == [1, 1, 5, 5]


def test_switch_step_beyond_horizon():
    assert create_schedule("left", 3, 100).q_values(3, 5).tolist() == [0, 0, 0]


def test_unknown_scenario():
    with pytest.raises(InvalidParameterError, match="not registered"):
        create_schedule("sideways", 10)


def test_negative_switch_step():
    with pytest.raises(InvalidParameterError, match="switch"):
        create_schedule("left", 10, -1)


@pytest.mark.parametrize("text, message", [
    ("0:1,x:2", "start:q"),
    ("1:0", "step 0"),
    ("", "step 0"),
])
def test_parse_breakpoints_errors(text, message):
    with pytest.raises(InvalidParameterError, match=message):
        parse_breakpoints(text)


def test_parse_breakpoints_sorts():
    assert parse_breakpoints("100:1,0:0,101:0") == [(0, 0), (100, 1), (101, 0)]


@pytest.fixture
def restore_registry():
    saved = dict(scenarios._scenario_registry)
    yield
    scenarios._scenario_registry.clear()
    scenarios._scenario_registry.update(saved)


def test_register_scenario(restore_registry):
    def alternating(steps, switch_step):
        """q alternates 0, 1."""
        return QSchedule.from_breakpoints([(t, t % 2) for t in range(steps)], steps)

    register_scenario("alternating", alternating)
    assert "alternating" in list_scenarios()
    assert create_schedule("alternating", 4).q_values(4, 3).tolist() == [0, 1, 0, 1]
    assert {"name": "alternating", "description": "q alternates 0, 1."} in get_installed_scenarios()


@pytest.mark.parametrize("name, builder", [("", lambda s, w: None), ("bad", 3)])
def test_register_scenario_rejects(name, builder):
    with pytest.raises(ValueError):
        register_scenario(name, builder)
