# qwalk_mub/walk/schedule.py

"""
Piecewise q-schedules: which phase index governs each evolution step.

Step indices are 0-based: step t is the (t+1)-th application of U.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

from qwalk_mub.core.exceptions import InvalidParameterError, ScheduleGap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScheduleSegment:
    """
    Steps start <= t < stop use phase index q, or q + t when ramp is set.
    """
    start: int
    stop: int
    q: int = 0
    ramp: bool = False

    def __post_init__(self):
        if self.start < 0 or self.stop < self.start:
            raise InvalidParameterError(
                f"segment bounds must satisfy 0 <= start <= stop, got [{self.start}, {self.stop})",
                field="segment",
            )

    def q_at(self, t: int) -> int:
        return self.q + t if self.ramp else self.q


@dataclass(frozen=True)
class QSchedule:
    """Ordered, contiguous segments; q values are reduced mod d when evaluated."""
    segments: Tuple[ScheduleSegment, ...]

    @classmethod
    def constant(cls, q: int, steps: int) -> "QSchedule":
        return cls((ScheduleSegment(0, steps, q),))

    @classmethod
    def from_breakpoints(cls, breakpoints: Sequence[Tuple[int, int]], steps: int) -> "QSchedule":
        """
        Builds a schedule from (start step, q) pairs; each segment runs until
        the next start, the last one until `steps`.
        """
        ordered = list(breakpoints)
        segments: List[ScheduleSegment] = []
        for i, (start, q) in enumerate(ordered):
            stop = ordered[i + 1][0] if i + 1 < len(ordered) else max(steps, start)
            segments.append(ScheduleSegment(int(start), int(stop), int(q)))
        return cls(tuple(segments))

    def validate(self, steps: int) -> None:
        """
        Checks that the segments cover [0, steps) without gaps or overlaps.

        Raises:
            ScheduleGap: On the first gap, overlap or short tail found.
        """
        expected = 0
        for segment in self.segments:
            if expected >= steps:
                break
            if segment.start != expected:
                raise ScheduleGap(expected, segment.start, steps)
            expected = segment.stop
        if expected < steps:
            raise ScheduleGap(expected, None, steps)

    def iter_q(self, steps: int, d: int) -> Iterator[int]:
        """Yields the reduced q of every step t in [0, steps)."""
        self.validate(steps)
        t = 0
        for segment in self.segments:
            while t < min(segment.stop, steps):
                yield segment.q_at(t) % d
                t += 1

    def q_values(self, steps: int, d: int) -> NDArray[np.int64]:
        return np.fromiter(self.iter_q(steps, d), dtype=np.int64, count=steps)

    def to_breakpoints(self) -> List[Tuple[int, str]]:
        """Compact description for reports, e.g. [(0, '0'), (100, 't')]."""
        return [
            (segment.start, "t" if segment.ramp and segment.q == 0 else
             (f"t+{segment.q}" if segment.ramp else str(segment.q)))
            for segment in self.segments
        ]
