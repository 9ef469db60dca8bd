# qwalk_mub/complementarity/sweep.py

"""
Bound checks over many (d, q, q') cells.

Cells run in a thread pool (the heavy lifting is in numpy/scipy, which release
the GIL) and are gathered back in (d, q, q') order. A failing cell is logged
and recorded in its row; it never stops the sweep.
"""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from qwalk_mub.core.constants import DEFAULT_DIMENSION_CAP
from qwalk_mub.core.exceptions import InvalidParameterError
from qwalk_mub.core.params import CoinParams
from qwalk_mub.utils.numtheory import is_prime
from .theorem import ComplementarityReport, check_theorem1

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
Cell = Tuple[int, int, int]


@dataclass
class SweepRow:
    """One (d, q, q') cell: a report, or the error that prevented it."""
    d: int
    q: int
    q_prime: int
    report: Optional[ComplementarityReport] = None
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self) -> Dict[str, Any]:
        row: Dict[str, Any] = {"d": self.d, "q": self.q, "q_prime": self.q_prime}
        if self.report is not None:
            row.update(self.report.to_dict())
        row["error"] = self.error or ""
        return row


@dataclass(frozen=True)
class SweepSummary:
    cells: int
    failed: int
    violations: int
    prime_violations: int
    max_overlap: float
    max_cell: Optional[Cell] = None
    subspace_max_overlap: Optional[float] = None

    @property
    def max_squared(self) -> float:
        return self.max_overlap ** 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cells": self.cells,
            "failed": self.failed,
            "violations": self.violations,
            "prime_violations": self.prime_violations,
            "max_overlap": self.max_overlap,
            "max_squared": self.max_squared,
            "max_cell": list(self.max_cell) if self.max_cell else None,
            "subspace_max_overlap": self.subspace_max_overlap,
        }


def select_pairs(d: int, pairs: Optional[Iterable[Pair]] = None) -> List[Pair]:
    """
    The (q, q') cells to check for one d, sorted.

    All ordered pairs q != q' when pairs is None; otherwise the given pairs
    reduced mod d, with q == q' pairs dropped.
    """
    if pairs is None:
        return [(q, q_prime) for q in range(d) for q_prime in range(d) if q != q_prime]
    selected = set()
    for q, q_prime in pairs:
        q, q_prime = q % d, q_prime % d
        if q == q_prime:
            logger.debug(f"Skipping pair ({q}, {q_prime}) for d={d}: phase indices coincide")
            continue
        selected.add((q, q_prime))
    return sorted(selected)


def _cells(d_values: Sequence[int], pairs: Optional[Iterable[Pair]]) -> List[Cell]:
    pair_list = None if pairs is None else list(pairs)
    cells = []
    for d in sorted(set(d_values)):
        if d < 2:
            raise InvalidParameterError(f"cycle size must be >= 2, got {d}", field="d_values")
        cells.extend((d, q, q_prime) for q, q_prime in select_pairs(d, pair_list))
    return cells


async def sweep_async(
    d_values: Sequence[int],
    coin: CoinParams,
    pairs: Optional[Iterable[Pair]] = None,
    seed: Optional[int] = None,
    max_workers: Optional[int] = None,
    cap: int = DEFAULT_DIMENSION_CAP,
) -> List[SweepRow]:
    """
    Runs check_theorem1 on every cell concurrently.

    Args:
        d_values: Cycle sizes (duplicates ignored).
        coin: Coin used for every cell.
        pairs: (q, q') pairs applied to every d; all ordered pairs when None.
        seed: Recorded in every report (the seed the coin was drawn from).
        max_workers: Thread-pool size; executor default when None.

    Returns:
        One row per cell in (d, q, q') order.

    Raises:
        InvalidParameterError: If some d < 2.
    """
    cells = _cells(d_values, pairs)
    if not cells:
        return []

    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        tasks = [
            loop.run_in_executor(executor, partial(check_theorem1, *cell, coin, seed, cap, False))
            for cell in cells
        ]
        results = await asyncio.gather(*tasks, return_exceptions=True)

    rows: List[SweepRow] = []
    for (d, q, q_prime), result in zip(cells, results):
        if isinstance(result, BaseException):
            logger.error(f"Sweep cell d={d}, q={q}, q'={q_prime} failed: {result}", exc_info=result)
            rows.append(SweepRow(d, q, q_prime, error=f"{type(result).__name__}: {result}"))
        else:
            rows.append(SweepRow(d, q, q_prime, report=result))
    logger.info(f"Sweep finished: {len(rows)} cells over d in {sorted(set(d_values))}")
    return rows


def sweep(d_values: Sequence[int], coin: CoinParams, pairs: Optional[Iterable[Pair]] = None,
          seed: Optional[int] = None, max_workers: Optional[int] = None,
          cap: int = DEFAULT_DIMENSION_CAP) -> List[SweepRow]:
    """Blocking wrapper around sweep_async."""
    return asyncio.run(sweep_async(d_values, coin, pairs, seed, max_workers, cap))


def summarize(rows: Sequence[SweepRow]) -> SweepSummary:
    """
    Global maximum overlap and violation counts over the successful cells.

    max_overlap is entry-wise; subspace_max_overlap covers the oracle cells only.
    """
    reports = [row.report for row in rows if row.report is not None]
    violating = [r for r in reports if not r.bound_satisfied]
    best = max(reports, key=lambda r: r.max_overlap, default=None)
    clusters = [r.subspace_max_overlap for r in reports if r.subspace_max_overlap is not None]
    return SweepSummary(
        cells=len(rows),
        failed=sum(1 for row in rows if not row.ok),
        violations=len(violating),
        prime_violations=sum(1 for r in violating if is_prime(r.d)),
        max_overlap=best.max_overlap if best else 0.0,
        max_cell=(best.d, best.q, best.q_prime) if best else None,
        subspace_max_overlap=max(clusters) if clusters else None,
    )
