# qwalk_mub/cli/commands.py

"""
Subcommand implementations. Each takes the parsed arguments and the resolved
RunConfig, writes its tables and returns an exit code.
"""

import argparse
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from qwalk_mub.complementarity import check_theorem1, summarize, sweep
from qwalk_mub.core.constants import (
    ANALYTIC_RESIDUAL_TOL,
    EXIT_OK,
    EXIT_VIOLATION,
    FULL_GRID_LIMIT,
    NUMERICAL_RESIDUAL_TOL,
    TOP_ENTRIES,
)
from qwalk_mub.core.exceptions import InvalidParameterError
from qwalk_mub.core.params import CoinParams, DiracMode, WalkConfig
from qwalk_mub.dirac import (
    gamma_factor,
    overlap_bound,
    overlap_closed_form,
    quadrature_overlap,
    windowed_fresnel_overlap,
)
from qwalk_mub.spectra import eigenbasis, residual
from qwalk_mub.utils.numtheory import is_prime
from qwalk_mub.walk import (
    create_schedule,
    evolve_schedule,
    fig2_initial_state,
    get_installed_scenarios,
    total_variation,
)
from .config import RunConfig
from .writers import write_table

logger = logging.getLogger(__name__)

COIN_PRESETS = ("hadamard", "identity", "random")


def resolve_coin(args: argparse.Namespace) -> CoinParams:
    """Explicit angles win over the preset name; 'random' draws from --seed."""
    if getattr(args, "theta", None) is not None:
        return CoinParams(theta=args.theta, gamma=args.gamma, sigma=args.sigma, delta=args.delta)
    if args.coin == "random":
        return CoinParams.random(np.random.default_rng(args.seed))
    return CoinParams.from_name(args.coin)


def parse_pairs(text: Optional[str]) -> Optional[List[Tuple[int, int]]]:
    """'1:7,2:3' -> [(1, 7), (2, 3)]; None or empty -> None (all pairs)."""
    if not text:
        return None
    pairs = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        try:
            q_text, q_prime_text = item.split(":")
            pairs.append((int(q_text), int(q_prime_text)))
        except ValueError:
            raise InvalidParameterError(f"expected 'q:q_prime', got {item!r}", field="pairs") from None
    return pairs


def cmd_spectrum(args: argparse.Namespace, config: RunConfig) -> int:
    coin = resolve_coin(args)
    walk = WalkConfig(args.d, args.q, coin)
    pairs = eigenbasis(walk.q, coin, walk.d, args.cap)
    analytic = pairs[0].regime.is_analytic
    tolerance = ANALYTIC_RESIDUAL_TOL if analytic else NUMERICAL_RESIDUAL_TOL
    if not analytic:
        logger.warning(f"No closed form for d={walk.d}, q={walk.q}; spectrum comes from the dense oracle")

    rows = []
    for pair in pairs:
        error = residual(walk, pair)
        rows.append({
            "m": pair.label.m,
            "tau": pair.label.tau,
            "regime": str(pair.regime),
            "angle": pair.angle,
            "re": pair.eigenvalue.real,
            "im": pair.eigenvalue.imag,
            "residual": error,
            "passed": error <= tolerance,
        })
    max_residual = max(row["residual"] for row in rows)
    summary = {
        "d": walk.d,
        "q": walk.q,
        "regime": str(pairs[0].regime),
        "fallback": not analytic,
        "tolerance": tolerance,
        "max_residual": max_residual,
        "all_passed": max_residual <= tolerance,
    }
    _report(write_table(Path(config.output_dir), "spectrum", config, rows, summary))
    if max_residual > tolerance:
        logger.error(f"Residual {max_residual:.3e} exceeds {tolerance:.1e}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_overlaps(args: argparse.Namespace, config: RunConfig) -> int:
    coin = resolve_coin(args)
    if args.q % args.d == args.q_prime % args.d:
        raise InvalidParameterError(f"q and q' must differ mod {args.d}", field="q_prime")
    report = check_theorem1(args.d, args.q, args.q_prime, coin, seed=config.seed, cap=args.cap)
    matrix = report.matrix

    full = args.full_grid or report.d <= FULL_GRID_LIMIT
    if full:
        size = len(matrix.col_labels)
        entries = [
            (matrix.row_labels[i // size], matrix.col_labels[i % size], float(value))
            for i, value in enumerate(matrix.entries.ravel())
        ]
    else:
        entries = matrix.top_entries(TOP_ENTRIES)
    rows = [
        {
            "m": row.m, "tau": row.tau, "m_prime": col.m, "tau_prime": col.tau,
            "overlap": value, "squared": value * value,
        }
        for row, col, value in entries
    ]
    summary: Dict[str, Any] = report.to_dict()
    summary.update({"bound_squared": 1.0 / report.d, "grid": "full" if full else f"top{TOP_ENTRIES}"})
    _report(write_table(Path(config.output_dir), "overlaps", config, rows, summary))

    if not report.bound_satisfied and is_prime(report.d):
        logger.error(f"Bound violated for prime d={report.d}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_dynamics(args: argparse.Namespace, config: RunConfig) -> int:
    coin = resolve_coin(args)
    options: Dict[str, Any] = {}
    if args.scenario == "constant":
        options["q"] = args.q
    elif args.scenario == "custom":
        if not args.schedule:
            raise InvalidParameterError("the custom scenario needs --schedule", field="schedule")
        options["breakpoints"] = args.schedule
    schedule = create_schedule(args.scenario, args.steps, args.switch_step, **options)

    result = evolve_schedule(fig2_initial_state(args.d), args.d, coin, schedule, args.steps,
                             record_every=args.record_every)
    tv_rows = []
    distribution_rows = []
    for t, p in zip(result.recorded_steps, result.distributions):
        tv_rows.append({
            "t": t,
            "q_applied": int(result.q_values[t - 1]) if t > 0 else -1,
            "tv": total_variation(p),
        })
        row: Dict[str, Any] = {"t": t}
        row.update({f"p_{x}": float(value) for x, value in enumerate(p)})
        distribution_rows.append(row)

    summary = {
        "scenario": args.scenario,
        "d": args.d,
        "steps": args.steps,
        "switch_step": args.switch_step,
        "schedule": [[start, q] for start, q in schedule.to_breakpoints()],
        "max_tv": max(row["tv"] for row in tv_rows),
        "final_tv": tv_rows[-1]["tv"],
    }
    stem = f"dynamics_{args.scenario}"
    output_dir = Path(config.output_dir)
    _report(write_table(output_dir, f"{stem}_tv", config, tv_rows, summary))
    _report(write_table(output_dir, f"{stem}_distribution", config, distribution_rows, summary))
    return EXIT_OK


def cmd_dirac(args: argparse.Namespace, config: RunConfig) -> int:
    mode_a = DiracMode(m=args.m, mu=args.mu, k=args.k, band=args.band)
    mode_b = DiracMode(m=args.m, mu=args.mu_prime, k=args.k_prime, band=args.band_prime)
    closed = overlap_closed_form(mode_a, mode_b)
    bound = overlap_bound(mode_a.mu, mode_b.mu)

    rows = []
    for window in args.windows:
        result = quadrature_overlap(mode_a, mode_b, window)
        exact = windowed_fresnel_overlap(mode_a, mode_b, window)
        rows.append({
            "window": result.window,
            "panels": result.panels,
            "re": result.value.real,
            "im": result.value.imag,
            "abs": abs(result.value),
            "fresnel_re": exact.real,
            "fresnel_im": exact.imag,
            "error_estimate": result.error_estimate,
            "tail_re": result.tail_corrected.real,
            "tail_im": result.tail_corrected.imag,
            "tail_deviation": abs(result.tail_corrected - closed),
        })
    summary = {
        "gamma": gamma_factor(mode_a.k, mode_b.k, mode_a.band, mode_b.band, mode_a.m),
        "closed_re": closed.real,
        "closed_im": closed.imag,
        "closed_abs": abs(closed),
        "bound": bound,
        "within_bound": abs(closed) <= bound + 1e-12,
    }
    _report(write_table(Path(config.output_dir), "dirac", config, rows, summary))
    if not summary["within_bound"]:
        logger.error(f"|overlap| = {abs(closed):.6g} exceeds the bound {bound:.6g}")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, config: RunConfig) -> int:
    coin = resolve_coin(args)
    sweep_rows = sweep(args.d_values, coin, parse_pairs(args.pairs), seed=config.seed,
                       max_workers=args.workers, cap=args.cap)
    summary = summarize(sweep_rows)
    rows = [row.to_dict() for row in sweep_rows]
    _report(write_table(Path(config.output_dir), "sweep", config, rows, summary.to_dict()))
    if summary.prime_violations:
        logger.error(f"{summary.prime_violations} bound violations on prime d")
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_info(args: argparse.Namespace, config: RunConfig) -> int:
    print("Scenarios:")
    for entry in get_installed_scenarios():
        print(f"  {entry['name']:<10} {entry['description']}")
    print("Coin presets:")
    for name in COIN_PRESETS:
        print(f"  {name}")
    print(f"Hadamard-type coin: theta = {math.pi / 4!r}")
    return EXIT_OK


def _report(path: Path) -> None:
    print(f"Wrote {path}")
