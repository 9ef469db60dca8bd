# qwalk_mub/cli/main.py

"""
Command-line entry point: qwalk-mub {spectrum,overlaps,dynamics,dirac,sweep,info}.

Exit codes: 0 success, 2 invalid arguments, 3 bound or residual violation,
4 output not writable.
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from qwalk_mub import __version__
from qwalk_mub.core.constants import (
    DEFAULT_DIMENSION_CAP,
    DEFAULT_SEED,
    DEFAULT_STEPS,
    DEFAULT_SWITCH_STEP,
    DEFAULT_WINDOWS,
    EXIT_IO,
    EXIT_USAGE,
    FIG2_DIMENSION,
    OUTPUT_FORMATS,
)
from qwalk_mub.core.exceptions import QwalkError
from qwalk_mub.walk import list_scenarios
from . import commands
from .config import RunConfig, resolve_output_dir

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, RunConfig], int]

_HANDLERS: Dict[str, Handler] = {
    "spectrum": commands.cmd_spectrum,
    "overlaps": commands.cmd_overlaps,
    "dynamics": commands.cmd_dynamics,
    "dirac": commands.cmd_dirac,
    "sweep": commands.cmd_sweep,
    "info": commands.cmd_info,
}

# Arguments that describe where/how to write rather than what to compute
_NON_PARAMETERS = {"command", "format", "out", "seed", "log_level", "verbose"}


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="json", help="Output format (default: json)")
    parser.add_argument("--out", default=None, help="Output directory (default: $QWALK_MUB_OUTPUT_DIR or ./results)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for random coins")


def _add_coin_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("coin")
    group.add_argument("--coin", choices=commands.COIN_PRESETS, default="hadamard",
                       help="Coin preset (default: hadamard)")
    group.add_argument("--theta", type=float, default=None, help="Coin angle θ; overrides --coin")
    group.add_argument("--gamma", type=float, default=0.0, help="Coin phase γ")
    group.add_argument("--sigma", type=float, default=0.0, help="Coin phase σ")
    group.add_argument("--delta", type=float, default=0.0, help="Global coin phase δ")


def _add_cap_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cap", type=int, default=DEFAULT_DIMENSION_CAP,
                        help=f"Largest d for dense operators (default: {DEFAULT_DIMENSION_CAP})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwalk-mub",
        description="Spectra, complementarity and dynamics of phase-kicked quantum walks on a cycle.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging level (default: WARNING)")
    parser.add_argument("-v", "--verbose", action="store_true", help="Shorthand for --log-level DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True)

    spectrum = subparsers.add_parser("spectrum", help="Eigenpairs of U and their residuals")
    spectrum.add_argument("--d", type=int, required=True, help="Cycle size")
    spectrum.add_argument("--q", type=int, default=0, help="Phase index q")
    _add_coin_options(spectrum)
    _add_cap_option(spectrum)
    _add_output_options(spectrum)

    overlaps = subparsers.add_parser("overlaps", help="Overlap matrix between the q and q' eigenbases")
    overlaps.add_argument("--d", type=int, required=True, help="Cycle size")
    overlaps.add_argument("--q", type=int, required=True, help="First phase index")
    overlaps.add_argument("--q-prime", type=int, required=True, help="Second phase index")
    overlaps.add_argument("--full-grid", action="store_true", help="Write every entry even for large d")
    _add_coin_options(overlaps)
    _add_cap_option(overlaps)
    _add_output_options(overlaps)

    dynamics = subparsers.add_parser("dynamics", help="Position distributions under a q-schedule")
    dynamics.add_argument("--scenario", choices=list_scenarios(), default="left", help="Schedule scenario")
    dynamics.add_argument("--d", type=int, default=FIG2_DIMENSION, help=f"Cycle size (default: {FIG2_DIMENSION})")
    dynamics.add_argument("--steps", type=int, default=DEFAULT_STEPS, help=f"Steps (default: {DEFAULT_STEPS})")
    dynamics.add_argument("--switch-step", type=int, default=DEFAULT_SWITCH_STEP,
                          help=f"Switch step (default: {DEFAULT_SWITCH_STEP})")
    dynamics.add_argument("--q", type=int, default=0, help="q for the constant scenario")
    dynamics.add_argument("--schedule", default=None, help="'start:q,...' for the custom scenario")
    dynamics.add_argument("--record-every", type=int, default=1, help="Recording cadence in steps")
    _add_coin_options(dynamics)
    _add_output_options(dynamics)

    dirac = subparsers.add_parser("dirac", help="Overlap of Dirac modes in two linear gauges")
    dirac.add_argument("--m", type=float, default=1.0, help="Mass")
    dirac.add_argument("--mu", type=float, required=True, help="Gauge slope of the first mode")
    dirac.add_argument("--mu-prime", type=float, required=True, help="Gauge slope of the second mode")
    dirac.add_argument("--k", type=float, default=0.0, help="Momentum of the first mode")
    dirac.add_argument("--k-prime", type=float, default=0.0, help="Momentum of the second mode")
    dirac.add_argument("--band", type=int, choices=[1, -1], default=1, help="Energy band of the first mode")
    dirac.add_argument("--band-prime", type=int, choices=[1, -1], default=1, help="Energy band of the second mode")
    dirac.add_argument("--windows", type=_float_list, default=list(DEFAULT_WINDOWS),
                       help="Comma-separated quadrature half-widths")
    _add_output_options(dirac)

    sweep = subparsers.add_parser("sweep", help="Complementarity check over many (d, q, q') cells")
    sweep.add_argument("--d-values", type=_int_list, required=True, help="Comma-separated cycle sizes")
    sweep.add_argument("--pairs", default=None, help="'q:q_prime,...' (default: all pairs)")
    sweep.add_argument("--workers", type=int, default=None, help="Worker threads")
    _add_coin_options(sweep)
    _add_cap_option(sweep)
    _add_output_options(sweep)

    info = subparsers.add_parser("info", help="List scenarios and coin presets")
    info.set_defaults(format="json", out=None, seed=DEFAULT_SEED)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.verbose else getattr(logging, args.log_level)
    logging.basicConfig(level=level, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")


def _run_config(args: argparse.Namespace) -> RunConfig:
    parameters: Dict[str, Any] = {
        key: value for key, value in vars(args).items() if key not in _NON_PARAMETERS
    }
    return RunConfig(
        command=args.command,
        fmt=args.format,
        output_dir=str(resolve_output_dir(args.out)),
        seed=args.seed,
        parameters=parameters,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    _configure_logging(args)
    try:
        config = _run_config(args)
        return _HANDLERS[args.command](args, config)
    except QwalkError as exc:
        logger.error(f"{args.command}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        logger.error(f"{args.command}: cannot write output: {exc}")
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
