# qwalk_mub/cli/config.py

"""
Resolved run configuration, embedded in every output file.
"""

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from qwalk_mub import __version__
from qwalk_mub.core.constants import (
    ARTIFACT_NAME,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_SEED,
    OUTPUT_DIR_ENV_VAR,
    OUTPUT_FORMATS,
)
from qwalk_mub.core.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


def _plain(value: Any) -> Any:
    """JSON-friendly copy: tuples become lists, mappings get sorted keys."""
    if isinstance(value, Mapping):
        return {str(key): _plain(value[key]) for key in sorted(value)}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, Path):
        return str(value)
    return value


@dataclass(frozen=True)
class RunConfig:
    """
    Everything that determines a run's output.

    Attributes:
        command: Subcommand name (spectrum, overlaps, dynamics, dirac, sweep, info).
        fmt: Output format, one of OUTPUT_FORMATS.
        output_dir: Resolved output directory.
        seed: Seed for random coin draws.
        parameters: Subcommand parameters (d, q, coin angles, steps, ...).
        version: Package version that produced the run.
    """
    command: str
    fmt: str = "json"
    output_dir: str = DEFAULT_OUTPUT_DIR
    seed: int = DEFAULT_SEED
    parameters: Dict[str, Any] = field(default_factory=dict)
    version: str = __version__

    def __post_init__(self):
        if not self.command:
            raise InvalidParameterError("command must be a non-empty string", field="command")
        if self.fmt not in OUTPUT_FORMATS:
            raise InvalidParameterError(f"format must be one of {OUTPUT_FORMATS}, got {self.fmt!r}", field="fmt")
        object.__setattr__(self, "parameters", _plain(self.parameters))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "artifact": ARTIFACT_NAME,
            "version": self.version,
            "command": self.command,
            "format": self.fmt,
            "output_dir": self.output_dir,
            "seed": self.seed,
            "parameters": dict(self.parameters),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RunConfig":
        try:
            return cls(
                command=data["command"],
                fmt=data.get("format", "json"),
                output_dir=data.get("output_dir", DEFAULT_OUTPUT_DIR),
                seed=int(data.get("seed", DEFAULT_SEED)),
                parameters=dict(data.get("parameters", {})),
                version=data.get("version", __version__),
            )
        except KeyError as exc:
            raise InvalidParameterError(f"missing key {exc}", field="config") from None


def resolve_output_dir(flag: Optional[str] = None) -> Path:
    """--out, else $QWALK_MUB_OUTPUT_DIR, else DEFAULT_OUTPUT_DIR."""
    if flag:
        return Path(flag)
    env_value = os.environ.get(OUTPUT_DIR_ENV_VAR)
    if env_value:
        logger.debug(f"Output directory taken from ${OUTPUT_DIR_ENV_VAR}: {env_value}")
        return Path(env_value)
    return Path(DEFAULT_OUTPUT_DIR)
