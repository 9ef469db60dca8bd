# qwalk_mub/core/params.py

"""
Parameter objects for the walk and the continuum Dirac model.

All of them are frozen dataclasses validated on construction; invalid input
raises InvalidParameterError (a ValueError subclass).
"""

import math
from dataclasses import asdict, dataclass
from typing import Any, Dict

import numpy as np

from .constants import THETA_ZERO_TOL, UNITARITY_TOL
from .exceptions import InvalidParameterError

TWO_PI = 2.0 * math.pi


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise InvalidParameterError(f"must be finite, got {value!r}", field=name)
    return value


@dataclass(frozen=True)
class CoinParams:
    """
    The four angles of the general U(2) coin e^{iδ}[[c, s], [-s*, c*]],
    with c = cosθ·e^{iγ} and s = sinθ·e^{iσ}.

    theta is restricted to [0, π/2]; the three phases are reduced modulo 2π.
    """
    theta: float
    gamma: float = 0.0
    sigma: float = 0.0
    delta: float = 0.0

    def __post_init__(self):
        theta = _require_finite("theta", self.theta)
        if theta < -UNITARITY_TOL or theta > math.pi / 2 + UNITARITY_TOL:
            raise InvalidParameterError(f"must lie in [0, pi/2], got {theta!r}", field="theta")
        object.__setattr__(self, "theta", min(max(theta, 0.0), math.pi / 2))
        for name in ("gamma", "sigma", "delta"):
            object.__setattr__(self, name, _require_finite(name, getattr(self, name)) % TWO_PI)

    # --- Derived quantities ---

    @property
    def c(self) -> complex:
        return math.cos(self.theta) * complex(math.cos(self.gamma), math.sin(self.gamma))

    @property
    def s(self) -> complex:
        return math.sin(self.theta) * complex(math.cos(self.sigma), math.sin(self.sigma))

    @property
    def is_diagonal(self) -> bool:
        """True when sinθ vanishes and the coin only attaches phases."""
        return math.sin(self.theta) < THETA_ZERO_TOL

    # --- Presets ---

    @classmethod
    def hadamard(cls) -> "CoinParams":
        """Hadamard-type coin (θ = π/4, γ = σ = δ = 0)."""
        return cls(theta=math.pi / 4)

    @classmethod
    def identity(cls) -> "CoinParams":
        return cls(theta=0.0)

    @classmethod
    def random(cls, rng: np.random.Generator) -> "CoinParams":
        """Draws θ uniformly in [0, π/2] and the phases uniformly in [0, 2π)."""
        theta, gamma, sigma, delta = rng.uniform(0.0, 1.0, size=4)
        return cls(
            theta=float(theta) * math.pi / 2,
            gamma=float(gamma) * TWO_PI,
            sigma=float(sigma) * TWO_PI,
            delta=float(delta) * TWO_PI,
        )

    @classmethod
    def from_name(cls, name: str) -> "CoinParams":
        """Resolves a preset name ('hadamard' or 'identity')."""
        presets = {"hadamard": cls.hadamard, "identity": cls.identity}
        try:
            return presets[name.lower()]()
        except KeyError:
            raise InvalidParameterError(
                f"unknown coin preset {name!r}; available: {sorted(presets)}", field="coin"
            ) from None

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class WalkConfig:
    """Cycle size d, phase index q and coin; fully determines U = S(1⊗C)F."""
    d: int
    q: int
    coin: CoinParams

    def __post_init__(self):
        if isinstance(self.d, bool) or int(self.d) != self.d or self.d < 2:
            raise InvalidParameterError(f"cycle size must be an integer >= 2, got {self.d!r}", field="d")
        if int(self.q) != self.q or not (0 <= self.q < self.d):
            raise InvalidParameterError(f"phase index must lie in [0, {self.d}), got {self.q!r}", field="q")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "q", int(self.q))

    @property
    def epsilon(self) -> float:
        """ε = 2π/d."""
        return TWO_PI / self.d

    @property
    def phi(self) -> float:
        """φ = εq."""
        return self.epsilon * self.q

    def to_dict(self) -> Dict[str, Any]:
        return {"d": self.d, "q": self.q, "coin": self.coin.to_dict()}


@dataclass(frozen=True)
class DiracMode:
    """
    A continuum Dirac eigenmode in the linear gauge potential A(x) = μx.

    Attributes:
        m: Mass (>= 0), natural units.
        mu: Gauge slope.
        k: Momentum label.
        band: +1 for the positive-energy branch, -1 for the negative one.
    """
    m: float
    mu: float
    k: float
    band: int = 1

    def __post_init__(self):
        m = _require_finite("m", self.m)
        if m < 0:
            raise InvalidParameterError(f"mass must be >= 0, got {m!r}", field="m")
        if self.band not in (1, -1):
            raise InvalidParameterError(f"band must be +1 or -1, got {self.band!r}", field="band")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "mu", _require_finite("mu", self.mu))
        object.__setattr__(self, "k", _require_finite("k", self.k))
        object.__setattr__(self, "band", int(self.band))

    @property
    def energy(self) -> float:
        return self.band * math.hypot(self.k, self.m)
