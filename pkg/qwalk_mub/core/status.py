# qwalk_mub/core/status.py

from enum import Enum, auto


class EigenRegime(Enum):
    """Which construction produced an eigenbasis."""
    Q_ZERO = auto()       # product states |m⟩ ⊗ spinor
    THETA_ZERO = auto()   # diagonal coin, spinor |τ⟩
    GENERIC = auto()      # chirped momentum sums, prime d
    NUMERICAL = auto()    # dense Schur oracle

    @property
    def is_analytic(self) -> bool:
        return self is not EigenRegime.NUMERICAL

    def __str__(self):
        return self.name
