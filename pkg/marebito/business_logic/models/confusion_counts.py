from dataclasses import dataclass

from marebito.business_logic.validators import validate_gte_value

from .base import BaseDataclass


@dataclass(frozen=True)
class ConfusionCounts(BaseDataclass):
    tp: int = 0
    """Real positive matched to the expected record"""

    fm: int = 0
    """Real positive matched to a different record (false match)"""

    fn: int = 0
    """Real positive left unmatched"""

    fp: int = 0
    """Real negative matched to some record"""

    tn: int = 0
    """Real negative left unmatched"""

    @property
    def rp(self):
        return self.tp + self.fm + self.fn

    @property
    def rn(self):
        return self.fp + self.tn

    @property
    def n(self):
        return self.rp + self.rn

    def validate(self):
        for name in ('tp', 'fm', 'fn', 'fp', 'tn'):
            validate_gte_value(f'{name.upper()} count', getattr(self, name), 0)

    def __add__(self, other):
        return ConfusionCounts(
            tp=self.tp + other.tp,
            fm=self.fm + other.fm,
            fn=self.fn + other.fn,
            fp=self.fp + other.fp,
            tn=self.tn + other.tn,
        )


@dataclass(frozen=True)
class PenaltyParams(BaseDataclass):
    alpha: float = 1.0
    """Cost of a false match"""

    beta: float = 1.0
    """Cost of a false positive; a false negative always costs 1"""

    def validate(self):
        validate_gte_value('Penalty alpha', self.alpha, 0)
        validate_gte_value('Penalty beta', self.beta, 0)
