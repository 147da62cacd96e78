"""Names of the number families and the parameters each one takes."""
from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from ..shared.settings import get_settings


class Family(str, Enum):
    EULER = "euler"
    COMP_EULER = "comp-euler"
    BERNOULLI_MINUS = "bernoulli-minus"
    BERNOULLI_PLUS = "bernoulli-plus"
    POLY_BERNOULLI = "poly-bernoulli"
    POLY_EULER = "poly-euler"
    POLY_EULER2 = "poly-euler2"
    HYPER_EULER = "hyper-euler"
    HYPER_EULER2 = "hyper-euler2"

    @property
    def takes_k(self) -> bool:
        return self in (Family.POLY_BERNOULLI, Family.POLY_EULER, Family.POLY_EULER2)

    @property
    def takes_big_n(self) -> bool:
        return self in (Family.HYPER_EULER, Family.HYPER_EULER2)

    @property
    def even(self) -> bool:
        """Generating function is even in t, so odd-index values vanish."""
        return self in (Family.EULER, Family.COMP_EULER, Family.HYPER_EULER, Family.HYPER_EULER2)


class Convention(str, Enum):
    """Sign of B_1: minus for t/(e^t-1), plus for t/(1-e^{-t})."""

    MINUS = "minus"
    PLUS = "plus"


class CompEulerMethod(str, Enum):
    RECURRENCE = "recurrence"
    BERNOULLI_IDENTITY = "bernoulli_identity"


class PolyEuler2Method(str, Enum):
    VIA_PB = "via_pb"
    STIRLING_NEG = "stirling_neg"
    STIRLING_NEG2 = "stirling_neg2"


class SeqFamily(BaseModel):
    """A family together with exactly the integer parameters it needs."""

    model_config = ConfigDict(frozen=True)

    family: Family
    k: Optional[int] = None
    N: Optional[int] = None

    @model_validator(mode="after")
    def _parameters_match_family(self) -> "SeqFamily":
        name = self.family.value
        if self.family.takes_k:
            if self.k is None:
                raise ValueError(f"{name} requires k")
            max_k = get_settings().max_k
            if abs(self.k) > max_k:
                raise ValueError(f"{name}: |k| must be <= {max_k}, got {self.k}")
        elif self.k is not None:
            raise ValueError(f"{name} takes no k")

        if self.family.takes_big_n:
            if self.N is None:
                raise ValueError(f"{name} requires N")
            max_n = get_settings().max_n
            if not 0 <= self.N <= max_n:
                raise ValueError(f"{name}: N must be in 0..{max_n}, got {self.N}")
        elif self.N is not None:
            raise ValueError(f"{name} takes no N")
        return self

    def label(self) -> str:
        if self.k is not None:
            return f"{self.family.value}(k={self.k})"
        if self.N is not None:
            return f"{self.family.value}(N={self.N})"
        return self.family.value
