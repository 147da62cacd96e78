"""Public-API bounds on n and k."""
from __future__ import annotations

from ..shared.errors import ParameterOutOfRange
from ..shared.settings import get_settings


def check_n(n: int, name: str = "n") -> None:
    max_n = get_settings().max_n
    if not 0 <= n <= max_n:
        raise ParameterOutOfRange(name, n, f"0..{max_n}")


def check_k(k: int) -> None:
    max_k = get_settings().max_k
    if abs(k) > max_k:
        raise ParameterOutOfRange("k", k, f"|k| <= {max_k}")
