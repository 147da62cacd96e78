"""Grow-only memo tables for the index-recursive sequences."""
from __future__ import annotations

import threading
from typing import Callable, Generic, Iterable, List, TypeVar

T = TypeVar("T")


class GrowingTable(Generic[T]):
    """Values v_0, v_1, ... where v_i is computed from the prefix v_0..v_{i-1}.

    Reads of already-computed entries take no lock; extension is serialized,
    so concurrent callers always observe the same values.
    """

    def __init__(self, seed: Iterable[T], extend: Callable[[List[T]], T]) -> None:
        self._values: List[T] = list(seed)
        self._extend = extend
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, index: int) -> T:
        if index < 0:
            raise IndexError(index)
        values = self._values
        if index < len(values):
            return values[index]
        with self._lock:
            while len(self._values) <= index:
                self._values.append(self._extend(self._values))
            return self._values[index]
