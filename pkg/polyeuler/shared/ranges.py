"""Inclusive ``a..b`` index ranges shared by the CLI and the HTTP surface."""
from __future__ import annotations

import re

_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


def parse_range(text: str) -> range:
    """``"3"`` -> 3..3; ``"1..4"`` -> 1, 2, 3, 4; ``"0..-2"`` -> 0, -1, -2.

    The result is lazy; callers bound-check ``r[0]`` and ``r[-1]`` before iterating.
    """
    match = _RANGE.match(text or "")
    if not match:
        raise ValueError(f"expected an integer or a range a..b, got {text!r}")
    start = int(match.group(1))
    stop = int(match.group(2)) if match.group(2) is not None else start
    step = 1 if stop >= start else -1
    return range(start, stop + step, step)
