"""Exceptions raised by the series engine and the sequence routes."""
from __future__ import annotations


class PolyEulerError(ValueError):
    """Base class; callers at the edges map it to exit status 2 / HTTP 400."""


class DivisionByNonUnit(PolyEulerError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"Series division by non-unit: {detail}")


class NonzeroConstantTerm(PolyEulerError):
    def __init__(self, constant):
        self.constant = constant
        super().__init__(f"Polylogarithm argument must have zero constant term, got {constant}")


class IndexBeyondOrder(PolyEulerError):
    def __init__(self, index: int, order: int):
        self.index = index
        self.order = order
        super().__init__(f"Coefficient {index} requested from a series of order {order}")


class MethodRequiresNonpositiveK(PolyEulerError):
    def __init__(self, method: str, k: int):
        self.method = method
        self.k = k
        super().__init__(f"Method {method} needs k <= 0, got k={k}")


class SizeExceedsColumn(PolyEulerError):
    def __init__(self, size: int, available: int):
        self.size = size
        self.available = available
        super().__init__(f"Determinant of size {size} needs {size} column entries, got {available}")


class ParameterOutOfRange(PolyEulerError):
    def __init__(self, name: str, value: int, bound: str):
        self.name = name
        self.value = value
        super().__init__(f"{name}={value} is out of range ({bound})")
