"""Compensated summation for long alternating series."""
from typing import Iterable, Tuple


def two_sum(u: float, v: float) -> Tuple[float, float]:
    """Error-free transformation: u + v == s + t exactly."""
    s = u + v
    up = s - v
    vpp = s - up
    up -= u
    vpp -= v
    return s, -(up + vpp)


class CompensatedSum:
    """Running sum with a second word carrying the rounding error.

    Each addition goes through ``two_sum`` so the lost low-order bits are
    collected in ``carry`` and folded back in when the total is read.
    """

    def __init__(self, value: float = 0.0):
        self.total = float(value)
        self.carry = 0.0

    def add(self, value: float) -> None:
        self.total, err = two_sum(self.total, float(value))
        self.carry += err

    def extend(self, values: Iterable[float]) -> None:
        for value in values:
            self.add(value)

    @property
    def value(self) -> float:
        return self.total + self.carry

    def __float__(self) -> float:
        return self.value


def compensated_sum(values: Iterable[float], reverse: bool = False) -> float:
    """Compensated total of values, optionally accumulated from the last one."""
    values = list(values)
    acc = CompensatedSum()
    acc.extend(reversed(values) if reverse else values)
    return acc.value
