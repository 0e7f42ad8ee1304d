"""Exact half-integers, stored as their doubled integer value."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union["HalfInt", int]


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of (1/2)Z.

    ``HalfInt(3)`` is 3/2.  Use :meth:`of` to build from an integer,
    a ``Fraction`` or a string such as ``"-5/2"``.
    """

    doubled: int

    def __post_init__(self):
        if not isinstance(self.doubled, int) or isinstance(self.doubled, bool):
            raise TypeError(f"doubled must be an int, got {self.doubled!r}")

    @classmethod
    def of(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, float):
            if not value.is_integer() and not (2 * value).is_integer():
                raise ValueError(f"{value} is not a half-integer")
            value = Fraction(value)
        if isinstance(value, Fraction):
            twice = 2 * value
            if twice.denominator != 1:
                raise ValueError(f"{value} is not a half-integer")
            return cls(int(twice))
        raise TypeError(f"cannot build a HalfInt from {value!r}")

    @classmethod
    def half(cls, numerator: int) -> "HalfInt":
        """numerator/2."""
        return cls(numerator)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __float__(self) -> float:
        return self.doubled / 2

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.doubled))

    def __add__(self, other: Number) -> "HalfInt":
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.doubled + 2 * other)
        if isinstance(other, HalfInt):
            return HalfInt(self.doubled + other.doubled)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Number) -> "HalfInt":
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.doubled - 2 * other)
        if isinstance(other, HalfInt):
            return HalfInt(self.doubled - other.doubled)
        return NotImplemented

    def __rsub__(self, other: Number) -> "HalfInt":
        return (-self) + other

    def __mul__(self, other: int) -> "HalfInt":
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.doubled * other)
        return NotImplemented

    __rmul__ = __mul__

    def halved(self) -> Fraction:
        """Value divided by two; used to go from w = 2s to s."""
        return Fraction(self.doubled, 4)


ZERO = HalfInt(0)


def half_range(lo: HalfInt, hi: HalfInt) -> list[HalfInt]:
    """lo, lo+1, ..., up to and including hi (empty if hi < lo)."""
    if (hi.doubled - lo.doubled) % 2:
        raise ValueError(f"{lo} and {hi} lie in different cosets of Z")
    return [HalfInt(d) for d in range(lo.doubled, hi.doubled + 1, 2)]
