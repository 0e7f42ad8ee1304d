"""Segments, Speh ladders and the induction problem rho_c(tau_a)|det|^s x rho_d(tau_b)|det|^-s."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import NamedTuple

from .halfint import HalfInt
from .lfactor import HalfIntMultiset

ExponentMultiset = HalfIntMultiset


@dataclass(frozen=True)
class InductionProblem:
    """Parameters (a, b, c, d) of the product of rho_c(tau_a) and rho_d(tau_b).

    Both factors are built on the same unitary supercuspidal tau, of which
    only the rank is recorded.
    """

    a: int
    b: int
    c: int
    d: int
    tau_rank: int = 1

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "tau_rank"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")
            if value < 1:
                raise ValueError(f"parameters must be ≥ 1 (got {name}={value})")

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data) -> "InductionProblem":
        return cls(**{k: int(data[k]) for k in ("a", "b", "c", "d")},
                   tau_rank=int(data.get("tau_rank", 1)))

    def __str__(self) -> str:
        return f"(a={self.a}, b={self.b}, c={self.c}, d={self.d})"


class RankOneFactor(NamedTuple):
    """A pair of cuspidal exponents; its operator may have a simple pole at w = e2 - e1."""

    e1: HalfInt
    e2: HalfInt

    @property
    def pole(self) -> HalfInt:
        return self.e2 - self.e1


def segment(a: int) -> list[HalfInt]:
    """Exponents (a-1)/2, (a-3)/2, ..., -(a-1)/2 in that order."""
    if a < 1:
        raise ValueError(f"segment length must be >= 1, got {a}")
    return [HalfInt(a - 1 - 2 * i) for i in range(a)]


def segment_exponents(a: int) -> ExponentMultiset:
    return ExponentMultiset(segment(a))


def cuspidal_support(c: int, a: int) -> ExponentMultiset:
    """Exponents j + k of the c x a ladder underlying rho_c(tau_a)."""
    return ExponentMultiset(j + k for j in segment(c) for k in segment(a))


def dual(p: InductionProblem) -> InductionProblem:
    """Zelevinsky-Aubert dual: rho_c(tau_a) -> rho_a(tau_c) on both factors."""
    return InductionProblem(p.c, p.d, p.a, p.b, p.tau_rank)


def rank_one_factors(p: InductionProblem) -> list[RankOneFactor]:
    left = [j + k for j in segment(p.c) for k in segment(p.a)]
    right = [j + k for j in segment(p.d) for k in segment(p.b)]
    return [RankOneFactor(e1, e2) for e1 in left for e2 in right]


def j_range(c: int, d: int) -> list[HalfInt]:
    """|c-d|/2, |c-d|/2 + 1, ..., (c+d-2)/2; min(c, d) values."""
    lo = abs(c - d)
    return [HalfInt(lo + 2 * i) for i in range(min(c, d))]
