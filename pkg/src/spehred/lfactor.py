"""Factored products of local L-factors in the spectral variable w = 2s.

A product is a finite map ``shift n -> exponent e`` standing for
``prod_n L(w + n)^e`` with ``L(x) = (1 - q^-x)^-1``.  The residue
characteristic q is kept formal, so factors with different shifts never
interact: the factored form is canonical and equality is map equality.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping

import mpmath

from .halfint import HalfInt

# bits of mantissa used by lf_eval
EVAL_PREC = 96


class EvaluationAtPole(ZeroDivisionError):
    """lf_eval was asked for a value at a pole of the product."""

    def __init__(self, shift: HalfInt, w, label: str | None = None):
        self.shift = shift
        self.w = w
        self.label = label
        where = f"{label} " if label else ""
        super().__init__(f"{where}has a pole at w = {w} (factor L(w{_signed(shift)}))")


def _signed(n: HalfInt) -> str:
    if n.doubled == 0:
        return ""
    return f"+{n}" if n.doubled > 0 else f"-{-n}"


class HalfIntMultiset(Mapping[HalfInt, int]):
    """Immutable multiset of half-integers with positive multiplicities."""

    __slots__ = ("_data", "_hash")

    def __init__(self, entries: Mapping | Iterable[HalfInt] = ()):
        counts: Counter = Counter()
        if isinstance(entries, Mapping):
            for key, mult in entries.items():
                counts[HalfInt.of(key)] += mult
        else:
            for key in entries:
                counts[HalfInt.of(key)] += 1
        for key, mult in counts.items():
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} at {key}")
        self._data = {k: counts[k] for k in sorted(counts) if counts[k] > 0}
        self._hash = None

    def __getitem__(self, key) -> int:
        return self._data.get(HalfInt.of(key), 0)

    def __contains__(self, key) -> bool:
        try:
            return HalfInt.of(key) in self._data
        except (TypeError, ValueError):
            return False

    def __iter__(self) -> Iterator[HalfInt]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other) -> bool:
        if isinstance(other, HalfIntMultiset):
            return self._data == other._data
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self._data.items())
        return f"{type(self).__name__}({{{body}}})"

    @property
    def total(self) -> int:
        return sum(self._data.values())

    def support(self) -> frozenset[HalfInt]:
        return frozenset(self._data)

    def elements(self) -> list[HalfInt]:
        """Sorted list with repetitions."""
        return [k for k, m in self._data.items() for _ in range(m)]

    def intersection(self, other: "HalfIntMultiset") -> "HalfIntMultiset":
        return type(self)({k: min(m, other[k]) for k, m in self._data.items()})

    def __and__(self, other):
        return self.intersection(other)

    def __add__(self, other: "HalfIntMultiset") -> "HalfIntMultiset":
        out = Counter(self._data)
        out.update(other._data)
        return type(self)(out)

    def negated(self) -> "HalfIntMultiset":
        return type(self)({-k: m for k, m in self._data.items()})

    def dominates(self, other: "HalfIntMultiset") -> bool:
        """True if self[x] >= other[x] at every x."""
        return all(self[k] >= m for k, m in other.items())

    def to_json(self) -> dict[str, int]:
        return {str(k): m for k, m in self._data.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "HalfIntMultiset":
        return cls({HalfInt.of(k): int(v) for k, v in data.items()})


# A pole multiset lives in w-coordinates: location -> order.
PoleMultiset = HalfIntMultiset


class LFactorProduct(Mapping[HalfInt, int]):
    """Canonical factored product ``prod L(w + n)^e``.

    Behaves as a read-only mapping ``shift -> exponent`` with zero
    exponents never stored.  Missing shifts read as exponent 0.
    """

    __slots__ = ("_factors", "_hash")

    def __init__(self, factors: Mapping | Iterable[tuple] = ()):
        acc: Counter = Counter()
        items = factors.items() if isinstance(factors, Mapping) else factors
        for shift, exp in items:
            if isinstance(exp, bool) or not isinstance(exp, int):
                raise TypeError(f"exponent must be int, got {exp!r}")
            acc[HalfInt.of(shift)] += exp
        self._factors = {n: acc[n] for n in sorted(acc) if acc[n] != 0}
        self._hash = None

    @classmethod
    def from_shifts(cls, shifts: Iterable, exp: int = 1) -> "LFactorProduct":
        """Product of L(w + n)^exp over the given shifts (repeats add up)."""
        acc: Counter = Counter()
        for n in shifts:
            acc[HalfInt.of(n)] += exp
        return cls(acc)

    def __getitem__(self, shift) -> int:
        return self._factors.get(HalfInt.of(shift), 0)

    def __iter__(self) -> Iterator[HalfInt]:
        return iter(self._factors)

    def __len__(self) -> int:
        return len(self._factors)

    def __eq__(self, other) -> bool:
        if isinstance(other, LFactorProduct):
            return self._factors == other._factors
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._factors.items()))
        return self._hash

    def __mul__(self, other: "LFactorProduct") -> "LFactorProduct":
        if not isinstance(other, LFactorProduct):
            return NotImplemented
        acc = Counter(self._factors)
        acc.update(other._factors)
        return LFactorProduct(acc)

    def __truediv__(self, other: "LFactorProduct") -> "LFactorProduct":
        if not isinstance(other, LFactorProduct):
            return NotImplemented
        acc = Counter(self._factors)
        acc.subtract(other._factors)
        return LFactorProduct(acc)

    def __pow__(self, k: int) -> "LFactorProduct":
        return LFactorProduct({n: e * k for n, e in self._factors.items()})

    def inverse(self) -> "LFactorProduct":
        return self ** -1

    def shifted(self, by) -> "LFactorProduct":
        """Substitute w -> w + by."""
        by = HalfInt.of(by)
        return LFactorProduct({n + by: e for n, e in self._factors.items()})

    def numerator(self) -> "LFactorProduct":
        return LFactorProduct({n: e for n, e in self._factors.items() if e > 0})

    def denominator(self) -> "LFactorProduct":
        return LFactorProduct({n: -e for n, e in self._factors.items() if e < 0})

    def poles(self) -> PoleMultiset:
        return pole_part(self)

    def zeros(self) -> PoleMultiset:
        return pole_part(self.inverse())

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        return "".join(_factor_text(n, e) for n, e in self._factors.items())

    def __repr__(self) -> str:
        return f"LFactorProduct({self.to_mapping()})"

    def to_mapping(self) -> dict[str, int]:
        return {str(n): e for n, e in self._factors.items()}

    def as_fraction(self) -> str:
        """Render as ``numerator/denominator`` with positive exponents."""
        num, den = self.numerator(), self.denominator()
        top = "".join(_factor_text(n, e) for n, e in num.items()) or "1"
        if not den:
            return top
        bottom = "".join(_factor_text(n, e) for n, e in den.items())
        if len(den) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def to_json(self) -> list[dict]:
        return [{"shift": str(n), "exp": e} for n, e in self._factors.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "LFactorProduct":
        return cls((HalfInt.of(item["shift"]), int(item["exp"])) for item in data)


ONE = LFactorProduct()


def _factor_text(n: HalfInt, e: int) -> str:
    base = f"L(w{_signed(n)})"
    return base if e == 1 else f"{base}^{e}"


def lf_mul(x: LFactorProduct, y: LFactorProduct) -> LFactorProduct:
    return x * y


def lf_div(x: LFactorProduct, y: LFactorProduct) -> LFactorProduct:
    return x / y


def pole_part(x: LFactorProduct) -> PoleMultiset:
    """Poles of x in w-coordinates: L(w + n)^e with e > 0 has a pole of order e at w = -n."""
    return PoleMultiset({-n: e for n, e in x.items() if e > 0})


def common_pole_part(x: LFactorProduct, y: LFactorProduct) -> PoleMultiset:
    return pole_part(x) & pole_part(y)


def lf_eval(x: LFactorProduct, q, w, label: str | None = None) -> mpmath.mpf:
    """Numerically evaluate x at a real point w for a real q > 1.

    Runs at EVAL_PREC bits.  Raises EvaluationAtPole if some factor with
    positive exponent has w + n = 0.
    """
    with mpmath.workprec(EVAL_PREC):
        q = mpmath.mpf(q)
        w = mpmath.mpf(w)
        if not q > 1:
            raise ValueError(f"q must be > 1, got {q}")
        value = mpmath.mpf(1)
        for n, e in x.items():
            arg = w + mpmath.mpf(n.doubled) / 2
            if arg == 0 and e > 0:
                raise EvaluationAtPole(n, w, label)
            value *= (1 - mpmath.power(q, -arg)) ** (-e)
        return +value
