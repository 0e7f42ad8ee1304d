"""Replay of the combinatorial skeleton of the holomorphy argument for M* = alpha^-1 M.

A certificate records, for each piece of the decomposition of the induced
product, the window of possible poles of the normalized operator, the
lowest location where a rank-one piece of M can have a pole, and a set
of named inequalities.  The verdict is the conjunction of all of them.
Analytic inputs (the Moeglin-Waldspurger windows, Bernstein's rank-one
pole rule) are taken as given.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .halfint import HalfInt
from .lfactor import PoleMultiset, pole_part
from .normalization import (
    alpha,
    alpha_decomposition_product,
    alpha_factor_in_decomposition,
    alpha_factor_in_swapped_decomposition,
    decomposition_side,
)
from .speh import InductionProblem, j_range, rank_one_factors, segment


@dataclass(frozen=True)
class PoleWindow:
    """Half-open interval [lo, hi) of w-values and the lattice points lo, lo+1, ... inside it."""

    lo: HalfInt
    hi: HalfInt

    @property
    def points(self) -> tuple[HalfInt, ...]:
        pts = []
        x = self.lo
        while x < self.hi:
            pts.append(x)
            x = x + 1
        return tuple(pts)

    def __contains__(self, w: HalfInt) -> bool:
        return w in self.points

    def to_json(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


def mw_pole_window(c: int, d: int, shift=0) -> PoleWindow:
    """[shift - (c+d)/2, shift - |c-d|/2); has exactly min(c, d) lattice points."""
    shift = HalfInt.of(shift)
    return PoleWindow(shift - HalfInt(c + d), shift - HalfInt(abs(c - d)))


@dataclass(frozen=True)
class LedgerEntry:
    j2: HalfInt  # exponent of the decomposed factor (j1 when decomposing the left one)
    window_lo: HalfInt
    window_hi_exclusive: HalfInt
    rank_one_floor: HalfInt
    alpha_pole_locations: tuple[HalfInt, ...]
    checks: dict[str, bool] = field(default_factory=dict)
    candidates: tuple[HalfInt, ...] = ()

    @property
    def window(self) -> PoleWindow:
        return PoleWindow(self.window_lo, self.window_hi_exclusive)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "j2": str(self.j2),
            "window": [str(self.window_lo), str(self.window_hi_exclusive)],
            "floor": str(self.rank_one_floor),
            "alpha_poles": [str(x) for x in self.alpha_pole_locations],
            "candidates": [str(x) for x in self.candidates],
            "checks": dict(self.checks),
        }

    @classmethod
    def from_json(cls, data) -> "LedgerEntry":
        lo, hi = data["window"]
        return cls(
            j2=HalfInt.of(data["j2"]),
            window_lo=HalfInt.of(lo),
            window_hi_exclusive=HalfInt.of(hi),
            rank_one_floor=HalfInt.of(data["floor"]),
            alpha_pole_locations=tuple(HalfInt.of(x) for x in data["alpha_poles"]),
            checks={k: bool(v) for k, v in data["checks"].items()},
            candidates=tuple(HalfInt.of(x) for x in data.get("candidates", ())),
        )


@dataclass(frozen=True)
class HolomorphyCertificate:
    problem: InductionProblem
    entries: tuple[LedgerEntry, ...]
    supercuspidal_distinctness: bool
    alpha_matching: bool
    kind: str = "discrete"
    side: str = "right"

    @property
    def verdict(self) -> bool:
        return (
            all(e.ok for e in self.entries)
            and self.supercuspidal_distinctness
            and self.alpha_matching
        )

    def failed_checks(self) -> list[str]:
        out = [f"{e.j2}:{name}" for e in self.entries for name, ok in e.checks.items() if not ok]
        if not self.supercuspidal_distinctness:
            out.append("supercuspidal_distinctness")
        if not self.alpha_matching:
            out.append("alpha_matching")
        return out

    def to_json(self) -> dict:
        return {
            "problem": self.problem.to_json(),
            "kind": self.kind,
            "side": self.side,
            "entries": [e.to_json() for e in self.entries],
            "supercuspidal_distinctness": self.supercuspidal_distinctness,
            "alpha_matching": self.alpha_matching,
            "verdict": self.verdict,
        }

    @classmethod
    def from_json(cls, data) -> "HolomorphyCertificate":
        return cls(
            problem=InductionProblem.from_json(data["problem"]),
            entries=tuple(LedgerEntry.from_json(e) for e in data["entries"]),
            supercuspidal_distinctness=bool(data["supercuspidal_distinctness"]),
            alpha_matching=bool(data["alpha_matching"]),
            kind=data.get("kind", "discrete"),
            side=data.get("side", "right"),
        )


def certify_supercuspidal(c: int, d: int) -> HolomorphyCertificate:
    """Claim (C1) for rho_c(tau) x rho_d(tau).

    Decomposing rho_d(tau) along its exponents j2, the piece
    rho_c(tau) (x) tau|det|^j2 has its only candidate pole at
    w0 = j2 - (c+1)/2.  That pole is simple because it sits strictly below
    every rank-one pole j2 - j1, and the candidates for different j2 are
    distinct.
    """
    p = InductionProblem(1, 1, c, d)
    js1 = segment(c)
    entries = []
    for j2 in segment(d):
        w0 = j2 - HalfInt(c + 1)
        rank_one_poles = [j2 - j1 for j1 in js1]
        window = mw_pole_window(c, 1, j2)
        # alpha of rho_c(tau) (x) tau|det|^j2 is L(w - j2 - (c-1)/2)
        sub_alpha = (j2 + HalfInt(c - 1),)
        entries.append(LedgerEntry(
            j2=j2,
            window_lo=window.lo,
            window_hi_exclusive=window.hi,
            rank_one_floor=min(rank_one_poles),
            alpha_pole_locations=sub_alpha,
            checks={
                "below_rank_one_poles": all(w0 < r for r in rank_one_poles),
                "candidate_in_window": w0 in window,
            },
            candidates=(w0,),
        ))
    cands = [e.candidates[0] for e in entries]
    distinct = len(set(cands)) == len(cands)
    return HolomorphyCertificate(
        problem=p,
        entries=tuple(entries),
        supercuspidal_distinctness=distinct,
        alpha_matching=alpha_decomposition_product(p) == alpha(p),
        kind="supercuspidal",
        side="right",
    )


def _discrete_entry(p: InductionProblem, index: HalfInt, side: str) -> LedgerEntry:
    cd = HalfInt(abs(p.c - p.d))
    if side == "right":
        # piece rho_c(tau_a) (x) rho_d(tau)|det|^j2; rank-one pieces j1 in seg(a)
        base = index - HalfInt(p.a - 1)
        rank_one_lows = [index - j1 - cd for j1 in segment(p.a)]
        sub_alpha = alpha_factor_in_decomposition(p, index)
    else:
        # piece rho_c(tau)|det|^j1 (x) rho_d(tau_b); rank-one pieces j2 in seg(b)
        base = -index - HalfInt(p.b - 1)
        rank_one_lows = [j2 - index - cd for j2 in segment(p.b)]
        sub_alpha = alpha_factor_in_swapped_decomposition(p, index)
    window = mw_pole_window(p.c, p.d, base)
    floor = base - cd
    # beta of the piece has poles at base - j - 1, which are the candidates
    candidates = tuple(sorted(base - j - 1 for j in j_range(p.c, p.d)))
    alpha_locs = tuple(pole_part(sub_alpha).elements())
    checks = {
        "floor_below_rank_one_poles": all(floor <= r for r in rank_one_lows),
        "window_below_floor": all(w < floor for w in window.points),
        "candidates_fill_window": candidates == window.points,
        "alpha_poles_at_or_above_floor": all(x >= floor for x in alpha_locs),
    }
    return LedgerEntry(
        j2=index,
        window_lo=window.lo,
        window_hi_exclusive=window.hi,
        rank_one_floor=floor,
        alpha_pole_locations=alpha_locs,
        checks=checks,
        candidates=candidates,
    )


def certify_discrete(p: InductionProblem) -> HolomorphyCertificate:
    """Certificate for the general (a, b, c, d) case.

    Decomposes rho_d(tau_b) along the exponents of tau_b when a >= b, and
    rho_c(tau_a) along those of tau_a otherwise.  Each piece must have its
    whole pole window strictly below the lowest possible rank-one pole, so
    that every pole of the piece comes from its normalization factor; the
    alpha factors of the pieces must multiply back to alpha.
    """
    side = decomposition_side(p)
    indices = segment(p.b) if side == "right" else segment(p.a)
    entries = tuple(_discrete_entry(p, i, side) for i in indices)
    return HolomorphyCertificate(
        problem=p,
        entries=entries,
        supercuspidal_distinctness=certify_supercuspidal(p.c, p.d).verdict,
        alpha_matching=alpha_decomposition_product(p) == alpha(p),
        kind="discrete",
        side=side,
    )


def pole_budget(p: InductionProblem) -> PoleMultiset:
    """Number of rank-one factors whose simple pole sits at each w0 = e2 - e1."""
    return PoleMultiset(Counter(f.pole for f in rank_one_factors(p)))
