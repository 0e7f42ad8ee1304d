"""Reducibility points, co-primality tests and certification tiers."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .halfint import HalfInt
from .lfactor import PoleMultiset, common_pole_part, pole_part
from .normalization import alpha, beta
from .speh import InductionProblem, dual, j_range


class Tier(str, Enum):
    """Which criterion certifies reducibility at a point, in priority order."""

    GCD_TRIVIAL_I = "GCD_TRIVIAL_I"
    GCD_TRIVIAL_II = "GCD_TRIVIAL_II"
    DEGREE_III = "DEGREE_III"
    DEGREE_IV = "DEGREE_IV"
    THEOREM_ONLY = "THEOREM_ONLY"


@dataclass(frozen=True)
class PointVerdict:
    point: HalfInt  # w0 = 2 s0
    beta_order: int
    alpha_order: int
    dual_alpha_order: int
    reducible: bool
    tier: Tier

    @property
    def s(self):
        return self.point.halved()

    def to_json(self) -> dict:
        s = self.s
        return {
            "w": str(self.point),
            "s": str(s),
            "beta_order": self.beta_order,
            "alpha_order": self.alpha_order,
            "dual_alpha_order": self.dual_alpha_order,
            "reducible": self.reducible,
            "tier": self.tier.value,
        }

    @classmethod
    def from_json(cls, data) -> "PointVerdict":
        return cls(
            point=HalfInt.of(data["w"]),
            beta_order=int(data["beta_order"]),
            alpha_order=int(data["alpha_order"]),
            dual_alpha_order=int(data["dual_alpha_order"]),
            reducible=bool(data["reducible"]),
            tier=Tier(data["tier"]),
        )


def candidate_points(p: InductionProblem) -> PoleMultiset:
    """Poles of beta(s) beta(-s) in w = 2s."""
    b = pole_part(beta(p))
    return b + b.negated()


def coprime_bruteforce(p: InductionProblem) -> bool:
    return len(common_pole_part(alpha(p), beta(p))) == 0


def coprime_closed_form(p: InductionProblem) -> bool:
    return abs(p.c - p.d) >= min(p.a - 1, p.b - 1)


def dual_coprime_bruteforce(p: InductionProblem) -> bool:
    return len(common_pole_part(alpha(dual(p)), beta(p))) == 0


def dual_coprime_closed_form(p: InductionProblem) -> bool:
    return abs(p.a - p.b) >= min(p.c - 1, p.d - 1)


def _tier(beta_order: int, alpha_order: int, dual_alpha_order: int) -> Tier:
    if alpha_order == 0:
        return Tier.GCD_TRIVIAL_I
    if dual_alpha_order == 0:
        return Tier.GCD_TRIVIAL_II
    if beta_order > alpha_order:
        return Tier.DEGREE_III
    if beta_order > dual_alpha_order:
        return Tier.DEGREE_IV
    return Tier.THEOREM_ONLY


def classify(p: InductionProblem) -> list[PointVerdict]:
    """Verdicts for every candidate point, sorted by w.

    Tiers are decided at the negative point w0 and shared with its mirror
    -w0.  The mirror verdict carries the orders read off at -w0, so its
    alpha order is the dual alpha order at w0 and vice versa.
    """
    a_poles = pole_part(alpha(p))
    da_poles = pole_part(alpha(dual(p)))
    b_poles = pole_part(beta(p))
    out = []
    for w0, b_ord in b_poles.items():
        # beta only has poles at w <= -1
        tier = _tier(b_ord, a_poles[w0], da_poles[w0])
        out.append(PointVerdict(w0, b_ord, a_poles[w0], da_poles[w0], True, tier))
        out.append(PointVerdict(-w0, b_ord, a_poles[-w0], da_poles[-w0], True, tier))
    return sorted(out, key=lambda v: v.point)


def exceptional_points(p: InductionProblem) -> frozenset[HalfInt]:
    return frozenset(v.point for v in classify(p) if v.tier is Tier.THEOREM_ONLY)


@dataclass(frozen=True)
class PoleMatrix:
    """Pole locations indexed by (j, k), with a flag on the common poles of alpha and beta."""

    which: str
    rows: tuple[HalfInt, ...]  # j values
    cols: tuple[HalfInt, ...]  # k values
    entries: tuple[tuple[HalfInt, ...], ...]
    flags: tuple[tuple[bool, ...], ...]

    def flagged_values(self) -> frozenset[HalfInt]:
        return frozenset(
            e for row, frow in zip(self.entries, self.flags) for e, f in zip(row, frow) if f
        )

    def to_text(self) -> str:
        cells = [
            [f"*{e}*" if f else str(e) for e, f in zip(row, frow)]
            for row, frow in zip(self.entries, self.flags)
        ]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + " ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def to_latex(self) -> str:
        ncols = len(self.cols)
        lines = [r"\left[\begin{array}{" + "c" * ncols + "}"]
        body = []
        for row, frow in zip(self.entries, self.flags):
            body.append(" & ".join(
                r"\mathbf{" + str(e) + "}" if f else str(e) for e, f in zip(row, frow)
            ))
        lines.append(" \\\\\n".join(body))
        lines.append(r"\end{array}\right]_{\%s}" % self.which)
        return "\n".join(lines)


def pole_matrix(p: InductionProblem, which: str) -> PoleMatrix:
    if which not in ("alpha", "beta"):
        raise ValueError(f"which must be 'alpha' or 'beta', got {which!r}")
    js = tuple(j_range(p.c, p.d))
    ks = tuple(j_range(p.a, p.b))
    common = common_pole_part(alpha(p), beta(p))
    if which == "alpha":
        entries = tuple(tuple(j - k for k in ks) for j in js)
    else:
        entries = tuple(tuple(-(j + k + 1) for k in ks) for j in js)
    flags = tuple(tuple(e in common for e in row) for row in entries)
    return PoleMatrix(which, js, ks, entries, flags)
