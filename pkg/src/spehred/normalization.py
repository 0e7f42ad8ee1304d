"""Normalization factors alpha, beta, gamma and the local coefficient C_psi.

Everything is expanded down to the supercuspidal double product

    alpha = prod_{j, k} L(w - j + k),    beta = prod_{j, k} L(w + j + k + 1),

with j over |c-d|/2 .. (c+d-2)/2 and k over |a-b|/2 .. (a+b-2)/2, and
L = L(., tau x tau^vee).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .halfint import HalfInt
from .lfactor import LFactorProduct, PoleMultiset, lf_eval
from .speh import InductionProblem, j_range, rank_one_factors, segment


class NotSelfAssociate(ValueError):
    """C_psi is only defined when c == d."""


def alpha(p: InductionProblem) -> LFactorProduct:
    ks = j_range(p.a, p.b)
    return LFactorProduct.from_shifts(k - j for j in j_range(p.c, p.d) for k in ks)


def beta(p: InductionProblem) -> LFactorProduct:
    ks = j_range(p.a, p.b)
    return LFactorProduct.from_shifts(j + k + 1 for j in j_range(p.c, p.d) for k in ks)


def gamma(p: InductionProblem) -> LFactorProduct:
    return alpha(p) / beta(p)


def _rank_one_gamma(diffs) -> LFactorProduct:
    # prod over x of L(w + x) / L(w + x + 1)
    acc: Counter = Counter()
    for x in diffs:
        acc[x] += 1
        acc[x + 1] -= 1
    return LFactorProduct(acc)


def gamma_rank_one_oracle(p: InductionProblem) -> LFactorProduct:
    """Product of the rank-one factors L(w + e1 - e2) / L(w + e1 - e2 + 1).

    Runs over every pair of cuspidal exponents (e1, e2).  This agrees with
    :func:`gamma` when a = b = 1 but not in general: for a discrete series
    the factor only keeps the top of the segment.  See
    :func:`gamma_ladder_oracle` for the telescoping that does hold.
    """
    return _rank_one_gamma(f.e1 - f.e2 for f in rank_one_factors(p))


def gamma_ladder_oracle(p: InductionProblem) -> LFactorProduct:
    """gamma rebuilt from the Speh rows tau_a|det|^j1 (x) tau_b|det|^j2.

    Each row pair contributes L(w + j1 - j2, tau_a x tau_b^vee) /
    L(w + j1 - j2 + 1, tau_a x tau_b^vee), and the discrete series
    L-function is prod_k L(x + k).  Shares no code path with alpha/beta.
    """
    ks = [k for k in range(abs(p.a - p.b), p.a + p.b - 1, 2)]
    acc: Counter = Counter()
    for j1 in segment(p.c):
        for j2 in segment(p.d):
            for k in ks:
                x = j1 - j2 + HalfInt(k)
                acc[x] += 1
                acc[x + 1] -= 1
    return LFactorProduct(acc)


def alpha_factor_in_decomposition(p: InductionProblem, j2) -> LFactorProduct:
    """alpha of rho_c(tau_a) (x) rho_d(tau)|det|^j2.

    Shifts (a-1)/2 - j2 - j for j in |c-d|/2 .. (c+d-2)/2.
    """
    j2 = HalfInt.of(j2)
    if j2 not in segment(p.b):
        raise ValueError(f"j2={j2} is not an exponent of the segment of length b={p.b}")
    top = HalfInt(p.a - 1)
    return LFactorProduct.from_shifts(top - j2 - j for j in j_range(p.c, p.d))


def alpha_factor_in_swapped_decomposition(p: InductionProblem, j1) -> LFactorProduct:
    """alpha of rho_c(tau)|det|^j1 (x) rho_d(tau_b), used when a < b.

    Shifts (b-1)/2 + j1 - j.
    """
    j1 = HalfInt.of(j1)
    if j1 not in segment(p.a):
        raise ValueError(f"j1={j1} is not an exponent of the segment of length a={p.a}")
    top = HalfInt(p.b - 1)
    return LFactorProduct.from_shifts(top + j1 - j for j in j_range(p.c, p.d))


def decomposition_side(p: InductionProblem) -> str:
    """'right' (decompose tau_b) when a >= b, else 'left' (decompose tau_a)."""
    return "right" if p.a >= p.b else "left"


def alpha_decomposition_product(p: InductionProblem) -> LFactorProduct:
    """Product of the alpha factors over the pieces of the decomposition."""
    out = LFactorProduct()
    if decomposition_side(p) == "right":
        for j2 in segment(p.b):
            out = out * alpha_factor_in_decomposition(p, j2)
    else:
        for j1 in segment(p.a):
            out = out * alpha_factor_in_swapped_decomposition(p, j1)
    return out


@dataclass(frozen=True)
class LocalCoefficient:
    """beta(-s) / alpha(s), kept as two one-sided products.

    ``mirrored`` holds L(-w + n)^e factors (those of beta), ``direct`` holds
    ordinary L(w + n)^e factors (alpha inverted).
    """

    mirrored: LFactorProduct
    direct: LFactorProduct

    def orders(self) -> dict[HalfInt, int]:
        """Net order at each w: positive for a pole, negative for a zero."""
        net: Counter = Counter()
        for n, e in self.mirrored.items():
            net[n] += e
        for n, e in self.direct.items():
            net[-n] += e
        return {w: net[w] for w in sorted(net) if net[w]}

    def poles(self) -> PoleMultiset:
        return PoleMultiset({w: e for w, e in self.orders().items() if e > 0})

    def zeros(self) -> PoleMultiset:
        return PoleMultiset({w: -e for w, e in self.orders().items() if e < 0})

    def evaluate(self, q, w):
        return lf_eval(self.mirrored, q, -w, "beta(-s)") * lf_eval(self.direct, q, w, "1/alpha")

    def __str__(self) -> str:
        top = "".join(
            f"L(-w+{n})" if e == 1 else f"L(-w+{n})^{e}" for n, e in self.mirrored.items()
        ) or "1"
        den = self.direct.inverse()
        if not den:
            return top
        bottom = str(den)
        if len(den) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def to_json(self) -> list[dict]:
        return [{"mirrored": True, "shift": str(n), "exp": e} for n, e in self.mirrored.items()] + [
            {"mirrored": False, "shift": str(n), "exp": e} for n, e in self.direct.items()
        ]


def c_psi(p: InductionProblem) -> LocalCoefficient:
    if p.c != p.d:
        raise NotSelfAssociate(f"C_psi needs c == d, got c={p.c}, d={p.d}")
    return LocalCoefficient(mirrored=beta(p), direct=alpha(p).inverse())
