"""Exact normalization factors and reducibility points for products of two Speh representations."""

from .certifier import (
    HolomorphyCertificate,
    LedgerEntry,
    PoleWindow,
    certify_discrete,
    certify_supercuspidal,
    mw_pole_window,
    pole_budget,
)
from .classifier import (
    PointVerdict,
    PoleMatrix,
    Tier,
    candidate_points,
    classify,
    coprime_bruteforce,
    coprime_closed_form,
    dual_coprime_bruteforce,
    dual_coprime_closed_form,
    exceptional_points,
    pole_matrix,
)
from .halfint import HalfInt
from .lfactor import (
    EvaluationAtPole,
    HalfIntMultiset,
    LFactorProduct,
    PoleMultiset,
    common_pole_part,
    lf_div,
    lf_eval,
    lf_mul,
    pole_part,
)
from .normalization import (
    LocalCoefficient,
    NotSelfAssociate,
    alpha,
    alpha_decomposition_product,
    alpha_factor_in_decomposition,
    alpha_factor_in_swapped_decomposition,
    beta,
    c_psi,
    gamma,
    gamma_ladder_oracle,
    gamma_rank_one_oracle,
)
from .speh import (
    ExponentMultiset,
    InductionProblem,
    RankOneFactor,
    cuspidal_support,
    dual,
    rank_one_factors,
    segment_exponents,
)

__version__ = "0.1.0"
