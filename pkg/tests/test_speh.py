import json

import pytest
from hypothesis import given, strategies as st

from spehred import (
    ExponentMultiset,
    HalfInt,
    InductionProblem,
    cuspidal_support,
    dual,
    rank_one_factors,
    segment_exponents,
)

from conftest import problems


def ms(d):
    return ExponentMultiset({HalfInt.of(k): v for k, v in d.items()})


def test_segment_exponents():
    assert segment_exponents(1) == ms({0: 1})
    assert segment_exponents(2) == ms({"1/2": 1, "-1/2": 1})
    assert segment_exponents(3) == ms({1: 1, 0: 1, -1: 1})


def test_cuspidal_support_examples():
    assert cuspidal_support(1, 1) == ms({0: 1})
    assert cuspidal_support(2, 2) == ms({1: 1, 0: 2, -1: 1})
    assert cuspidal_support(3, 1) == segment_exponents(3)


@pytest.mark.parametrize("c", range(1, 31))
def test_cuspidal_support_transpose_and_mass(c):
    for a in range(1, 31):
        sup = cuspidal_support(c, a)
        assert sup == cuspidal_support(a, c)
        assert sup.total == c * a
        assert sup.negated() == sup


@given(st.integers(1, 60))
def test_segment_symmetric(a):
    seg = segment_exponents(a)
    assert seg.negated() == seg
    assert seg.total == a


def test_dual_examples():
    assert dual(InductionProblem(2, 3, 4, 5)) == InductionProblem(4, 5, 2, 3)
    assert dual(InductionProblem(1, 1, 1, 1)) == InductionProblem(1, 1, 1, 1)
    assert dual(InductionProblem(1, 2, 3, 4, tau_rank=3)).tau_rank == 3


@given(problems(30))
def test_dual_involution(p):
    assert dual(dual(p)) == p


def test_rank_one_factor_examples():
    h = HalfInt.of
    assert [tuple(f) for f in rank_one_factors(InductionProblem(1, 1, 1, 1))] == [(h(0), h(0))]
    assert [tuple(f) for f in rank_one_factors(InductionProblem(1, 1, 2, 1))] == [
        (h("1/2"), h(0)),
        (h("-1/2"), h(0)),
    ]
    assert [tuple(f) for f in rank_one_factors(InductionProblem(2, 1, 1, 1))] == [
        (h("1/2"), h(0)),
        (h("-1/2"), h(0)),
    ]


@given(problems(5))
def test_rank_one_factor_count(p):
    assert len(rank_one_factors(p)) == p.c * p.a * p.d * p.b


def test_problem_validation():
    with pytest.raises(ValueError, match="≥ 1"):
        InductionProblem(0, 1, 1, 1)
    with pytest.raises(TypeError):
        InductionProblem(1.0, 1, 1, 1)


@given(problems(20))
def test_problem_json_roundtrip(p):
    assert InductionProblem.from_json(json.loads(json.dumps(p.to_json()))) == p
