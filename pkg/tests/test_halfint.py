from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spehred import HalfInt
from spehred.halfint import half_range

halfints = st.integers(-1000, 1000).map(HalfInt)


def test_printing_is_canonical():
    assert str(HalfInt(4)) == "2"
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(-1)) == "-1/2"
    assert str(HalfInt(0)) == "0"


@pytest.mark.parametrize("text", ["0", "3", "-3/2", "5/2", "-7"])
def test_parse_roundtrip(text):
    assert str(HalfInt.of(text)) == text


def test_rejects_non_half_integers():
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))
    with pytest.raises(ValueError):
        HalfInt.of("1/4")
    with pytest.raises(TypeError):
        HalfInt(1.5)


@given(halfints, halfints, halfints)
def test_arithmetic_matches_fractions(x, y, z):
    assert (x + y).to_fraction() == x.to_fraction() + y.to_fraction()
    assert (x - y).to_fraction() == x.to_fraction() - y.to_fraction()
    assert (-x).to_fraction() == -x.to_fraction()
    assert (x + y) + z == x + (y + z)
    assert (x < y) == (x.to_fraction() < y.to_fraction())


@given(halfints, st.integers(-50, 50))
def test_mixed_int_arithmetic(x, n):
    assert (x + n).to_fraction() == x.to_fraction() + n
    assert (n - x).to_fraction() == n - x.to_fraction()
    assert (x * n).to_fraction() == x.to_fraction() * n


def test_half_range():
    assert half_range(HalfInt(-3), HalfInt(1)) == [HalfInt(-3), HalfInt(-1), HalfInt(1)]
    assert half_range(HalfInt(2), HalfInt(0)) == []
    with pytest.raises(ValueError):
        half_range(HalfInt(0), HalfInt(1))
