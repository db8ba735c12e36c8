from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from quasikoorn.scalars import (
    ParamSpec,
    TorusPoint,
    as_rational,
    chi_even,
    chi_odd,
    floor_even,
    floor_odd,
    format_rational,
    parse_vector,
    q_power,
    rational_floor,
)
from conftest import rationals


@pytest.mark.parametrize("x, expected", [("3/2", 1), ("-1/4", -1), ("2", 2)])
def test_rational_floor(x, expected):
    assert rational_floor(x) == expected


@pytest.mark.parametrize("x, even, odd", [("3/2", 0, 1), ("2", 2, 1), ("-3/2", -2, -3)])
def test_parity_floors(x, even, odd):
    assert floor_even(x) == even
    assert floor_odd(x) == odd


@given(rationals(max_den=8, bound=10))
def test_parity_floor_properties(x):
    e, o = floor_even(x), floor_odd(x)
    assert e % 2 == 0 and o % 2 == 1
    assert e <= x < e + 2
    assert o <= x < o + 2


@pytest.mark.parametrize("sq, n, expected", [(2, 2, 4), (2, 0, 1), (3, -1, F(1, 3))])
def test_q_power(sq, n, expected):
    p = ParamSpec.create(1, sq, 2, 3, 5, 7, 11)
    assert q_power(p, n) == expected


def test_indicators():
    assert chi_even(F(2)) == 1 and chi_odd(F(2)) == 0
    assert chi_even(F(3)) == 0 and chi_odd(F(3)) == 1
    assert chi_even(F(1, 2)) == 0 and chi_odd(F(1, 2)) == 0


def test_parsing_round_trip():
    assert parse_vector("3/4, −1,0") == (F(3, 4), F(-1), F(0))
    assert as_rational("−2/6") == F(-1, 3)
    assert format_rational(F(-1, 3)) == "-1/3"
    assert format_rational(F(4)) == "4"


def test_param_spec_rejects_zero():
    with pytest.raises(ValueError):
        ParamSpec.create(2, 1, 0, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        ParamSpec.create(0, 1, 1, 1, 1, 1, 1)


def test_param_spec_json_and_hecke():
    p = ParamSpec.create(2, "3/2", "2/5", "7/3", "5/4", "3/7", "11/4")
    assert p.q == F(9, 4)
    assert [p.hecke_parameter(j) for j in range(3)] == [F(2, 5), F(5, 4), F(3, 7)]
    assert p.to_json()["ur"] == "11/4"
    assert p.replace(k="2").k == 2


@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_torus_evaluate_is_character(mu):
    t = TorusPoint((F(2, 3), F(5, 7)))
    s = TorusPoint((F(-3, 2), F(4)))
    assert (t * s).evaluate(mu) == t.evaluate(mu) * s.evaluate(mu)
    assert TorusPoint.identity(2).evaluate(mu) == 1
