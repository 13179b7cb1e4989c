from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lawvere.errors import LawvereError
from lawvere.quantale import (
    INF,
    ExtendedRationals,
    FiniteChain,
    parse_quantale,
    quantale_from_descriptor,
    residuation_holds,
    same_quantale,
)

from conftest import RAT, rational_values


def test_add_examples():
    assert RAT.add(2, 3) == 5
    assert RAT.add(Fraction(7, 2), 0) == Fraction(7, 2)
    assert FiniteChain(1, 5).add(3, 3) == 5 == FiniteChain(1, 5).top


def test_minus_examples():
    assert RAT.minus(5, 2) == 3
    assert RAT.minus(2, 5) == 0
    assert RAT.minus(INF, 7) is INF


def test_infinity_conventions():
    assert RAT.add(INF, 3) is INF
    assert RAT.minus(INF, INF) == 0
    assert RAT.minus(4, INF) == 0


def test_join_meet():
    assert RAT.join([1, 4, 2]) == 4
    assert RAT.meet([]) is INF
    assert RAT.join([]) == 0


def test_residuation_examples():
    assert residuation_holds(RAT, 1, 2, 3)
    for v in range(5):
        for w in range(5):
            assert residuation_holds(RAT, 0, v, w)


def test_residuation_exhaustive_on_chain():
    q = FiniteChain(1, 5)
    assert len(q.values()) == 6
    assert all(residuation_holds(q, u, v, w) for u in q.values() for v in q.values() for w in q.values())


@given(rational_values(), rational_values(), rational_values())
def test_residuation_rational(u, v, w):
    assert residuation_holds(RAT, u, v, w)


@given(rational_values(), rational_values())
def test_minus_is_least_solution(v, u):
    # v - u is the least w with u + w >= v
    w = RAT.minus(v, u)
    assert RAT.add(u, w) >= v
    if w != 0 and w is not INF:
        assert RAT.add(u, w - Fraction(1, 1000)) < v or v is INF


@given(rational_values(), rational_values(), rational_values())
def test_addition_monoid(u, v, w):
    assert RAT.add(RAT.add(u, v), w) == RAT.add(u, RAT.add(v, w))
    assert RAT.add(u, v) == RAT.add(v, u)


def test_chain_values_and_truncation():
    q = FiniteChain(Fraction(1, 2), 4)
    assert q.values() == (0, Fraction(1, 2), 1, Fraction(3, 2), 2)
    assert q.add(Fraction(3, 2), 1) == 2
    assert q.minus(Fraction(1, 2), 2) == 0
    assert q.index(Fraction(3, 2)) == 3
    with pytest.raises(LawvereError):
        q.check(Fraction(1, 3))


def test_parse_and_format():
    assert RAT.parse("3/6") == Fraction(1, 2)
    assert RAT.parse("inf") is INF and RAT.parse("∞") is INF
    assert RAT.format(Fraction(4, 2)) == "2"
    assert RAT.format(INF) == "inf"
    q = FiniteChain(1, 3)
    assert q.format(3) == "inf"
    with pytest.raises(LawvereError):
        RAT.parse("-1")


def test_quantale_specs_round_trip():
    for text in ("rational", "chain:1:3", "chain:1/2:4"):
        q = parse_quantale(text)
        assert quantale_from_descriptor(q.descriptor()) == q
    with pytest.raises(ValueError):
        parse_quantale("chain:1")


def test_same_quantale():
    assert same_quantale(FiniteChain(1, 3), FiniteChain(1, 3)) == FiniteChain(1, 3)
    with pytest.raises(LawvereError):
        same_quantale(FiniteChain(1, 3), ExtendedRationals())


@given(st.integers(1, 4), st.integers(1, 6))
def test_chain_closed_under_operations(step, levels):
    q = FiniteChain(step, levels)
    for u in q.values():
        for v in q.values():
            assert q.contains(q.add(u, v)) and q.contains(q.minus(u, v))
