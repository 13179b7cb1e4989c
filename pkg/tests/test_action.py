from itertools import product

import pytest
from hypothesis import given

from lawvere import action as a
from lawvere import colimit as c
from lawvere import metric as m
from lawvere.corpus import all_lattices, all_metrics, all_posets
from lawvere.errors import AxiomViolation, NotSeparated, NotTensored
from lawvere.metric import MetricMap, MetricSpace
from lawvere.order import FinitePoset
from lawvere.quantale import FiniteChain

from conftest import CHAIN3, metrics

VA = a.value_action(CHAIN3)


def test_value_action_satisfies_everything():
    assert a.check_action_conditions(VA).all()
    assert a.cocomplete_algebra_check(VA)


def test_value_action_gives_value_metric():
    assert a.metric_from_action(VA) == m.value_space(CHAIN3)


def test_constant_action_fails_only_top_condition():
    P = FinitePoset.chain(3)
    const = a.OrdAction(P, CHAIN3, [[x] * 4 for x in range(3)])
    conds = a.check_action_conditions(const)
    assert conds.unit and conds.associative and conds.monotone
    assert not conds.top_is_bottom


def test_tensored_separated_spaces_give_actions():
    count = 0
    for n in (1, 2, 3):
        for M in all_metrics(CHAIN3, n):
            if m.is_separated(M) and c.is_tensored(M):
                A = a.action_from_metric(M)
                assert a.check_action_conditions(A).all()
                assert a.metric_from_action(A) == M
                for x, u in product(range(M.n), CHAIN3.values()):
                    t = A(x, u)
                    assert all(M.d[t][y] == CHAIN3.minus(M.d[x][y], u) for y in range(M.n))
                count += 1
    assert count == 18


def test_action_round_trip_and_cocompleteness_agree():
    count = 0
    for n in (1, 2, 3):
        for P in all_posets(n):
            for A in a.actions_from_shift(P, CHAIN3):
                M = a.metric_from_action(A)
                assert m.check_metric_axioms(M)
                assert a.actions_equivalent(a.action_from_metric(M), A)
                assert a.cocomplete_algebra_check(A) == c.is_cocomplete(M)
                for x, y in product(range(n), repeat=2):
                    if P.le(x, y):
                        assert M.d[x][y] == 0
                    assert a.infimum_is_attained(A, x, y) == M.d[x][y]
                count += 1
    assert count == 18


def test_shift_enumeration_matches_brute_force():
    q = FiniteChain(1, 2)
    posets = [P for n in (1, 2) for P in all_posets(n)] + [FinitePoset.chain(3)]
    for P in posets:
        fast = {A.act for A in a.actions_from_shift(P, q)}
        slow = {A.act for A in a.actions_brute_force(P, q)}
        assert fast == slow


def test_translation_preconditions():
    with pytest.raises(NotSeparated):
        a.action_from_metric(MetricSpace(CHAIN3, "ab", [[0, 0], [0, 0]]))
    with pytest.raises(NotTensored):
        a.action_from_metric(m.discrete(CHAIN3, "ab"))
    P = FinitePoset.chain(2)
    broken = a.OrdAction(P, CHAIN3, [[1, 1, 1, 1], [1, 1, 1, 1]])
    with pytest.raises(AxiomViolation):
        a.metric_from_action(broken)


def test_cocomplete_algebra_check_examples():
    P = FinitePoset.antichain(2)
    assert not a.cocomplete_algebra_check(a.OrdAction(P, CHAIN3, [[0] * 4, [1] * 4]))
    for n in (1, 2, 3):
        for L in all_lattices(n):
            T = a.trivial_action(L, CHAIN3)
            assert a.check_action_conditions(T).all()
            assert a.cocomplete_algebra_check(T) == c.is_cocomplete(a.metric_from_action(T))


def _tensored_spaces():
    return [M for n in (1, 2) for M in all_metrics(CHAIN3, n) if c.is_tensored(M)] + [m.value_space(CHAIN3)]


def test_metric_maps_via_order_match_direct_check():
    spaces = _tensored_spaces()
    for X in spaces:
        assert a.map_is_metric_via_order(m.identity(X))
        for Y in spaces:
            if X.n * Y.n > 16:
                continue
            for t in product(range(Y.n), repeat=X.n):
                f = MetricMap(X, Y, t)
                assert a.map_is_metric_via_order(f) == m.is_metric_map(f)


def test_monotone_map_that_is_not_metric():
    V = m.value_space(FiniteChain(1, 2))
    # 0 -> 0, 1 -> 2, 2 -> 2 is monotone for >= but stretches d(0, 1)
    f = MetricMap(V, V, (0, 2, 2))
    assert not m.is_metric_map(f)
    assert not a.map_is_metric_via_order(f)
    with pytest.raises(NotTensored):
        a.map_is_metric_via_order(m.identity(m.discrete(CHAIN3, "ab")))


@given(metrics())
def test_tensor_action_from_random_spaces(M):
    if m.is_separated(M) and c.is_tensored(M):
        assert a.check_action_conditions(a.action_from_metric(M)).all()
