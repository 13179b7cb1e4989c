import random
from itertools import product

import pytest
from hypothesis import given

from lawvere import colimit as c
from lawvere import metric as m
from lawvere import ultra as u
from lawvere.approach import approach_from_metric, underlying_metric
from lawvere.corpus import all_metrics, random_metric
from lawvere.errors import InvalidStructure, NotTensored
from lawvere.metric import MetricMap
from lawvere.order import FinitePoset
from lawvere.quantale import FiniteChain

from conftest import CHAIN3, metrics


def test_finite_sets_have_only_principal_ultrafilters():
    for n in range(0, 4):
        scanned = u.ultrafilters_by_scan(n)
        assert len(scanned) == n == len(u.ultrafilters(n))
        assert {frozenset(uf.members()) for uf in u.ultrafilters(n)} == set(scanned)


def test_membership_is_literal():
    uf = u.unit(3, 1)
    assert {1} in uf and {0, 1} in uf and {0, 2} not in uf
    assert len(uf.members()) == 4
    assert u.is_ultrafilter(3, uf.members())
    assert not u.is_ultrafilter(3, [frozenset({0, 1, 2})])
    assert u.from_family(3, uf.members()) == uf


def test_multiplication():
    for n in range(1, 4):
        for x in range(n):
            ex = u.unit(n, x)
            assert u.mult(n, u.unit(n, x)) == ex
            # the double principal ultrafilter at x collapses to x.
            big = u.Ultrafilter(n, ex.point)
            assert u.mult(n, big) == ex
        assert u.monad_laws_hold(n)


def test_sharp_picks_ultrafilters_containing_the_set():
    assert u.sharp(3, frozenset({0, 2})) == frozenset({0, 2})


@given(metrics())
def test_principal_collapse(M):
    UM = u.lift_metric(M)
    assert UM.d == M.d
    assert UM.carrier == tuple("^" + x for x in M.carrier)
    assert all(u.lifted_distance(M, u.unit(M.n, x), u.unit(M.n, y)) == M.d[x][y] for x in range(M.n) for y in range(M.n))


def test_unit_and_multiplication_are_metric_maps():
    for M in all_metrics(CHAIN3, 2):
        UM = u.lift_metric(M)
        UUM = u.lift_metric(UM)
        assert m.is_metric_map(MetricMap(M, UM, [u.unit(M.n, x).point for x in range(M.n)]))
        assert m.is_metric_map(MetricMap(UUM, UM, u.mult_table(M.n)))


def test_lift_order():
    D = FinitePoset.antichain(3)
    assert u.lift_order(D).leq == D.leq
    C = FinitePoset.chain(3)
    assert u.lift_order(C).leq == C.leq


def test_algebra_checks():
    for n in range(1, 4):
        assert u.em_algebra_check(n, u.discrete_alpha(n))
        assert u.em_algebras(n) == [u.discrete_alpha(n)]
    assert not u.em_algebra_check(2, (1, 0))
    for M in all_metrics(CHAIN3, 2):
        assert u.is_metric_compact_hausdorff(M, u.discrete_alpha(M.n))


def test_value_chain_convergence():
    for q in (CHAIN3, FiniteChain(1, 5)):
        xi = u.xi(q)
        assert xi == u.discrete_alpha(len(q.values()))
        assert u.is_metric_compact_hausdorff(m.value_space(q), xi)
        assert u.is_ordered_compact_hausdorff(m.underlying_order(m.value_space(q)), xi)


def test_lifted_tensor():
    rng = random.Random(5)
    checked = 0
    while checked < 40:
        M = random_metric(CHAIN3, 3, rng)
        if not c.is_tensored(M):
            continue
        checked += 1
        UM = u.lift_metric(M)
        for x in u.ultrafilters(M.n):
            assert u.lifted_tensor(M, x, 0) == x or c.equivalent(M, u.lifted_tensor(M, x, 0).point, x.point)
            for v in CHAIN3.values():
                t = u.lifted_tensor(M, x, v)
                assert t.point == c.tensor(M, x.point, v)
                for y in range(M.n):
                    assert UM.d[t.point][y] == CHAIN3.minus(UM.d[x.point][y], v)
    with pytest.raises(NotTensored):
        u.lifted_tensor(m.discrete(CHAIN3, "ab"), u.unit(2, 0), 1)


def test_K_approach():
    for M in all_metrics(CHAIN3, 2):
        A = u.K_approach(M, u.discrete_alpha(M.n))
        assert underlying_metric(A).d == M.d
        Aop = u.K_approach(m.dual(M), u.discrete_alpha(M.n))
        assert underlying_metric(Aop).d == tuple(zip(*M.d))
    q = CHAIN3
    lam = u.K_approach(m.value_space(q), u.xi(q))
    vals = q.values()
    for i, x in product(range(len(vals)), repeat=2):
        assert lam.conv[i][x] == q.minus(vals[x], vals[u.xi(q)[i]])
    with pytest.raises(InvalidStructure):
        u.K_approach(m.discrete(q, "ab"), (1, 0))


def test_K_top_uses_open_down_sets():
    P = FinitePoset.chain(2)
    T = u.K_top(P, u.discrete_alpha(2))
    assert set(T.opens) == {frozenset(), frozenset({0}), frozenset({0, 1})}
    # x. converges to y iff every open around y contains x, i.e. x <= y
    assert T.converges == ((True, True), (False, True))


def test_expansion_and_M_functor():
    for M in all_metrics(CHAIN3, 2):
        A = approach_from_metric(M)
        for S in [frozenset(), frozenset({0}), frozenset({0, 1})]:
            assert u.expansion(A, S, CHAIN3.top) == frozenset(range(M.n))
            assert S <= u.expansion(A, S, 0)
        D, mt = u.M_functor(A)
        assert D.d == M.d
        assert mt == u.mult_table(M.n)


def test_map_check_compact():
    rng = random.Random(11)
    for _ in range(60):
        X, Y = random_metric(CHAIN3, 2, rng), random_metric(CHAIN3, 3, rng)
        sx, sy = (X, u.discrete_alpha(2)), (Y, u.discrete_alpha(3))
        assert u.map_check_compact(range(2), sx, sx) and u.map_check_compact(range(2), sx, sx, method="approach")
        for t in product(range(3), repeat=2):
            assert u.map_check_compact(t, sx, sy) == u.map_check_compact(t, sx, sy, method="approach")
    V = m.value_space(CHAIN3)
    sv = (V, u.xi(CHAIN3))
    flip = (3, 2, 1, 0)
    assert not u.map_check_compact(flip, sv, sv)
    assert not u.map_check_compact(flip, sv, sv, method="approach")
