import random
from itertools import product

import pytest
from hypothesis import given

from lawvere import action as act
from lawvere import approach as ap
from lawvere import colimit as c
from lawvere import metric as m
from lawvere.approach import CONV, DIST, ApproachSpace
from lawvere.corpus import all_lattices, all_metrics, lattice_action_corpus
from lawvere.errors import InvalidStructure, InvalidWeight, NotSeparated, ShapeError
from lawvere.metric import CO, CONTRA, WeightTable
from lawvere.order import FinitePoset
from lawvere.quantale import FiniteChain
from lawvere.ultra import K_approach, discrete_alpha, ultrafilters, unit

from conftest import CHAIN3, metric_and_weight, metrics

V_APP = ap.value_approach(CHAIN3)


def _a_d(M):
    """Oracle: sup over members of the principal ultrafilter of inf over the member."""
    q = M.quantale
    return tuple(
        tuple(max(min(M.d[z][y] for z in S) for S in uf.members()) for y in range(M.n)) for uf in ultrafilters(M.n)
    )


@given(metrics())
def test_metric_induced_space(M):
    A = ap.approach_from_metric(M)
    assert A.conv == _a_d(M) == M.d
    assert ap.check_approach_axioms(A)
    assert ap.underlying_metric(A) == M
    D = ap.metric_delta(M)
    assert ap.check_dist_axioms(D)
    assert ap.dist_to_conv(D).table == M.d


@given(metrics())
def test_conversions_are_inverse(M):
    A = ap.approach_from_metric(M)
    D = ap.conv_to_dist(A)
    assert D.form == DIST
    assert ap.dist_to_conv(D).table == A.table
    assert ap.conv_to_dist(ap.dist_to_conv(D)).table == D.table


def test_every_valid_two_point_dist_table_round_trips():
    q = CHAIN3
    found = 0
    for flat in product(q.values(), repeat=8):
        rows = [flat[:4], flat[4:]]
        A = ApproachSpace(q, "ab", DIST, rows)
        if not ap.check_dist_axioms(A):
            continue
        found += 1
        assert ap.conv_to_dist(ap.dist_to_conv(A)).table == A.table
        assert ap.check_conv_axioms(ap.dist_to_conv(A))
    assert found == 16


def test_topological_spaces_in_both_forms():
    for M in all_metrics(CHAIN3, 2):
        A = ap.approach_from_metric(M)
        two_valued_conv = all(v in (0, CHAIN3.top) for row in A.conv for v in row)
        assert ap.is_topological(A) == two_valued_conv
    assert ap.is_topological(ap.approach_from_metric(m.discrete(CHAIN3, "abc")))


def test_shape_and_axiom_errors():
    with pytest.raises(ShapeError):
        ApproachSpace(CHAIN3, "ab", DIST, [[0, 0], [0, 0]])
    bad = ApproachSpace(CHAIN3, "ab", CONV, [[1, 0], [0, 0]])
    assert not ap.check_approach_axioms(bad)


def test_underlying_topology_and_T0():
    M = m.MetricSpace(CHAIN3, "ab", [[0, 0], [1, 0]])
    A = ap.approach_from_metric(M)
    top = ap.underlying_top(A)
    assert top.order == m.underlying_order(M)
    assert ap.is_T0(A)
    assert not ap.is_T0(ap.approach_from_metric(m.MetricSpace(CHAIN3, "ab", [[0, 0], [0, 0]])))


def test_plus_product_app():
    one = ap.one_point_app(CHAIN3)
    for M in all_metrics(CHAIN3, 2):
        A = ap.approach_from_metric(M)
        assert ap.plus_product_app(one, A).conv == A.conv
        assert ap.plus_product_app(A, one).conv == A.conv
        B = ap.plus_product_app(A, V_APP)
        assert ap.underlying_metric(B).d == m.plus_product(M, ap.underlying_metric(V_APP)).d
        assert ap.check_approach_axioms(ap.plus_product_app(A, A))


@given(metrics())
def test_finite_spaces_are_U_cocomplete_with_identity_generic_points(M):
    A = ap.approach_from_metric(M)
    if m.is_separated(M):
        assert ap.generic_points(A) == discrete_alpha(M.n)
    assert ap.is_U_cocomplete(A)
    assert ap.alpha_is_left_adjoint(A, ap.generic_points(A))
    assert ap.plus_exponentiable_check(A)
    assert ap.compactness_degree(A) == 0


def test_K_images_are_U_cocomplete():
    assert ap.is_U_cocomplete(V_APP) and ap.is_U_cocomplete(ap.value_op_approach(CHAIN3))
    two = ap.approach_from_metric(m.discrete(CHAIN3, "ab"))
    assert ap.compactness_degree(two) == 0


def test_weighted_sup_app():
    for M in all_metrics(CHAIN3, 2):
        A = ap.approach_from_metric(M)
        for x in range(M.n):
            assert c.equivalent(M, ap.weighted_sup_app(A, ap.approach_yoneda(A, x)), x)
        weights = m.all_weights(ap.ux_metric(A), CONTRA)
        if ap.is_cocomplete_app(A):
            for psi in weights:
                s = ap.weighted_sup_app(A, psi)
                assert s is not None and c.equivalent(M, s, ap.sup_formula_app(A, psi))
        else:
            assert any(ap.weighted_sup_app(A, psi) is None for psi in weights)
    D = ap.approach_from_metric(m.discrete(CHAIN3, "ab"))
    assert ap.weighted_sup_app(D, WeightTable([0, 0], CONTRA)) is None
    with pytest.raises(InvalidWeight):
        ap.weighted_sup_app(D, WeightTable([0, 0], CO))


@given(metric_and_weight())
def test_approach_yoneda_identities(Mw):
    M, psi = Mw
    A = ap.approach_from_metric(M)
    for x in range(M.n):
        assert ap.approach_yoneda_check(A, x, psi)
    for uf in ultrafilters(M.n):
        assert ap.second_yoneda_check(A, uf, psi)


@given(metric_and_weight(), metric_and_weight(variance=CO))
def test_approach_isbell(a, b):
    M, psi = a
    A = ap.approach_from_metric(M)
    plus = ap.isbell_app_plus(A, psi)
    assert ap.isbell_app_plus(A, ap.isbell_app_minus(A, ap.isbell_app_plus(A, ap.isbell_app_minus(A, plus)))) == plus
    assert ap.isbell_app_plus(A, ap.isbell_app_minus(A, plus)) == plus
    N, phi = b
    if N.d == M.d:
        assert ap.isbell_app_adjunction_holds(A, psi, phi)


def test_isbell_on_representables():
    for M in all_metrics(CHAIN3, 2):
        A = ap.approach_from_metric(M)
        for x in range(M.n):
            phi = WeightTable(M.d[x], CO)
            assert ap.isbell_app_minus(A, phi).values == tuple(A.conv[i][x] for i in range(M.n))


def test_value_chain_is_absolutely_cocomplete():
    assert ap.is_absolutely_cocomplete(V_APP)
    assert ap.is_absolutely_cocomplete_by_maps(V_APP)
    assert all(ap.main_theorem_clauses(V_APP).values())


def test_value_op_tensor_is_an_approach_map_on_a_finite_chain():
    # Without non-principal ultrafilters u - v is continuous, so the finite
    # model of the opposite chain passes every clause.
    Vop = ap.value_op_approach(CHAIN3)
    assert ap.three_maps_hold(Vop)["plus"]
    assert ap.is_absolutely_cocomplete(Vop)


def test_absolute_cocompleteness_needs_T0():
    with pytest.raises(NotSeparated):
        ap.is_absolutely_cocomplete(ap.approach_from_metric(m.MetricSpace(CHAIN3, "ab", [[0, 0], [0, 0]])))


def test_clauses_agree_on_small_spaces():
    for n in (1, 2):
        for M in all_metrics(CHAIN3, n):
            A = ap.approach_from_metric(M)
            if ap.is_T0(A):
                clauses = ap.main_theorem_clauses(A)
                assert len(set(clauses.values())) == 1
                assert clauses["iv"] == ap.is_absolutely_cocomplete_by_maps(A)


def test_translations_on_value_chain():
    L = ap.app_to_lattice_action(V_APP)
    assert act.actions_equivalent(L, act.value_action(CHAIN3))
    assert ap.same_space(ap.lattice_action_to_app(L), V_APP)


def test_translations_on_trivial_actions():
    for n in (1, 2, 3):
        for P in all_lattices(n):
            T = act.trivial_action(P, CHAIN3)
            A = ap.lattice_action_to_app(T)
            assert ap.is_absolutely_cocomplete(A)
            assert act.actions_equivalent(ap.app_to_lattice_action(A), T)


def test_translation_preconditions():
    with pytest.raises(InvalidStructure):
        ap.app_to_lattice_action(ap.approach_from_metric(m.discrete(CHAIN3, "ab")))
    P = FinitePoset.chain(2)
    with pytest.raises(InvalidStructure):
        ap.lattice_action_to_app(act.OrdAction(P, CHAIN3, [[0, 0, 0, 0], [1, 1, 1, 1]]))


def test_classifier_excludes_actions_that_do_not_preserve_joins():
    corpus = lattice_action_corpus(CHAIN3, max_size=4)
    bad = [L for L in corpus if not ap.is_lattice_action(L)]
    assert bad and all(not act.cocomplete_algebra_check(L) for L in bad)
