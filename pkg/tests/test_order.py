from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lawvere import order as o
from lawvere.corpus import all_lattices, all_posets
from lawvere.errors import AxiomViolation, DomainMismatch, NotACompleteLattice, NotOpContinuous, ShapeError
from lawvere.order import FinitePoset, MonotoneMap
from lawvere.quantale import FiniteChain
from lawvere.ultra import ultrafilters, unit

CHAIN = FinitePoset.chain(3)
DIAMOND = FinitePoset.diamond()
BOT, A, B, TOP = range(4)


def test_construction_validates():
    with pytest.raises(AxiomViolation):
        FinitePoset(["a", "b"], [[False, False], [False, True]])
    with pytest.raises(AxiomViolation):
        FinitePoset(["a", "b", "c"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(ShapeError):
        FinitePoset(["a", "a"], [[True, True], [True, True]])


def test_from_pairs_takes_transitive_closure():
    P = FinitePoset.from_pairs("abc", [("a", "b"), ("b", "c")])
    assert P.le(0, 2)


def test_supremum_examples():
    assert o.supremum(CHAIN, [0, 1]) == 1
    assert o.supremum(FinitePoset.antichain(2), [0, 1]) is None
    assert o.supremum(DIAMOND, [A, B]) == TOP
    assert o.infimum(DIAMOND, [A, B]) == BOT
    assert o.supremum(DIAMOND, []) == BOT


def test_complete_lattice_examples():
    assert o.is_complete_lattice(DIAMOND)
    assert not o.is_complete_lattice(FinitePoset.antichain(2))
    assert not o.is_complete_lattice(FinitePoset([], []))


def _lattice_by_binary_ops(P):
    n = P.n
    if n == 0 or o.bottom(P) is None or o.top(P) is None:
        return False
    return all(o.supremum(P, [x, y]) is not None and o.infimum(P, [x, y]) is not None for x in range(n) for y in range(n))


def test_complete_lattice_criterion_matches_binary_scan():
    for n in range(1, 5):
        for P in all_posets(n):
            assert o.is_complete_lattice(P) == _lattice_by_binary_ops(P)


def test_way_below_examples():
    assert o.way_below(CHAIN, 1, 2)
    assert not o.way_below(DIAMOND, TOP, BOT)
    with pytest.raises(NotACompleteLattice):
        o.way_below(FinitePoset.antichain(2), 0, 1)


def test_finite_lattices_are_continuous_both_ways():
    for n in range(1, 5):
        for P in all_lattices(n):
            assert o.is_continuous_lattice(P) and o.is_op_continuous_lattice(P)
            for x, y in product(range(n), repeat=2):
                assert o.way_below(P, y, x) == P.le(y, x)
                assert o.way_above(P, y, x) == P.le(x, y)
    assert not o.is_continuous_lattice(FinitePoset.antichain(2))


def test_value_chain_under_reverse_order_is_op_continuous():
    q = FiniteChain(1, 5)
    vals = q.values()
    P = FinitePoset([str(v) for v in vals], [[u >= v for v in vals] for u in vals])
    assert o.is_op_continuous_lattice(P)


def test_scott_open_examples():
    assert o.scott_open(CHAIN, [])
    assert o.scott_open(CHAIN, [0, 1, 2])
    assert o.scott_open(CHAIN, [0])
    assert not o.scott_open(CHAIN, [2])


def test_scott_opens_recover_order():
    for n in range(1, 4):
        for P in all_posets(n):
            assert o.order_of_opens(P.n, o.scott_opens(P)) == P.leq


def test_adjoint_pair_examples():
    ident = o.identity_map(DIAMOND)
    assert o.adjoint_pair(ident, ident)
    const_bot = MonotoneMap(DIAMOND, DIAMOND, [BOT] * 4)
    const_top = MonotoneMap(DIAMOND, DIAMOND, [TOP] * 4)
    # bottom-constant is left adjoint to top-constant; the reverse fails at the top
    assert o.adjoint_pair(const_bot, const_top)
    assert not o.adjoint_pair(const_top, const_bot)


def test_shift_maps_on_chain_poset_are_adjoint():
    q = FiniteChain(1, 4)
    vals = q.values()
    P = FinitePoset([str(v) for v in vals], [[u <= v for v in vals] for u in vals])
    for u in vals:
        # in the natural order: x - u is left adjoint to x + u (capped)
        minus = MonotoneMap(P, P, [q.index(q.minus(v, u)) for v in vals])
        plus = MonotoneMap(P, P, [q.index(q.add(v, u)) for v in vals])
        assert o.adjoint_pair(minus, plus)


def test_adjoint_pair_domain_mismatch():
    f = o.identity_map(CHAIN)
    with pytest.raises(DomainMismatch):
        o.adjoint_pair(f, o.identity_map(DIAMOND))


def _monotone_maps(P):
    for t in product(range(P.n), repeat=P.n):
        f = MonotoneMap(P, P, t)
        if f.is_monotone():
            yield f


def test_left_adjoints_preserve_suprema_and_right_adjoints_are_unique():
    for P in [CHAIN, DIAMOND, FinitePoset.from_pairs("abc", [("a", "b"), ("a", "c")])]:
        maps = list(_monotone_maps(P))
        for f in maps:
            rights = [g for g in maps if o.adjoint_pair(f, g)]
            if rights:
                assert o.preserves_suprema(f)
                assert all(o.pointwise_equivalent(rights[0], g) for g in rights)


def test_non_sup_preserving_map():
    # constant top on a chain misses the empty join
    assert not o.preserves_suprema(MonotoneMap(CHAIN, CHAIN, [2, 2, 2]))


def test_alpha_from_lattice_on_principal_ultrafilters():
    for P in [CHAIN, DIAMOND]:
        for x in range(P.n):
            assert o.alpha_from_lattice(P, unit(P.n, x)) == x
    with pytest.raises(NotOpContinuous):
        o.alpha_from_lattice(FinitePoset.antichain(2), ultrafilters(2)[0])


def test_directed_sets_contain_their_extrema():
    for n in range(1, 4):
        for P in all_lattices(n):
            for D in o.directed_down_sets(P):
                assert o.supremum(P, D) in D
            for D in o.directed_up_sets(P):
                assert o.infimum(P, D) in D


@given(st.integers(1, 4), st.data())
def test_dual_reverses_order(n, data):
    P = data.draw(st.sampled_from(list(all_posets(n))))
    D = P.dual()
    assert all(D.le(x, y) == P.le(y, x) for x in range(n) for y in range(n))
    assert D.dual() == P
