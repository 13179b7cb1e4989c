"""Finite approach spaces.

Two presentations are supported:

* ``dist``: a point-set distance ``delta[x][mask]`` where ``mask`` is the
  bitmask of a subset;
* ``conv``: an ultrafilter convergence ``a[i][x]`` where ``i`` indexes the
  principal ultrafilter at ``i``.

Formulas quantifying over ultrafilters or their members are evaluated by
enumeration, as in :mod:`lawvere.ultra`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import NamedTuple, Optional, Sequence

from ._util import mask_of, subsets
from .action import OrdAction, action_from_metric, check_action_conditions, cocomplete_algebra_check, metric_from_action
from .colimit import is_cocomplete, tensor
from .errors import AxiomViolation, InvalidStructure, InvalidWeight, NotCocomplete, NotSeparated, ShapeError
from .metric import (
    CO,
    CONTRA,
    MetricMap,
    MetricSpace,
    WeightTable,
    all_weights,
    is_metric_map,
    is_separated,
    is_valid_weight,
    underlying_order,
    value_space,
    value_space_op,
)
from .order import (
    FinitePoset,
    alpha_from_lattice,
    is_complete_lattice,
    is_down_directed,
    is_op_continuous_lattice,
    is_up_directed,
    infimum,
    supremum,
)
from .quantale import FiniteChain, Value, ValueQuantale, same_quantale
from .ultra import (
    K_approach,
    M_functor,
    Ultrafilter,
    image,
    mult,
    ultrafilters,
    xi,
)

DIST = "dist"
CONV = "conv"


@dataclass(frozen=True)
class ApproachSpace:
    quantale: ValueQuantale
    carrier: tuple[str, ...]
    form: str
    table: tuple[tuple[Value, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "carrier", tuple(str(c) for c in self.carrier))
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        n = len(self.carrier)
        if len(set(self.carrier)) != n:
            raise ShapeError("carrier labels must be distinct")
        if self.form not in (DIST, CONV):
            raise ShapeError(f"form must be {DIST!r} or {CONV!r}")
        width = 2 ** n if self.form == DIST else n
        if len(self.table) != n or any(len(r) != width for r in self.table):
            raise ShapeError(f"{self.form} table must be {n}x{width}")
        for r in self.table:
            self.quantale.check(*r)

    @property
    def n(self) -> int:
        return len(self.carrier)

    @cached_property
    def conv(self) -> tuple[tuple[Value, ...], ...]:
        """``a[i][x]``, converted literally when stored as ``dist``."""
        if self.form == CONV:
            return self.table
        q = self.quantale
        return tuple(
            tuple(q.join(self.table[x][mask_of(S)] for S in uf.members()) for x in range(self.n))
            for uf in ultrafilters(self.n)
        )

    @cached_property
    def dist(self) -> tuple[tuple[Value, ...], ...]:
        """``delta[x][mask]``, converted literally when stored as ``conv``."""
        if self.form == DIST:
            return self.table
        q, us = self.quantale, ultrafilters(self.n)
        return tuple(
            tuple(q.meet(self.table[uf.point][x] for uf in us if S in uf) for S in subsets(self.n))
            for x in range(self.n)
        )


def delta(A: ApproachSpace, x: int, S) -> Value:
    return A.dist[x][mask_of(S)]


def delta_values(A: ApproachSpace) -> set:
    return {v for row in A.dist for v in row}


# axioms ----------------------------------------------------------------


def _eps_range(A: ApproachSpace) -> list[Value]:
    q = A.quantale
    if q.is_finite:
        return list(q.values())
    # delta(x, S^(eps)) only changes at distance values
    return sorted(delta_values(A) | {q.zero})


def check_dist_axioms(A: ApproachSpace) -> bool:
    q, n, dl = A.quantale, A.n, A.dist
    subs = subsets(n)
    for x in range(n):
        if dl[x][1 << x] != q.zero or dl[x][0] != q.top:
            return False
    for x in range(n):
        row = dl[x]
        for m1 in range(len(subs)):
            for m2 in range(m1, len(subs)):
                if row[m1 | m2] != min(row[m1], row[m2]):
                    return False
    for eps in _eps_range(A):
        for m in range(len(subs)):
            expanded = mask_of(y for y in range(n) if dl[y][m] <= eps)
            for x in range(n):
                if dl[x][m] > q.add(dl[x][expanded], eps):
                    return False
    return True


def lifted_conv(A: ApproachSpace, big: Ultrafilter, uf: Ultrafilter) -> Value:
    """``Ua(X, x) = sup_{S in X, B in x} inf_{y in S, b in B} a(y, b)``."""
    q, a = A.quantale, A.conv
    return q.join(
        q.meet(a[i][b] for i in S for b in B) for S in big.members() for B in uf.members()
    )


def check_conv_axioms(A: ApproachSpace) -> bool:
    """``a(x., x) = 0`` and ``Ua(X, x) + a(x, y) >= a(m X, y)``."""
    q, a, n = A.quantale, A.conv, A.n
    us = ultrafilters(n)
    if any(a[uf.point][x] != q.zero for x, uf in zip(range(n), us)):
        return False
    for big in us:
        m = mult(n, big).point
        for uf in us:
            ua = lifted_conv(A, big, uf)
            for y in range(n):
                if q.add(ua, a[uf.point][y]) < a[m][y]:
                    return False
    return True


def check_approach_axioms(A: ApproachSpace) -> bool:
    return check_dist_axioms(A) if A.form == DIST else check_conv_axioms(A)


def require_approach(A: ApproachSpace) -> None:
    if not check_approach_axioms(A):
        raise AxiomViolation("table violates the approach axioms")


def dist_to_conv(A: ApproachSpace) -> ApproachSpace:
    """``a(x, y) = sup_{S in x} delta(y, S)``."""
    require_approach(A)
    return ApproachSpace(A.quantale, A.carrier, CONV, A.conv)


def conv_to_dist(A: ApproachSpace) -> ApproachSpace:
    """``delta(y, S) = inf_{x containing S} a(x, y)``."""
    require_approach(A)
    return ApproachSpace(A.quantale, A.carrier, DIST, A.dist)


def same_space(A: ApproachSpace, B: ApproachSpace) -> bool:
    return A.quantale == B.quantale and A.carrier == B.carrier and A.conv == B.conv


# underlying structures -------------------------------------------------


def underlying_metric(A: ApproachSpace) -> MetricSpace:
    """``a0(x, y) = a(x., y)``."""
    return MetricSpace(A.quantale, A.carrier, [list(A.conv[x]) for x in range(A.n)])


class UnderlyingTopology(NamedTuple):
    converges: tuple[tuple[bool, ...], ...]
    order: FinitePoset


def underlying_top(A: ApproachSpace) -> UnderlyingTopology:
    """``x -> y`` iff ``a(x, y) = 0``, with its order ``x <= y`` iff ``x. -> y``."""
    z = A.quantale.zero
    conv = tuple(tuple(v == z for v in row) for row in A.conv)
    return UnderlyingTopology(conv, FinitePoset(A.carrier, conv))


def is_T0(A: ApproachSpace) -> bool:
    return is_separated(underlying_metric(A))


def is_topological(A: ApproachSpace) -> bool:
    q = A.quantale
    return all(v in (q.zero, q.top) for row in A.dist for v in row)


def approach_from_metric(M: MetricSpace) -> ApproachSpace:
    """``a_d(x, y) = sup_{S in x} inf_{z in S} d(z, y)``."""
    q = M.quantale
    table = [
        [q.join(q.meet(M.d[z][y] for z in S) for S in uf.members()) for y in range(M.n)]
        for uf in ultrafilters(M.n)
    ]
    return ApproachSpace(q, M.carrier, CONV, table)


def metric_delta(M: MetricSpace) -> ApproachSpace:
    """``delta(x, S) = inf_{z in S} d(z, x)``."""
    q = M.quantale
    return ApproachSpace(
        q, M.carrier, DIST, [[q.meet(M.d[z][x] for z in S) for S in subsets(M.n)] for x in range(M.n)]
    )


def one_point_app(q: ValueQuantale) -> ApproachSpace:
    return ApproachSpace(q, ["*"], CONV, [[q.zero]])


def value_approach(q: FiniteChain) -> ApproachSpace:
    """The value chain with ``lambda(v, x) = x - xi(v)``."""
    return K_approach(value_space(q), xi(q))


def value_op_approach(q: FiniteChain) -> ApproachSpace:
    return K_approach(value_space_op(q), xi(q))


def is_approach_map(table: Sequence[int], A: ApproachSpace, B: ApproachSpace) -> bool:
    """``a(x, y) >= b(Uf x, f y)`` for all ultrafilters ``x`` and points ``y``."""
    table = tuple(table)
    if len(table) != A.n or any(not 0 <= t < B.n for t in table):
        raise ShapeError("map table does not fit its source/target")
    a, b = A.conv, B.conv
    for uf in ultrafilters(A.n):
        j = image(table, B.n, uf).point
        for y in range(A.n):
            if a[uf.point][y] < b[j][table[y]]:
                return False
    return True


# products --------------------------------------------------------------


def plus_product_app(A: ApproachSpace, B: ApproachSpace) -> ApproachSpace:
    """``c(w, (x, y)) = a(pi1 w, x) + b(pi2 w, y)``; pair ``(i, j)`` has index ``i * B.n + j``."""
    q = same_quantale(A.quantale, B.quantale)
    pairs = list(product(range(A.n), range(B.n)))
    p1 = [i for i, _ in pairs]
    p2 = [j for _, j in pairs]
    a, b = A.conv, B.conv
    rows = []
    for w in ultrafilters(len(pairs)):
        i, j = image(p1, A.n, w).point, image(p2, B.n, w).point
        rows.append([q.add(a[i][x], b[j][y]) for x, y in pairs])
    labels = [f"({A.carrier[x]},{B.carrier[y]})" for x, y in pairs]
    return ApproachSpace(q, labels, CONV, rows)


def power_app(A: ApproachSpace, m: int) -> tuple[ApproachSpace, list[tuple[int, ...]]]:
    """``X^I`` for a discrete ``I`` with ``m`` points: ``c(w, h) = max_i a(pi_i w, h(i))``."""
    q, a = A.quantale, A.conv
    tuples = list(product(range(A.n), repeat=m))
    projs = [[t[i] for t in tuples] for i in range(m)]
    rows = []
    for w in ultrafilters(len(tuples)):
        pts = [image(projs[i], A.n, w).point for i in range(m)]
        rows.append([q.join(a[pts[i]][h[i]] for i in range(m)) for h in tuples])
    labels = ["<" + ",".join(A.carrier[i] for i in h) + ">" for h in tuples]
    return ApproachSpace(q, labels, CONV, rows), tuples


@lru_cache(maxsize=512)
def _m_functor(A: ApproachSpace):
    return M_functor(A)


def uX_approach(A: ApproachSpace) -> ApproachSpace:
    """``UX`` as the approach space ``K(M X)``."""
    metric, m = _m_functor(A)
    return K_approach(metric, m)


# U-cocompleteness and cocompleteness -----------------------------------


def generic_points(A: ApproachSpace) -> Optional[tuple[int, ...]]:
    """``alpha`` with ``a0(alpha(x), y) = a(x, y)``, or ``None`` if some ultrafilter has no such point."""
    a = A.conv
    out = []
    for uf in ultrafilters(A.n):
        row = a[uf.point]
        hit = next((x for x in range(A.n) if a[x] == row), None)
        if hit is None:
            return None
        out.append(hit)
    return tuple(out)


def is_U_cocomplete(A: ApproachSpace) -> bool:
    return generic_points(A) is not None


def alpha_is_left_adjoint(A: ApproachSpace, alpha: Sequence[int]) -> bool:
    """``a0(alpha x, y) = d(x, e y)`` on the metric of ``UX``."""
    d_ux, _ = _m_functor(A)
    a0 = underlying_metric(A)
    return all(a0.d[alpha[i]][y] == d_ux.d[i][y] for i in range(A.n) for y in range(A.n))


def is_cocomplete_app(A: ApproachSpace) -> bool:
    return is_U_cocomplete(A) and is_cocomplete(underlying_metric(A))


def ux_metric(A: ApproachSpace) -> MetricSpace:
    return _m_functor(A)[0]


def approach_yoneda(A: ApproachSpace, x: int) -> WeightTable:
    """``a(-, x)`` as a weight on ``UX``."""
    return WeightTable([A.conv[i][x] for i in range(A.n)], CONTRA)


def require_app_weight(A: ApproachSpace, psi: WeightTable) -> None:
    if psi.variance != CONTRA or not is_valid_weight(ux_metric(A), psi):
        raise InvalidWeight("not a down-set on UX")


def weighted_sup_app(A: ApproachSpace, psi: WeightTable) -> Optional[int]:
    """``x0`` with ``a(x0., y) = sup_x a(x, y) - psi(x)``."""
    require_app_weight(A, psi)
    q, a, n = A.quantale, A.conv, A.n
    want = tuple(q.join(q.minus(a[i][y], psi[i]) for i in range(n)) for y in range(n))
    return next((x for x in range(n) if a[x] == want), None)


def sup_formula_app(A: ApproachSpace, psi: WeightTable) -> int:
    """Order join of ``alpha(x) + psi(x)`` over ``UX``."""
    require_app_weight(A, psi)
    if not is_cocomplete_app(A):
        raise NotCocomplete("closed-form supremum needs a cocomplete approach space")
    alpha = generic_points(A)
    a0 = underlying_metric(A)
    parts = [tensor(a0, alpha[i], psi[i]) for i in range(A.n)]
    return supremum(underlying_order(a0), parts)


def every_app_weight_has_sup(A: ApproachSpace) -> bool:
    return all(weighted_sup_app(A, psi) is not None for psi in all_weights(ux_metric(A), CONTRA))


def approach_yoneda_check(A: ApproachSpace, x: int, psi: WeightTable) -> bool:
    """``[y(x), psi] = psi(x.)``."""
    require_app_weight(A, psi)
    q = A.quantale
    lhs = q.join(q.minus(psi[i], A.conv[i][x]) for i in range(A.n))
    return lhs == psi[x]


def second_yoneda_check(A: ApproachSpace, big: Ultrafilter, psi: WeightTable) -> bool:
    """``[d(-, x), psi] = psi(m X)`` for ``X`` principal at ``x``."""
    require_app_weight(A, psi)
    q, d = A.quantale, ux_metric(A).d
    lhs = q.join(q.minus(psi[i], d[i][big.point]) for i in range(A.n))
    return lhs == psi[mult(A.n, big).point]


# exponentiability and compactness --------------------------------------


def plus_exponentiable_check(A: ApproachSpace) -> bool:
    """``a(m X, y) = inf_{x in UX} Ua(X, x) + a(x, y)``."""
    q, a, n = A.quantale, A.conv, A.n
    us = ultrafilters(n)
    for big in us:
        m = mult(n, big).point
        ua = [lifted_conv(A, big, uf) for uf in us]
        for y in range(n):
            if a[m][y] != q.meet(q.add(ua[i], a[i][y]) for i in range(n)):
                return False
    return True


def compactness_degree(A: ApproachSpace) -> Value:
    q = A.quantale
    return q.join(q.meet(A.conv[i][x] for x in range(A.n)) for i in range(A.n))


# Isbell conjugation ----------------------------------------------------


def isbell_app_minus(A: ApproachSpace, phi: WeightTable) -> WeightTable:
    """``phi-(x) = sup_y a(x, y) - phi(y)``, a down-set on ``UX``."""
    if phi.variance != CO or not is_valid_weight(underlying_metric(A), phi):
        raise InvalidWeight("expected an up-set on the underlying metric")
    q, a = A.quantale, A.conv
    return WeightTable([q.join(q.minus(a[i][y], phi[y]) for y in range(A.n)) for i in range(A.n)], CONTRA)


def isbell_app_plus(A: ApproachSpace, psi: WeightTable) -> WeightTable:
    """``psi+(y) = sup_x a(x, y) - psi(x)``, an up-set on ``X``."""
    require_app_weight(A, psi)
    q, a = A.quantale, A.conv
    return WeightTable([q.join(q.minus(a[i][y], psi[i]) for i in range(A.n)) for y in range(A.n)], CO)


def isbell_app_adjunction_holds(A: ApproachSpace, psi: WeightTable, phi: WeightTable) -> bool:
    q = A.quantale
    p, m = isbell_app_plus(A, psi), isbell_app_minus(A, phi)
    lhs = q.join(q.minus(p[y], phi[y]) for y in range(A.n))
    rhs = q.join(q.minus(m[i], psi[i]) for i in range(A.n))
    return lhs == rhs


# absolute cocompleteness -----------------------------------------------


def _require_T0(A: ApproachSpace) -> None:
    if not is_T0(A):
        raise NotSeparated("this check needs a T0 approach space")


def _topological_abs_cocomplete(A: ApproachSpace, alpha: Sequence[int]) -> bool:
    """Underlying topology: complete lattice with continuous ``alpha`` and finite joins."""
    top = underlying_top(A)
    P = top.order
    if not is_complete_lattice(P):
        return False
    n = A.n
    # continuity of alpha: X -> y in UX (m X <= y) forces alpha(X) -> alpha(y)
    ux_order = _ux_topological_order(A)
    for big in ultrafilters(n):
        m = mult(n, big).point
        for j in range(n):
            if ux_order[m][j] and not top.converges[image(alpha, n, big).point][alpha[j]]:
                return False
    # finite joins are monotone in each argument
    for I in (0, 1, 2):
        for h in product(range(n), repeat=I):
            for k in product(range(n), repeat=I):
                if all(P.le(a, b) for a, b in zip(h, k)) and not P.le(supremum(P, h), supremum(P, k)):
                    return False
    return True


def _ux_topological_order(A: ApproachSpace) -> list[list[bool]]:
    """``x <= y`` on ``UX`` iff the closure of every member of ``x`` is in ``y``."""
    conv = underlying_top(A).converges
    us = ultrafilters(A.n)

    def closure(S):
        return frozenset(y for uf in us if S in uf for y in range(A.n) if conv[uf.point][y])

    return [[all(closure(S) in y for S in x.members()) for y in us] for x in us]


def directed_conditions_hold(A: ApproachSpace) -> bool:
    """``- + u`` preserves down-directed infima and ``x + -`` sends up-directed sets of values
    (natural order) to down-directed infima.  Checked literally on every such set."""
    a0 = underlying_metric(A)
    q = A.quantale
    P = underlying_order(a0)
    vals = q.values()
    tab = [[tensor(a0, x, u) for u in vals] for x in range(A.n)]
    for D in subsets(A.n):
        if not is_down_directed(P, D):
            continue
        m = infimum(P, D)
        for ui in range(len(vals)):
            got = infimum(P, [tab[d][ui] for d in D])
            if m is None or got is None or not P.equivalent(tab[m][ui], got):
                return False
    V = FinitePoset([str(i) for i in range(len(vals))], [[u <= v for v in vals] for u in vals])
    for S in subsets(len(vals)):
        if not is_up_directed(V, S):
            continue
        top_u = max(S)
        for x in range(A.n):
            got = infimum(P, [tab[x][i] for i in S])
            if got is None or not P.equivalent(tab[x][top_u], got):
                return False
    return True


def is_absolutely_cocomplete(A: ApproachSpace) -> bool:
    """Finite evaluation of: U-cocomplete, complete underlying metric, absolutely
    cocomplete underlying topology and the directed-limit side conditions."""
    _require_T0(A)
    if not A.quantale.is_finite:
        raise InvalidStructure("absolute cocompleteness is decided over a finite chain")
    alpha = generic_points(A)
    if alpha is None:
        return False
    if not is_cocomplete(underlying_metric(A)):
        return False
    if not _topological_abs_cocomplete(A, alpha):
        return False
    return directed_conditions_hold(A)


def tensor_map_table(A: ApproachSpace) -> list[int]:
    """``(x, u) -> x + u`` on the carrier of ``X (+) V``."""
    a0 = underlying_metric(A)
    return [tensor(a0, x, u) for x in range(A.n) for u in A.quantale.values()]


def three_maps_hold(A: ApproachSpace, exponents: Sequence[int] = (0, 1, 2)) -> dict:
    """Approach-map status of ``+``, ``alpha`` and ``join`` for a cocomplete ``X``."""
    if not is_cocomplete_app(A):
        raise NotCocomplete("three-map criterion needs a cocomplete space")
    q = A.quantale
    V = value_approach(q)
    plus_ok = is_approach_map(tensor_map_table(A), plus_product_app(A, V), A)
    alpha = generic_points(A)
    alpha_ok = is_approach_map(alpha, uX_approach(A), A)
    P = underlying_top(A).order
    join_ok = True
    for m in exponents:
        X_I, tuples = power_app(A, m)
        if not is_approach_map([supremum(P, h) for h in tuples], X_I, A):
            join_ok = False
    return {"plus": plus_ok, "alpha": alpha_ok, "join": join_ok}


def is_absolutely_cocomplete_by_maps(A: ApproachSpace) -> bool:
    _require_T0(A)
    return is_cocomplete_app(A) and all(three_maps_hold(A).values())


def main_theorem_clauses(A: ApproachSpace) -> dict:
    """Finite evaluation of the four equivalent descriptions of absolute cocompleteness."""
    _require_T0(A)
    coc = is_cocomplete_app(A)
    alpha = generic_points(A)
    top_ok = alpha is not None and _topological_abs_cocomplete(A, alpha)
    i = coc and _sup_is_approach_map(A)
    if coc:
        V = value_approach(A.quantale)
        plus_app = is_approach_map(tensor_map_table(A), plus_product_app(A, V), A)
        plus_cont = _tensor_continuous(A)
    else:
        plus_app = plus_cont = False
    ii = coc and top_ok and plus_app
    iii = coc and top_ok and plus_cont
    iv = is_absolutely_cocomplete(A)
    return {"i": i, "ii": ii, "iii": iii, "iv": iv}


def _sup_is_approach_map(A: ApproachSpace) -> bool:
    """On principal ultrafilters the structure of ``PX`` is its sup-metric, so
    ``Sup: PX -> X`` is an approach map iff it is a metric map there."""
    from .metric import presheaf_space, weight_of

    P = presheaf_space(ux_metric(A))
    sups = [weighted_sup_app(A, weight_of(P, k)) for k in range(P.n)]
    if any(s is None for s in sups):
        return False
    return is_metric_map(MetricMap(P, underlying_metric(A), sups))


def _tensor_continuous(A: ApproachSpace) -> bool:
    """``+ : X_p x V_p -> X_p`` is monotone in both variables (finite continuity)."""
    P = underlying_top(A).order
    vals = A.quantale.values()
    a0 = underlying_metric(A)
    for x in range(A.n):
        for y in range(A.n):
            for u in vals:
                for v in vals:
                    if P.le(x, y) and u >= v and not P.le(tensor(a0, x, u), tensor(a0, y, v)):
                        return False
    return True


# translations ----------------------------------------------------------


def is_lattice_action(L: OrdAction) -> bool:
    """Op-continuous lattice with an action satisfying (1)-(5) that preserves suprema."""
    return (
        L.poset.is_antisymmetric()
        and is_op_continuous_lattice(L.poset)
        and check_action_conditions(L).all()
        and cocomplete_algebra_check(L)
    )


def lattice_action_to_app(L: OrdAction) -> ApproachSpace:
    """``K`` of the metric ``inf{u | x + u <= y}`` with ``alpha`` the meet of joins of members."""
    if not is_lattice_action(L):
        raise InvalidStructure("input is not an op-continuous lattice with a suitable action")
    M = metric_from_action(L)
    alpha = [alpha_from_lattice(L.poset, uf) for uf in ultrafilters(L.poset.n)]
    return K_approach(M, alpha)


def app_to_lattice_action(A: ApproachSpace) -> OrdAction:
    """Underlying order with the tensor action."""
    if not is_absolutely_cocomplete(A):
        raise InvalidStructure("input is not absolutely cocomplete")
    return action_from_metric(underlying_metric(A))


__all__ = [
    "ApproachSpace",
    "CONV",
    "DIST",
    "UnderlyingTopology",
    "alpha_is_left_adjoint",
    "app_to_lattice_action",
    "approach_from_metric",
    "approach_yoneda",
    "approach_yoneda_check",
    "check_approach_axioms",
    "check_conv_axioms",
    "check_dist_axioms",
    "compactness_degree",
    "conv_to_dist",
    "delta",
    "delta_values",
    "directed_conditions_hold",
    "dist_to_conv",
    "every_app_weight_has_sup",
    "generic_points",
    "is_T0",
    "is_U_cocomplete",
    "is_absolutely_cocomplete",
    "is_absolutely_cocomplete_by_maps",
    "is_approach_map",
    "is_cocomplete_app",
    "is_lattice_action",
    "is_topological",
    "isbell_app_adjunction_holds",
    "isbell_app_minus",
    "isbell_app_plus",
    "lattice_action_to_app",
    "lifted_conv",
    "main_theorem_clauses",
    "metric_delta",
    "one_point_app",
    "plus_exponentiable_check",
    "plus_product_app",
    "power_app",
    "require_approach",
    "same_space",
    "second_yoneda_check",
    "sup_formula_app",
    "tensor_map_table",
    "three_maps_hold",
    "underlying_metric",
    "underlying_top",
    "uX_approach",
    "ux_metric",
    "value_approach",
    "value_op_approach",
    "weighted_sup_app",
]
