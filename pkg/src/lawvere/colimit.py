"""Weighted suprema and infima, tensors, cotensors and Isbell conjugation.

Every existence question is settled by scanning the carrier against the
defining equation; when several elements qualify the least index is returned.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import FormulaInapplicable, NotCocomplete, UnsupportedEnumeration
from .metric import (
    CO,
    CONTRA,
    MetricMap,
    MetricSpace,
    WeightTable,
    all_weights,
    require_weight,
    underlying_order,
)
from .order import is_complete_lattice, preserves_suprema, MonotoneMap, supremum
from .quantale import Value


def _witness(M: MetricSpace, target: Sequence[Value], *, column: bool = False) -> Optional[int]:
    """Least ``x0`` whose row (or column) of ``d`` equals ``target``."""
    t = tuple(target)
    for x0 in range(M.n):
        if column:
            if all(M.d[y][x0] == t[y] for y in range(M.n)):
                return x0
        elif M.d[x0] == t:
            return x0
    return None


def sup_profile(M: MetricSpace, psi: WeightTable) -> tuple[Value, ...]:
    """The row a supremum of ``psi`` must have: ``x -> sup_y d(y, x) - psi(y)``."""
    q = M.quantale
    return tuple(q.join(q.minus(M.d[y][x], psi[y]) for y in range(M.n)) for x in range(M.n))


def weighted_sup(M: MetricSpace, psi: WeightTable) -> Optional[int]:
    require_weight(M, psi, CONTRA)
    return _witness(M, sup_profile(M, psi))


def inf_profile(M: MetricSpace, phi: WeightTable) -> tuple[Value, ...]:
    q = M.quantale
    return tuple(q.join(q.minus(M.d[x][y], phi[y]) for y in range(M.n)) for x in range(M.n))


def weighted_inf(M: MetricSpace, phi: WeightTable) -> Optional[int]:
    """``x0`` with ``d(x, x0) = sup_y d(x, y) - phi(y)``."""
    require_weight(M, phi, CO)
    return _witness(M, inf_profile(M, phi), column=True)


def tensor(M: MetricSpace, x: int, u: Value) -> Optional[int]:
    """``x + u``: an element with ``d(x + u, y) = d(x, y) - u``."""
    q = M.quantale
    return _witness(M, [q.minus(v, u) for v in M.d[x]])


def cotensor(M: MetricSpace, x: int, u: Value) -> Optional[int]:
    """``x - u``: an element with ``d(y, x - u) = d(y, x) - u``."""
    q = M.quantale
    return _witness(M, [q.minus(M.d[y][x], u) for y in range(M.n)], column=True)


def _chain_values(M: MetricSpace):
    if not M.quantale.is_finite:
        raise UnsupportedEnumeration("tensoredness quantifies over all values; use a finite chain")
    return M.quantale.values()


def is_tensored(M: MetricSpace) -> bool:
    vals = _chain_values(M)
    return all(tensor(M, x, u) is not None for x in range(M.n) for u in vals)


def is_cotensored(M: MetricSpace) -> bool:
    vals = _chain_values(M)
    return all(cotensor(M, x, u) is not None for x in range(M.n) for u in vals)


def is_cocomplete(M: MetricSpace) -> bool:
    """Complete underlying order, tensored and cotensored."""
    return is_complete_lattice(underlying_order(M)) and is_tensored(M) and is_cotensored(M)


def every_weight_has_sup(M: MetricSpace) -> bool:
    """Brute force: scan every contravariant weight for a supremum."""
    return all(weighted_sup(M, psi) is not None for psi in all_weights(M, CONTRA))


def every_weight_has_inf(M: MetricSpace) -> bool:
    return all(weighted_inf(M, phi) is not None for phi in all_weights(M, CO))


def sup_by_formula(M: MetricSpace, psi: WeightTable) -> int:
    """Order join of the tensors ``y + psi(y)``.

    Read in the natural order of ``[0, inf]`` this is an infimum, which is how
    the closed form is usually displayed.
    """
    require_weight(M, psi, CONTRA)
    if not is_cocomplete(M):
        raise FormulaInapplicable("closed-form supremum needs a cocomplete space")
    ts = [tensor(M, y, psi[y]) for y in range(M.n)]
    return supremum(underlying_order(M), ts)


def equivalent(M: MetricSpace, x: Optional[int], y: Optional[int]) -> bool:
    if x is None or y is None:
        return x is None and y is None
    z = M.quantale.zero
    return M.d[x][y] == z == M.d[y][x]


# Isbell conjugation ----------------------------------------------------


def isbell_plus(M: MetricSpace, psi: WeightTable) -> WeightTable:
    """``psi+ (x) = sup_y d(y, x) - psi(y)``, a covariant weight."""
    require_weight(M, psi, CONTRA)
    return WeightTable(sup_profile(M, psi), CO)


def isbell_minus(M: MetricSpace, phi: WeightTable) -> WeightTable:
    """``phi- (x) = sup_y d(x, y) - phi(y)``, a contravariant weight."""
    require_weight(M, phi, CO)
    return WeightTable(inf_profile(M, phi), CONTRA)


def isbell_adjunction_holds(M: MetricSpace, psi: WeightTable, phi: WeightTable) -> bool:
    """``sup_x psi+(x) - phi(x) = sup_x phi-(x) - psi(x)``."""
    q = M.quantale
    p, m = isbell_plus(M, psi), isbell_minus(M, phi)
    lhs = q.join(q.minus(p[x], phi[x]) for x in range(M.n))
    rhs = q.join(q.minus(m[x], psi[x]) for x in range(M.n))
    return lhs == rhs


def isbell_unit_holds(M: MetricSpace, psi: WeightTable) -> bool:
    back = isbell_minus(M, isbell_plus(M, psi))
    return all(b <= v for b, v in zip(back.values, psi.values))


def isbell_counit_holds(M: MetricSpace, phi: WeightTable) -> bool:
    back = isbell_plus(M, isbell_minus(M, phi))
    return all(b <= v for b, v in zip(back.values, phi.values))


def isbell_triple_holds(M: MetricSpace, psi: WeightTable) -> bool:
    p = isbell_plus(M, psi)
    return isbell_plus(M, isbell_minus(M, p)) == p


# special weights -------------------------------------------------------


def down_set_of_subset(M: MetricSpace, A: Iterable[int]) -> WeightTable:
    """``psi_A(x) = inf_{a in A} d(x, a)``."""
    A = list(A)
    q = M.quantale
    return WeightTable([q.meet(M.d[x][a] for a in A) for x in range(M.n)], CONTRA)


def formal_ball(M: MetricSpace, x: int, u: Value) -> WeightTable:
    """``d(-, x) + u``."""
    q = M.quantale
    return WeightTable([q.add(M.d[y][x], u) for y in range(M.n)], CONTRA)


def fam_weight(M: MetricSpace, family: Sequence[int]) -> WeightTable:
    """``x -> inf_i d(x, family[i])``."""
    return down_set_of_subset(M, family)


# preservation ----------------------------------------------------------


def _preserves_tensors(f: MetricMap) -> bool:
    X, Y = f.source, f.target
    for x in range(X.n):
        for u in X.quantale.values():
            t = tensor(X, x, u)
            s = tensor(Y, f(x), u)
            if t is None:
                continue
            if s is None or not equivalent(Y, f(t), s):
                return False
    return True


def _preserves_sups_raw(f: MetricMap) -> bool:
    X, Y, q = f.source, f.target, f.source.quantale
    for psi in all_weights(X, CONTRA):
        x0 = weighted_sup(X, psi)
        if x0 is None:
            continue
        for y in range(Y.n):
            want = q.join(q.minus(Y.d[f(x)][y], psi[x]) for x in range(X.n))
            if Y.d[f(x0)][y] != want:
                return False
    return True


def preserves_weighted_sups(f: MetricMap, method: str = "criterion") -> bool:
    """Whether ``f`` sends weighted suprema to weighted suprema.

    ``criterion`` tests tensors plus order suprema; ``raw`` checks the defining
    equation for every enumerable weight.
    """
    if not is_cocomplete(f.source):
        raise NotCocomplete("source space must be cocomplete")
    if method == "raw":
        return _preserves_sups_raw(f)
    if method != "criterion":
        raise ValueError(f"unknown method {method!r}")
    P, Q = underlying_order(f.source), underlying_order(f.target)
    return _preserves_tensors(f) and preserves_suprema(MonotoneMap(P, Q, f.table))


__all__ = [
    "cotensor",
    "down_set_of_subset",
    "equivalent",
    "every_weight_has_inf",
    "every_weight_has_sup",
    "fam_weight",
    "formal_ball",
    "inf_profile",
    "isbell_adjunction_holds",
    "isbell_counit_holds",
    "isbell_minus",
    "isbell_plus",
    "isbell_triple_holds",
    "isbell_unit_holds",
    "is_cocomplete",
    "is_cotensored",
    "is_tensored",
    "preserves_weighted_sups",
    "sup_by_formula",
    "sup_profile",
    "tensor",
    "weighted_inf",
    "weighted_sup",
]
