"""Actions of a finite value chain on ordered sets.

An action assigns to each element ``x`` and chain value ``u`` an element
``x + u``.  The five conditions checked here are

1. ``x + 0 ~ x``;
2. ``(x + u) + v ~ x + (u + v)``;
3. monotone in ``x`` and antitone in ``u``;
4. ``x + top`` is a bottom element;
5. ``x + inf_i u_i ~ join_i (x + u_i)`` for every set of values.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Optional

from ._util import subsets
from .colimit import is_tensored, tensor
from .errors import AxiomViolation, NotSeparated, NotTensored, ShapeError, UnsupportedEnumeration
from .metric import MetricMap, MetricSpace, is_separated, underlying_order
from .order import (
    FinitePoset,
    MonotoneMap,
    bottom,
    is_complete_lattice,
    preserves_suprema,
    supremum,
)
from .quantale import FiniteChain, Value, ValueQuantale


@dataclass(frozen=True)
class OrdAction:
    poset: FinitePoset
    quantale: ValueQuantale
    act: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.quantale.is_finite:
            raise UnsupportedEnumeration("actions are stored as tables over a finite chain")
        object.__setattr__(self, "act", tuple(tuple(row) for row in self.act))
        n, k = self.poset.n, len(self.quantale.values())
        if len(self.act) != n or any(len(row) != k for row in self.act):
            raise ShapeError(f"action table must be {n}x{k}")
        if any(not 0 <= e < n for row in self.act for e in row):
            raise ShapeError("action table refers to unknown elements")

    def __call__(self, x: int, u: Value) -> int:
        return self.act[x][self.quantale.index(u)]

    @property
    def carrier(self) -> tuple[str, ...]:
        return self.poset.carrier


class ActionConditions(NamedTuple):
    unit: bool
    associative: bool
    monotone: bool
    top_is_bottom: bool
    meets_to_joins: bool

    def all(self) -> bool:
        return all(self)


def check_action_conditions(A: OrdAction) -> ActionConditions:
    P, q = A.poset, A.quantale
    vals = q.values()
    xs = range(P.n)
    c1 = all(P.equivalent(A(x, q.zero), x) for x in xs)
    c2 = all(P.equivalent(A(A(x, u), v), A(x, q.add(u, v))) for x in xs for u in vals for v in vals)
    c3 = all(P.le(A(x, u), A(y, u)) for x in xs for y in xs if P.le(x, y) for u in vals) and all(
        P.le(A(x, v), A(x, u)) for x in xs for u in vals for v in vals if u <= v
    )
    b = bottom(P)
    c4 = b is not None and all(P.equivalent(A(x, q.top), b) for x in xs)
    c5 = True
    for S in subsets(len(vals)):
        inf = q.meet(vals[i] for i in S)
        for x in xs:
            j = supremum(P, [A(x, vals[i]) for i in S])
            if j is None or not P.equivalent(A(x, inf), j):
                c5 = False
                break
        if not c5:
            break
    return ActionConditions(c1, c2, c3, c4, c5)


def metric_from_action(A: OrdAction) -> MetricSpace:
    """``d(x, y)`` is the least ``u`` with ``x + u <= y`` (top if none)."""
    c = check_action_conditions(A)
    if not (c.unit and c.associative and c.monotone):
        raise AxiomViolation("metric_from_action needs conditions (1)-(3)")
    P, q = A.poset, A.quantale
    d = [[q.meet(u for u in q.values() if P.le(A(x, u), y)) for y in range(P.n)] for x in range(P.n)]
    return MetricSpace(q, P.carrier, d)


def action_from_metric(M: MetricSpace) -> OrdAction:
    """``x + u`` is the tensor of ``x`` by ``u``."""
    if not is_separated(M):
        raise NotSeparated("action_from_metric needs a separated space")
    if not is_tensored(M):
        raise NotTensored("action_from_metric needs a tensored space")
    q = M.quantale
    act = [[tensor(M, x, u) for u in q.values()] for x in range(M.n)]
    return OrdAction(underlying_order(M), q, act)


def actions_equivalent(A: OrdAction, B: OrdAction) -> bool:
    if A.poset != B.poset or A.quantale != B.quantale:
        return False
    P = A.poset
    return all(P.equivalent(a, b) for ra, rb in zip(A.act, B.act) for a, b in zip(ra, rb))


def map_is_metric_via_order(f: MetricMap) -> bool:
    """Monotone and ``f(x) + u <= f(x + u)`` for all ``x, u``."""
    X, Y = f.source, f.target
    if not (is_tensored(X) and is_tensored(Y)):
        raise NotTensored("both spaces must be tensored")
    P, Q = underlying_order(X), underlying_order(Y)
    if not MonotoneMap(P, Q, f.table).is_monotone():
        return False
    return all(
        Q.le(tensor(Y, f(x), u), f(tensor(X, x, u))) for x in range(X.n) for u in X.quantale.values()
    )


def cocomplete_algebra_check(A: OrdAction) -> bool:
    """Complete lattice on which every ``- + u`` preserves all suprema."""
    P = A.poset
    if not is_complete_lattice(P):
        return False
    if not check_action_conditions(A).all():
        raise AxiomViolation("cocomplete_algebra_check needs conditions (1)-(5)")
    return all(preserves_suprema(MonotoneMap(P, P, [A(x, u) for x in range(P.n)])) for u in A.quantale.values())


def infimum_is_attained(A: OrdAction, x: int, y: int) -> Optional[Value]:
    """The witness ``u`` realising ``d(x, y)``, or ``None`` when ``x + d(x, y) </= y``."""
    d = metric_from_action(A).d[x][y]
    return d if A.poset.le(A(x, d), y) else None


def actions_from_shift(P: FinitePoset, q: FiniteChain) -> Iterator[OrdAction]:
    """Every action on the separated poset ``P`` satisfying (1)-(5).

    Such an action is fixed by ``t = - + step``: ``x + i*step = t^i(x)``, with
    ``t`` monotone, deflationary and ``t^levels`` constantly the bottom.
    """
    if not P.is_antisymmetric():
        raise NotSeparated("shift enumeration needs an antisymmetric order")
    b = bottom(P)
    if b is None:
        return
    n, k = P.n, q.levels
    for t in product(range(n), repeat=n):
        if any(not P.le(t[x], x) for x in range(n)):
            continue
        if any(P.le(x, y) and not P.le(t[x], t[y]) for x in range(n) for y in range(n)):
            continue
        rows = []
        for x in range(n):
            row, cur = [x], x
            for _ in range(k):
                cur = t[cur]
                row.append(cur)
            rows.append(row)
        if any(row[k] != b for row in rows):
            continue
        A = OrdAction(P, q, rows)
        if check_action_conditions(A).all():
            yield A


def actions_brute_force(P: FinitePoset, q: FiniteChain) -> Iterator[OrdAction]:
    """Every table satisfying (1)-(5); exponential, used as an oracle."""
    n, k = P.n, len(q.values())
    for flat in product(range(n), repeat=n * k):
        A = OrdAction(P, q, [flat[i * k:(i + 1) * k] for i in range(n)])
        if check_action_conditions(A).all():
            yield A


def value_action(q: FiniteChain) -> OrdAction:
    """The chain acting on itself by truncated addition, ordered by ``>=``."""
    vals = q.values()
    P = FinitePoset([q.format(v) for v in vals], [[u >= v for v in vals] for u in vals])
    return OrdAction(P, q, [[q.index(q.add(u, v)) for v in vals] for u in vals])


def trivial_action(P: FinitePoset, q: FiniteChain) -> OrdAction:
    """``x + 0 = x`` and ``x + u = bottom`` for ``u > 0``."""
    b = bottom(P)
    if b is None:
        raise AxiomViolation("trivial action needs a bottom element")
    return OrdAction(P, q, [[x] + [b] * q.levels for x in range(P.n)])


__all__ = [
    "ActionConditions",
    "OrdAction",
    "action_from_metric",
    "actions_brute_force",
    "actions_equivalent",
    "actions_from_shift",
    "check_action_conditions",
    "cocomplete_algebra_check",
    "infimum_is_attained",
    "map_is_metric_via_order",
    "metric_from_action",
    "trivial_action",
    "value_action",
]
