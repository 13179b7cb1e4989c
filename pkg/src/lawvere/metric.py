"""Finite Lawvere metric spaces over a value quantale.

A metric only has to satisfy ``d(x, x) = 0`` and the triangle law; it need
not be symmetric, separated or finite.  Elements are addressed by index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from ._util import all_maps
from .errors import (
    AxiomViolation,
    DomainMismatch,
    InvalidWeight,
    ShapeError,
    UnsupportedEnumeration,
)
from .order import FinitePoset
from .quantale import ExtendedRationals, Value, ValueQuantale, same_quantale

CONTRA = "contra"
CO = "co"


@dataclass(frozen=True)
class MetricSpace:
    quantale: ValueQuantale
    carrier: tuple[str, ...]
    d: tuple[tuple[Value, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "carrier", tuple(str(c) for c in self.carrier))
        object.__setattr__(self, "d", tuple(tuple(row) for row in self.d))
        n = len(self.carrier)
        if len(set(self.carrier)) != n:
            raise ShapeError("carrier labels must be distinct")
        if len(self.d) != n or any(len(row) != n for row in self.d):
            raise ShapeError(f"distance table must be {n}x{n}")
        for row in self.d:
            self.quantale.check(*row)

    @property
    def n(self) -> int:
        return len(self.carrier)

    def index(self, label: str) -> int:
        return self.carrier.index(label)

    def __repr__(self) -> str:
        rows = ", ".join("[" + " ".join(self.quantale.format(v) for v in row) + "]" for row in self.d)
        return f"MetricSpace({list(self.carrier)}, {rows})"


def check_metric_axioms(M: MetricSpace) -> bool:
    q, d, n = M.quantale, M.d, M.n
    if any(d[x][x] != q.zero for x in range(n)):
        return False
    return all(q.add(d[x][y], d[y][z]) >= d[x][z] for x, y, z in product(range(n), repeat=3))


def require_metric(M: MetricSpace) -> None:
    if not check_metric_axioms(M):
        raise AxiomViolation("distance table violates the metric axioms")


def is_separated(M: MetricSpace) -> bool:
    z = M.quantale.zero
    return all(not (M.d[x][y] == z == M.d[y][x]) for x in range(M.n) for y in range(x + 1, M.n))


def is_symmetric(M: MetricSpace) -> bool:
    return all(M.d[x][y] == M.d[y][x] for x in range(M.n) for y in range(M.n))


def dual(M: MetricSpace) -> MetricSpace:
    return MetricSpace(M.quantale, M.carrier, tuple(zip(*M.d)) if M.n else ())


def restrict(M: MetricSpace, keep: Sequence[int]) -> MetricSpace:
    """The subspace on the given elements (in the given order)."""
    keep = list(keep)
    return MetricSpace(M.quantale, [M.carrier[i] for i in keep], [[M.d[i][j] for j in keep] for i in keep])


def discrete(q: ValueQuantale, carrier: Sequence[str]) -> MetricSpace:
    n = len(carrier)
    return MetricSpace(q, carrier, [[q.zero if i == j else q.top for j in range(n)] for i in range(n)])


def one_point(q: ValueQuantale) -> MetricSpace:
    return MetricSpace(q, ["*"], [[q.zero]])


def value_space(q: ValueQuantale) -> MetricSpace:
    """The value chain itself with ``mu(u, v) = v - u``."""
    vals = q.values()
    return MetricSpace(q, [q.format(v) for v in vals], [[q.minus(v, u) for v in vals] for u in vals])


def value_space_op(q: ValueQuantale) -> MetricSpace:
    return dual(value_space(q))


def underlying_order(M: MetricSpace) -> FinitePoset:
    """``x <= y`` iff ``d(x, y) = 0``."""
    require_metric(M)
    z = M.quantale.zero
    return FinitePoset(M.carrier, [[M.d[x][y] == z for y in range(M.n)] for x in range(M.n)])


def order_to_metric(P: FinitePoset, q: Optional[ValueQuantale] = None) -> MetricSpace:
    q = q or ExtendedRationals()
    return MetricSpace(q, P.carrier, [[q.zero if P.leq[x][y] else q.top for y in range(P.n)] for x in range(P.n)])


def _pair_labels(M: MetricSpace, N: MetricSpace) -> list[str]:
    return [f"({a},{b})" for a in M.carrier for b in N.carrier]


def plus_product(M: MetricSpace, N: MetricSpace) -> MetricSpace:
    """``M (+) N``: distances add.  Element ``(i, j)`` has index ``i * N.n + j``."""
    q = same_quantale(M.quantale, N.quantale)
    pairs = list(product(range(M.n), range(N.n)))
    return MetricSpace(q, _pair_labels(M, N), [[q.add(M.d[x][x2], N.d[y][y2]) for x2, y2 in pairs] for x, y in pairs])


def max_product(M: MetricSpace, N: MetricSpace) -> MetricSpace:
    q = same_quantale(M.quantale, N.quantale)
    pairs = list(product(range(M.n), range(N.n)))
    return MetricSpace(q, _pair_labels(M, N), [[max(M.d[x][x2], N.d[y][y2]) for x2, y2 in pairs] for x, y in pairs])


@dataclass(frozen=True)
class MetricMap:
    source: MetricSpace
    target: MetricSpace
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.source.n or any(not 0 <= t < self.target.n for t in self.table):
            raise ShapeError("map table does not fit its source/target")

    def __call__(self, x: int) -> int:
        return self.table[x]


def identity(M: MetricSpace) -> MetricMap:
    return MetricMap(M, M, tuple(range(M.n)))


def is_metric_map(f: MetricMap) -> bool:
    """``d(x, y) >= d'(f x, f y)`` for all pairs."""
    X, Y, t = f.source, f.target, f.table
    return all(X.d[x][y] >= Y.d[t[x]][t[y]] for x in range(X.n) for y in range(X.n))


def is_isometry(f: MetricMap) -> bool:
    X, Y, t = f.source, f.target, f.table
    return all(X.d[x][y] == Y.d[t[x]][t[y]] for x in range(X.n) for y in range(X.n))


def adjoint_pair_met(f: MetricMap, g: MetricMap) -> bool:
    """``f -| g`` iff ``d'(f x, y) = d(x, g y)`` for all ``x, y``."""
    if f.source != g.target or f.target != g.source:
        raise DomainMismatch("adjoint pair needs f: X -> Y and g: Y -> X")
    X, Y = f.source, f.target
    return all(Y.d[f(x)][y] == X.d[x][g(y)] for x in range(X.n) for y in range(Y.n))


def pointwise_equivalent(f: MetricMap, g: MetricMap) -> bool:
    Y, z = f.target, f.target.quantale.zero
    return all(Y.d[f(x)][g(x)] == z == Y.d[g(x)][f(x)] for x in range(f.source.n))


@dataclass(frozen=True)
class FunctionSpace(MetricSpace):
    """``Y^X`` with the sup-metric; ``maps[i]`` is the table of element ``i``."""

    maps: tuple[tuple[int, ...], ...] = field(default=())


def function_space(X: MetricSpace, Y: MetricSpace) -> FunctionSpace:
    """All metric maps ``X -> Y`` with ``[h, k] = sup_x d(h x, k x)``."""
    q = same_quantale(X.quantale, Y.quantale)
    if not q.is_finite:
        raise UnsupportedEnumeration("function spaces are only materialised over finite chains")
    maps = [h for h in all_maps(X.n, Y.n) if is_metric_map(MetricMap(X, Y, h))]
    labels = ["<" + ",".join(Y.carrier[i] for i in h) + ">" for h in maps]
    dist = [[q.join(Y.d[h[x]][k[x]] for x in range(X.n)) for k in maps] for h in maps]
    return FunctionSpace(q, labels, dist, tuple(maps))


# weights ---------------------------------------------------------------


@dataclass(frozen=True)
class WeightTable:
    """A value per carrier element.

    ``variance='contra'`` is a down-set ``X^op -> [0, inf]``;
    ``variance='co'`` an up-set ``X -> [0, inf]``.
    """

    values: tuple[Value, ...]
    variance: str = CONTRA

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.variance not in (CONTRA, CO):
            raise ValueError(f"variance must be {CONTRA!r} or {CO!r}")

    def __getitem__(self, x: int) -> Value:
        return self.values[x]

    def __len__(self) -> int:
        return len(self.values)


def is_valid_weight(M: MetricSpace, w: WeightTable) -> bool:
    q, d, n = M.quantale, M.d, M.n
    if len(w) != n or not all(q.contains(v) for v in w.values):
        return False
    if w.variance == CONTRA:
        return all(w[x] <= q.add(d[x][y], w[y]) for x in range(n) for y in range(n))
    return all(w[y] <= q.add(d[x][y], w[x]) for x in range(n) for y in range(n))


def require_weight(M: MetricSpace, w: WeightTable, variance: Optional[str] = None) -> None:
    if variance is not None and w.variance != variance:
        raise InvalidWeight(f"expected a {variance} weight, got {w.variance}")
    if not is_valid_weight(M, w):
        raise InvalidWeight("weight is not a metric map of the flagged variance")


def weight_distance(q: ValueQuantale, w1: WeightTable, w2: WeightTable) -> Value:
    """``[w1, w2] = sup_x w2(x) - w1(x)``, the distance in the weight space."""
    return q.join(q.minus(b, a) for a, b in zip(w1.values, w2.values))


def yoneda(M: MetricSpace, x: int) -> WeightTable:
    """``d(-, x)``."""
    return WeightTable([M.d[y][x] for y in range(M.n)], CONTRA)


def coyoneda(M: MetricSpace, x: int) -> WeightTable:
    """``d(x, -)``, the contravariant Yoneda embedding."""
    return WeightTable(M.d[x], CO)


def yoneda_lemma_check(M: MetricSpace, x: int, psi: WeightTable) -> bool:
    """``[y(x), psi] = psi(x)``."""
    require_weight(M, psi, CONTRA)
    return weight_distance(M.quantale, yoneda(M, x), psi) == psi[x]


def presheaf_space(M: MetricSpace) -> FunctionSpace:
    """All contravariant weights, i.e. ``[0, inf]^(X^op)`` over a finite chain."""
    return function_space(dual(M), value_space(M.quantale))


def copresheaf_space(M: MetricSpace) -> FunctionSpace:
    """All covariant weights ``[0, inf]^X``."""
    return function_space(M, value_space(M.quantale))


def weight_of(space: FunctionSpace, i: int, variance: str = CONTRA) -> WeightTable:
    vals = space.quantale.values()
    return WeightTable([vals[j] for j in space.maps[i]], variance)


def index_of_weight(space: FunctionSpace, w: WeightTable) -> int:
    q = space.quantale
    return space.maps.index(tuple(q.index(v) for v in w.values))


def yoneda_embedding(M: MetricSpace) -> MetricMap:
    P = presheaf_space(M)
    return MetricMap(M, P, [index_of_weight(P, yoneda(M, x)) for x in range(M.n)])


def all_weights(M: MetricSpace, variance: str = CONTRA) -> list[WeightTable]:
    """Every valid weight of the given variance (finite chains only)."""
    q = M.quantale
    if not q.is_finite:
        raise UnsupportedEnumeration("weights are only enumerable over finite chains")
    out = []
    for vals in product(q.values(), repeat=M.n):
        w = WeightTable(vals, variance)
        if is_valid_weight(M, w):
            out.append(w)
    return out


def pointwise_tensor(M: MetricSpace, w: Iterable[Value], u: Value) -> tuple[Value, ...]:
    q = M.quantale
    return tuple(q.add(v, u) for v in w)
