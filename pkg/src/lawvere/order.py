"""Finite preordered sets: suprema, adjunctions, approximation relations.

Elements are addressed by their index in ``carrier``.  Antisymmetry is not
assumed; "the" supremum is any representative of its equivalence class and
functions here return the least index.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from ._util import subsets
from .errors import (
    AxiomViolation,
    DomainMismatch,
    NotACompleteLattice,
    NotOpContinuous,
    ShapeError,
)


@dataclass(frozen=True)
class FinitePoset:
    carrier: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "carrier", tuple(str(c) for c in self.carrier))
        object.__setattr__(self, "leq", tuple(tuple(bool(b) for b in row) for row in self.leq))
        n = len(self.carrier)
        if len(set(self.carrier)) != n:
            raise ShapeError("carrier labels must be distinct")
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            raise ShapeError(f"relation table must be {n}x{n}")
        r = self.leq
        for i in range(n):
            if not r[i][i]:
                raise AxiomViolation(f"relation is not reflexive at {self.carrier[i]}")
        for i, j, k in product(range(n), repeat=3):
            if r[i][j] and r[j][k] and not r[i][k]:
                raise AxiomViolation(
                    f"relation is not transitive: {self.carrier[i]} <= {self.carrier[j]} <= {self.carrier[k]}"
                )

    @property
    def n(self) -> int:
        return len(self.carrier)

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def equivalent(self, x: int, y: int) -> bool:
        return self.leq[x][y] and self.leq[y][x]

    def index(self, label: str) -> int:
        return self.carrier.index(label)

    def is_antisymmetric(self) -> bool:
        return all(not self.equivalent(i, j) for i in range(self.n) for j in range(i + 1, self.n))

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.carrier, tuple(zip(*self.leq)) if self.n else ())

    @classmethod
    def from_pairs(cls, carrier: Sequence[str], pairs: Iterable[tuple[str, str]]) -> "FinitePoset":
        """Reflexive-transitive closure of the given ``x <= y`` pairs."""
        carrier = tuple(carrier)
        n = len(carrier)
        rel = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            rel[carrier.index(a)][carrier.index(b)] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        return cls(carrier, tuple(map(tuple, rel)))

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls(tuple(str(i) for i in range(n)), tuple(tuple(i <= j for j in range(n)) for i in range(n)))

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        labels = tuple("abcdefghijklmnopqrstuvwxyz"[i] for i in range(n))
        return cls(labels, tuple(tuple(i == j for j in range(n)) for i in range(n)))

    @classmethod
    def diamond(cls) -> "FinitePoset":
        return cls.from_pairs(("bot", "a", "b", "top"), [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")])


def upper_bounds(P: FinitePoset, A: Iterable[int]) -> list[int]:
    A = list(A)
    return [u for u in range(P.n) if all(P.leq[a][u] for a in A)]


def lower_bounds(P: FinitePoset, A: Iterable[int]) -> list[int]:
    A = list(A)
    return [u for u in range(P.n) if all(P.leq[u][a] for a in A)]


def supremum(P: FinitePoset, A: Iterable[int]) -> Optional[int]:
    """Least upper bound of ``A`` (least index of its class), or ``None``."""
    ubs = upper_bounds(P, A)
    for u in ubs:
        if all(P.leq[u][v] for v in ubs):
            return u
    return None


def infimum(P: FinitePoset, A: Iterable[int]) -> Optional[int]:
    lbs = lower_bounds(P, A)
    for u in lbs:
        if all(P.leq[v][u] for v in lbs):
            return u
    return None


def bottom(P: FinitePoset) -> Optional[int]:
    return supremum(P, ())


def top(P: FinitePoset) -> Optional[int]:
    return infimum(P, ())


def is_complete_lattice(P: FinitePoset) -> bool:
    return all(supremum(P, A) is not None for A in subsets(P.n))


def _require_complete(P: FinitePoset) -> None:
    if not is_complete_lattice(P):
        raise NotACompleteLattice("operation needs a complete lattice")


def is_down_set(P: FinitePoset, A: Iterable[int]) -> bool:
    A = set(A)
    return all(y in A for x in A for y in range(P.n) if P.leq[y][x])


def is_up_set(P: FinitePoset, A: Iterable[int]) -> bool:
    A = set(A)
    return all(y in A for x in A for y in range(P.n) if P.leq[x][y])


def is_up_directed(P: FinitePoset, D: Iterable[int]) -> bool:
    D = list(D)
    return bool(D) and all(any(P.leq[a][c] and P.leq[b][c] for c in D) for a in D for b in D)


def is_down_directed(P: FinitePoset, D: Iterable[int]) -> bool:
    D = list(D)
    return bool(D) and all(any(P.leq[c][a] and P.leq[c][b] for c in D) for a in D for b in D)


def directed_down_sets(P: FinitePoset) -> list[frozenset[int]]:
    """Non-empty up-directed down-sets (ideals)."""
    return [D for D in subsets(P.n) if is_down_set(P, D) and is_up_directed(P, D)]


def directed_up_sets(P: FinitePoset) -> list[frozenset[int]]:
    """Non-empty down-directed up-sets (filters)."""
    return [D for D in subsets(P.n) if is_up_set(P, D) and is_down_directed(P, D)]


def way_below(P: FinitePoset, y: int, x: int) -> bool:
    """``y << x``: every ideal whose join lies above ``x`` contains ``y``."""
    _require_complete(P)
    for D in directed_down_sets(P):
        if P.leq[x][supremum(P, D)] and y not in D:
            return False
    return True


def way_above(P: FinitePoset, y: int, x: int) -> bool:
    """``y >- x``: every filter whose meet lies below ``x`` contains ``y``."""
    _require_complete(P)
    for D in directed_up_sets(P):
        if P.leq[infimum(P, D)][x] and y not in D:
            return False
    return True


def is_continuous_lattice(P: FinitePoset) -> bool:
    if not is_complete_lattice(P):
        return False
    for x in range(P.n):
        j = supremum(P, [y for y in range(P.n) if way_below(P, y, x)])
        if not P.equivalent(j, x):
            return False
    return True


def is_op_continuous_lattice(P: FinitePoset) -> bool:
    if not is_complete_lattice(P):
        return False
    for x in range(P.n):
        m = infimum(P, [y for y in range(P.n) if way_above(P, y, x)])
        if not P.equivalent(m, x):
            return False
    return True


def scott_open(P: FinitePoset, A: Iterable[int]) -> bool:
    """Open sets of the topology whose underlying order (``x <= y`` iff the
    principal ultrafilter at ``x`` converges to ``y``) is ``P`` again: down-sets
    that are inaccessible by joins of ideals."""
    A = frozenset(A)
    if not is_down_set(P, A):
        return False
    for D in directed_down_sets(P):
        s = supremum(P, D)
        if s is not None and s in A and not (D & A):
            return False
    return True


def scott_opens(P: FinitePoset) -> list[frozenset[int]]:
    return [A for A in subsets(P.n) if scott_open(P, A)]


def order_of_opens(n: int, opens: Sequence[frozenset[int]]) -> tuple[tuple[bool, ...], ...]:
    """``x <= y`` iff every open containing ``y`` contains ``x``."""
    return tuple(tuple(all(x in U for U in opens if y in U) for y in range(n)) for x in range(n))


@dataclass(frozen=True)
class MonotoneMap:
    source: FinitePoset
    target: FinitePoset
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.source.n or any(not 0 <= t < self.target.n for t in self.table):
            raise ShapeError("map table does not fit its source/target")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def is_monotone(self) -> bool:
        s, t, f = self.source, self.target, self.table
        return all(t.leq[f[x]][f[y]] for x in range(s.n) for y in range(s.n) if s.leq[x][y])


def identity_map(P: FinitePoset) -> MonotoneMap:
    return MonotoneMap(P, P, tuple(range(P.n)))


def adjoint_pair(f: MonotoneMap, g: MonotoneMap) -> bool:
    """``f -| g``: ``x <= g f x`` and ``f g y <= y`` everywhere."""
    if f.source != g.target or f.target != g.source:
        raise DomainMismatch("adjoint_pair needs f: X -> Y and g: Y -> X")
    X, Y = f.source, f.target
    return all(X.leq[x][g(f(x))] for x in range(X.n)) and all(Y.leq[f(g(y))][y] for y in range(Y.n))


def preserves_suprema(f: MonotoneMap) -> bool:
    """Every existing supremum in the source is sent to a supremum."""
    X, Y = f.source, f.target
    for A in subsets(X.n):
        s = supremum(X, A)
        if s is None:
            continue
        t = supremum(Y, [f(a) for a in A])
        if t is None or not Y.equivalent(t, f(s)):
            return False
    return True


def pointwise_equivalent(f: MonotoneMap, g: MonotoneMap) -> bool:
    return all(f.target.equivalent(f(x), g(x)) for x in range(f.source.n))


def alpha_from_lattice(P: FinitePoset, uf, *, check: bool = True) -> int:
    """Meet over the member sets ``A`` of ``uf`` of the join of ``A``.

    ``uf`` is any ultrafilter on ``P``'s carrier exposing ``members()``.
    """
    if check and not is_op_continuous_lattice(P):
        raise NotOpContinuous("alpha_from_lattice needs an op-continuous lattice")
    return infimum(P, [supremum(P, A) for A in uf.members()])
