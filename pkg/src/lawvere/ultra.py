"""Ultrafilters on finite sets and the ultrafilter monad.

Every ultrafilter on a finite set is principal, so an :class:`Ultrafilter` is
stored by its point.  Formulas quantifying over the members of an ultrafilter
are nevertheless evaluated by enumerating the member sets, so that the finite
collapses (``Ud(x., y.) = d(x, y)`` and friends) are checked rather than
assumed.  ``UX`` is indexed like ``X``: ultrafilter ``i`` is principal at ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from ._util import subsets
from .colimit import is_tensored, tensor
from .errors import DomainMismatch, InvalidStructure, NotTensored
from .metric import MetricMap, MetricSpace, is_metric_map
from .order import FinitePoset, MonotoneMap
from .quantale import FiniteChain, Value


@dataclass(frozen=True)
class Ultrafilter:
    size: int
    point: int

    def __post_init__(self):
        if not 0 <= self.point < self.size:
            raise DomainMismatch(f"point {self.point} outside a {self.size}-element set")

    def __contains__(self, A: Iterable[int]) -> bool:
        return self.point in frozenset(A)

    def members(self) -> tuple[frozenset[int], ...]:
        return _members(self.size, self.point)


@lru_cache(maxsize=None)
def _members(size: int, point: int) -> tuple[frozenset[int], ...]:
    return tuple(A for A in subsets(size) if point in A)


def is_ultrafilter(size: int, family: Iterable[Iterable[int]]) -> bool:
    """Literal ultrafilter axioms for a family of subsets of ``range(size)``."""
    fam = {frozenset(A) for A in family}
    full = frozenset(range(size))
    if frozenset() in fam or full not in fam:
        return False
    for A in subsets(size):
        if (A in fam) == ((full - A) in fam):
            return False
    for A in fam:
        for B in subsets(size):
            if A <= B and B not in fam:
                return False
        for B in fam:
            if A & B not in fam:
                return False
    return True


def from_family(size: int, family: Iterable[Iterable[int]]) -> Ultrafilter:
    """The ultrafilter whose member sets are exactly ``family``."""
    fam = [frozenset(A) for A in family]
    if not is_ultrafilter(size, fam):
        raise InvalidStructure("family is not an ultrafilter")
    core = frozenset(range(size)).intersection(*fam)
    (point,) = core
    return Ultrafilter(size, point)


def ultrafilters(n: int) -> list[Ultrafilter]:
    return [Ultrafilter(n, i) for i in range(n)]


def ultrafilters_by_scan(n: int) -> list[frozenset[frozenset[int]]]:
    """All ultrafilters found by testing every family of subsets (tiny ``n`` only)."""
    subs = subsets(n)
    out = []
    for bits in product((False, True), repeat=len(subs)):
        fam = [A for A, b in zip(subs, bits) if b]
        if is_ultrafilter(n, fam):
            out.append(frozenset(fam))
    return out


def unit(n: int, x: int) -> Ultrafilter:
    return Ultrafilter(n, x)


def image(table: Sequence[int], target_size: int, uf: Ultrafilter) -> Ultrafilter:
    """``Uf(x) = {B | f^-1(B) in x}``."""
    fam = [B for B in subsets(target_size) if frozenset(i for i, t in enumerate(table) if t in B) in uf]
    return from_family(target_size, fam)


def sharp(n: int, A: frozenset[int]) -> frozenset[int]:
    """``A# = {x in UX | A in x}`` as a set of ultrafilter indices."""
    return frozenset(i for i, uf in enumerate(ultrafilters(n)) if A in uf)


def mult(n: int, big: Ultrafilter) -> Ultrafilter:
    """``m(X) = {A | A# in X}`` for ``X`` an ultrafilter on ``UX``."""
    if big.size != n:
        raise DomainMismatch("mult expects an ultrafilter on UX")
    return from_family(n, [A for A in subsets(n) if sharp(n, A) in big])


def mult_table(n: int) -> tuple[int, ...]:
    return tuple(mult(n, Ultrafilter(n, j)).point for j in range(n))


def monad_laws_hold(n: int) -> bool:
    us = ultrafilters(n)
    e_table = [unit(n, x).point for x in range(n)]
    m_table = mult_table(n)
    for uf in us:
        if mult(n, unit(n, uf.point)) != uf:
            return False
        if mult(n, image(e_table, n, uf)) != uf:
            return False
    # m . m_U = m . Um on UUUX
    for big3 in us:
        left = mult(n, mult(n, big3))
        right = mult(n, image(m_table, n, big3))
        if left != right:
            return False
    return True


# lifted structures -----------------------------------------------------


def _labels(carrier: Sequence[str]) -> list[str]:
    return [f"^{c}" for c in carrier]


def lift_order(P: FinitePoset) -> FinitePoset:
    """``x <= y`` on ``UP`` iff each member pair has a related pair of points."""
    us = ultrafilters(P.n)
    rel = [
        [
            all(any(P.le(a, b) for a in A for b in B) for A in x.members() for B in y.members())
            for y in us
        ]
        for x in us
    ]
    return FinitePoset(_labels(P.carrier), rel)


def lifted_distance(M: MetricSpace, x: Ultrafilter, y: Ultrafilter) -> Value:
    q = M.quantale
    return q.join(
        q.meet(M.d[a][b] for a in A for b in B) for A in x.members() for B in y.members()
    )


def lift_metric(M: MetricSpace) -> MetricSpace:
    """``Ud(x, y) = sup_{A in x, B in y} inf_{a in A, b in B} d(a, b)``."""
    us = ultrafilters(M.n)
    return MetricSpace(M.quantale, _labels(M.carrier), [[lifted_distance(M, x, y) for y in us] for x in us])


def em_algebra_check(n: int, alpha: Sequence[int]) -> bool:
    """``alpha . e = id`` and ``alpha . U alpha = alpha . m``."""
    alpha = tuple(alpha)
    if len(alpha) != n:
        raise DomainMismatch("alpha must have one entry per ultrafilter")
    if any(alpha[unit(n, x).point] != x for x in range(n)):
        return False
    for big in ultrafilters(n):
        if alpha[image(alpha, n, big).point] != alpha[mult(n, big).point]:
            return False
    return True


def is_metric_compact_hausdorff(M: MetricSpace, alpha: Sequence[int]) -> bool:
    if not em_algebra_check(M.n, alpha):
        return False
    return is_metric_map(MetricMap(lift_metric(M), M, tuple(alpha)))


def is_ordered_compact_hausdorff(P: FinitePoset, alpha: Sequence[int]) -> bool:
    if not em_algebra_check(P.n, alpha):
        return False
    return MonotoneMap(lift_order(P), P, tuple(alpha)).is_monotone()


def xi(q: FiniteChain) -> tuple[int, ...]:
    """Convergence on the value chain: ``v -> sup_{A in v} inf A``."""
    vals = q.values()
    out = []
    for uf in ultrafilters(len(vals)):
        v = max(min(vals[a] for a in A) for A in uf.members())
        out.append(q.index(v))
    return tuple(out)


def lifted_tensor(M: MetricSpace, uf: Ultrafilter, u: Value) -> Ultrafilter:
    """``x + u``: the image of ``x`` under ``- + u``."""
    if not is_tensored(M):
        raise NotTensored("lifted_tensor needs a tensored space")
    t = [tensor(M, x, u) for x in range(M.n)]
    return image(t, M.n, uf)


# the functors K and M --------------------------------------------------


def K_approach(M: MetricSpace, alpha: Sequence[int]):
    """Approach space with ``a(x, y) = d(alpha(x), y)``."""
    from .approach import ApproachSpace, CONV

    if not is_metric_compact_hausdorff(M, alpha):
        raise InvalidStructure("K_approach needs a metric compact Hausdorff structure")
    return ApproachSpace(M.quantale, M.carrier, CONV, [[M.d[alpha[i]][x] for x in range(M.n)] for i in range(M.n)])


class TopologicalConvergence(NamedTuple):
    opens: tuple[frozenset[int], ...]
    converges: tuple[tuple[bool, ...], ...]


def K_top(P: FinitePoset, alpha: Sequence[int]) -> TopologicalConvergence:
    """Topology of the open down-sets; ``x -> y`` iff every open around ``y`` is in ``x``."""
    from .order import is_down_set

    if not is_ordered_compact_hausdorff(P, alpha):
        raise InvalidStructure("K_top needs an ordered compact Hausdorff structure")
    opens = tuple(A for A in subsets(P.n) if is_down_set(P, A))
    conv = tuple(
        tuple(all(U in uf for U in opens if y in U) for y in range(P.n)) for uf in ultrafilters(P.n)
    )
    return TopologicalConvergence(opens, conv)


def expansion(A, S: Iterable[int], eps: Value) -> frozenset[int]:
    """``S^(eps) = {x | delta(x, S) <= eps}``."""
    from .approach import delta

    S = frozenset(S)
    return frozenset(x for x in range(A.n) if delta(A, x, S) <= eps)


def _eps_candidates(A) -> list[Value]:
    from .approach import delta_values

    q = A.quantale
    if q.is_finite:
        return list(q.values())
    return sorted(set(delta_values(A)) | {q.zero, q.top})


def M_functor(A) -> tuple[MetricSpace, tuple[int, ...]]:
    """Metric on ``UX``, ``d(x, y) = inf{eps | A^(eps) in y for all A in x}``, with ``m`` as convergence."""
    from .approach import require_approach

    require_approach(A)
    q = A.quantale
    us = ultrafilters(A.n)
    cands = _eps_candidates(A)
    exp = {(S, e): expansion(A, S, e) for S in subsets(A.n) for e in cands}
    d = [
        [q.meet(e for e in cands if all(exp[(S, e)] in y for S in x.members())) for y in us]
        for x in us
    ]
    return MetricSpace(q, _labels(A.carrier), d), mult_table(A.n)


def map_check_compact(
    table: Sequence[int],
    source: tuple[MetricSpace, Sequence[int]],
    target: tuple[MetricSpace, Sequence[int]],
    method: str = "lemma",
) -> bool:
    """Whether ``f`` is a morphism of metric compact Hausdorff spaces.

    ``lemma``: ``f`` is a metric map and ``beta(Uf x) <= f(alpha x)``.
    ``approach``: ``f`` is an approach map between the ``K`` images.
    """
    (X, alpha), (Y, beta) = source, target
    for M, al in ((X, alpha), (Y, beta)):
        if not is_metric_compact_hausdorff(M, al):
            raise InvalidStructure("map_check_compact needs valid structures")
    table = tuple(table)
    if method == "lemma":
        if not is_metric_map(MetricMap(X, Y, table)):
            return False
        z = Y.quantale.zero
        return all(Y.d[beta[image(table, Y.n, uf).point]][table[alpha[uf.point]]] == z for uf in ultrafilters(X.n))
    if method == "approach":
        from .approach import is_approach_map

        return is_approach_map(table, K_approach(X, alpha), K_approach(Y, beta))
    raise ValueError(f"unknown method {method!r}")


def discrete_alpha(n: int) -> tuple[int, ...]:
    """The only compact Hausdorff structure on a finite set: ``x. -> x``."""
    return tuple(range(n))


def em_algebras(n: int) -> list[tuple[int, ...]]:
    """Every ``alpha: UX -> X`` passing the algebra laws (exhaustive)."""
    return [a for a in product(range(n), repeat=n) if em_algebra_check(n, a)]


__all__ = [
    "K_approach",
    "K_top",
    "M_functor",
    "TopologicalConvergence",
    "Ultrafilter",
    "discrete_alpha",
    "em_algebra_check",
    "em_algebras",
    "expansion",
    "from_family",
    "image",
    "is_metric_compact_hausdorff",
    "is_ordered_compact_hausdorff",
    "is_ultrafilter",
    "lift_metric",
    "lift_order",
    "lifted_distance",
    "lifted_tensor",
    "map_check_compact",
    "monad_laws_hold",
    "mult",
    "mult_table",
    "sharp",
    "ultrafilters",
    "ultrafilters_by_scan",
    "unit",
    "xi",
]
