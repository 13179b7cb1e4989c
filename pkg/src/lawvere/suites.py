"""Property suites run by ``lawvere verify``.

Each suite checks one invariant over an exhaustive or seeded corpus and
reports the first failure, shrunk by deleting carrier elements while the
failure persists.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Optional

from . import action as act
from . import approach as app
from . import colimit as col
from . import corpus
from . import metric as met
from . import order as ordr
from . import ultra
from .errors import UnsupportedEnumeration
from .quantale import FiniteChain, ValueQuantale, residuation_holds


@dataclass
class SuiteResult:
    name: str
    invariant: str
    checked: int
    passed: bool
    counterexample: Optional[object] = None
    note: str = ""

    def to_json(self) -> dict:
        from .documents import to_json

        out = {"suite": self.name, "invariant": self.invariant, "checked": self.checked, "passed": self.passed}
        if self.counterexample is not None:
            ce = self.counterexample
            try:
                out["counterexample"] = to_json(ce)
            except TypeError:
                out["counterexample"] = repr(ce)
        if self.note:
            out["note"] = self.note
        return out


def shrink(instance, fails: Callable[[object], bool]):
    """Greedily delete carrier elements while ``fails`` stays true."""
    restrict = _restrictor(instance)
    if restrict is None:
        return instance
    current = instance
    progress = True
    while progress and _size(current) > 1:
        progress = False
        for drop in range(_size(current)):
            keep = [i for i in range(_size(current)) if i != drop]
            try:
                smaller = _restrictor(current)(keep)
            except Exception:  # a restriction may leave the structure's class
                continue
            try:
                still = fails(smaller)
            except Exception:
                still = False
            if still:
                current, progress = smaller, True
                break
    return current


def _size(x) -> int:
    return x.n


def _restrictor(x):
    if isinstance(x, met.MetricSpace):
        return lambda keep: met.restrict(x, keep)
    if isinstance(x, ordr.FinitePoset):
        return lambda keep: ordr.FinitePoset([x.carrier[i] for i in keep], [[x.leq[i][j] for j in keep] for i in keep])
    return None


def run_checks(name: str, invariant: str, instances: Iterable, holds: Callable[[object], bool]) -> SuiteResult:
    count = 0
    for inst in instances:
        count += 1
        if not holds(inst):
            small = shrink(inst, lambda s: not holds(s))
            return SuiteResult(name, invariant, count, False, small)
    return SuiteResult(name, invariant, count, True)


@dataclass
class Config:
    size: int = 3
    seed: int = 0
    samples: int = 200
    quantale: ValueQuantale = field(default_factory=lambda: FiniteChain(1, 3))

    @property
    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def chain(self) -> FiniteChain:
        if not isinstance(self.quantale, FiniteChain):
            raise UnsupportedEnumeration("this suite needs a finite chain quantale")
        return self.quantale


def _metrics(c: Config):
    """Exhaustive below the sampling threshold, seeded samples at ``size``."""
    q = c.quantale
    if q.is_finite:
        for n in range(1, min(c.size, 2) + 1):
            yield from corpus.all_metrics(q, n)
    rng = c.rng
    for _ in range(c.samples):
        yield corpus.random_metric(q, c.size, rng)


def _posets(c: Config):
    for n in range(1, min(c.size, 4) + 1):
        yield from corpus.all_posets(n)


SUITES: dict[str, tuple[str, Callable[[Config], SuiteResult]]] = {}


def suite(name: str, invariant: str):
    def deco(fn):
        SUITES[name] = (invariant, lambda c: fn(c, name, invariant))
        return fn

    return deco


# quantale ------------------------------------------------------------------


@suite("residuation", "quantale: u + v >= w iff v >= w - u")
def _residuation(c, name, inv):
    q = c.quantale
    if q.is_finite:
        triples = product(q.values(), repeat=3)
    else:
        rng = c.rng
        triples = ((corpus.random_value(q, rng), corpus.random_value(q, rng), corpus.random_value(q, rng)) for _ in range(c.samples))
    return run_checks(name, inv, triples, lambda t: residuation_holds(q, *t))


@suite("add-laws", "quantale: + is associative and commutative with unit 0")
def _add_laws(c, name, inv):
    q = c.quantale
    rng = c.rng
    vals = q.values() if q.is_finite else [corpus.random_value(q, rng) for _ in range(12)]

    def ok(t):
        u, v, w = t
        return q.add(q.add(u, v), w) == q.add(u, q.add(v, w)) and q.add(u, v) == q.add(v, u) and q.add(u, q.zero) == u

    return run_checks(name, inv, product(vals, repeat=3), ok)


@suite("minus-preservation", "quantale: - u preserves finite maxima and non-empty minima")
def _minus_pres(c, name, inv):
    q = c.quantale
    rng = c.rng
    vals = q.values() if q.is_finite else [corpus.random_value(q, rng) for _ in range(8)]

    def ok(t):
        u, a, b = t
        return q.minus(max(a, b), u) == max(q.minus(a, u), q.minus(b, u)) and q.minus(min(a, b), u) == min(
            q.minus(a, u), q.minus(b, u)
        )

    return run_checks(name, inv, product(vals, repeat=3), ok)


@suite("chain-closure", "quantale: add and minus stay inside a finite chain")
def _closure(c, name, inv):
    q = c.chain()
    return run_checks(
        name, inv, product(q.values(), repeat=2), lambda t: q.contains(q.add(*t)) and q.contains(q.minus(*t))
    )


# order ---------------------------------------------------------------------


@suite("way-below-finite", "order: in finite lattices y << x iff y <= x")
def _way_below(c, name, inv):
    def ok(P):
        if not ordr.is_complete_lattice(P):
            return True
        return all(ordr.way_below(P, y, x) == P.le(y, x) for x in range(P.n) for y in range(P.n))

    return run_checks(name, inv, _posets(c), ok)


@suite("adjoint-uniqueness", "order: right adjoints of the same map agree up to equivalence")
def _adj_unique(c, name, inv):
    def ok(P):
        if P.n > 3:
            return True
        maps = [ordr.MonotoneMap(P, P, t) for t in product(range(P.n), repeat=P.n)]
        maps = [m for m in maps if m.is_monotone()]
        for f in maps:
            rights = [g for g in maps if ordr.adjoint_pair(f, g)]
            if any(not ordr.pointwise_equivalent(rights[0], g) for g in rights[1:]):
                return False
        return True

    return run_checks(name, inv, _posets(c), ok)


@suite("scott-topology", "order: Scott-open sets form a topology with specialisation order the original order")
def _scott(c, name, inv):
    def ok(P):
        opens = set(ordr.scott_opens(P))
        if frozenset() not in opens or frozenset(range(P.n)) not in opens:
            return False
        if any(A & B not in opens or A | B not in opens for A in opens for B in opens):
            return False
        return ordr.order_of_opens(P.n, list(opens)) == P.leq

    return run_checks(name, inv, _posets(c), ok)


@suite("left-adjoints-preserve-sups", "order: left adjoints preserve existing suprema")
def _left_adj(c, name, inv):
    def ok(P):
        if P.n > 3:
            return True
        maps = [ordr.MonotoneMap(P, P, t) for t in product(range(P.n), repeat=P.n)]
        maps = [m for m in maps if m.is_monotone()]
        return all(ordr.preserves_suprema(f) for f in maps if any(ordr.adjoint_pair(f, g) for g in maps))

    return run_checks(name, inv, _posets(c), ok)


# metric --------------------------------------------------------------------


@suite("order-metric-roundtrip", "metric: the underlying order of order_to_metric(P) is P")
def _order_metric(c, name, inv):
    q = c.quantale
    return run_checks(name, inv, _posets(c), lambda P: met.underlying_order(met.order_to_metric(P, q)) == P)


@suite("dual-functorial", "metric: dualising source and target keeps metric maps metric")
def _dual(c, name, inv):
    def ok(M):
        for t in product(range(M.n), repeat=M.n):
            f = met.MetricMap(M, M, t)
            if met.is_metric_map(f) and not met.is_metric_map(met.MetricMap(met.dual(M), met.dual(M), t)):
                return False
        return True

    return run_checks(name, inv, _metrics(c), ok)


@suite("function-space-pointwise", "metric: tensors in Y^X are computed pointwise")
def _fs_pointwise(c, name, inv):
    q = c.chain()

    def ok(M):
        if M.n > 2:
            return True
        F = met.function_space(met.one_point(q) if M.n == 1 else met.discrete(q, ["p", "q"]), M)
        for i, h in enumerate(F.maps):
            for u in q.values():
                t = col.tensor(F, i, u)
                pts = [col.tensor(M, x, u) for x in h]
                if (t is None) != (None in pts):
                    return False
                if t is not None and not all(col.equivalent(M, F.maps[t][k], pts[k]) for k in range(len(h))):
                    return False
        return True

    return run_checks(name, inv, _metrics(c), ok)


@suite("yoneda-isometry", "metric: the Yoneda embedding is an isometry")
def _yoneda_iso(c, name, inv):
    c.chain()

    def ok(M):
        return met.is_isometry(met.yoneda_embedding(M))

    return run_checks(name, inv, (M for M in _metrics(c) if M.n <= 3), ok)


@suite("yoneda-lemma", "metric: [y(x), psi] = psi(x)")
def _yoneda_lemma(c, name, inv):
    rng = c.rng

    def instances():
        for M in _metrics(c):
            for x in range(M.n):
                yield M, x, corpus.random_weight(M, rng)

    return run_checks(name, inv, instances(), lambda t: met.yoneda_lemma_check(*t))


# colimit -------------------------------------------------------------------


@suite("cocomplete-oracle", "colimit: is_cocomplete agrees with 'every weight has a supremum' and the closed form")
def _coc_oracle(c, name, inv):
    c.chain()

    def ok(M):
        cc = col.is_cocomplete(M)
        if cc != col.every_weight_has_sup(M):
            return False
        if cc:
            return all(
                col.equivalent(M, col.sup_by_formula(M, w), col.weighted_sup(M, w)) for w in met.all_weights(M)
            )
        return True

    return run_checks(name, inv, _metrics(c), ok)


@suite("complete-iff-cocomplete", "colimit: cocomplete iff every up-set has an infimum")
def _complete(c, name, inv):
    c.chain()
    return run_checks(name, inv, _metrics(c), lambda M: col.is_cocomplete(M) == col.every_weight_has_inf(M))


@suite("isbell-adjunction", "colimit: Isbell conjugation is an adjunction with the triple law")
def _isbell(c, name, inv):
    rng = c.rng

    def instances():
        for M in _metrics(c):
            yield M, corpus.random_weight(M, rng, met.CONTRA), corpus.random_weight(M, rng, met.CO)

    def ok(t):
        M, psi, phi = t
        return (
            col.isbell_adjunction_holds(M, psi, phi)
            and col.isbell_unit_holds(M, psi)
            and col.isbell_counit_holds(M, phi)
            and col.isbell_triple_holds(M, psi)
        )

    return run_checks(name, inv, instances(), ok)


@suite("tensor-adjunction", "colimit: - + u is left adjoint to - - u in the underlying order")
def _tensor_adj(c, name, inv):
    q = c.chain()

    def ok(M):
        if not (col.is_tensored(M) and col.is_cotensored(M)):
            return True
        P = met.underlying_order(M)
        for u in q.values():
            f = ordr.MonotoneMap(P, P, [col.tensor(M, x, u) for x in range(M.n)])
            g = ordr.MonotoneMap(P, P, [col.cotensor(M, x, u) for x in range(M.n)])
            if not ordr.adjoint_pair(f, g):
                return False
        return True

    return run_checks(name, inv, _metrics(c), ok)


# action --------------------------------------------------------------------


def _actions(c: Config):
    q = c.chain()
    for P in _posets(c):
        if P.n <= 3:
            yield from act.actions_from_shift(P, q)


@suite("tensmet-roundtrip", "action: metric <-> action translations are mutually inverse")
def _tensmet(c, name, inv):
    q = c.chain()

    def ok(x):
        if isinstance(x, act.OrdAction):
            M = act.metric_from_action(x)
            return act.actions_equivalent(act.action_from_metric(M), x) and act.cocomplete_algebra_check(
                x
            ) == col.is_cocomplete(M)
        if met.is_separated(x) and col.is_tensored(x):
            return act.metric_from_action(act.action_from_metric(x)) == x
        return True

    def instances():
        yield from _actions(c)
        for n in range(1, min(c.size, 3) + 1):
            yield from corpus.all_metrics(q, n)

    return run_checks(name, inv, instances(), ok)


@suite("action-minimum-attained", "action: the infimum defining d(x, y) is attained")
def _attained(c, name, inv):
    def ok(A):
        return all(act.infimum_is_attained(A, x, y) is not None for x in range(A.poset.n) for y in range(A.poset.n))

    return run_checks(name, inv, _actions(c), ok)


@suite("directed-collapse", "action: down-directed sets attain their minima, so directed conditions are plain preservation")
def _directed(c, name, inv):
    def ok(P):
        for D in ordr.directed_up_sets(P):
            if ordr.infimum(P, D) not in D:
                return False
        return True

    return run_checks(name, inv, _posets(c), ok)


# ultra ---------------------------------------------------------------------


@suite("monad-laws", "ultra: unit and multiplication satisfy the monad laws")
def _monad(c, name, inv):
    return run_checks(name, inv, range(1, min(c.size, 4) + 1), ultra.monad_laws_hold)


@suite("principal-collapse", "ultra: Ud(x., y.) = d(x, y)")
def _principal(c, name, inv):
    return run_checks(name, inv, _metrics(c), lambda M: ultra.lift_metric(M).d == M.d)


@suite("em-discrete", "ultra: every finite algebra has alpha(x.) = x")
def _em(c, name, inv):
    def ok(n):
        return ultra.em_algebras(n) == [ultra.discrete_alpha(n)]

    return run_checks(name, inv, range(1, min(c.size, 3) + 1), ok)


@suite("ultra-functoriality", "ultra: Uf is monotone / a metric map whenever f is")
def _functorial(c, name, inv):
    def ok(M):
        UM = ultra.lift_metric(M)
        for t in product(range(M.n), repeat=M.n):
            if met.is_metric_map(met.MetricMap(M, M, t)):
                ut = [ultra.image(t, M.n, uf).point for uf in ultra.ultrafilters(M.n)]
                if not met.is_metric_map(met.MetricMap(UM, UM, ut)):
                    return False
        return True

    return run_checks(name, inv, (M for M in _metrics(c) if M.n <= 3), ok)


# approach ------------------------------------------------------------------


@suite("conversion-inverse", "approach: delta and convergence presentations are mutually inverse")
def _conversions(c, name, inv):
    def ok(M):
        A = app.approach_from_metric(M)
        D = app.conv_to_dist(A)
        return app.check_conv_axioms(A) and app.check_dist_axioms(D) and app.dist_to_conv(D).table == A.table

    return run_checks(name, inv, _metrics(c), ok)


@suite("metric-collapse", "approach: every finite approach space is induced by its underlying metric")
def _collapse(c, name, inv):
    def ok(M):
        A = app.approach_from_metric(M)
        return app.same_space(app.approach_from_metric(app.underlying_metric(A)), A)

    return run_checks(name, inv, _metrics(c), ok)


@suite("cocomplete-app-coherence", "approach: cocomplete iff every down-set on UX has a supremum")
def _app_coh(c, name, inv):
    c.chain()

    def ok(M):
        A = app.approach_from_metric(M)
        return app.is_cocomplete_app(A) == app.every_app_weight_has_sup(A)

    return run_checks(name, inv, (M for M in _metrics(c) if M.n <= 2), ok)


@suite("main-theorem-coherence", "approach: the four descriptions of absolute cocompleteness agree")
def _main(c, name, inv):
    c.chain()

    def ok(M):
        A = app.approach_from_metric(M)
        if not app.is_T0(A):
            return True
        clauses = app.main_theorem_clauses(A)
        return len(set(clauses.values())) == 1

    return run_checks(name, inv, (M for M in _metrics(c) if M.n <= 3), ok)


@suite("approach-map-criterion", "approach: for U-cocomplete spaces, approach map iff metric map and continuous")
def _criterion(c, name, inv):
    def continuous(t, A, B):
        ca, cb = app.underlying_top(A).converges, app.underlying_top(B).converges
        return all(
            cb[ultra.image(t, B.n, uf).point][t[x]] for uf in ultra.ultrafilters(A.n) for x in range(A.n) if ca[uf.point][x]
        )

    def ok(M):
        A = app.approach_from_metric(M)
        a0 = app.underlying_metric(A)
        for t in product(range(M.n), repeat=M.n):
            lhs = app.is_approach_map(t, A, A)
            rhs = met.is_metric_map(met.MetricMap(a0, a0, t)) and continuous(t, A, A)
            if lhs != rhs:
                return False
        return True

    return run_checks(name, inv, (M for M in _metrics(c) if M.n <= 3), ok)


def run_suite(name: str, config: Config) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name][1](config)
