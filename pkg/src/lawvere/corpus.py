"""Seeded generators and exhaustive enumerators of small structures."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Iterator

from .action import OrdAction, actions_from_shift
from .approach import approach_from_metric
from .errors import UnsupportedEnumeration
from .metric import CONTRA, MetricSpace, WeightTable, check_metric_axioms
from .order import FinitePoset, is_complete_lattice
from .quantale import FiniteChain, Value, ValueQuantale
from .ultra import discrete_alpha

LABELS = "abcdefghijklmnopqrstuvwxyz"


def labels(n: int) -> list[str]:
    return list(LABELS[:n])


def random_value(q: ValueQuantale, rng: random.Random, *, top_weight: float = 0.15) -> Value:
    if q.is_finite:
        return rng.choice(q.values())
    if rng.random() < top_weight:
        return q.top
    return Fraction(rng.randint(0, 12), rng.randint(1, 4))


def close_metric(q: ValueQuantale, d: list[list[Value]]) -> list[list[Value]]:
    """Shortest-path closure: the largest metric below the given table."""
    n = len(d)
    d = [row[:] for row in d]
    for i in range(n):
        d[i][i] = q.zero
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = q.add(d[i][k], d[k][j])
                if via < d[i][j]:
                    d[i][j] = via
    return d


def random_metric(q: ValueQuantale, n: int, rng: random.Random) -> MetricSpace:
    d = [[random_value(q, rng) for _ in range(n)] for _ in range(n)]
    return MetricSpace(q, labels(n), close_metric(q, d))


def all_metrics(q: ValueQuantale, n: int) -> Iterator[MetricSpace]:
    """Every valid distance table on ``n`` points (finite chains only)."""
    if not q.is_finite:
        raise UnsupportedEnumeration("metrics are only enumerable over a finite chain")
    vals = q.values()
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for choice in product(vals, repeat=len(off)):
        d = [[q.zero] * n for _ in range(n)]
        for (i, j), v in zip(off, choice):
            d[i][j] = v
        M = MetricSpace(q, labels(n), d)
        if check_metric_axioms(M):
            yield M


def random_weight(M: MetricSpace, rng: random.Random, variance: str = CONTRA) -> WeightTable:
    """A random valid weight, obtained by closing random values under the metric."""
    q, n = M.quantale, M.n
    raw = [random_value(q, rng) for _ in range(n)]
    if variance == CONTRA:
        vals = [min(q.add(M.d[x][y], raw[y]) for y in range(n)) for x in range(n)]
    else:
        vals = [min(q.add(M.d[y][x], raw[y]) for y in range(n)) for x in range(n)]
    return WeightTable(vals, variance)


def all_posets(n: int, *, antisymmetric: bool = True) -> Iterator[FinitePoset]:
    """Every reflexive transitive relation on ``n`` labelled points."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((False, True), repeat=len(off)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(off, bits):
            rel[i][j] = b
        if antisymmetric and any(rel[i][j] and rel[j][i] for i, j in off):
            continue
        if any(rel[i][j] and rel[j][k] and not rel[i][k] for i in range(n) for j in range(n) for k in range(n)):
            continue
        yield FinitePoset(labels(n), rel)


def all_lattices(n: int) -> Iterator[FinitePoset]:
    return (P for P in all_posets(n) if is_complete_lattice(P))


def lattice_action_corpus(q: FiniteChain, max_size: int = 4) -> list[OrdAction]:
    """Every action satisfying (1)-(5) on every labelled lattice with at most ``max_size`` points."""
    out = []
    for n in range(1, max_size + 1):
        for P in all_lattices(n):
            out.extend(actions_from_shift(P, q))
    return out


def random_poset(n: int, rng: random.Random) -> FinitePoset:
    pairs = [(a, b) for a in labels(n) for b in labels(n) if a < b and rng.random() < 0.4]
    return FinitePoset.from_pairs(labels(n), pairs)


def random_lattice_action(q: FiniteChain, n: int, rng: random.Random) -> OrdAction:
    for _ in range(1000):
        P = random_poset(n, rng)
        if is_complete_lattice(P):
            acts = list(actions_from_shift(P, q))
            if acts:
                return rng.choice(acts)
    raise RuntimeError("no lattice action found")  # pragma: no cover


def generate(kind: str, size: int, seed: int, q: ValueQuantale):
    """One seeded structure of the requested kind."""
    from .documents import CompactStructure

    rng = random.Random(seed)
    if kind == "poset":
        return random_poset(size, rng)
    if kind == "metric":
        return random_metric(q, size, rng)
    if kind == "approach":
        return approach_from_metric(random_metric(q, size, rng))
    if kind == "met_comp_haus":
        return CompactStructure(random_metric(q, size, rng), discrete_alpha(size))
    if kind == "action":
        if not isinstance(q, FiniteChain):
            raise UnsupportedEnumeration("actions need a finite chain quantale")
        return random_lattice_action(q, size, rng)
    raise ValueError(f"unknown kind {kind!r}")


KINDS = ("poset", "metric", "approach", "met_comp_haus", "action")
