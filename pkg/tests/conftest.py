from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lawvere.corpus import close_metric, labels
from lawvere.metric import CONTRA, MetricSpace, WeightTable
from lawvere.quantale import INF, ExtendedRationals, FiniteChain

settings.register_profile(
    "default", deadline=None, max_examples=80, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

RAT = ExtendedRationals()
CHAIN3 = FiniteChain(1, 3)


@pytest.fixture
def chain3():
    return CHAIN3


def rational_values():
    finite = st.fractions(min_value=0, max_value=20, max_denominator=6)
    return st.one_of(finite, st.just(INF))


def chain_values(q):
    return st.sampled_from(q.values())


@st.composite
def metrics(draw, q=CHAIN3, min_size=1, max_size=3):
    n = draw(st.integers(min_size, max_size))
    vals = chain_values(q) if q.is_finite else rational_values()
    raw = [[draw(vals) for _ in range(n)] for _ in range(n)]
    return MetricSpace(q, labels(n), close_metric(q, raw))


@st.composite
def metric_and_weight(draw, q=CHAIN3, max_size=3, variance=CONTRA):
    M = draw(metrics(q, max_size=max_size))
    vals = chain_values(q) if q.is_finite else rational_values()
    raw = [draw(vals) for _ in range(M.n)]
    n = M.n
    if variance == CONTRA:
        w = [min(q.add(M.d[x][y], raw[y]) for y in range(n)) for x in range(n)]
    else:
        w = [min(q.add(M.d[y][x], raw[y]) for y in range(n)) for x in range(n)]
    return M, WeightTable(w, variance)


def F(x):
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.VERDICTS.values():
        terminalreporter.write_line(line)
