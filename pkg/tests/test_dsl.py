import random

import pytest
from hypothesis import given

from lawvere import colimit as c
from lawvere import dsl
from lawvere.approach import approach_from_metric
from lawvere.corpus import random_metric, random_weight
from lawvere.dsl import Bindings, run
from lawvere.errors import DslError
from lawvere.metric import MetricSpace, value_space

from conftest import CHAIN3, RAT, metric_and_weight


def bind(M, **kw):
    return Bindings(M, kw.get("elements", {}), kw.get("weights", {}), kw.get("values", {}))


@given(metric_and_weight())
def test_sup_expression_matches_supremum_profile(Mw):
    M, psi = Mw
    prof = c.sup_profile(M, psi)
    for x in range(M.n):
        b = bind(M, elements={"x": x}, weights={"psi": psi})
        assert run("sup y . d(y,x) - psi(y)", b) == (dsl.VALUE, prof[x])


@given(metric_and_weight(q=RAT))
def test_sup_expression_over_rationals(Mw):
    M, psi = Mw
    prof = c.sup_profile(M, psi)
    b = bind(M, elements={"x": 0}, weights={"psi": psi})
    assert run("sup y . d(y, x) - psi(y)", b)[1] == prof[0]


def test_arithmetic_and_constants():
    V = value_space(CHAIN3)
    b = bind(V, values={"u": 1})
    assert run("1 + u", b) == (dsl.VALUE, 2)
    assert run("1 - 2", b)[1] == 0
    # a finite chain's top is a number, so subtraction moves off it
    assert run("inf - 1", b)[1] == 2
    assert run("inf - 1", bind(MetricSpace(RAT, "a", [[0]])))[1] == RAT.top
    assert run("∞", b)[1] == CHAIN3.top
    assert run("(2 - 1) + 1", b)[1] == 2


# the value chain relabelled so that its points are names, not numbers
V = MetricSpace(CHAIN3, "pqrs", value_space(CHAIN3).d)


def test_binders_extend_right():
    b = bind(V)
    # the binder swallows the trailing "+ 1"
    assert run("inf y . d(y, p) + 1", b) == (dsl.VALUE, 1)
    assert run("1 + sup y . d(p, y)", b)[1] == CHAIN3.top


def test_element_expressions():
    b = bind(V, elements={"x": 1})
    assert run("tensor(x, 1)", b) == (dsl.ELEM, 2)
    assert run("cotensor(x, 1)", b) == (dsl.ELEM, 0)
    assert run("y(x)(p)", b)[1] == V.d[0][1]
    assert run("d(tensor(x, 1), s)", b)[1] == CHAIN3.minus(V.d[1][3], 1)


def test_approach_distance():
    rng = random.Random(3)
    M = random_metric(CHAIN3, 3, rng)
    A = approach_from_metric(M)
    b = bind(A, elements={"x": 0, "z": 2})
    assert run("a(x, z)", b)[1] == A.conv[0][2]
    assert run("d(x, z)", b)[1] == M.d[0][2]
    with pytest.raises(DslError):
        run("a(x, z)", bind(M, elements={"x": 0, "z": 2}))


@pytest.mark.parametrize(
    "text",
    ["d(x,", "sup . d(x,x)", "1 +", "x $ 1", "d(x, 1)", "1 + x", "tensor(1, 1)", "psi(x)", "q", "3/0", "sup x . x"],
)
def test_errors(text):
    M = MetricSpace(CHAIN3, "ab", [[0, 1], [1, 0]])
    with pytest.raises(DslError):
        run(text, bind(M, elements={"x": 0}))


def test_value_outside_chain_and_missing_tensor():
    M = MetricSpace(CHAIN3, "ab", [[0, 1], [CHAIN3.top, 0]])
    b = bind(M, elements={"x": 0})
    with pytest.raises(DslError):
        run("1/2", b)
    discrete = MetricSpace(CHAIN3, "ab", [[0, 3], [3, 0]])
    with pytest.raises(DslError):
        run("tensor(a, 1)", bind(discrete))


def test_bindings_from_json():
    rng = random.Random(2)
    M = random_metric(CHAIN3, 2, rng)
    from lawvere.documents import to_json, weight_document

    w = random_weight(M, rng)
    doc = {
        "space": to_json(M),
        "elements": {"x": "a"},
        "weights": {"psi": to_json(weight_document(M.carrier, CHAIN3, w))},
        "values": {"u": "1"},
    }
    b = dsl.bindings_from_json(doc)
    assert b.elements == {"x": 0} and b.weights["psi"] == w and b.values == {"u": 1}
