"""JSON structure documents.

Every structure has a tagged document form.  Values are written as exact
strings (``"3/2"``, ``"inf"``) and serialisation is canonical: sorted keys,
lowest-terms values, two-space indentation.  Re-serialising a parsed
document therefore reproduces it byte for byte.
"""
from __future__ import annotations

import json
from typing import Any, Union

from .action import OrdAction
from .approach import CONV, DIST, ApproachSpace
from .errors import AxiomViolation, LawvereError, MalformedDocument
from .metric import CO, CONTRA, MetricSpace, WeightTable
from .order import FinitePoset
from .quantale import ValueQuantale, quantale_from_descriptor


class CompactStructure:
    """A metric space with a convergence map ``alpha`` on its ultrafilters."""

    __slots__ = ("metric", "alpha")

    def __init__(self, metric: MetricSpace, alpha):
        self.metric = metric
        self.alpha = tuple(alpha)

    def __eq__(self, other):
        return isinstance(other, CompactStructure) and (self.metric, self.alpha) == (other.metric, other.alpha)


class WeightDocument:
    """A weight whose values are keyed by carrier label; bound to a space on use."""

    __slots__ = ("variance", "values")

    def __init__(self, variance: str, values: dict[str, str]):
        self.variance = variance
        self.values = dict(values)

    def bind(self, carrier, q: ValueQuantale) -> WeightTable:
        if set(self.values) != set(carrier):
            raise MalformedDocument("weight labels do not match the carrier")
        return WeightTable([q.parse(self.values[c]) for c in carrier], self.variance)

    def __eq__(self, other):
        return isinstance(other, WeightDocument) and (self.variance, self.values) == (other.variance, other.values)


Structure = Union[FinitePoset, MetricSpace, WeightDocument, OrdAction, CompactStructure, ApproachSpace]


def weight_document(carrier, q: ValueQuantale, w: WeightTable) -> WeightDocument:
    return WeightDocument(w.variance, {c: q.format(v) for c, v in zip(carrier, w.values)})


# to JSON ---------------------------------------------------------------


def _values(q: ValueQuantale, rows) -> list[list[str]]:
    return [[q.format(v) for v in row] for row in rows]


def to_json(obj: Structure) -> dict:
    if isinstance(obj, FinitePoset):
        return {"type": "poset", "carrier": list(obj.carrier), "leq": [list(r) for r in obj.leq]}
    if isinstance(obj, MetricSpace):
        q = obj.quantale
        return {"type": "metric", "quantale": q.descriptor(), "carrier": list(obj.carrier), "d": _values(q, obj.d)}
    if isinstance(obj, WeightDocument):
        return {"type": "weight", "variance": obj.variance, "values": dict(obj.values)}
    if isinstance(obj, OrdAction):
        c = obj.carrier
        return {
            "type": "action",
            "poset": to_json(obj.poset),
            "quantale": obj.quantale.descriptor(),
            "act": [[c[e] for e in row] for row in obj.act],
        }
    if isinstance(obj, CompactStructure):
        return {
            "type": "met_comp_haus",
            "metric": to_json(obj.metric),
            "alpha": [obj.metric.carrier[i] for i in obj.alpha],
        }
    if isinstance(obj, ApproachSpace):
        q = obj.quantale
        return {
            "type": "approach",
            "form": obj.form,
            "quantale": q.descriptor(),
            "carrier": list(obj.carrier),
            "table": _values(q, obj.table),
        }
    raise TypeError(f"no document form for {type(obj).__name__}")


def dumps(obj: Union[Structure, dict]) -> str:
    doc = obj if isinstance(obj, dict) else to_json(obj)
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# from JSON -------------------------------------------------------------


def _need(doc: dict, key: str, kind=None):
    if key not in doc:
        raise MalformedDocument(f"missing field {key!r}")
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise MalformedDocument(f"field {key!r} has the wrong type")
    return v


def _quantale(doc: dict) -> ValueQuantale:
    desc = _need(doc, "quantale", dict)
    try:
        return quantale_from_descriptor(desc)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise MalformedDocument(f"bad quantale descriptor: {exc}") from exc


def _parse_values(q: ValueQuantale, rows) -> list[list]:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise MalformedDocument("expected a list of rows")
    try:
        return [[q.parse(v) for v in r] for r in rows]
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise MalformedDocument(f"bad value: {exc}") from exc


def _labels(doc: dict) -> list[str]:
    carrier = _need(doc, "carrier", list)
    if any(not isinstance(c, str) for c in carrier):
        raise MalformedDocument("carrier labels must be strings")
    return carrier


def _lookup(carrier, label) -> int:
    try:
        return list(carrier).index(label)
    except ValueError:
        raise MalformedDocument(f"unknown element {label!r}") from None


def from_json(doc: Any) -> Structure:
    """Build a structure; shape problems raise :class:`MalformedDocument`.

    Axioms are not checked here (see ``lawvere check``), except where the
    structure cannot be represented without them.
    """
    if not isinstance(doc, dict):
        raise MalformedDocument("a document must be a JSON object")
    kind = _need(doc, "type", str)
    try:
        if kind == "poset":
            leq = _need(doc, "leq", list)
            if any(not isinstance(r, list) or any(not isinstance(b, bool) for b in r) for r in leq):
                raise MalformedDocument("leq must be a table of booleans")
            return FinitePoset(_labels(doc), leq)
        if kind == "metric":
            q = _quantale(doc)
            return MetricSpace(q, _labels(doc), _parse_values(q, _need(doc, "d", list)))
        if kind == "weight":
            variance = _need(doc, "variance", str)
            if variance not in (CONTRA, CO):
                raise MalformedDocument(f"variance must be {CONTRA!r} or {CO!r}")
            values = _need(doc, "values", dict)
            if any(not isinstance(v, str) for v in values.values()):
                raise MalformedDocument("weight values must be strings")
            return WeightDocument(variance, values)
        if kind == "action":
            P = from_json(_need(doc, "poset", dict))
            if not isinstance(P, FinitePoset):
                raise MalformedDocument("action needs a poset")
            q = _quantale(doc)
            act = _need(doc, "act", list)
            if any(not isinstance(r, list) for r in act):
                raise MalformedDocument("act must be a table")
            return OrdAction(P, q, [[_lookup(P.carrier, e) for e in r] for r in act])
        if kind == "met_comp_haus":
            M = from_json(_need(doc, "metric", dict))
            if not isinstance(M, MetricSpace):
                raise MalformedDocument("met_comp_haus needs a metric")
            alpha = _need(doc, "alpha", list)
            if len(alpha) != M.n:
                raise MalformedDocument("alpha needs one entry per ultrafilter")
            return CompactStructure(M, [_lookup(M.carrier, e) for e in alpha])
        if kind == "approach":
            form = _need(doc, "form", str)
            if form not in (DIST, CONV):
                raise MalformedDocument(f"form must be {DIST!r} or {CONV!r}")
            q = _quantale(doc)
            return ApproachSpace(q, _labels(doc), form, _parse_values(q, _need(doc, "table", list)))
    except (MalformedDocument, AxiomViolation):
        raise
    except LawvereError as exc:
        raise MalformedDocument(str(exc)) from exc
    raise MalformedDocument(f"unknown document type {kind!r}")


def loads(text: str) -> Structure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from exc
    return from_json(doc)


def load(path: str) -> Structure:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise MalformedDocument(f"cannot read {path}: {exc}") from exc
