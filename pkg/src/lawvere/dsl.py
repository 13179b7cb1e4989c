"""A small expression language over a bound space.

Grammar (``-`` is truncated subtraction, never ordinary minus)::

    expr   := ("sup" | "inf") NAME "." expr | sum
    sum    := atom (("+" | "-") atom)*
    atom   := NUMBER | "inf" | "(" expr ")"
            | "d" "(" elem "," elem ")" | "a" "(" elem "," elem ")"
            | "y" "(" elem ")" "(" elem ")"
            | NAME "(" elem ")"          -- weight application
            | NAME                        -- value variable
    elem   := NAME | "tensor" "(" elem "," expr ")" | "cotensor" "(" elem "," expr ")"

``sup``/``inf`` bind an element variable ranging over the carrier and extend
as far right as possible.  Expressions have two sorts, elements and values;
a sort error is reported before anything is evaluated.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .approach import ApproachSpace, underlying_metric
from .colimit import cotensor, tensor
from .errors import DslError, LawvereError
from .metric import MetricSpace, WeightTable
from .quantale import Value

ELEM, VALUE = "element", "value"
_ARTICLE = {ELEM: "an", VALUE: "a"}

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+|\.\d+)?)|([A-Za-z_][A-Za-z_0-9']*)|(∞)|(.))")


# syntax ----------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Bound:
    kind: str  # "sup" or "inf"
    var: str
    body: "Expr"


@dataclass(frozen=True)
class Dist:
    fn: str  # "d" or "a"
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class YonedaApp:
    at: "Expr"
    arg: "Expr"


@dataclass(frozen=True)
class WeightApp:
    name: str
    arg: "Expr"


@dataclass(frozen=True)
class Shift:
    fn: str  # "tensor" or "cotensor"
    elem: "Expr"
    amount: "Expr"


Expr = Union[Num, Top, Var, BinOp, Bound, Dist, YonedaApp, WeightApp, Shift]

_RESERVED = {"sup", "inf", "tensor", "cotensor"}
_FUNCTIONS = {"d", "a", "y"}  # names too, unless applied


def tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        tok = next(g for g in m.groups() if g is not None)
        if m.group(4) is not None and tok not in "()+-.,":
            raise DslError(f"unexpected character {tok!r} at {pos}")
        out.append(tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self, k: int = 0) -> Optional[str]:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def take(self, want: Optional[str] = None) -> str:
        tok = self.peek()
        if tok is None:
            raise DslError("unexpected end of expression" + (f", expected {want!r}" if want else ""))
        if want is not None and tok != want:
            raise DslError(f"expected {want!r}, found {tok!r}")
        self.i += 1
        return tok

    def name(self) -> str:
        tok = self.take()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9']*", tok) or tok in _RESERVED:
            raise DslError(f"expected a name, found {tok!r}")
        return tok

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek() is not None:
            raise DslError(f"unexpected {self.peek()!r} after expression")
        return e

    def expr(self) -> Expr:
        tok = self.peek()
        if tok in ("sup", "inf") and self.peek(2) == ".":
            self.take()
            var = self.name()
            self.take(".")
            return Bound(tok, var, self.expr())
        return self.sum()

    def sum(self) -> Expr:
        left = self.atom()
        while self.peek() in ("+", "-"):
            op = self.take()
            if self.peek() in ("sup", "inf") and self.peek(2) == ".":
                right = self.expr()
            else:
                right = self.atom()
            left = BinOp(op, left, right)
        return left

    def atom(self) -> Expr:
        tok = self.take()
        if re.fullmatch(r"\d+(?:/\d+|\.\d+)?", tok):
            try:
                return Num(Fraction(tok))
            except ZeroDivisionError:
                raise DslError(f"bad number {tok!r}") from None
        if tok in ("inf", "∞"):
            return Top()
        if tok == "(":
            e = self.expr()
            self.take(")")
            return e
        if tok in ("d", "a") and self.peek() == "(":
            self.take("(")
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take(")")
            return Dist(tok, left, right)
        if tok == "y" and self.peek() == "(":
            self.take("(")
            at = self.expr()
            self.take(")")
            self.take("(")
            arg = self.expr()
            self.take(")")
            return YonedaApp(at, arg)
        if tok in ("tensor", "cotensor"):
            self.take("(")
            elem = self.expr()
            self.take(",")
            amount = self.expr()
            self.take(")")
            return Shift(tok, elem, amount)
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9']*", tok) and tok not in _RESERVED:
            if self.peek() == "(" and tok not in _FUNCTIONS:
                self.take("(")
                arg = self.expr()
                self.take(")")
                return WeightApp(tok, arg)
            return Var(tok)
        raise DslError(f"unexpected token {tok!r}")


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# bindings --------------------------------------------------------------


@dataclass
class Bindings:
    space: Union[MetricSpace, ApproachSpace]
    elements: dict[str, int]
    weights: dict[str, WeightTable]
    values: dict[str, Value]

    @property
    def metric(self) -> MetricSpace:
        return underlying_metric(self.space) if isinstance(self.space, ApproachSpace) else self.space


def _sort_of_name(name: str, b: Bindings, scope: frozenset[str]) -> str:
    if name in scope or name in b.elements or name in b.space.carrier:
        return ELEM
    if name in b.values:
        return VALUE
    raise DslError(f"unbound name {name!r}")


def typecheck(e: Expr, b: Bindings, scope: frozenset[str] = frozenset()) -> str:
    if isinstance(e, (Num, Top)):
        return VALUE
    if isinstance(e, Var):
        return _sort_of_name(e.name, b, scope)
    if isinstance(e, BinOp):
        _expect(e.left, VALUE, b, scope)
        _expect(e.right, VALUE, b, scope)
        return VALUE
    if isinstance(e, Bound):
        return _expect(e.body, VALUE, b, scope | {e.var})
    if isinstance(e, Dist):
        if e.fn == "a" and not isinstance(b.space, ApproachSpace):
            raise DslError("a(-, -) needs an approach space binding")
        _expect(e.left, ELEM, b, scope)
        _expect(e.right, ELEM, b, scope)
        return VALUE
    if isinstance(e, YonedaApp):
        _expect(e.at, ELEM, b, scope)
        _expect(e.arg, ELEM, b, scope)
        return VALUE
    if isinstance(e, WeightApp):
        if e.name not in b.weights:
            raise DslError(f"unbound weight {e.name!r}")
        _expect(e.arg, ELEM, b, scope)
        return VALUE
    if isinstance(e, Shift):
        _expect(e.elem, ELEM, b, scope)
        _expect(e.amount, VALUE, b, scope)
        return ELEM
    raise DslError(f"unknown node {e!r}")  # pragma: no cover


def _expect(e: Expr, sort: str, b: Bindings, scope: frozenset[str]) -> str:
    got = typecheck(e, b, scope)
    if got != sort:
        raise DslError(f"expected {_ARTICLE[sort]} {sort}, got {_ARTICLE[got]} {got}")
    return got


def evaluate(e: Expr, b: Bindings, env: Optional[dict[str, int]] = None):
    env = env or {}
    M, q = b.metric, b.space.quantale
    if isinstance(e, Num):
        if not q.contains(e.value):
            raise DslError(f"{e.value} is not a value of {q}")
        return e.value
    if isinstance(e, Top):
        return q.top
    if isinstance(e, Var):
        if e.name in env:
            return env[e.name]
        if e.name in b.elements:
            return b.elements[e.name]
        if e.name in b.values:
            return b.values[e.name]
        return b.space.carrier.index(e.name)
    if isinstance(e, BinOp):
        u, v = evaluate(e.left, b, env), evaluate(e.right, b, env)
        return q.add(u, v) if e.op == "+" else q.minus(u, v)
    if isinstance(e, Bound):
        vals = [evaluate(e.body, b, {**env, e.var: x}) for x in range(M.n)]
        return q.join(vals) if e.kind == "sup" else q.meet(vals)
    if isinstance(e, Dist):
        x, y = evaluate(e.left, b, env), evaluate(e.right, b, env)
        return b.space.conv[x][y] if e.fn == "a" else M.d[x][y]
    if isinstance(e, YonedaApp):
        at, arg = evaluate(e.at, b, env), evaluate(e.arg, b, env)
        return M.d[arg][at]
    if isinstance(e, WeightApp):
        return b.weights[e.name][evaluate(e.arg, b, env)]
    if isinstance(e, Shift):
        x, u = evaluate(e.elem, b, env), evaluate(e.amount, b, env)
        r = tensor(M, x, u) if e.fn == "tensor" else cotensor(M, x, u)
        if r is None:
            raise DslError(f"{e.fn}({M.carrier[x]}, {q.format(u)}) does not exist")
        return r
    raise DslError(f"unknown node {e!r}")  # pragma: no cover


def run(text: str, b: Bindings) -> tuple[str, object]:
    """Parse, type-check and evaluate; returns ``(sort, result)``."""
    e = parse(text)
    sort = typecheck(e, b)
    try:
        return sort, evaluate(e, b)
    except DslError:
        raise
    except LawvereError as exc:
        raise DslError(str(exc)) from exc


def bindings_from_json(doc: dict) -> Bindings:
    """``{"space": doc, "elements": {...}, "weights": {...}, "values": {...}}``."""
    from .documents import WeightDocument, from_json
    from .errors import MalformedDocument

    if not isinstance(doc, dict) or "space" not in doc:
        raise MalformedDocument("bindings need a 'space' document")
    space = from_json(doc["space"])
    if not isinstance(space, (MetricSpace, ApproachSpace)):
        raise MalformedDocument("the bound space must be a metric or approach document")
    q = space.quantale
    elements = {}
    for k, v in doc.get("elements", {}).items():
        if v not in space.carrier:
            raise MalformedDocument(f"unknown element {v!r}")
        elements[k] = space.carrier.index(v)
    weights = {}
    for k, w in doc.get("weights", {}).items():
        wd = from_json(w)
        if not isinstance(wd, WeightDocument):
            raise MalformedDocument(f"{k!r} is not a weight document")
        try:
            weights[k] = wd.bind(space.carrier, q)
        except (ValueError, LawvereError) as exc:
            raise MalformedDocument(str(exc)) from exc
    try:
        values = {k: q.parse(v) for k, v in doc.get("values", {}).items()}
    except (ValueError, TypeError, LawvereError) as exc:
        raise MalformedDocument(str(exc)) from exc
    return Bindings(space, elements, weights, values)
