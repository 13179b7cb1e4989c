"""Exact value quantales.

Distances live in ``[0, inf]`` with addition as the monoid operation and
truncated subtraction ``v - u = max(v - u, 0)`` as its residual.  Two models
are provided:

* :class:`ExtendedRationals` -- non-negative rationals plus :data:`INF`;
* :class:`FiniteChain` -- ``{0, step, ..., levels * step}`` with truncated
  addition, the top element standing in for infinity.

Values are plain :class:`fractions.Fraction` objects (or :data:`INF`); the
quantale object carries the arithmetic.  Nothing here ever touches floats.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .errors import QuantaleMismatch, UnsupportedEnumeration


class _Infinity:
    """The top element of the extended rationals, absorbing for ``+``."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("lawvere.INF")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True


INF = _Infinity()
Value = Union[Fraction, _Infinity]

ZERO = Fraction(0)


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class ValueQuantale:
    """Common interface of the supported value structures."""

    zero: Value = ZERO

    @property
    def top(self) -> Value:
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        raise NotImplementedError

    def contains(self, v) -> bool:
        raise NotImplementedError

    def check(self, *vs) -> None:
        for v in vs:
            if not self.contains(v):
                raise QuantaleMismatch(f"{v!r} is not an element of {self}")

    def values(self) -> tuple[Value, ...]:
        raise UnsupportedEnumeration(f"{self} has no finite carrier")

    # arithmetic -------------------------------------------------------
    def add(self, u: Value, v: Value) -> Value:
        raise NotImplementedError

    def minus(self, v: Value, u: Value) -> Value:
        """``v - u``: the least ``w`` with ``u + w >= v``."""
        raise NotImplementedError

    def leq(self, u: Value, v: Value) -> bool:
        return u <= v

    def join(self, values: Iterable[Value]) -> Value:
        """Maximum in the natural order; the empty join is ``0``."""
        return max(values, default=self.zero)

    def meet(self, values: Iterable[Value]) -> Value:
        """Minimum in the natural order; the empty meet is the top."""
        return min(values, default=self.top)

    # text -------------------------------------------------------------
    def parse(self, text) -> Value:
        if isinstance(text, str) and text.strip().lower() in ("inf", "∞"):
            return self.top
        v = to_fraction(text.strip() if isinstance(text, str) else text)
        self.check(v)
        return v

    def format(self, v: Value) -> str:
        self.check(v)
        if v == self.top:
            return "inf"
        return str(v)

    def descriptor(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class ExtendedRationals(ValueQuantale):
    """``[0, inf]`` restricted to exact rationals."""

    @property
    def top(self) -> Value:
        return INF

    @property
    def is_finite(self) -> bool:
        return False

    def contains(self, v) -> bool:
        if v is INF:
            return True
        return isinstance(v, (Fraction, int)) and not isinstance(v, bool) and v >= 0

    def add(self, u: Value, v: Value) -> Value:
        self.check(u, v)
        if u is INF or v is INF:
            return INF
        return Fraction(u + v)

    def minus(self, v: Value, u: Value) -> Value:
        self.check(u, v)
        if u is INF:
            # inf - inf is the residual inf{w | inf + w >= inf} = 0
            return ZERO
        if v is INF:
            return INF
        return Fraction(v - u) if v > u else ZERO

    def descriptor(self) -> dict:
        return {"kind": "extended_rational"}

    def __str__(self) -> str:
        return "ExtendedRationals"


@dataclass(frozen=True)
class FiniteChain(ValueQuantale):
    """``{0, step, ..., levels*step}`` with ``u + v`` truncated at the top."""

    step: Fraction = Fraction(1)
    levels: int = 5
    _carrier: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        step = to_fraction(self.step)
        object.__setattr__(self, "step", step)
        if step <= 0:
            raise ValueError("chain step must be positive")
        if not isinstance(self.levels, int) or self.levels < 1:
            raise ValueError("chain needs at least one level")
        object.__setattr__(self, "_carrier", frozenset(self.values()))

    @property
    def top(self) -> Value:
        return self.step * self.levels

    @property
    def is_finite(self) -> bool:
        return True

    def values(self) -> tuple[Value, ...]:
        return tuple(self.step * i for i in range(self.levels + 1))

    def contains(self, v) -> bool:
        return v is not INF and not isinstance(v, bool) and v in self._carrier

    def add(self, u: Value, v: Value) -> Value:
        self.check(u, v)
        s = u + v
        top = self.top
        return top if s >= top else Fraction(s)

    def minus(self, v: Value, u: Value) -> Value:
        self.check(u, v)
        return Fraction(v - u) if v > u else ZERO

    def index(self, v: Value) -> int:
        self.check(v)
        return int(v / self.step)

    def descriptor(self) -> dict:
        return {"kind": "chain", "step": str(self.step), "levels": self.levels}

    def __str__(self) -> str:
        return f"FiniteChain(step={self.step}, levels={self.levels})"


def quantale_from_descriptor(desc: dict) -> ValueQuantale:
    kind = desc.get("kind")
    if kind == "extended_rational":
        return ExtendedRationals()
    if kind == "chain":
        return FiniteChain(Fraction(str(desc["step"])), int(desc["levels"]))
    raise ValueError(f"unknown quantale kind {kind!r}")


def parse_quantale(text: str) -> ValueQuantale:
    """Parse ``rational`` or ``chain:STEP:LEVELS``."""
    text = text.strip()
    if text in ("rational", "extended_rational"):
        return ExtendedRationals()
    parts = text.split(":")
    if len(parts) == 3 and parts[0] == "chain":
        return FiniteChain(Fraction(parts[1]), int(parts[2]))
    raise ValueError(f"bad quantale spec {text!r}; expected 'rational' or 'chain:STEP:LEVELS'")


def same_quantale(*qs: ValueQuantale) -> ValueQuantale:
    first = qs[0]
    for q in qs[1:]:
        if q != first:
            raise QuantaleMismatch(f"{first} vs {q}")
    return first


def residuation_holds(q: ValueQuantale, u: Value, v: Value, w: Value) -> bool:
    """``u + v >= w`` iff ``v >= w - u``."""
    return (q.add(u, v) >= w) == (v >= q.minus(w, u))
