"""Exception hierarchy shared by every module."""


class LawvereError(Exception):
    """Base class for all library errors."""


class QuantaleMismatch(LawvereError):
    pass


class UnsupportedEnumeration(LawvereError):
    """An operation needs a finite value set but got the extended rationals."""


class ShapeError(LawvereError):
    pass


class AxiomViolation(LawvereError):
    pass


class InvalidWeight(LawvereError):
    pass


class NotACompleteLattice(LawvereError):
    pass


class NotOpContinuous(LawvereError):
    pass


class NotTensored(LawvereError):
    pass


class NotSeparated(LawvereError):
    pass


class NotCocomplete(LawvereError):
    pass


class FormulaInapplicable(LawvereError):
    pass


class DomainMismatch(LawvereError):
    pass


class InvalidStructure(LawvereError):
    pass


class MalformedDocument(LawvereError, ValueError):
    """Input text does not describe a structure of the expected shape."""


class DslError(LawvereError, ValueError):
    """Syntax or type error in an expression."""
