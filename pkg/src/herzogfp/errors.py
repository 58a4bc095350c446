"""Exception hierarchy shared by every layer of the package."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all errors raised by herzogfp."""


class FieldMismatch(AlgebraError):
    """Two operands live over different coefficient fields or rings."""


class DimensionMismatch(AlgebraError):
    """A monomial, polynomial or order has the wrong number of variables."""


class BadPrime(AlgebraError):
    """Reduction modulo ``p`` is not defined or drops information."""

    def __init__(self, p: int, reason: str):
        super().__init__(f"bad prime {p}: {reason}")
        self.p = p
        self.reason = reason


class BudgetExceeded(AlgebraError):
    """A Groebner computation hit its pair-reduction budget."""

    def __init__(self, budget: int):
        super().__init__(f"Groebner budget of {budget} pair reductions exceeded")
        self.budget = budget


class CapExceeded(AlgebraError):
    """A combinatorial enumeration would be larger than the configured cap."""

    def __init__(self, size: int, cap: int, what: str = "enumeration"):
        super().__init__(f"{what} of size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class SingularReduction(AlgebraError):
    """The reduction of a curve modulo ``p`` is singular."""

    def __init__(self, p: int):
        super().__init__(f"reduction modulo {p} is singular")
        self.p = p


class InvalidOrder(AlgebraError):
    """A weight matrix does not define a global monomial order."""


class ParseError(AlgebraError):
    """Syntax error in textual input, annotated with a character position."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.message = message
        self.text = text
        self.position = position
        if position is None:
            super().__init__(message)
        else:
            caret = " " * position + "^"
            super().__init__(f"{message} at position {position}\n  {text}\n  {caret}")
