"""Exception hierarchy.

Validation errors (bad user input) and consistency errors (a mathematical
check failed) are kept apart so the CLI can map them to distinct exit codes.
"""


class HigherVerError(Exception):
    pass


class ValidationError(HigherVerError, ValueError):
    """Input outside an operation's domain."""


class ConsistencyError(HigherVerError, ArithmeticError):
    """A mathematical self-check failed; never silently ignored."""


class InvalidPrime(ValidationError):
    pass


class NotInNonnegativeSpan(ValidationError):
    pass


class NotACharacter(ValidationError):
    pass


class NotInAn(ValidationError):
    pass


class BadSimpleIndex(ValidationError, IndexError):
    pass


class PromiseViolated(ValidationError):
    pass


class UnsupportedType(ValidationError):
    pass


class NotDominant(ValidationError):
    pass


class NotInClosedAlcove(ValidationError):
    pass


class PrimeTooSmall(ValidationError):
    pass


class CartanSingular(ConsistencyError):
    pass


class FusionConsistency(ConsistencyError):
    pass


class DivisionNotExact(ConsistencyError):
    pass
