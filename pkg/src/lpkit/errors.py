"""Exception hierarchy.

Every error carries a ``kind`` string (the class name) so the command line
front end can report it in its JSON error envelope.
"""


class LpkitError(Exception):
    @property
    def kind(self) -> str:
        return type(self).__name__


class DivisionByZero(LpkitError, ZeroDivisionError):
    pass


class FieldMismatch(LpkitError, TypeError):
    pass


class NoRootInField(LpkitError):
    """A square root (or a root q of q + 1/q = beta) does not exist in the field.

    ``extension`` names a field extension that would contain the root.
    """

    def __init__(self, message, extension=None):
        super().__init__(message)
        self.extension = extension


class ParseError(LpkitError, ValueError):
    pass


class InvalidArray(LpkitError, ValueError):
    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = list(failures)


class DiameterTooSmall(LpkitError, ValueError):
    pass


class NotConstantRatio(LpkitError, ValueError):
    pass


class CharacteristicDividesD(LpkitError, ValueError):
    pass


class SeedInconsistent(LpkitError, AssertionError):
    pass


class ZeroParameter(LpkitError, ValueError):
    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = list(indices)


class ZeroDenominator(LpkitError, ArithmeticError):
    pass


class DegenerateCoefficient(LpkitError, ArithmeticError):
    pass


class DegenerateDelta(LpkitError, ValueError):
    pass


class MissingQ(LpkitError, ValueError):
    pass


class UnsupportedType(LpkitError, ValueError):
    pass


class ValidationFailed(LpkitError, ValueError):
    pass


class ZeroZeta(LpkitError, ValueError):
    pass


class WrongCase(LpkitError, ValueError):
    pass


class PropertyViolation(LpkitError, AssertionError):
    pass
