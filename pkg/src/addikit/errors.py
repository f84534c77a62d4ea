"""Exception hierarchy shared by every addikit module."""

from __future__ import annotations


class AddikitError(Exception):
    """Base class for all errors raised by addikit."""


class InvalidParams(AddikitError, ValueError):
    pass


class NonPrimeCharacteristic(InvalidParams):
    pass


class FieldTooLarge(AddikitError):
    pass


class FieldMismatch(AddikitError, TypeError):
    pass


class DivisionByZero(AddikitError, ZeroDivisionError):
    pass


class NotASubfield(AddikitError):
    pass


class ResultNotInSubfield(AddikitError):
    """An internal consistency failure: a map landed outside its target subfield."""


class DimensionMismatch(AddikitError, ValueError):
    pass


class InvalidDimension(InvalidParams):
    pass


class BudgetExceeded(AddikitError):
    """An exhaustive enumeration would exceed the configured cap."""

    def __init__(self, what: str, needed: int, cap: int) -> None:
        super().__init__(f"{what}: needs {needed} items, cap is {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


class ZeroColumn(AddikitError, ValueError):
    pass


class SingularMatrix(AddikitError, ValueError):
    pass


class DependentRows(AddikitError, ValueError):
    pass


class DependentLambdas(InvalidParams):
    pass


class SingularMoore(AddikitError):
    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


class InternalInconsistency(AddikitError):
    pass


class RankDeficientMember(AddikitError):
    def __init__(self, message: str, x: int | None = None) -> None:
        super().__init__(message)
        self.x = x


class RankDeficientCode(AddikitError):
    pass


class IndexOutOfRange(AddikitError, IndexError):
    pass
