"""
Self-Dual Codes - Exceptions
=============================
Centralized error types. The ``exit_code`` on each class is what the CLI
returns when the error escapes a pipeline:

  1  mathematical outcome (a certificate or an unmet hypothesis)
  2  usage / malformed input
  3  internal inconsistency (a bug, never a property of the input)
"""


class SelfDualError(Exception):
    """Base class for every error raised by the toolkit."""
    exit_code = 2

    def __init__(self, message='', **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def as_dict(self):
        data = {'error': type(self).__name__, 'message': self.message}
        data.update(self.details)
        return data


# ---------------------------------------------------------------------------
# Mathematical outcomes (exit 1)
# ---------------------------------------------------------------------------

class MathematicalFailure(SelfDualError):
    exit_code = 1


class FailureCertificate(MathematicalFailure):
    """A self-dual composition factor of odd multiplicity blocks the construction."""

    def __init__(self, message='', *, label=None, dim=None, multiplicity=None,
                 report=None, **details):
        super().__init__(message, label=label, dim=dim,
                         multiplicity=multiplicity, **details)
        self.label = label
        self.dim = dim
        self.multiplicity = multiplicity
        self.report = report


class PreconditionViolated(MathematicalFailure):
    pass


class NoSquareRoot(MathematicalFailure):
    pass


class HullMismatch(MathematicalFailure):
    pass


class NotCoprime(MathematicalFailure):
    pass


class NotOddOrder(MathematicalFailure):
    pass


class BudgetExceeded(MathematicalFailure):
    pass


# ---------------------------------------------------------------------------
# Usage errors (exit 2)
# ---------------------------------------------------------------------------

class ParseError(SelfDualError):

    def __init__(self, message='', *, line=None, column=None, **details):
        where = f'line {line}' if line is not None else ''
        if column is not None:
            where += f', column {column}'
        super().__init__(f'{where}: {message}' if where else message,
                         line=line, column=column, **details)
        self.line = line
        self.column = column


class ValidationError(SelfDualError):

    def __init__(self, message='', *, rule=None, **details):
        super().__init__(f'{rule}: {message}' if rule else message, rule=rule, **details)
        self.rule = rule


class DimensionMismatch(SelfDualError):
    pass


class DegreeMismatch(SelfDualError):
    pass


class InvalidPermutation(SelfDualError):
    pass


class NotPrime(SelfDualError):
    pass


class TooLarge(SelfDualError):
    pass


class OrderCapExceeded(SelfDualError):
    pass


class NotSubgroup(SelfDualError):
    pass


class NotNormal(SelfDualError):
    pass


class NotSubmodule(SelfDualError):
    pass


class VectorOutsideCarrier(SelfDualError):
    pass


class NotIrreducible(SelfDualError):
    pass


class DivisionByZero(SelfDualError, ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# Internal errors (exit 3)
# ---------------------------------------------------------------------------

class InternalError(SelfDualError):
    exit_code = 3


class RationalityFailure(InternalError):
    pass


class InternalCaseError(InternalError):
    pass


class NotElementaryAbelian(InternalError):
    pass


class DecompositionStalled(InternalError):
    pass


class VerificationMismatch(InternalError):
    pass
