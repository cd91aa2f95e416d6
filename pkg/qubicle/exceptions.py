# -*- encoding: utf-8 -*-

"""
Exception Hierarchy for the Qubicle Module

Every error raised by the module is a subclass of :class:`QubicleError`
and names the violated invariant in its message. The errors are not
derived from ``ValueError`` on purpose of :mod:`pydantic` - a model
validator raising any of these is propagated to the caller as is and
not wrapped into a ``pydantic.ValidationError`` object.

The numerical invariants of a state or an operator (finite entries,
hermiticity, unit trace, positivity, normalization, dimension and
unitarity) are grouped under :class:`ValidationFailure` which the
command line maps to the exit code ``2``, all the other errors map
to exit code ``1``.
"""

from typing import Optional

class QubicleError(Exception):
    """
    Base Class of all the Errors Raised by the Module
    """

    pass


class ValidationFailure(QubicleError):
    """
    Numerical Validation of a State or an Operator Failed
    """

    pass


class NonHermitian(ValidationFailure):
    pass


class NotPSD(ValidationFailure):
    pass


class TraceNotOne(ValidationFailure):
    pass


class BadDimension(ValidationFailure):
    pass


class NotNormalized(ValidationFailure):
    pass


class NotUnitary(ValidationFailure):
    pass


class NonFinite(ValidationFailure):
    pass


class OutOfRange(QubicleError):
    pass


class LengthMismatch(QubicleError):
    pass


class DimensionMismatch(QubicleError):
    pass


class WeightError(QubicleError):
    pass


class LabelError(QubicleError):
    pass


class UnknownGate(QubicleError):
    pass


class NotCoprime(QubicleError):
    pass


class UnsupportedModulus(QubicleError):
    pass


class ParseError(QubicleError):
    pass


class IoError(QubicleError):
    pass


class ConfigError(QubicleError):
    """
    Invalid Configuration of an Experiment

    :type  field: str
    :param field: Name of the configuration field which violates the
        constraint, e.g. ``p_step``. The name is also prefixed to the
        message for the command line output.
    """

    def __init__(self, message : str, field : Optional[str] = None) -> None:
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)
