"""Exception hierarchy with stable error-code strings.

Every domain error raised by the library carries a ``code`` attribute that the
CLI prints verbatim, so scripts can match on codes rather than messages.
"""

from __future__ import annotations


class PlatknotError(Exception):
    """Base class for all domain errors."""

    code = "Error"

    def __init__(self, message: str = ""):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return f"{self.code}: {self.message}" if self.message else self.code


class NonBijectiveRow(PlatknotError):
    code = "NonBijectiveRow"


class NonAssociativeTable(PlatknotError):
    code = "NonAssociativeTable"


class BadIdentity(PlatknotError):
    code = "BadIdentity"


class OrderCapExceeded(PlatknotError):
    code = "OrderCapExceeded"


class AutCapExceeded(PlatknotError):
    code = "AutCapExceeded"


class MalformedGroupFile(PlatknotError):
    code = "MalformedGroupFile"


class NotHomomorphism(PlatknotError):
    code = "NotHomomorphism"


class NotSurjective(PlatknotError):
    code = "NotSurjective"


class NonCentralKernel(PlatknotError):
    code = "NonCentralKernel"


class BaseNotPerfect(PlatknotError):
    code = "BaseNotPerfect"


class CorruptExtension(PlatknotError):
    code = "CorruptExtension"


class BadOrbitStructure(PlatknotError):
    code = "BadOrbitStructure"


class MalformedRecord(PlatknotError):
    code = "MalformedRecord"


class DanglingArc(PlatknotError):
    code = "DanglingArc"


class DisconnectedDiagram(PlatknotError):
    code = "DisconnectedDiagram"


class CrossingMatching(PlatknotError):
    code = "CrossingMatching"


class StrandMismatch(PlatknotError):
    code = "StrandMismatch"


class SignMismatch(PlatknotError):
    code = "SignMismatch"


class DivisibilityViolation(PlatknotError):
    code = "DivisibilityViolation"


class LiftAmbiguity(PlatknotError):
    code = "LiftAmbiguity"


class BudgetExceeded(PlatknotError):
    code = "BudgetExceeded"


class NotSimpleGroup(PlatknotError):
    code = "NotSimpleGroup"


class EnumerationBudgetExceeded(PlatknotError):
    code = "EnumerationBudgetExceeded"


class ActionMismatch(PlatknotError):
    code = "ActionMismatch"


class UnknownGadget(PlatknotError):
    code = "UnknownGadget"


class UnknownClass(PlatknotError):
    code = "UnknownClass"
