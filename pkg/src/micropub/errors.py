"""Exception hierarchy shared by every micropub module."""

from __future__ import annotations


class MicropubError(Exception):
    """Base class for all errors raised by this package."""


# -- core model -------------------------------------------------------------


class ModelError(MicropubError):
    pass


class DuplicateId(ModelError):
    pass


class DuplicateElement(ModelError):
    pass


class AssertQuoteConflict(ModelError):
    pass


class EndpointNotElement(ModelError):
    pass


class SelfEdge(ModelError):
    pass


class NotAStatement(ModelError):
    pass


class NotAnElement(ModelError):
    pass


class InvalidRepresentation(ModelError):
    pass


class InvalidQualifier(ModelError):
    pass


# -- inference --------------------------------------------------------------


class CycleDetected(MicropubError):
    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("supports cycle: " + " -> ".join(cycle))


# -- network ----------------------------------------------------------------


class NetworkError(MicropubError):
    pass


class ConflictingRepresentation(NetworkError):
    pass


class InvalidMicropublication(NetworkError):
    def __init__(self, mp_id: str, report):
        self.mp_id = mp_id
        self.report = report
        codes = ", ".join(sorted({f.code for f in report.errors}))
        super().__init__(f"micropublication {mp_id} is invalid: {codes}")


class NotAReference(NetworkError):
    pass


class UnknownStatement(NetworkError):
    pass


class UnknownClaim(NetworkError):
    pass


class UnknownMicropublication(NetworkError):
    pass


class HolotypeNotMember(NetworkError):
    pass


class NonStatementMember(NetworkError):
    pass


class GroupTooSmall(NetworkError):
    pass


# -- serialization ----------------------------------------------------------


class SerializationError(MicropubError):
    pass


class InvalidInput(SerializationError):
    pass


class CanonicalSyntaxError(SerializationError):
    """Malformed MPJSON text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class SchemaError(SerializationError):
    pass


class VersionError(SerializationError):
    pass


class UnknownTerm(SerializationError):
    pass


class NoClaim(SerializationError):
    pass


class MissingGraph(SerializationError):
    pass


class MissingAssertion(SerializationError):
    pass


# -- anchoring --------------------------------------------------------------


class AnchorError(MicropubError):
    pass


class NotFound(AnchorError):
    pass


class Ambiguous(AnchorError):
    pass


class OutOfRange(AnchorError):
    pass


class CannotDisambiguate(AnchorError):
    pass


class LostAnchor(AnchorError):
    pass
