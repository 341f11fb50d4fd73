"""Exception hierarchy shared by every semquery module."""

from __future__ import annotations

from dataclasses import dataclass


class SemqueryError(Exception):
    """Base class for all errors raised by this package."""


class RdfError(SemqueryError, ValueError):
    pass


class IriError(RdfError):
    pass


class EmptyIri(IriError):
    pass


class WhitespaceInIri(IriError):
    pass


class MissingScheme(IriError):
    pass


class LiteralError(RdfError):
    pass


class BlankNodeError(RdfError):
    pass


class UnknownPrefix(RdfError):
    def __init__(self, prefix: str):
        super().__init__(f"unknown prefix {prefix!r}")
        self.prefix = prefix


class MalformedQName(RdfError):
    pass


class TripleError(RdfError):
    pass


class LiteralSubject(TripleError):
    pass


class NonIriPredicate(TripleError):
    pass


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    severity: str = "error"

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class ParseError(RdfError):
    """Fail-fast syntax error carrying a 1-based line/column diagnostic."""

    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic

    @property
    def line(self) -> int:
        return self.diagnostic.line

    @property
    def column(self) -> int:
        return self.diagnostic.column


class PrefixParseError(ParseError, UnknownPrefix):
    """An undeclared prefix met while parsing; catchable as either parent."""

    def __init__(self, diagnostic: ParseDiagnostic, prefix: str):
        ParseError.__init__(self, diagnostic)
        self.prefix = prefix


class OntologyError(SemqueryError, ValueError):
    pass


class DuplicateClass(OntologyError):
    pass


class UnknownParent(OntologyError):
    pass


class CycleWouldForm(OntologyError):
    pass


class UnknownDomainClass(OntologyError):
    pass


class DuplicateProperty(OntologyError):
    pass


class DuplicateIndividual(OntologyError):
    pass


class UnknownClass(OntologyError):
    pass


class UnknownProperty(OntologyError):
    pass


class DomainViolation(OntologyError):
    def __init__(self, prop, cls):
        super().__init__(f"property {prop} has a domain that does not cover class {cls}")
        self.property = prop
        self.cls = cls


class QueryError(SemqueryError, ValueError):
    pass


class EmptyProjection(QueryError):
    pass


class ProjectedVariableUnused(QueryError):
    def __init__(self, variable: str):
        super().__init__(f"projected variable ?{variable} does not occur in the WHERE clause")
        self.variable = variable


class FractionOutOfRange(SemqueryError, ValueError):
    pass
