"""RDF terms, triples and prefix handling.

All values are immutable. Ordering throughout the package uses the
N-Triples rendering of a term (``term.n3()``), which is what makes query
results and serialized graphs deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Tuple, Union

from .errors import (
    BlankNodeError,
    EmptyIri,
    LiteralError,
    LiteralSubject,
    MalformedQName,
    MissingScheme,
    NonIriPredicate,
    UnknownPrefix,
    WhitespaceInIri,
)

_SCHEME = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:")
_LANG = re.compile(r"[A-Za-z]+(?:-[A-Za-z0-9]+)*\Z")
BNODE_LABEL = re.compile(r"[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?\Z")

# Characters that cannot appear raw inside <...> in N-Triples.
_IRI_ESCAPED = set('<>"{}|^`\\')


def _escape_iri(value: str) -> str:
    out = []
    for ch in value:
        if ch in _IRI_ESCAPED or ord(ch) <= 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


_STRING_ESCAPES = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\t": "\\t", "\r": "\\r"}


def escape_string(text: str) -> str:
    return "".join(_STRING_ESCAPES.get(ch, ch) for ch in text)


@dataclass(frozen=True)
class Iri:
    value: str

    def __post_init__(self):
        if not isinstance(self.value, str) or not self.value:
            raise EmptyIri("IRI must be non-empty")
        if any(ch.isspace() for ch in self.value):
            raise WhitespaceInIri(f"IRI contains whitespace: {self.value!r}")
        if not _SCHEME.match(self.value):
            raise MissingScheme(f"IRI has no scheme: {self.value!r}")

    @cached_property
    def _n3(self) -> str:
        return f"<{_escape_iri(self.value)}>"

    def n3(self) -> str:
        return self._n3

    @property
    def local_name(self) -> str:
        """Text after the last ``#`` or ``/``, or the whole IRI if neither."""
        for sep in ("#", "/"):
            head, found, tail = self.value.rpartition(sep)
            if found and tail:
                return tail
        return self.value

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Literal:
    lexical: str
    datatype: Optional[Iri] = None
    language: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.lexical, str):
            raise LiteralError("literal lexical form must be text")
        if self.datatype is not None and self.language is not None:
            raise LiteralError("a literal cannot have both a datatype and a language tag")
        if self.datatype is not None and not isinstance(self.datatype, Iri):
            raise LiteralError("literal datatype must be an Iri")
        if self.language is not None and not _LANG.match(self.language):
            raise LiteralError(f"invalid language tag {self.language!r}")

    @cached_property
    def _n3(self) -> str:
        text = f'"{escape_string(self.lexical)}"'
        if self.language is not None:
            return f"{text}@{self.language}"
        if self.datatype is not None:
            return f"{text}^^{self.datatype.n3()}"
        return text

    def n3(self) -> str:
        return self._n3

    def __str__(self) -> str:
        return self.lexical


@dataclass(frozen=True)
class BlankNode:
    label: str

    def __post_init__(self):
        if not isinstance(self.label, str) or not BNODE_LABEL.match(self.label):
            raise BlankNodeError(f"invalid blank node label {self.label!r}")

    def n3(self) -> str:
        return f"_:{self.label}"

    def __str__(self) -> str:
        return self.n3()


Term = Union[Iri, Literal, BlankNode]
PrefixMap = Dict[str, Iri]


def term_kind(term: Term) -> str:
    """``"iri"``, ``"literal"`` or ``"blank"``."""
    if isinstance(term, Iri):
        return "iri"
    if isinstance(term, Literal):
        return "literal"
    return "blank"


@dataclass(frozen=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise LiteralSubject(f"literal {self.subject.n3()} cannot be a subject")
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise TypeError(f"subject must be a Term, got {type(self.subject).__name__}")
        if not isinstance(self.predicate, Iri):
            raise NonIriPredicate(f"predicate must be an IRI, got {self.predicate!r}")
        if not isinstance(self.object, (Iri, Literal, BlankNode)):
            raise TypeError(f"object must be a Term, got {type(self.object).__name__}")

    def __iter__(self):
        return iter((self.subject, self.predicate, self.object))

    @property
    def key(self) -> Tuple[str, str, str]:
        """Canonical sort key: rendered (subject, predicate, object)."""
        return (self.subject.n3(), self.predicate.n3(), self.object.n3())

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."


def make_iri(text: str) -> Iri:
    return Iri(text)


def make_triple(s: Term, p: Term, o: Term) -> Triple:
    return Triple(s, p, o)


def expand_qname(prefixes: PrefixMap, qname: str) -> Iri:
    """Resolve ``prefix:local`` against ``prefixes``.

    >>> expand_qname({"foaf": Iri("http://xmlns.com/foaf/0.1/")}, "foaf:college")
    Iri(value='http://xmlns.com/foaf/0.1/college')
    """
    if qname.count(":") != 1:
        raise MalformedQName(f"expected exactly one ':' in {qname!r}")
    prefix, _, local = qname.partition(":")
    try:
        namespace = prefixes[prefix]
    except KeyError:
        raise UnknownPrefix(prefix) from None
    return Iri(str(namespace) + local)


RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
XSD = "http://www.w3.org/2001/XMLSchema#"
FOAF = "http://xmlns.com/foaf/0.1/"

RDF_TYPE = Iri(RDF + "type")
RDFS_SUBCLASS_OF = Iri(RDFS + "subClassOf")
RDFS_DOMAIN = Iri(RDFS + "domain")
RDFS_RANGE = Iri(RDFS + "range")
OWL_THING = Iri(OWL + "Thing")
OWL_CLASS = Iri(OWL + "Class")
OWL_ONTOLOGY = Iri(OWL + "Ontology")
OWL_OBJECT_PROPERTY = Iri(OWL + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL + "DatatypeProperty")
XSD_STRING = Iri(XSD + "string")
