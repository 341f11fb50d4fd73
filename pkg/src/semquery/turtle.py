"""Reader for a practical Turtle subset.

Supported: ``@prefix`` and SPARQL-style ``PREFIX`` directives, IRIs,
prefixed names, ``a``, blank node labels, quoted literals with language
tags or datatypes, and the ``;`` / ``,`` abbreviations. Not supported:
collections, ``[]`` blank nodes, numeric/boolean shorthand, ``@base``,
long strings.
"""

from __future__ import annotations

from typing import List

from ._scanner import Scanner
from .errors import LiteralError, ParseDiagnostic, PrefixParseError, UnknownPrefix
from .terms import RDF_TYPE, Iri, Literal, PrefixMap, Term, Triple, expand_qname


class TermReader:
    """Reads Turtle-style terms from a scanner, resolving prefixed names."""

    def __init__(self, sc: Scanner, prefixes: PrefixMap):
        self.sc = sc
        self.prefixes = prefixes

    def read_prefix_decl(self, sparql_style: bool) -> None:
        sc = self.sc
        sc.skip_ws()
        prefix, local, start = sc.read_pname()
        if local:
            sc.fail("prefix declaration must end with ':'", start)
        sc.skip_ws()
        self.prefixes[prefix] = sc.read_iriref()
        if not sparql_style:
            sc.skip_ws()
            sc.expect(".", "'.' after @prefix")

    def iri(self) -> Iri:
        sc = self.sc
        if sc.startswith("<"):
            return sc.read_iriref()
        prefix, local, start = sc.read_pname()
        try:
            return expand_qname(self.prefixes, f"{prefix}:{local}")
        except UnknownPrefix:
            line, col = sc.location(start)
            raise PrefixParseError(
                ParseDiagnostic(line, col, f"unknown prefix {prefix!r}"), prefix
            ) from None

    def literal(self) -> Literal:
        sc = self.sc
        start = sc.pos
        lexical = sc.read_string(allow_single=True)
        language = datatype = None
        if sc.startswith("@"):
            language = sc.read_langtag()
        elif sc.startswith("^^"):
            sc.pos += 2
            datatype = self.iri()
        try:
            return Literal(lexical, datatype, language)
        except LiteralError as exc:
            sc.literal_error(exc, start)

    def is_keyword_a(self) -> bool:
        sc = self.sc
        if not sc.startswith("a"):
            return False
        nxt = sc.text[sc.pos + 1 : sc.pos + 2]
        return nxt == "" or nxt in " \t\r\n<\"'?$_#"

    def subject(self) -> Term:
        if self.sc.startswith("_:"):
            return self.sc.read_bnode()
        return self.iri()

    def predicate(self) -> Iri:
        if self.is_keyword_a():
            self.sc.pos += 1
            return RDF_TYPE
        return self.iri()

    def object(self) -> Term:
        sc = self.sc
        if sc.startswith("_:"):
            return sc.read_bnode()
        if sc.peek() in ('"', "'"):
            return self.literal()
        return self.iri()


def parse_turtle_subset(text: str, prefixes: PrefixMap = None) -> List[Triple]:
    """Parse a Turtle-subset document into triples, in source order."""
    sc = Scanner(text)
    reader = TermReader(sc, dict(prefixes or {}))
    triples: List[Triple] = []
    while True:
        sc.skip_ws()
        if sc.at_end():
            return triples
        if sc.startswith("@prefix"):
            sc.pos += len("@prefix")
            reader.read_prefix_decl(sparql_style=False)
            continue
        if sc.peek_word().upper() == "PREFIX":
            sc.pos += len("PREFIX")
            reader.read_prefix_decl(sparql_style=True)
            continue
        if sc.startswith("@"):
            sc.fail(f"unsupported directive {sc.describe_here()}")

        subject = reader.subject()
        while True:
            sc.skip_ws()
            predicate = reader.predicate()
            while True:
                sc.skip_ws()
                triples.append(Triple(subject, predicate, reader.object()))
                sc.skip_ws()
                if not sc.startswith(","):
                    break
                sc.pos += 1
            if not sc.startswith(";"):
                break
            while sc.startswith(";"):
                sc.pos += 1
                sc.skip_ws()
            if sc.startswith("."):
                break
        sc.expect(".", "'.', ';' or ','")
