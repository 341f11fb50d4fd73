"""semquery: RDF triples, a SPARQL subset, a small ontology layer and
keyword co-occurrence search."""

from .errors import ParseDiagnostic, ParseError, SemqueryError
from .ntriples import parse_ntriples, serialize_ntriples
from .ontology import (
    Individual,
    OntClass,
    Ontology,
    OntProperty,
    load_universities_fixture,
)
from .search import Corpus, KeywordSet, apply_discard, example_corpus, search
from .sparql import evaluate, format_solutions, parse_query, plan_bgp
from .store import Store, TriplePattern
from .terms import BlankNode, Iri, Literal, Triple, expand_qname, make_iri, make_triple
from .turtle import parse_turtle_subset

__version__ = "0.1.0"

__all__ = [
    "BlankNode",
    "Corpus",
    "Individual",
    "Iri",
    "KeywordSet",
    "Literal",
    "OntClass",
    "OntProperty",
    "Ontology",
    "ParseDiagnostic",
    "ParseError",
    "SemqueryError",
    "Store",
    "Triple",
    "TriplePattern",
    "apply_discard",
    "evaluate",
    "example_corpus",
    "expand_qname",
    "format_solutions",
    "load_universities_fixture",
    "make_iri",
    "make_triple",
    "parse_ntriples",
    "parse_query",
    "parse_turtle_subset",
    "plan_bgp",
    "search",
    "serialize_ntriples",
]
