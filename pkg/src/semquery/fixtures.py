"""Access to the data files bundled with the package."""

from __future__ import annotations

from importlib import resources
from typing import List

from .ntriples import parse_ntriples
from .terms import Triple
from .turtle import parse_turtle_subset


def read_text(name: str) -> str:
    return resources.files("semquery").joinpath("data", name).read_text(encoding="utf-8")


def foaf_triples() -> List[Triple]:
    """The example FOAF statements about Bharti Vidyapeeth and Siddharth Gupta."""
    return parse_ntriples(read_text("foaf.nt"))


def college_graph() -> List[Triple]:
    return parse_turtle_subset(read_text("college_foaf.ttl"))


def example_query() -> str:
    return read_text("example_query.rq")


def universities_ntriples() -> str:
    """Canonical N-Triples export of the universities ontology, as shipped."""
    return read_text("universities.nt")
