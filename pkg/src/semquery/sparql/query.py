"""SPARQL subset: PREFIX, SELECT [DISTINCT] vars|*, and one basic graph pattern.

Grammar accepted (keywords are case-insensitive)::

    query    := ("PREFIX" PNAME_NS IRIREF)* "SELECT" "DISTINCT"? (VAR+ | "*")
                "WHERE"? "{" triples? "}"
    triples  := subject verb objects (";" verb objects)* ("." triples?)?
    objects  := object ("," object)*

Subjects are variables or IRIs, verbs are variables, IRIs or ``a``,
objects may also be literals. Blank nodes, FILTER, OPTIONAL and the rest of
SPARQL are rejected with a positioned ParseError.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .._scanner import Scanner
from ..errors import EmptyProjection, ProjectedVariableUnused
from ..store import TriplePattern
from ..terms import PrefixMap, Term
from ..turtle import TermReader

_VAR = re.compile(r"[?$]([A-Za-z][A-Za-z0-9_]*)")


@dataclass(frozen=True)
class Variable:
    name: str

    def n3(self) -> str:
        return f"?{self.name}"


Slot = Union[Variable, Term]


@dataclass(frozen=True)
class QueryPattern:
    subject: Slot
    predicate: Slot
    object: Slot

    def slots(self) -> Tuple[Slot, Slot, Slot]:
        return (self.subject, self.predicate, self.object)

    def variables(self) -> List[str]:
        seen: List[str] = []
        for s in self.slots():
            if isinstance(s, Variable) and s.name not in seen:
                seen.append(s.name)
        return seen

    def substitute(self, binding: Dict[str, Term]) -> TriplePattern:
        """Replace bound variables; unbound ones become wildcards."""
        return TriplePattern(*(
            binding.get(s.name) if isinstance(s, Variable) else s for s in self.slots()
        ))

    def n3(self) -> str:
        return " ".join(s.n3() for s in self.slots()) + " ."


@dataclass
class Query:
    prefixes: PrefixMap = field(default_factory=dict)
    projection: List[str] = field(default_factory=list)
    bgp: List[QueryPattern] = field(default_factory=list)
    distinct: bool = False

    def variables(self) -> List[str]:
        """All variables in order of first appearance in the pattern."""
        seen: List[str] = []
        for pattern in self.bgp:
            for name in pattern.variables():
                if name not in seen:
                    seen.append(name)
        return seen


class _QueryParser:
    def __init__(self, text: str):
        self.sc = Scanner(text)
        self.terms = TermReader(self.sc, {})

    def keyword(self, word: str) -> bool:
        sc = self.sc
        sc.skip_ws()
        if sc.peek_word().upper() == word:
            sc.pos += len(word)
            return True
        return False

    def variable(self) -> Optional[Variable]:
        m = self.sc.match(_VAR)
        return Variable(m.group(1)) if m else None

    def slot(self, position: str) -> Slot:
        sc = self.sc
        sc.skip_ws()
        if sc.peek() in "?$" and not sc.at_end():
            var = self.variable()
            if var is None:
                sc.fail("malformed variable name")
            return var
        if sc.startswith("_:") or sc.startswith("["):
            sc.fail("blank nodes are not supported in queries")
        if position == "predicate" and self.terms.is_keyword_a():
            return self.terms.predicate()
        if sc.peek() in ('"', "'") and not sc.at_end():
            if position != "object":
                sc.fail(f"a literal cannot appear in {position} position")
            return self.terms.literal()
        if sc.at_end() or sc.peek() in "{}.;,":
            sc.fail(f"expected {position}, found {sc.describe_here()}")
        return self.terms.iri()

    def parse(self) -> Query:
        sc = self.sc
        query = Query(prefixes=self.terms.prefixes)
        while self.keyword("PREFIX"):
            self.terms.read_prefix_decl(sparql_style=True)

        sc.skip_ws()
        select_line, select_col = sc.location()
        if not self.keyword("SELECT"):
            sc.fail(f"expected SELECT, found {sc.describe_here()}")
        query.distinct = self.keyword("DISTINCT")
        star = False
        sc.skip_ws()
        if sc.startswith("*"):
            sc.pos += 1
            star = True
        else:
            while True:
                sc.skip_ws()
                var = self.variable()
                if var is None:
                    break
                if var.name not in query.projection:
                    query.projection.append(var.name)
        if not star and not query.projection and not sc.startswith("{") and sc.peek_word().upper() != "WHERE":
            sc.fail(f"expected a variable or '*', found {sc.describe_here()}")

        self.keyword("WHERE")
        sc.skip_ws()
        sc.expect("{", "'{'")
        self.triples_block(query)
        sc.skip_ws()
        sc.expect("}", "'}'")
        sc.skip_ws()
        if not sc.at_end():
            sc.fail(f"unexpected content after query: {sc.describe_here()}")

        if star:
            query.projection = query.variables()
        if not query.projection:
            raise EmptyProjection(f"SELECT at {select_line}:{select_col} projects no variables")
        used = set(query.variables())
        for name in query.projection:
            if name not in used:
                raise ProjectedVariableUnused(name)
        return query

    def triples_block(self, query: Query) -> None:
        sc = self.sc
        while True:
            sc.skip_ws()
            if sc.startswith("}") or sc.at_end():
                return
            subject = self.slot("subject")
            while True:
                predicate = self.slot("predicate")
                while True:
                    query.bgp.append(QueryPattern(subject, predicate, self.slot("object")))
                    sc.skip_ws()
                    if not sc.startswith(","):
                        break
                    sc.pos += 1
                if not sc.startswith(";"):
                    break
                while sc.startswith(";"):
                    sc.pos += 1
                    sc.skip_ws()
                if sc.startswith(".") or sc.startswith("}"):
                    break
            sc.skip_ws()
            if sc.startswith("."):
                sc.pos += 1
            elif not sc.startswith("}"):
                sc.fail(f"expected '.', ';', ',' or '}}', found {sc.describe_here()}")


def parse_query(text: str) -> Query:
    return _QueryParser(text).parse()
