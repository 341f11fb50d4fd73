"""N-Triples reading and canonical writing."""

from __future__ import annotations

from typing import Iterable, List

from ._scanner import Scanner
from .errors import LiteralError
from .terms import Literal, Term, Triple


def _read_subject(sc: Scanner) -> Term:
    if sc.startswith("<"):
        return sc.read_iriref()
    if sc.startswith("_:"):
        return sc.read_bnode()
    sc.fail(f"expected subject (IRI or blank node), found {sc.describe_here()}")


def _read_object(sc: Scanner) -> Term:
    if sc.startswith("<"):
        return sc.read_iriref()
    if sc.startswith("_:"):
        return sc.read_bnode()
    if sc.startswith('"'):
        start = sc.pos
        lexical = sc.read_string()
        language = datatype = None
        if sc.startswith("@"):
            language = sc.read_langtag()
        elif sc.startswith("^^"):
            sc.pos += 2
            datatype = sc.read_iriref()
        try:
            return Literal(lexical, datatype, language)
        except LiteralError as exc:
            sc.literal_error(exc, start)
    sc.fail(f"expected object (IRI, blank node or literal), found {sc.describe_here()}")


def parse_line(line: str, lineno: int = 1):
    """Parse one line; returns a Triple, or None for blank/comment lines."""
    sc = Scanner(line, first_line=lineno)
    sc.skip_ws(newlines=False)
    if sc.at_end():
        return None
    s = _read_subject(sc)
    sc.skip_ws(newlines=False)
    if not sc.startswith("<"):
        sc.fail(f"expected predicate IRI, found {sc.describe_here()}")
    p = sc.read_iriref()
    sc.skip_ws(newlines=False)
    o = _read_object(sc)
    sc.skip_ws(newlines=False)
    sc.expect(".", "'.' terminating the triple")
    sc.skip_ws(newlines=False)
    if not sc.at_end():
        sc.fail(f"unexpected content after '.': {sc.describe_here()}")
    return Triple(s, p, o)


def parse_ntriples(text: str) -> List[Triple]:
    """Parse an N-Triples document, one triple per line.

    Order and duplicates are preserved. Raises ParseError on the first
    malformed line.
    """
    triples = []
    # split on LF only: str.splitlines would also break on U+2028 etc.
    for lineno, line in enumerate(text.split("\n"), start=1):
        t = parse_line(line, lineno)
        if t is not None:
            triples.append(t)
    return triples


def serialize_ntriples(triples: Iterable[Triple]) -> str:
    """Canonical N-Triples: deduplicated, sorted by rendered (s, p, o), LF-terminated."""
    lines = sorted({t.key for t in triples})
    return "".join(f"{s} {p} {o} .\n" for s, p, o in lines)
