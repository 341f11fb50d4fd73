"""Rendering of solution sequences as table, JSON or CSV text."""

from __future__ import annotations

import csv
import io
import json

from ..terms import BlankNode, Iri, Literal, Term
from .engine import SolutionSequence

FORMATS = ("table", "json", "csv")


def term_json(term: Term) -> dict:
    if isinstance(term, Iri):
        return {"type": "iri", "value": term.value}
    if isinstance(term, BlankNode):
        return {"type": "blank", "value": term.label}
    out = {"type": "literal", "value": term.lexical}
    if term.datatype is not None:
        out["datatype"] = str(term.datatype)
    if term.language is not None:
        out["lang"] = term.language
    return out


def _csv_value(term: Term) -> str:
    if isinstance(term, Literal):
        return term.lexical
    if isinstance(term, Iri):
        return term.value
    return term.n3()


def to_json(solutions: SolutionSequence) -> str:
    doc = {
        "vars": list(solutions.variables),
        "rows": [{v: term_json(row[v]) for v in solutions.variables} for row in solutions],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def to_csv(solutions: SolutionSequence) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(solutions.variables)
    for row in solutions:
        writer.writerow([_csv_value(row[v]) for v in solutions.variables])
    return buf.getvalue()


def to_table(solutions: SolutionSequence) -> str:
    header = [f"?{v}" for v in solutions.variables]
    body = [[row[v].n3() for v in solutions.variables] for row in solutions]
    widths = [max([len(h)] + [len(r[i]) for r in body]) for i, h in enumerate(header)]
    lines = [" | ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()
             for cells in [header] + body]
    return "\n".join(lines) + "\n"


def format_solutions(solutions: SolutionSequence, format: str = "table") -> str:
    if format == "json":
        return to_json(solutions)
    if format == "csv":
        return to_csv(solutions)
    if format == "table":
        return to_table(solutions)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
