"""Command-line front end.

Exit codes: 0 on success (empty results included), 1 for data errors
(unreadable or malformed graphs, corpora and ontologies), 2 for usage
errors, which include malformed SPARQL query text.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .errors import ParseError, QueryError, SemqueryError
from .ontology import DATATYPE, OBJECT, ROOT, Ontology, load_universities_fixture, ontology_from_triples
from .search import Corpus, CorpusError, example_corpus, keysets_from_ontology, search
from .sparql import FORMATS, evaluate, format_solutions, parse_query
from .store import Store, read_graph
from .ntriples import serialize_ntriples

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 1, 2


class DataError(Exception):
    """A user-supplied file could not be read or parsed."""


class UsageError(Exception):
    pass


def _fraction(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {text}")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _load_graphs(paths: Sequence[str]) -> Store:
    store = Store()
    for path in paths:
        try:
            store.update(read_graph(path))
        except ParseError as exc:
            raise DataError(f"{path}:{exc.diagnostic}") from None
        except OSError as exc:
            raise DataError(f"{path}: {exc.strerror or exc}") from None
        except UnicodeDecodeError as exc:
            raise DataError(f"{path}: not valid UTF-8 ({exc.reason})") from None
    return store


def _load_ontology(args) -> Ontology:
    if args.fixture:
        return load_universities_fixture()
    if not args.path:
        raise UsageError("ontology: give a PATH or --fixture")
    store = _load_graphs([args.path])
    try:
        return ontology_from_triples(store)
    except SemqueryError as exc:
        raise DataError(f"{args.path}: {exc}") from None


# -- subcommands ---------------------------------------------------------------


def cmd_load(args, out) -> int:
    store = _load_graphs(args.paths)
    summary = {
        "triples": len(store),
        "subjects": len(store.subjects()),
        "predicates": len(store.predicates()),
        "objects": len(store.objects()),
    }
    if args.format == "json":
        out.write(json.dumps(summary, indent=2) + "\n")
    elif args.format == "csv":
        out.write(",".join(summary) + "\n" + ",".join(str(v) for v in summary.values()) + "\n")
    else:
        out.write("".join(f"{k}: {v}\n" for k, v in summary.items()))
    return EXIT_OK


def cmd_sparql(args, out) -> int:
    if args.query_file:
        try:
            text = Path(args.query_file).read_text(encoding="utf-8")
        except OSError as exc:
            raise DataError(f"{args.query_file}: {exc.strerror or exc}") from None
    else:
        text = args.query
    try:
        query = parse_query(text)
    except ParseError as exc:
        where = args.query_file or "<query>"
        raise UsageError(f"{where}:{exc.diagnostic}") from None
    except QueryError as exc:
        raise UsageError(f"query: {exc}") from None
    store = _load_graphs(args.graphs)
    if args.fixture:
        store.update(load_universities_fixture().to_triples())
    solutions = evaluate(query, store, plan=not args.no_plan)
    out.write(format_solutions(solutions, args.format))
    return EXIT_OK


def _search_table(result) -> str:
    lines = [
        f"query: {' '.join(sorted(result.query))}",
        f"candidates: {len(result.candidates)}",
        f"pool size: {len(result.pool)}",
        "",
        "rank  count  keyword",
    ]
    lines += [f"{e.rank:>4}  {e.count:>5}  {e.keyword}" for e in result.expansion]
    lines += ["", "score  document"]
    lines += [f"{score:>5}  {doc}" for doc, score in result.ranked_documents]
    if result.retained_estimate is not None:
        lines += ["", f"retained estimate: {result.retained_estimate}"]
    return "\n".join(lines) + "\n"


def _search_csv(result) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["keyword", "count", "rank"])
    for e in result.expansion:
        writer.writerow([e.keyword, e.count, e.rank])
    return buf.getvalue()


def cmd_search(args, out) -> int:
    if args.fixture:
        corpus = example_corpus()
    elif args.ontology_fixture:
        corpus = keysets_from_ontology(load_universities_fixture())
    else:
        try:
            corpus = Corpus.load_jsonl(args.corpus)
        except CorpusError as exc:
            raise DataError(str(exc)) from None
        except OSError as exc:
            raise DataError(f"{args.corpus}: {exc.strerror or exc}") from None
    result = search(
        args.query, corpus,
        discard_fraction=args.discard_fraction,
        total_pages=args.total_pages,
        top_k=args.top_k,
    )
    if args.format == "json":
        out.write(result.to_json())
    elif args.format == "csv":
        out.write(_search_csv(result))
    else:
        out.write(_search_table(result))
    return EXIT_OK


def _show_ontology(ont: Ontology, fmt: str) -> str:
    n_classes = len(ont.classes) + 1
    if fmt == "json":
        doc = {
            "iri": str(ont.iri),
            "classes": [str(ROOT)] + sorted(str(c) for c in ont.classes),
            "subclass_of": {str(c): str(v.parent) for c, v in sorted(ont.classes.items(), key=lambda kv: str(kv[0]))},
            "object_properties": [str(p.name) for p in ont.properties_of_kind(OBJECT)],
            "datatype_properties": [str(p.name) for p in ont.properties_of_kind(DATATYPE)],
            "individuals": sorted(str(i) for i in ont.individuals),
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["individual", "class"])
        for name in sorted(ont.individuals, key=str):
            writer.writerow([str(name), str(ont.individuals[name].asserted_class)])
        return buf.getvalue()

    lines = [f"ontology: {ont.iri}", f"classes: {n_classes}"]

    def walk(c, depth):
        label = "owl:Thing" if c == ROOT else c.local_name
        n = len(ont.instances_of(c)) if c != ROOT else 0
        suffix = f" ({n} individuals)" if n else ""
        lines.append("  " * (depth + 1) + label + suffix)
        for child in ont.children(c):
            walk(child, depth + 1)

    walk(ROOT, 0)
    for kind in (OBJECT, DATATYPE):
        props = ont.properties_of_kind(kind)
        lines.append(f"{kind} properties: {len(props)}")
        lines += [f"  {p.name.local_name} (domain {p.domain.local_name})" for p in props]
    lines.append(f"individuals: {len(ont.individuals)}")
    return "\n".join(lines) + "\n"


def cmd_ontology(args, out) -> int:
    ont = _load_ontology(args)
    if args.action == "show":
        out.write(_show_ontology(ont, args.format))
    elif args.action == "dot":
        out.write(ont.export_dot(include_instances=args.instances))
    else:
        out.write(serialize_ntriples(ont.to_triples()))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semquery", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=FORMATS, default="table", help="output format (default: table)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("load", parents=[common], help="load graphs and print a summary")
    p.add_argument("paths", nargs="+", metavar="PATH", help=".nt or .ttl files")
    p.set_defaults(func=cmd_load)

    p = sub.add_parser("sparql", parents=[common], help="run a SELECT query")
    q = p.add_mutually_exclusive_group(required=True)
    q.add_argument("--query", "-q", help="query text")
    q.add_argument("--query-file", "-f", metavar="PATH", help="file holding the query (.rq)")
    p.add_argument("graphs", nargs="*", metavar="GRAPH", help=".nt or .ttl files to query")
    p.add_argument("--fixture", action="store_true", help="also load the universities ontology triples")
    p.add_argument("--no-plan", action="store_true", help="join patterns in source order")
    p.set_defaults(func=cmd_sparql)

    p = sub.add_parser("search", parents=[common], help="keyword co-occurrence search")
    p.add_argument("query", help="query text, e.g. 'Indian Universities'")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", action="store_true", help="use the built-in five example keysets")
    src.add_argument("--ontology-fixture", action="store_true",
                     help="use keysets derived from the universities ontology individuals")
    src.add_argument("--corpus", metavar="PATH", help="line-delimited JSON corpus")
    p.add_argument("--total-pages", type=_non_negative, metavar="N")
    p.add_argument("--discard-fraction", type=_fraction, metavar="F")
    p.add_argument("--top-k", type=_non_negative, metavar="K")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("ontology", parents=[common], help="inspect or export an ontology")
    p.add_argument("action", choices=("show", "dot", "triples"))
    p.add_argument("path", nargs="?", metavar="PATH", help="ontology as .nt/.ttl")
    p.add_argument("--fixture", action="store_true", help="use the Indian-universities ontology")
    p.add_argument("--instances", action="store_true", help="dot: include individuals")
    p.set_defaults(func=cmd_ontology)
    return parser


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "ontology" and args.fixture and args.path:
        err.write("semquery: error: give either PATH or --fixture, not both\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"semquery: error: {exc}\n")
        return EXIT_USAGE
    except DataError as exc:
        err.write(f"semquery: error: {exc}\n")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
