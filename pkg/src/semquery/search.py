"""Keyword co-occurrence search.

Given a query keyword set, every document keyset sharing at least one
keyword becomes a candidate. The candidates' keysets are pooled, and each
pooled keyword that is not itself a query keyword is scored by the number
of candidate keysets containing it. Those counts rank the expansion
keywords (count descending, then keyword ascending), and candidate
documents are re-ranked by the summed counts of the expansion keywords
they contain.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple, Union

from .errors import FractionOutOfRange, SemqueryError
from .ontology import Ontology
from .terms import Literal

_TOKEN_SPLIT = re.compile(r"[^0-9A-Za-z]+")


class CorpusError(SemqueryError, ValueError):
    pass


def normalize_keywords(raw: Iterable[str]) -> FrozenSet[str]:
    """Lowercase, trim, drop empties and deduplicate. No stemming."""
    return frozenset(k.strip().lower() for k in raw if k.strip())


def tokenize(text: str) -> FrozenSet[str]:
    """Split free text on non-alphanumerics, then normalize."""
    return normalize_keywords(_TOKEN_SPLIT.split(text))


@dataclass(frozen=True)
class KeywordSet:
    id: str
    keywords: FrozenSet[str]

    @classmethod
    def of(cls, id: str, raw: Iterable[str]) -> "KeywordSet":
        return cls(id, normalize_keywords(raw))


class Corpus:
    """Document keysets plus their inverted index (keyword -> ids)."""

    def __init__(self, keysets: Iterable[KeywordSet] = ()):
        self.keysets: Dict[str, KeywordSet] = {}
        self.inverted: Dict[str, Set[str]] = {}
        for ks in keysets:
            self.add(ks)

    def add(self, ks: KeywordSet) -> None:
        if ks.id in self.keysets:
            raise CorpusError(f"duplicate document id {ks.id!r}")
        self.keysets[ks.id] = ks
        for k in ks.keywords:
            self.inverted.setdefault(k, set()).add(ks.id)

    def __len__(self) -> int:
        return len(self.keysets)

    def __getitem__(self, id: str) -> FrozenSet[str]:
        return self.keysets[id].keywords

    def ids(self) -> List[str]:
        return sorted(self.keysets)

    def audit(self) -> None:
        transposed: Dict[str, Set[str]] = {}
        for ks in self.keysets.values():
            for k in ks.keywords:
                transposed.setdefault(k, set()).add(ks.id)
        assert transposed == self.inverted, "inverted index is not the transpose of the keysets"

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "Corpus":
        return cls(KeywordSet.of(str(r["id"]), r["keywords"]) for r in records)

    @classmethod
    def load_jsonl(cls, path) -> "Corpus":
        """Read one ``{"id": ..., "keywords": [...]}`` object per non-blank line."""
        records = []
        text = Path(path).read_text(encoding="utf-8")
        for lineno, line in enumerate(text.split("\n"), start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}:{lineno}: invalid JSON: {exc.msg}") from None
            if (not isinstance(rec, dict) or "id" not in rec
                    or not isinstance(rec.get("keywords"), list)
                    or not all(isinstance(k, str) for k in rec["keywords"])):
                raise CorpusError(f"{path}:{lineno}: expected {{\"id\": ..., \"keywords\": [strings]}}")
            records.append(rec)
        try:
            return cls.from_records(records)
        except CorpusError as exc:
            raise CorpusError(f"{path}: {exc}") from None

    def to_jsonl(self) -> str:
        return "".join(
            json.dumps({"id": i, "keywords": sorted(self.keysets[i].keywords)}) + "\n"
            for i in self.ids()
        )


class Mark(enum.Enum):
    EXCLUDED = "Φ"

    def __repr__(self) -> str:
        return self.value


EXCLUDED = Mark.EXCLUDED
Occurrence = Union[int, Mark]


@dataclass(frozen=True)
class OccurrenceTable:
    counts: Dict[str, Occurrence]

    def __getitem__(self, keyword: str) -> Occurrence:
        return self.counts[keyword]

    def is_excluded(self, keyword: str) -> bool:
        return self.counts[keyword] is EXCLUDED

    def vector(self, order: Iterable[str]) -> List[Occurrence]:
        return [self.counts[k] for k in order]


@dataclass(frozen=True)
class ExpansionEntry:
    keyword: str
    count: int
    rank: int


@dataclass(frozen=True)
class RankedExpansion:
    entries: Tuple[ExpansionEntry, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def keywords(self) -> List[str]:
        return [e.keyword for e in self.entries]

    def counts(self) -> Dict[str, int]:
        return {e.keyword: e.count for e in self.entries}

    def rank_of(self, keyword: str) -> int:
        for e in self.entries:
            if e.keyword == keyword:
                return e.rank
        raise KeyError(keyword)

    def bottom_tier(self) -> List[str]:
        """Keywords sharing the lowest count."""
        if not self.entries:
            return []
        low = self.entries[-1].count
        return [e.keyword for e in self.entries if e.count == low]


@dataclass(frozen=True)
class SearchResult:
    query: FrozenSet[str]
    candidates: FrozenSet[str]
    pool: FrozenSet[str]
    occurrences: OccurrenceTable
    expansion: RankedExpansion
    ranked_documents: Tuple[Tuple[str, int], ...]
    retained_estimate: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "query": sorted(self.query),
            "candidates": sorted(self.candidates),
            "pool_size": len(self.pool),
            "expansion": [
                {"keyword": e.keyword, "count": e.count, "rank": e.rank} for e in self.expansion
            ],
            "documents": [{"id": i, "score": s} for i, s in self.ranked_documents],
            "retained_estimate": self.retained_estimate,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


def collect_candidates(query: Iterable[str], corpus: Corpus) -> FrozenSet[str]:
    """Ids of documents whose keyset intersects ``query``."""
    ids: Set[str] = set()
    for k in query:
        ids |= corpus.inverted.get(k, set())
    return frozenset(ids)


def union_pool(candidates: Iterable[str], corpus: Corpus) -> FrozenSet[str]:
    pool: Set[str] = set()
    for i in candidates:
        pool |= corpus[i]
    return frozenset(pool)


def occurrence_counts(pool: Iterable[str], candidates: Iterable[str], query: Iterable[str],
                      corpus: Corpus) -> OccurrenceTable:
    """Count, per pooled keyword, the candidate keysets containing it.

    Query keywords are marked EXCLUDED instead of counted.
    """
    query = set(query)
    candidates = set(candidates)
    counts: Dict[str, Occurrence] = {}
    for k in pool:
        if k in query:
            counts[k] = EXCLUDED
        else:
            counts[k] = len(corpus.inverted.get(k, set()) & candidates)
    return OccurrenceTable(counts)


def rank_expansion(table: OccurrenceTable) -> RankedExpansion:
    kept = [(k, c) for k, c in table.counts.items() if c is not EXCLUDED]
    kept.sort(key=lambda kc: (-kc[1], kc[0]))
    return RankedExpansion(tuple(
        ExpansionEntry(k, c, rank) for rank, (k, c) in enumerate(kept, start=1)
    ))


def apply_discard(total_pages: int, fraction) -> int:
    """Pages retained after discarding ``fraction`` of ``total_pages``, rounded half-up.

    Arithmetic is exact: floats are read through their shortest decimal
    representation, so 0.15 means exactly 15/100.

    >>> apply_discard(8_820_000, 0.15)
    7497000
    """
    if isinstance(total_pages, bool) or not isinstance(total_pages, int) or total_pages < 0:
        raise ValueError(f"total_pages must be a non-negative integer, got {total_pages!r}")
    frac = Fraction(str(fraction)) if isinstance(fraction, float) else Fraction(fraction)
    if not 0 <= frac <= 1:
        raise FractionOutOfRange(f"discard fraction must lie in [0, 1], got {fraction}")
    return floor(total_pages * (1 - frac) + Fraction(1, 2))


def rerank_documents(candidates: Iterable[str], expansion: RankedExpansion,
                     corpus: Corpus) -> List[Tuple[str, int]]:
    """Score each candidate by the summed counts of expansion keywords it contains."""
    weights = expansion.counts()
    scored = [
        (i, sum(weights.get(k, 0) for k in corpus[i]))
        for i in candidates
    ]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored


def bottom_tier_fraction(result: SearchResult, corpus: Corpus) -> Fraction:
    """Share of candidates whose expansion keywords all sit in the lowest tier.

    Informational only; documents with no expansion keyword at all do not count.
    """
    if not result.candidates:
        return Fraction(0)
    bottom = set(result.expansion.bottom_tier())
    expansion = set(result.expansion.keywords())
    hits = 0
    for i in result.candidates:
        mine = corpus[i] & expansion
        if mine and mine <= bottom:
            hits += 1
    return Fraction(hits, len(result.candidates))


def search(query_text: Union[str, Iterable[str]], corpus: Corpus,
           discard_fraction=None, total_pages: Optional[int] = None,
           top_k: Optional[int] = None) -> SearchResult:
    """Run the whole pipeline.

    ``query_text`` may be free text (tokenized on non-alphanumerics) or an
    iterable of keywords. ``top_k`` truncates the ranked document list.
    ``retained_estimate`` is filled only when both ``total_pages`` and
    ``discard_fraction`` are given.
    """
    if top_k is not None and top_k < 0:
        raise ValueError("top_k must be non-negative")
    query = tokenize(query_text) if isinstance(query_text, str) else normalize_keywords(query_text)
    candidates = collect_candidates(query, corpus)
    pool = union_pool(candidates, corpus)
    table = occurrence_counts(pool, candidates, query, corpus)
    expansion = rank_expansion(table)
    documents = rerank_documents(candidates, expansion, corpus)
    if top_k is not None:
        documents = documents[:top_k]
    retained = None
    if total_pages is not None and discard_fraction is not None:
        retained = apply_discard(total_pages, discard_fraction)
    return SearchResult(query, candidates, pool, table, expansion, tuple(documents), retained)


def keysets_from_ontology(ont: Ontology) -> Corpus:
    """One keyset per individual: tokens of its local name and literal values."""
    corpus = Corpus()
    for name in sorted(ont.individuals, key=str):
        ind = ont.individuals[name]
        keywords = set(tokenize(name.local_name))
        for _, value in ind.property_values:
            if isinstance(value, Literal):
                keywords |= tokenize(value.lexical)
        corpus.add(KeywordSet(str(name), frozenset(keywords)))
    return corpus


# The five keyword sets of the worked "Indian Universities" example, verbatim
# (including the stray trailing space in "Ranking ").
EXAMPLE_KEYSETS = {
    "search1": ["Indian", "Courses", "AIU", "Universities", "UGC", "Top", "Colleges", "States"],
    "search2": ["Indian", "UGC", "AIU", "List", "Exams", "Top", "Universities"],
    "search3": ["Universities", "UGC", "Colleges", "Top", "Indian", "Ranking"],
    "search4": ["Indian", "States", "AIU", "Universities", "Questions", "Ranking "],
    "search5": ["Indian", "Courses", "Ranking", "UGC", "States", "Universities"],
}

# Pool order used by the reference occurrence vector.
EXAMPLE_POOL_ORDER = [
    "indian", "universities", "courses", "aiu", "ugc", "top",
    "colleges", "states", "list", "exams", "ranking", "questions",
]


def example_corpus() -> Corpus:
    return Corpus.from_records({"id": i, "keywords": kws} for i, kws in EXAMPLE_KEYSETS.items())
