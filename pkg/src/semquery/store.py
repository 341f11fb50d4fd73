"""In-memory triple store with SPO, POS and OSP permutation indexes.

Each index is a three-level nested dict (``first -> second -> {third}``).
The three permutations give every one of the eight bound/unbound pattern
shapes a prefix lookup:

    S?? SP? SPO ???  -> spo
    ?P? ?PO          -> pos
    ??O S?O          -> osp

The store follows a reader/writer contract: any number of concurrent
readers, or a single writer, never both.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple, Union

from .ntriples import parse_ntriples, serialize_ntriples
from .terms import Term, Triple
from .turtle import parse_turtle_subset

Index = Dict[Term, Dict[Term, Set[Term]]]

# index name -> positions of (s, p, o) in key order
PERMUTATIONS: Dict[str, Tuple[int, int, int]] = {
    "spo": (0, 1, 2),
    "pos": (1, 2, 0),
    "osp": (2, 0, 1),
}


@dataclass(frozen=True)
class TriplePattern:
    """A triple with ``None`` as wildcard in any position."""

    subject: Optional[Term] = None
    predicate: Optional[Term] = None
    object: Optional[Term] = None

    def as_tuple(self) -> Tuple[Optional[Term], Optional[Term], Optional[Term]]:
        return (self.subject, self.predicate, self.object)

    def matches(self, triple: Triple) -> bool:
        return all(b is None or b == t for b, t in zip(self.as_tuple(), triple))

    @property
    def bound_count(self) -> int:
        return sum(x is not None for x in self.as_tuple())


PatternLike = Union[TriplePattern, Tuple[Optional[Term], Optional[Term], Optional[Term]]]


def _as_pattern(pattern: PatternLike) -> TriplePattern:
    if isinstance(pattern, TriplePattern):
        return pattern
    return TriplePattern(*pattern)


def _prefix_len(bound: Tuple[bool, bool, bool], perm: Tuple[int, int, int]) -> int:
    n = 0
    for pos in perm:
        if not bound[pos]:
            break
        n += 1
    return n


def choose_index(pattern: PatternLike) -> str:
    """Name of the index whose key order has the longest bound prefix."""
    bound = tuple(x is not None for x in _as_pattern(pattern).as_tuple())
    return max(PERMUTATIONS, key=lambda name: _prefix_len(bound, PERMUTATIONS[name]))


class Store:
    def __init__(self, triples: Iterable[Triple] = ()):
        self._triples: Set[Triple] = set()
        self._indexes: Dict[str, Index] = {name: {} for name in PERMUTATIONS}
        for t in triples:
            self.insert(t)

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self._triples, key=lambda t: t.key))

    def size(self) -> int:
        return len(self._triples)

    def insert(self, triple: Triple) -> bool:
        """Add ``triple``; False if it was already present."""
        if not isinstance(triple, Triple):
            raise TypeError(f"expected Triple, got {type(triple).__name__}")
        if triple in self._triples:
            return False
        self._triples.add(triple)
        parts = tuple(triple)
        for name, (a, b, c) in PERMUTATIONS.items():
            index = self._indexes[name]
            index.setdefault(parts[a], {}).setdefault(parts[b], set()).add(parts[c])
        return True

    def delete(self, triple: Triple) -> bool:
        """Remove ``triple``; False if it was absent."""
        if triple not in self._triples:
            return False
        self._triples.discard(triple)
        parts = tuple(triple)
        for name, (a, b, c) in PERMUTATIONS.items():
            index = self._indexes[name]
            level2 = index[parts[a]]
            level3 = level2[parts[b]]
            level3.discard(parts[c])
            if not level3:
                del level2[parts[b]]
                if not level2:
                    del index[parts[a]]
        return True

    def update(self, triples: Iterable[Triple]) -> int:
        """Insert many triples, returning how many were new."""
        return sum(self.insert(t) for t in triples)

    def _scan(self, name: str, pattern: TriplePattern) -> Iterator[Triple]:
        perm = PERMUTATIONS[name]
        keys = [pattern.as_tuple()[pos] for pos in perm]
        index = self._indexes[name]

        def level(node, depth, prefix):
            if depth == 2:
                thirds = node if keys[2] is None else (node & {keys[2]})
                for third in thirds:
                    yield prefix + (third,)
                return
            if keys[depth] is None:
                for key, child in node.items():
                    yield from level(child, depth + 1, prefix + (key,))
            else:
                child = node.get(keys[depth])
                if child is not None:
                    yield from level(child, depth + 1, prefix + (keys[depth],))

        for entry in level(index, 0, ()):
            parts = [None, None, None]
            for pos, term in zip(perm, entry):
                parts[pos] = term
            yield Triple(*parts)

    def match(self, pattern: PatternLike, index: Optional[str] = None) -> List[Triple]:
        """Triples matching ``pattern`` in canonical (S, P, O) text order.

        ``index`` forces a particular permutation; by default the one with
        the longest bound prefix is used.
        """
        pattern = _as_pattern(pattern)
        name = index or choose_index(pattern)
        return sorted(self._scan(name, pattern), key=lambda t: t.key)

    def count(self, pattern: PatternLike) -> int:
        """Exact number of matches, computed from index subtree sizes."""
        pattern = _as_pattern(pattern)
        name = choose_index(pattern)
        perm = PERMUTATIONS[name]
        keys = [pattern.as_tuple()[pos] for pos in perm]
        depth = _prefix_len(tuple(k is not None for k in pattern.as_tuple()), perm)
        if depth == 0:
            return len(self._triples)
        node = self._indexes[name].get(keys[0])
        if node is None:
            return 0
        if depth == 1:
            return sum(len(v) for v in node.values())
        thirds = node.get(keys[1])
        if thirds is None:
            return 0
        if depth == 2:
            return len(thirds)
        return int(keys[2] in thirds)

    def audit(self) -> None:
        """Raise AssertionError unless every index holds exactly the triple set."""
        for name, perm in PERMUTATIONS.items():
            seen = set()
            for a, level2 in self._indexes[name].items():
                assert level2, f"{name}: empty branch under {a!r}"
                for b, thirds in level2.items():
                    assert thirds, f"{name}: empty leaf under {a!r}/{b!r}"
                    for c in thirds:
                        parts = [None, None, None]
                        for pos, term in zip(perm, (a, b, c)):
                            parts[pos] = term
                        seen.add(Triple(*parts))
            assert seen == self._triples, f"index {name} disagrees with the triple set"

    def subjects(self) -> Set[Term]:
        return set(self._indexes["spo"])

    def predicates(self) -> Set[Term]:
        return set(self._indexes["pos"])

    def objects(self) -> Set[Term]:
        return set(self._indexes["osp"])

    def to_ntriples(self) -> str:
        return serialize_ntriples(self._triples)

    def save(self, path) -> None:
        Path(path).write_text(self.to_ntriples(), encoding="utf-8", newline="\n")

    @classmethod
    def load(cls, *paths) -> "Store":
        store = cls()
        for path in paths:
            store.update(read_graph(path))
        return store


def read_graph(path) -> List[Triple]:
    """Parse a ``.nt`` or ``.ttl`` file (chosen by extension; N-Triples otherwise)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() in (".ttl", ".turtle"):
        return parse_turtle_subset(text)
    return parse_ntriples(text)
