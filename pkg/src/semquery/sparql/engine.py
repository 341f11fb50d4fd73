"""Basic graph pattern evaluation: greedy selectivity planning plus a
left-deep index nested-loop join."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence

from ..store import Store
from ..terms import Term, Triple
from .query import Query, QueryPattern, Variable


@dataclass(frozen=True)
class Solution:
    bindings: Dict[str, Term]

    def __getitem__(self, name: str) -> Term:
        return self.bindings[name]

    def key(self, variables: Sequence[str]):
        return tuple(self.bindings[v].n3() for v in variables)


@dataclass
class SolutionSequence:
    variables: List[str]
    rows: List[Solution] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Solution]:
        return iter(self.rows)

    def tuples(self) -> List[tuple]:
        return [tuple(row[v] for v in self.variables) for row in self.rows]


def estimate(pattern: QueryPattern, store: Store) -> int:
    """Match count of the pattern with every variable treated as a wildcard."""
    return store.count(pattern.substitute({}))


def plan_bgp(query: Query, store: Store) -> List[QueryPattern]:
    """Order patterns by ascending estimated match count; ties keep source order."""
    scored = [(estimate(p, store), i) for i, p in enumerate(query.bgp)]
    return [query.bgp[i] for _, i in sorted(scored)]


def _extend(pattern: QueryPattern, triple: Triple, binding: Dict[str, Term]) -> Optional[Dict[str, Term]]:
    out = dict(binding)
    for slot, term in zip(pattern.slots(), triple):
        if isinstance(slot, Variable):
            bound = out.get(slot.name)
            if bound is None:
                out[slot.name] = term
            elif bound != term:
                # same variable twice in one pattern, e.g. ?x ?p ?x
                return None
    return out


def evaluate(query: Query, store: Store, plan: bool = True,
             order: Optional[Sequence[QueryPattern]] = None) -> SolutionSequence:
    """All projected bindings under which every pattern is a triple in ``store``.

    Rows are deduplicated and sorted by their rendered binding texts.
    ``order`` overrides the join order; otherwise ``plan_bgp`` decides,
    or source order when ``plan`` is False.
    """
    if order is None:
        order = plan_bgp(query, store) if plan else list(query.bgp)
    bindings: List[Dict[str, Term]] = [{}]
    for pattern in order:
        next_bindings = []
        for binding in bindings:
            for triple in store.match(pattern.substitute(binding)):
                extended = _extend(pattern, triple, binding)
                if extended is not None:
                    next_bindings.append(extended)
        bindings = next_bindings
        if not bindings:
            break

    projection = list(query.projection)
    rows = {}
    for binding in bindings:
        row = Solution({v: binding[v] for v in projection})
        rows.setdefault(row.key(projection), row)
    return SolutionSequence(projection, [rows[k] for k in sorted(rows)])
