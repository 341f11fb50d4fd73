"""Brute-force reference implementations and random input generators.

Nothing here imports the indexed code paths under test; each oracle works
from plain sets and linear scans.
"""

from __future__ import annotations

import itertools
import random
import string

from semquery.search import KeywordSet
from semquery.sparql.query import Query, QueryPattern, Variable
from semquery.terms import BlankNode, Iri, Literal, Triple

# -- triple store ------------------------------------------------------------------


def scan_match(triples, pattern):
    """Linear-scan filter; ``pattern`` is an (s, p, o) tuple with None wildcards."""
    return {
        t for t in triples
        if all(want is None or want == have for want, have in zip(pattern, (t.subject, t.predicate, t.object)))
    }


# -- SPARQL -----------------------------------------------------------------------


def enumerate_bgp(query: Query, triples):
    """Every assignment of alphabet terms to variables, kept if all patterns hold.

    The alphabet is every term occurring in the data or the query.
    Returns the set of projected tuples.
    """
    triples = set(triples)
    alphabet = set()
    for t in triples:
        alphabet.update((t.subject, t.predicate, t.object))
    for p in query.bgp:
        alphabet.update(s for s in p.slots() if not isinstance(s, Variable))
    alphabet = sorted(alphabet, key=lambda term: term.n3())
    variables = query.variables()
    out = set()
    for values in itertools.product(alphabet, repeat=len(variables)):
        env = dict(zip(variables, values))
        ok = True
        for p in query.bgp:
            s, pr, o = (env[x.name] if isinstance(x, Variable) else x for x in p.slots())
            if isinstance(s, Literal) or not isinstance(pr, Iri):
                ok = False
                break
            if Triple(s, pr, o) not in triples:
                ok = False
                break
        if ok:
            out.add(tuple(env[v] for v in query.projection))
    return out


# -- keyword search ------------------------------------------------------------------


def scan_candidates(query, keysets):
    return {i for i, kws in keysets.items() if set(kws) & set(query)}


def scan_count(keyword, candidates, keysets):
    return sum(1 for i in candidates if keyword in keysets[i])


# -- ontology ----------------------------------------------------------------------


def reachable(parent_of, start):
    """Descendants of ``start`` by repeated full passes over the parent map."""
    found = set()
    changed = True
    while changed:
        changed = False
        for child, parent in parent_of.items():
            if child not in found and (parent == start or parent in found):
                found.add(child)
                changed = True
    return found


# -- random generators --------------------------------------------------------------

_IRI_CHARS = string.ascii_letters + string.digits + "-._~:/?#[]@!$&'()*+,;=%" + '<>"{}|^`\\' + "éü中\x00\x7f"
_TEXT_CHARS = string.ascii_letters + string.digits + " \t\n\r\"\\'#.<>_:@^" + "é中 \x0b\x1c€ \x85"


def random_iri(rng: random.Random) -> Iri:
    body = "".join(rng.choice(_IRI_CHARS) for _ in range(rng.randint(0, 12)))
    return Iri(rng.choice(["http://e/", "urn:x:", "mailto:", "ex:"]) + body)


def random_literal(rng: random.Random) -> Literal:
    text = "".join(rng.choice(_TEXT_CHARS) for _ in range(rng.randint(0, 10)))
    roll = rng.random()
    if roll < 0.2:
        return Literal(text, language=rng.choice(["en", "hi", "en-IN", "x-abc-1"]))
    if roll < 0.4:
        return Literal(text, datatype=random_iri(rng))
    return Literal(text)


def random_bnode(rng: random.Random) -> BlankNode:
    first = rng.choice(string.ascii_letters + string.digits + "_")
    middle = "".join(rng.choice(string.ascii_letters + "_.-0") for _ in range(rng.randint(0, 4)))
    last = rng.choice(string.ascii_letters + "_-") if middle else ""
    return BlankNode(first + middle.rstrip(".") + last)


def random_graph(rng: random.Random, max_triples: int = 30):
    triples = set()
    for _ in range(rng.randint(0, max_triples)):
        s = random_iri(rng) if rng.random() < 0.7 else random_bnode(rng)
        p = random_iri(rng)
        kind = rng.random()
        o = random_iri(rng) if kind < 0.4 else random_bnode(rng) if kind < 0.55 else random_literal(rng)
        triples.add(Triple(s, p, o))
    return triples


def small_alphabet(rng: random.Random, size: int = 8):
    """Up to ``size`` terms: a few IRIs (usable anywhere), a blank node, literals."""
    n_iri = rng.randint(2, max(2, size - 3))
    terms = [Iri(f"http://e/t{i}") for i in range(n_iri)]
    terms.append(BlankNode("b0"))
    terms += [Literal(f"v{i}") for i in range(size - len(terms))]
    return terms[:size]


def random_store_triples(rng: random.Random, alphabet, max_triples: int = 100):
    iris = [t for t in alphabet if isinstance(t, Iri)]
    subjects = [t for t in alphabet if not isinstance(t, Literal)]
    n = rng.randint(0, max_triples)
    return {Triple(rng.choice(subjects), rng.choice(iris), rng.choice(alphabet)) for _ in range(n)}


def random_pattern(rng: random.Random, alphabet):
    iris = [t for t in alphabet if isinstance(t, Iri)]
    subjects = [t for t in alphabet if not isinstance(t, Literal)]
    return (
        rng.choice(subjects) if rng.random() < 0.5 else None,
        rng.choice(iris) if rng.random() < 0.5 else None,
        rng.choice(alphabet) if rng.random() < 0.5 else None,
    )


def random_bgp(rng: random.Random, alphabet, max_patterns: int = 3, max_vars: int = 3) -> Query:
    names = ["x", "y", "z"][:max_vars]
    iris = [t for t in alphabet if isinstance(t, Iri)]
    subjects = [t for t in alphabet if not isinstance(t, Literal)]
    while True:
        patterns = []
        for _ in range(rng.randint(1, max_patterns)):
            def slot(pool):
                return Variable(rng.choice(names)) if rng.random() < 0.6 else rng.choice(pool)
            patterns.append(QueryPattern(slot(subjects), slot(iris), slot(alphabet)))
        query = Query(bgp=patterns)
        variables = query.variables()
        if variables:
            k = rng.randint(1, len(variables))
            query.projection = sorted(rng.sample(variables, k))
            return query


def random_keysets(rng: random.Random, max_docs: int = 500, vocab_size: int = 30):
    vocab = [f"k{i:02d}" for i in range(rng.randint(1, vocab_size))]
    return {
        f"d{i:03d}": KeywordSet(f"d{i:03d}", frozenset(rng.sample(vocab, rng.randint(0, min(8, len(vocab))))))
        for i in range(rng.randint(0, max_docs))
    }, vocab
