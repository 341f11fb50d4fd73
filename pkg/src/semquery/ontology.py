"""A small OWL-flavoured schema layer.

Classes form a single-parent tree under ``owl:Thing``. Properties are
either object or datatype properties with a declared domain class; ranges
are recorded but not enforced. Individuals have one asserted class and a
list of property values, each checked against the property's domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

from .errors import (
    CycleWouldForm,
    DomainViolation,
    DuplicateClass,
    DuplicateIndividual,
    DuplicateProperty,
    OntologyError,
    UnknownClass,
    UnknownDomainClass,
    UnknownParent,
    UnknownProperty,
)
from .terms import (
    OWL_CLASS,
    OWL_DATATYPE_PROPERTY,
    OWL_OBJECT_PROPERTY,
    OWL_ONTOLOGY,
    OWL_THING,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_RANGE,
    RDFS_SUBCLASS_OF,
    XSD_STRING,
    Iri,
    Literal,
    Term,
    Triple,
)

ROOT = OWL_THING
OBJECT = "object"
DATATYPE = "datatype"


@dataclass(frozen=True)
class OntClass:
    name: Iri
    parent: Iri = ROOT


@dataclass(frozen=True)
class OntProperty:
    name: Iri
    kind: str
    domain: Iri
    range: Optional[Iri] = None

    def __post_init__(self):
        if self.kind not in (OBJECT, DATATYPE):
            raise ValueError(f"property kind must be {OBJECT!r} or {DATATYPE!r}, got {self.kind!r}")


@dataclass(frozen=True)
class Individual:
    name: Iri
    asserted_class: Iri
    property_values: Tuple[Tuple[Iri, Term], ...] = ()

    def values_of(self, prop: Iri) -> List[Term]:
        return [v for p, v in self.property_values if p == prop]


@dataclass
class Ontology:
    iri: Iri
    classes: Dict[Iri, OntClass] = field(default_factory=dict)
    properties: Dict[Iri, OntProperty] = field(default_factory=dict)
    individuals: Dict[Iri, Individual] = field(default_factory=dict)

    # -- construction -----------------------------------------------------------

    def define_class(self, name: Iri, parent: Optional[Iri] = None) -> "Ontology":
        parent = ROOT if parent is None else parent
        if name == ROOT or name in self.classes:
            raise DuplicateClass(f"class {name} is already declared")
        if parent == name:
            raise CycleWouldForm(f"class {name} cannot be its own parent")
        if parent != ROOT and parent not in self.classes:
            raise UnknownParent(f"parent class {parent} is not declared")
        self.classes[name] = OntClass(name, parent)
        return self

    def define_property(self, prop: OntProperty) -> "Ontology":
        if prop.name in self.properties:
            raise DuplicateProperty(f"property {prop.name} is already declared")
        if not self.has_class(prop.domain):
            raise UnknownDomainClass(f"domain {prop.domain} of {prop.name} is not a declared class")
        self.properties[prop.name] = prop
        return self

    def assert_individual(self, ind: Individual) -> "Ontology":
        if ind.name in self.individuals:
            raise DuplicateIndividual(f"individual {ind.name} is already asserted")
        if ind.asserted_class not in self.classes:
            raise UnknownClass(f"class {ind.asserted_class} is not declared")
        lineage = self.ancestors(ind.asserted_class) | {ind.asserted_class}
        for prop_iri, _ in ind.property_values:
            prop = self.properties.get(prop_iri)
            if prop is None:
                raise UnknownProperty(f"property {prop_iri} is not declared")
            if prop.domain not in lineage:
                raise DomainViolation(prop_iri, ind.asserted_class)
        self.individuals[ind.name] = Individual(
            ind.name, ind.asserted_class, tuple(ind.property_values)
        )
        return self

    # -- queries ------------------------------------------------------------

    def has_class(self, c: Iri) -> bool:
        return c == ROOT or c in self.classes

    def _require_class(self, c: Iri) -> None:
        if not self.has_class(c):
            raise UnknownClass(f"class {c} is not declared")

    def children(self, c: Iri) -> List[Iri]:
        return sorted((k for k, v in self.classes.items() if v.parent == c), key=str)

    def ancestors(self, c: Iri) -> Set[Iri]:
        """Strict ancestors of ``c``, including the root."""
        self._require_class(c)
        out = set()
        while c != ROOT:
            c = self.classes[c].parent
            out.add(c)
        return out

    def subclasses_transitive(self, c: Iri) -> Set[Iri]:
        self._require_class(c)
        out: Set[Iri] = set()
        frontier = [c]
        while frontier:
            for child in self.children(frontier.pop()):
                out.add(child)
                frontier.append(child)
        return out

    def instances_of(self, c: Iri, inferred: bool = False) -> Set[Iri]:
        self._require_class(c)
        targets = {c} | self.subclasses_transitive(c) if inferred else {c}
        return {name for name, ind in self.individuals.items() if ind.asserted_class in targets}

    def properties_of_kind(self, kind: str) -> List[OntProperty]:
        return sorted((p for p in self.properties.values() if p.kind == kind), key=lambda p: str(p.name))

    def audit(self) -> None:
        """Raise OntologyError on any dangling cross-reference."""
        for cls in self.classes.values():
            if not self.has_class(cls.parent):
                raise OntologyError(f"class {cls.name} has undeclared parent {cls.parent}")
        for prop in self.properties.values():
            if not self.has_class(prop.domain):
                raise OntologyError(f"property {prop.name} has undeclared domain {prop.domain}")
        for ind in self.individuals.values():
            if ind.asserted_class not in self.classes:
                raise OntologyError(f"individual {ind.name} has undeclared class")
            for p, _ in ind.property_values:
                if p not in self.properties:
                    raise OntologyError(f"individual {ind.name} uses undeclared property {p}")

    # -- export -----------------------------------------------------------------

    def to_triples(self) -> List[Triple]:
        triples = [Triple(self.iri, RDF_TYPE, OWL_ONTOLOGY)]
        for cls in self.classes.values():
            triples.append(Triple(cls.name, RDF_TYPE, OWL_CLASS))
            triples.append(Triple(cls.name, RDFS_SUBCLASS_OF, cls.parent))
        for prop in self.properties.values():
            kind = OWL_OBJECT_PROPERTY if prop.kind == OBJECT else OWL_DATATYPE_PROPERTY
            triples.append(Triple(prop.name, RDF_TYPE, kind))
            triples.append(Triple(prop.name, RDFS_DOMAIN, prop.domain))
            if prop.range is not None:
                triples.append(Triple(prop.name, RDFS_RANGE, prop.range))
        for ind in self.individuals.values():
            triples.append(Triple(ind.name, RDF_TYPE, ind.asserted_class))
            for p, v in ind.property_values:
                triples.append(Triple(ind.name, p, v))
        return triples

    def export_dot(self, include_instances: bool = False) -> str:
        """Graphviz digraph of the class tree rooted at ``owl:Thing``."""

        def node_id(c: Iri) -> str:
            return '"owl:Thing"' if c == ROOT else _dot_quote(str(c))

        lines = ["digraph ontology {", "  rankdir=TB;", '  node [shape=box];']
        lines.append('  "owl:Thing" [label="owl:Thing"];')
        for c in sorted(self.classes, key=str):
            lines.append(f"  {node_id(c)} [label={_dot_quote(c.local_name)}];")
        for c in sorted(self.classes, key=str):
            lines.append(f"  {node_id(self.classes[c].parent)} -> {node_id(c)};")
        if include_instances:
            for name in sorted(self.individuals, key=str):
                ind = self.individuals[name]
                label = _dot_quote(ind.name.local_name)
                lines.append(f"  {_dot_quote(str(name))} [label={label}, shape=ellipse];")
                lines.append(f"  {node_id(ind.asserted_class)} -> {_dot_quote(str(name))} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def subclasses_transitive(ont: Ontology, c: Iri) -> Set[Iri]:
    return ont.subclasses_transitive(c)


def instances_of(ont: Ontology, c: Iri, inferred: bool = False) -> Set[Iri]:
    return ont.instances_of(c, inferred)


def export_dot(ont: Ontology, include_instances: bool = False) -> str:
    return ont.export_dot(include_instances)


def to_triples(ont: Ontology) -> List[Triple]:
    return ont.to_triples()


def ontology_from_triples(triples: Iterable[Triple]) -> Ontology:
    """Rebuild an Ontology from triples shaped like ``Ontology.to_triples`` output.

    Triples that do not fit the model (unknown predicates on non-individuals,
    extra type assertions) are ignored.
    """
    triples = list(triples)
    by_pred: Dict[Iri, List[Triple]] = {}
    for t in triples:
        by_pred.setdefault(t.predicate, []).append(t)
    types = by_pred.get(RDF_TYPE, [])

    onto_iris = sorted((t.subject for t in types if t.object == OWL_ONTOLOGY), key=str)
    if not onto_iris:
        raise OntologyError("no owl:Ontology declaration found")
    ont = Ontology(onto_iris[0])

    class_names = {t.subject for t in types if t.object == OWL_CLASS and isinstance(t.subject, Iri)}
    parents = {}
    for t in by_pred.get(RDFS_SUBCLASS_OF, []):
        if t.subject in class_names:
            parents[t.subject] = t.object
    pending = sorted(class_names - {ROOT}, key=str)
    while pending:
        progress = []
        for c in pending:
            parent = parents.get(c, ROOT)
            if parent == ROOT or parent in ont.classes:
                ont.define_class(c, parent)
                progress.append(c)
        if not progress:
            raise OntologyError(f"class hierarchy is cyclic or dangling at {pending[0]}")
        pending = [c for c in pending if c not in progress]

    domains = {t.subject: t.object for t in by_pred.get(RDFS_DOMAIN, [])}
    ranges = {t.subject: t.object for t in by_pred.get(RDFS_RANGE, [])}
    for t in sorted(types, key=lambda t: t.key):
        if t.object in (OWL_OBJECT_PROPERTY, OWL_DATATYPE_PROPERTY):
            if t.subject not in domains:
                raise OntologyError(f"property {t.subject} has no rdfs:domain")
            kind = OBJECT if t.object == OWL_OBJECT_PROPERTY else DATATYPE
            ont.define_property(OntProperty(t.subject, kind, domains[t.subject], ranges.get(t.subject)))

    values: Dict[Term, List[Tuple[Iri, Term]]] = {}
    for x in sorted(triples, key=lambda x: x.key):
        if x.predicate in ont.properties:
            values.setdefault(x.subject, []).append((x.predicate, x.object))
    for t in sorted(types, key=lambda t: t.key):
        if t.object in ont.classes and isinstance(t.subject, Iri) and t.subject not in ont.individuals:
            ont.assert_individual(Individual(t.subject, t.object, tuple(values.get(t.subject, ()))))
    return ont


# -- the Indian-universities fixture ---------------------------------------------

UNIVERSITIES_ONTOLOGY = "http://www.indianuniversities/ourontology1.owl"
UNI = UNIVERSITIES_ONTOLOGY + "#"


def uni(local: str) -> Iri:
    return Iri(UNI + local)


# (local name, domain, range) per table of object / datatype properties
_OBJECT_PROPERTIES = [
    ("hasChiefMinister", "States", None),
    ("hasColleges", "Universities", "Colleges"),
    ("hasCourses", "Universities", "Courses"),
    ("hasPrincipal", "Colleges", None),
    ("hasViceChancellor", "Universities", None),
]
_DATATYPE_PROPERTIES = [
    ("hasUniversityName", "Universities"),
    ("hasCollegeName", "Colleges"),
    ("hasCourseName", "Courses"),
    ("hasStateName", "States"),
    ("hasPhoneNumber", "Universities"),
]
# class -> (name property, [(local name, display name)])
_INDIVIDUALS = {
    "Universities": ("hasUniversityName", [
        ("IPUniversity", "IP University"),
        ("DelhiUniversity", "Delhi University"),
        ("IIT", "IIT"),
    ]),
    "Colleges": ("hasCollegeName", [
        ("BVCOE", "BVCOE"),
        ("DCE", "DCE"),
        ("IITChennai", "IIT Chennai"),
        ("IITDelhi", "IIT Delhi"),
        ("IITMumbai", "IIT Mumbai"),
        ("NSIT", "NSIT"),
        ("MAIT", "MAIT"),
    ]),
    "Courses": ("hasCourseName", [
        ("BTECH", "BTECH"),
        ("MTECH", "MTECH"),
        ("MBA", "MBA"),
        ("MCA", "MCA"),
        ("MEDICAL", "MEDICAL"),
    ]),
    "States": ("hasStateName", [
        ("NewDelhi", "New Delhi"),
        ("Mumbai", "Mumbai"),
        ("Chennai", "Chennai"),
        ("Kolkata", "Kolkata"),
    ]),
}


def load_universities_fixture() -> Ontology:
    """Indian-universities ontology: 4 classes, 10 properties, 19 individuals."""
    ont = Ontology(Iri(UNIVERSITIES_ONTOLOGY))
    ont.define_class(uni("Universities"))
    ont.define_class(uni("Colleges"), uni("Universities"))
    ont.define_class(uni("Courses"))
    ont.define_class(uni("States"))
    for name, domain, rng in _OBJECT_PROPERTIES:
        ont.define_property(OntProperty(uni(name), OBJECT, uni(domain), uni(rng) if rng else None))
    for name, domain in _DATATYPE_PROPERTIES:
        ont.define_property(OntProperty(uni(name), DATATYPE, uni(domain), XSD_STRING))
    for cls, (name_prop, members) in _INDIVIDUALS.items():
        for local, display in members:
            ont.assert_individual(
                Individual(uni(local), uni(cls), ((uni(name_prop), Literal(display)),))
            )
    return ont
