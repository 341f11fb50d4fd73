import random

import pytest
from hypothesis import given, settings, strategies as st

from semquery.errors import (
    CycleWouldForm,
    DomainViolation,
    DuplicateClass,
    DuplicateProperty,
    UnknownClass,
    UnknownDomainClass,
    UnknownParent,
    UnknownProperty,
)
from semquery.ntriples import parse_ntriples, serialize_ntriples
from semquery.ontology import (
    DATATYPE,
    OBJECT,
    ROOT,
    Individual,
    Ontology,
    OntProperty,
    load_universities_fixture,
    ontology_from_triples,
    uni,
)
from semquery.store import Store
from semquery.terms import RDF_TYPE, Iri, Literal

import oracles


@pytest.fixture(scope="module")
def fixture_ont():
    return load_universities_fixture()


def empty():
    return Ontology(Iri("http://e/onto"))


def test_define_subclass_edge():
    ont = empty().define_class(uni("Universities")).define_class(uni("Colleges"), uni("Universities"))
    assert ont.classes[uni("Colleges")].parent == uni("Universities")
    assert ont.classes[uni("Universities")].parent == ROOT


def test_define_class_errors():
    ont = empty().define_class(uni("Universities"))
    with pytest.raises(CycleWouldForm):
        ont.define_class(uni("X"), uni("X"))
    with pytest.raises(DuplicateClass):
        ont.define_class(uni("Universities"))
    with pytest.raises(UnknownParent):
        ont.define_class(uni("Y"), uni("Nope"))
    with pytest.raises(DuplicateClass):
        ont.define_class(ROOT)


def test_define_property():
    ont = empty().define_class(uni("University")).define_class(uni("Colleges"), uni("University"))
    ont.define_property(OntProperty(uni("hasColleges"), OBJECT, uni("University"), uni("Colleges")))
    ont.define_property(OntProperty(uni("hasCollegeName"), DATATYPE, uni("Colleges")))
    assert [p.name for p in ont.properties_of_kind(OBJECT)] == [uni("hasColleges")]
    with pytest.raises(UnknownDomainClass):
        ont.define_property(OntProperty(uni("hasX"), OBJECT, uni("Nowhere")))
    with pytest.raises(DuplicateProperty):
        ont.define_property(OntProperty(uni("hasColleges"), OBJECT, uni("University")))
    with pytest.raises(ValueError):
        OntProperty(uni("bad"), "annotation", uni("University"))


def test_assert_individuals(fixture_ont):
    ont = load_universities_fixture()
    name = uni("hasCollegeName")
    bvcoe = ont.individuals[uni("BVCOE")]
    assert bvcoe.values_of(name) == [Literal("BVCOE")]

    cm = Individual(uni("NewDelhi2"), uni("States"), ((uni("hasChiefMinister"), Iri("http://e/cm")),))
    ont.assert_individual(cm)

    bad = Individual(uni("BVCOE2"), uni("Colleges"), ((uni("hasChiefMinister"), Iri("http://e/cm")),))
    with pytest.raises(DomainViolation) as info:
        ont.assert_individual(bad)
    assert info.value.property == uni("hasChiefMinister")
    with pytest.raises(UnknownClass):
        ont.assert_individual(Individual(uni("Z"), uni("Planets")))
    with pytest.raises(UnknownProperty):
        ont.assert_individual(Individual(uni("Z"), uni("States"), ((uni("hasMoon"), Literal("x")),)))


def test_inherited_domain_is_accepted():
    ont = load_universities_fixture()
    # Colleges is a subclass of Universities, so a university-domain property applies
    ont.assert_individual(Individual(uni("X"), uni("Colleges"), ((uni("hasPhoneNumber"), Literal("011")),)))


def test_subclasses(fixture_ont):
    assert fixture_ont.subclasses_transitive(uni("Universities")) == {uni("Colleges")}
    assert fixture_ont.subclasses_transitive(uni("Courses")) == set()
    assert fixture_ont.subclasses_transitive(ROOT) == set(fixture_ont.classes)
    with pytest.raises(UnknownClass):
        fixture_ont.subclasses_transitive(uni("Planets"))


def test_instances(fixture_ont):
    assert fixture_ont.instances_of(uni("Universities")) == {
        uni("IPUniversity"), uni("DelhiUniversity"), uni("IIT")
    }
    assert len(fixture_ont.instances_of(uni("Universities"), inferred=True)) == 10
    assert fixture_ont.instances_of(uni("States")) == {
        uni("NewDelhi"), uni("Mumbai"), uni("Chennai"), uni("Kolkata")
    }
    assert fixture_ont.instances_of(ROOT, inferred=True) == set(fixture_ont.individuals)
    for c in list(fixture_ont.classes) + [ROOT]:
        assert fixture_ont.instances_of(c, True) >= fixture_ont.instances_of(c, False)


def test_fixture_inventory(fixture_ont):
    assert str(fixture_ont.iri) == "http://www.indianuniversities/ourontology1.owl"
    assert len(fixture_ont.properties_of_kind(OBJECT)) == 5
    datatype = fixture_ont.properties_of_kind(DATATYPE)
    assert len(datatype) == 5
    phone = fixture_ont.properties[uni("hasPhoneNumber")]
    assert (phone.kind, phone.domain) == (DATATYPE, uni("Universities"))
    assert len(fixture_ont.individuals) == 19
    counts = {c.local_name: len(fixture_ont.instances_of(c)) for c in fixture_ont.classes}
    assert counts == {"Universities": 3, "Colleges": 7, "Courses": 5, "States": 4}
    fixture_ont.audit()
    for ind in fixture_ont.individuals.values():
        assert len(ind.property_values) == 1


def test_domain_enforcement_invariant(fixture_ont):
    for ind in fixture_ont.individuals.values():
        lineage = fixture_ont.ancestors(ind.asserted_class) | {ind.asserted_class}
        for prop, _ in ind.property_values:
            assert fixture_ont.properties[prop].domain in lineage


def test_dot_export(fixture_ont):
    dot = fixture_ont.export_dot()
    assert dot.startswith("digraph")
    assert '"owl:Thing"' in dot
    assert f'"{uni("Universities")}" -> "{uni("Colleges")}";' in dot
    assert "BVCOE" not in dot
    assert '"BVCOE"' in fixture_ont.export_dot(include_instances=True)


def test_dot_export_empty():
    dot = empty().export_dot()
    assert '"owl:Thing"' in dot
    assert "->" not in dot


def test_to_triples_store_round_trip(fixture_ont):
    store = Store(fixture_ont.to_triples())
    for c in fixture_ont.classes:
        from_store = {t.subject for t in store.match((None, RDF_TYPE, c))}
        assert from_store == fixture_ont.instances_of(c, inferred=False)


def test_from_triples_rebuilds_fixture(fixture_ont):
    text = serialize_ntriples(fixture_ont.to_triples())
    rebuilt = ontology_from_triples(parse_ntriples(text))
    assert rebuilt.iri == fixture_ont.iri
    assert rebuilt.classes == fixture_ont.classes
    assert rebuilt.properties == fixture_ont.properties
    assert {k: v.asserted_class for k, v in rebuilt.individuals.items()} == \
        {k: v.asserted_class for k, v in fixture_ont.individuals.items()}
    assert serialize_ntriples(rebuilt.to_triples()) == text


@st.composite
def random_tree(draw):
    n = draw(st.integers(0, 50))
    parents = {}
    for i in range(n):
        parents[i] = draw(st.one_of(st.none(), st.integers(0, i - 1))) if i else None
    return parents


@settings(max_examples=150)
@given(random_tree(), st.integers(0, 2**32 - 1))
def test_subclasses_match_reachability(parents, seed):
    ont = empty()
    names = {i: Iri(f"http://e/C{i}") for i in parents}
    for i, p in parents.items():
        ont.define_class(names[i], None if p is None else names[p])
    parent_of = {names[i]: (ROOT if p is None else names[p]) for i, p in parents.items()}
    for c in list(names.values()) + [ROOT]:
        assert ont.subclasses_transitive(c) == oracles.reachable(parent_of, c)

    rng = random.Random(seed)
    for k in range(rng.randint(0, 20)):
        if not names:
            break
        ont.assert_individual(Individual(Iri(f"http://e/i{k}"), rng.choice(list(names.values()))))
    for c in list(names.values()) + [ROOT]:
        assert ont.instances_of(c, True) >= ont.instances_of(c, False)
    assert ont.instances_of(ROOT, True) == set(ont.individuals)
