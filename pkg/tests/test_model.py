import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from owlet import (
    Characteristic,
    ClassAssertion,
    ComplementOf,
    DataAssertion,
    DeclareClass,
    DeclareProperty,
    Diagnostic,
    DifferentIndividuals,
    DisjointClasses,
    Domain,
    HasCharacteristic,
    InverseOf,
    Iri,
    Literal,
    Named,
    ObjectAssertion,
    Ontology,
    PropertyKind,
    Severity,
    SubClassOf,
    annotate,
    assert_axiom,
    check_consistency,
    declared_subclasses,
    materialize,
    merge,
    new_ontology,
)
from owlet.corpus import build_poultry_ontology, cls, prop
from owlet.errors import (
    IriError,
    OntologyError,
    PropertyKindError,
    RoleConflictError,
    UnknownEntityError,
)
from owlet.iri import RDFS, THING, XSD, Namespace, name_to_fragment
from owlet.model import COMMENT, Role

from strategies import BASE, ontologies

EX = Namespace("http://ex.org/poultry#")


def test_iri_rejects_empty_relative_and_whitespace():
    for bad in ("", "Vaccination", "http://ex.org/a b", "http://ex.org/\x00", "http://ex.org/<x>"):
        with pytest.raises(IriError):
            Iri(bad)


def test_iri_order_is_bytewise():
    assert Iri("http://a/B") < Iri("http://a/a")
    assert Iri("urn:x") == Iri("urn:x")
    assert Iri("http://ex.org/p#Causes").local_name == "Causes"


def test_name_to_fragment():
    assert name_to_fragment("Health monitoring and disease control") == "Health_monitoring_and_disease_control"


def test_literal_lang_only_with_string():
    Literal("poule", lang="fr")
    with pytest.raises(OntologyError):
        Literal("1", XSD["integer"], lang="en")
    with pytest.raises(OntologyError):
        Literal("x", lang="not a tag")
    with pytest.raises(OntologyError):
        Literal("bell\x07")


def test_new_ontology_has_only_thing():
    ont = new_ontology("http://ex.org/poultry#")
    assert ont.signature == {THING}
    assert len(ont) == 0
    with pytest.raises(IriError):
        new_ontology("")


def test_assert_adds_implied_declarations():
    ont = new_ontology("http://ex.org/poultry")
    ax = SubClassOf(EX["Vaccination"], EX["Health_monitoring_and_disease_control"])
    out = assert_axiom(ont, ax)
    assert len(out) == 3
    assert DeclareClass(EX["Vaccination"]) in out
    assert len(ont) == 0  # the original is untouched
    assert assert_axiom(out, ax) is out


def test_characteristic_requires_object_property():
    ont = Ontology(BASE, [DeclareProperty(EX["hasPeriod"], PropertyKind.DATATYPE)])
    with pytest.raises(PropertyKindError, match="requires an object property"):
        ont.add(HasCharacteristic(EX["hasPeriod"], Characteristic.TRANSITIVE))
    # Functional is fine on either kind
    ont.add(HasCharacteristic(EX["hasPeriod"], Characteristic.FUNCTIONAL))


def test_kind_neutral_axioms_do_not_fix_the_kind():
    d = EX["hasBreedName"]
    axioms = [HasCharacteristic(d, Characteristic.FUNCTIONAL), Domain(d, EX["Chicken"]),
              DataAssertion(d, EX["hen"], Literal("Leghorn"))]
    forward = Ontology(BASE, axioms)
    assert forward == Ontology(BASE, axioms[::-1])
    assert forward.datatype_properties == {d}
    assert DeclareProperty(d, PropertyKind.OBJECT) not in forward
    # once declared, the object kind sticks
    declared = Ontology(BASE, axioms[:1]).add(DeclareProperty(d, PropertyKind.OBJECT))
    with pytest.raises(PropertyKindError):
        declared.add(axioms[2])
    # the guess alone still yields an object property
    assert Ontology(BASE, axioms[:2]).object_properties == {d}


def test_inverse_requires_object_properties():
    ont = Ontology(BASE, [DeclareProperty(EX["d"], PropertyKind.DATATYPE)])
    with pytest.raises(PropertyKindError):
        ont.add(InverseOf(EX["p"], EX["d"]))


def test_role_conflict():
    ont = Ontology(BASE, [DeclareClass(EX["Layer"])])
    with pytest.raises(RoleConflictError):
        ont.add(ObjectAssertion(EX["Layer"], EX["a"], EX["b"]))
    lax = Ontology(BASE, [DeclareClass(EX["Layer"])], strict=False)
    punned = lax.add(ObjectAssertion(EX["Layer"], EX["a"], EX["b"]))
    assert punned.roles(EX["Layer"]) == {Role.CLASS, Role.OBJECT_PROPERTY}


def test_nested_complement_rejected():
    with pytest.raises(OntologyError):
        ComplementOf(ComplementOf(EX["A"]))


def test_symmetric_pairs_are_canonical():
    a, b = EX["b"], EX["a"]
    assert DisjointClasses(a, b) == DisjointClasses(b, a)
    assert DisjointClasses(a, b).first == EX["a"]
    assert DifferentIndividuals(a, b) == DifferentIndividuals(b, a)


def test_diagnostic_needs_entities():
    with pytest.raises(ValueError):
        Diagnostic(Severity.ERROR, "x", (), "m")
    d = Diagnostic(Severity.WARNING, "k", (EX["a"],), "msg")
    assert d.to_json() == {"severity": "warning", "kind": "k",
                           "entities": ["http://ex.org/poultry#a"], "message": "msg"}


def test_declared_subclasses_on_corpus():
    ont = build_poultry_ontology()
    hm = cls("Health monitoring and disease control")
    assert declared_subclasses(ont, hm, direct=True) == {cls("Biosecurity"), cls("Vaccination")}
    assert declared_subclasses(ont, cls("Vaccination")) == {cls("Prevention of diseases")}
    assert declared_subclasses(ont, cls("Layer"), direct=True) == {cls("White Leghorn"), cls("Rhode Island Red")}
    assert declared_subclasses(ont, THING) == ont.classes - {THING}
    assert cls("Bacterial") in declared_subclasses(ont, THING, direct=True)
    assert hm not in declared_subclasses(ont, THING, direct=True)
    with pytest.raises(UnknownEntityError):
        declared_subclasses(ont, EX["Duck"])


def test_merge_identity_and_idempotence():
    ont = build_poultry_ontology()
    assert merge(ont, new_ontology("urn:empty")) == ont
    assert merge(ont, ont) == ont
    other = Ontology("urn:other", [SubClassOf(cls("Broiler"), cls("Chicken")), DeclareClass(EX["Duck"])])
    merged = merge(ont, other)
    assert merged.base_iri == ont.base_iri
    assert set(merged.axioms) == set(ont.axioms) | set(other.axioms)


def test_merge_reports_role_conflicts():
    ont = build_poultry_ontology()
    with pytest.raises(RoleConflictError):
        merge(ont, Ontology("urn:o", [DeclareClass(prop("Causes"))]))


def test_annotate():
    ont = build_poultry_ontology()
    vacc = cls("Vaccination")
    note = Literal("design concept that describes functionality", lang="en")
    out = annotate(ont, vacc, COMMENT, note)
    assert len(out) == len(ont) + 1
    assert materialize(out) == materialize(ont)
    assert check_consistency(out) == check_consistency(ont)
    with pytest.raises(UnknownEntityError):
        annotate(ont, EX["Duck"], RDFS["label"], "duck")


@settings(max_examples=50, deadline=None)
@given(ontologies(), st.randoms(use_true_random=False))
def test_construction_order_does_not_matter(ont, rnd):
    axioms = list(ont.axioms)
    rnd.shuffle(axioms)
    again = Ontology(ont.base_iri, axioms)
    assert again == ont
    assert again.axioms == ont.axioms
    assert hash(again) == hash(ont)


@settings(max_examples=50, deadline=None)
@given(ontologies())
def test_thing_rooted(ont):
    assert THING in ont.classes
    assert declared_subclasses(ont, THING) == ont.classes - {THING}


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.sampled_from("CPDI"), st.integers(0, 3)), max_size=25))
def test_roles_stay_unique_under_random_asserts(ops):
    ont = new_ontology(BASE)
    names = [EX[f"n{i}"] for i in range(4)]
    for role, i in ops:
        n = names[i]
        ax = {"C": DeclareClass(n), "P": ObjectAssertion(n, EX["s"], EX["o"]),
              "D": DataAssertion(n, EX["s"], Literal("v")), "I": ClassAssertion(Named(EX["K"]), n)}[role]
        try:
            ont = ont.add(ax)
        except OntologyError:
            pass
    for iri in ont.signature:
        assert len(ont.roles(iri)) == 1


@settings(max_examples=30, deadline=None)
@given(ontologies(), st.sampled_from(["x", "y"]))
def test_annotations_are_reasoning_inert(ont, text):
    target = sorted(ont.signature)[0]
    out = ont.annotate(target, RDFS["comment"], Literal(text))
    assert materialize(out) == materialize(ont)
    assert check_consistency(out) == check_consistency(ont)
