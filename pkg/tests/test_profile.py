from owlet.corpus import build_poultry_ontology, cls, prop
from owlet.iri import RDFS, Iri
from owlet.model import Annotation, ClassAssertion, DeclareClass, DeclareProperty, HasCharacteristic, \
    Characteristic, Literal, ObjectAssertion, Ontology, PropertyKind
from owlet.reasoner import check_profile
from owlet.reasoner.profile import ANNOTATION_IN_LOGICAL_AXIOM, PUNNING

from strategies import BASE

E = lambda name: Iri(f"http://ex.org/f#{name}")  # noqa: E731


def test_corpus_is_in_profile():
    assert check_profile(build_poultry_ontology()) == []


def test_class_used_as_individual():
    ont = Ontology(BASE, [DeclareClass(cls("Layer")), ClassAssertion(cls("Chicken"), cls("Layer"))], strict=False)
    [d] = check_profile(ont)
    assert d.kind == PUNNING and d.is_error
    assert d.entities == (cls("Layer"),)
    assert "class and individual" in d.message
    # the implied individual declaration is part of the evidence
    assert len(d.provenance) == 3


def test_annotation_property_in_logical_axiom():
    note = E("note")
    ont = Ontology(BASE, [
        Annotation(cls("Layer"), note, Literal("x")),
        DeclareProperty(note, PropertyKind.ANNOTATION),
        HasCharacteristic(note, Characteristic.TRANSITIVE),
        ObjectAssertion(note, E("a"), E("b")),
    ], strict=False)
    [d] = check_profile(ont)
    assert d.kind == ANNOTATION_IN_LOGICAL_AXIOM
    assert all(not isinstance(ax, (Annotation, DeclareProperty)) for ax in d.provenance)


def test_builtin_annotation_is_fine():
    ont = build_poultry_ontology().annotate(prop("Causes"), RDFS["comment"], Literal("c"))
    assert check_profile(ont) == []
