import pytest

from owlet.corpus import CLASS_NAMES, PROPERTY_NAMES, build_poultry_ontology, cls, fixtures, prop
from owlet.iri import THING
from owlet.model import Characteristic, InverseOf
from owlet.reasoner import check_consistency, enumerate_models
from owlet.reasoner import consistency as k

FIXTURES = fixtures()


def test_table_of_properties():
    ont = build_poultry_ontology()
    assert len(ont.object_properties) == len(PROPERTY_NAMES) == 8
    pairs = {(ax.prop, ax.inverse) for ax in ont.of_type(InverseOf)}
    assert (prop("Causes"), prop("isCausedBy")) in pairs
    assert len(pairs) == 4


def test_every_class_is_present():
    ont = build_poultry_ontology()
    assert ont.classes == {cls(label) for label, _ in CLASS_NAMES} | {THING}


def test_cause_and_prevention_are_asymmetric_and_irreflexive():
    ont = build_poultry_ontology()
    for name in ("Causes", "isCausedBy", "Prevents", "isPreventedBy"):
        assert ont.characteristics(prop(name)) == {Characteristic.ASYMMETRIC, Characteristic.IRREFLEXIVE}


def test_fixture_lookup():
    assert FIXTURES["baseline"].expected_consistent
    with pytest.raises(KeyError):
        FIXTURES["missing"]
    assert len(set(FIXTURES.names())) == len(FIXTURES)


@pytest.mark.parametrize("fixture", FIXTURES, ids=lambda f: f.name)
def test_fixture_expectations(fixture):
    report = check_consistency(fixture.ontology)
    assert report.consistent == fixture.expected_consistent
    assert report.kinds() == fixture.expected_diagnostic_kinds


@pytest.mark.parametrize("fixture", FIXTURES, ids=lambda f: f.name)
def test_fixture_core_agrees_with_model_search(fixture):
    # the core is a small slice with the same verdict, small enough to enumerate
    assert check_consistency(fixture.core).consistent == fixture.expected_consistent
    assert enumerate_models(fixture.core) == fixture.expected_consistent


def test_every_clash_and_pair_error_is_covered():
    triggered = set()
    for f in FIXTURES:
        report = check_consistency(f.ontology)
        triggered |= {d.kind for d in report.errors}
    wanted = set(k.CLASH_KINDS) | {k.REFLEXIVE_ASYMMETRIC, k.REFLEXIVE_IRREFLEXIVE}
    assert wanted <= triggered
