from pathlib import Path

import pytest
from hypothesis import given, settings

from owlet.corpus import ONTOLOGY_IRI, build_poultry_ontology, fixtures
from owlet.errors import RdfSyntaxError
from owlet.model import Ontology
from owlet.rdf import (
    parse_ntriples,
    parse_rdfxml,
    rdfxml_graph,
    read_rdfxml,
    to_triples,
    write_ntriples,
    write_rdfxml,
)

from strategies import ontologies

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def golden(name: str) -> str:
    return (CORPUS / name).read_bytes().decode("utf-8")


@pytest.fixture(scope="module")
def corpus():
    return build_poultry_ontology()


def test_golden_files_match(corpus):
    assert write_rdfxml(corpus) == golden("poultry.rdf")
    assert write_ntriples(corpus) == golden("poultry.nt")
    assert write_rdfxml(Ontology(ONTOLOGY_IRI)) == golden("empty.rdf")


def test_fixture_files_match():
    for f in fixtures():
        assert write_rdfxml(f.ontology) == golden(f"fixtures/{f.name}.rdf"), f.name


def test_golden_parses_back(corpus):
    assert parse_rdfxml(golden("poultry.rdf")) == corpus
    assert rdfxml_graph(golden("poultry.rdf")) == parse_ntriples(golden("poultry.nt"))


def test_eight_object_properties(corpus):
    assert len(parse_rdfxml(golden("poultry.rdf")).object_properties) == 8


def test_fixpoint(corpus):
    once = write_rdfxml(corpus)
    assert write_rdfxml(parse_rdfxml(once)) == once


def test_parse_type_is_unsupported():
    with pytest.raises(RdfSyntaxError, match="rdf:parseType"):
        parse_rdfxml(golden("fixtures/parse_type_collection.rdf"))


def test_truncated_input_reports_a_position():
    with pytest.raises(RdfSyntaxError) as info:
        parse_rdfxml(golden("fixtures/truncated.rdf"))
    assert info.value.line is not None and info.value.line > 1


@pytest.mark.parametrize("body", [
    '<rdf:Description rdf:about="http://ex.org/a"><rdf:li>x</rdf:li></rdf:Description>',
    '<!DOCTYPE rdf:RDF [<!ENTITY e "x">]>',
])
def test_other_unsupported_constructs(body):
    doc = body if body.startswith("<!") else (
        '<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#">' + body + "</rdf:RDF>")
    if body.startswith("<!"):
        doc += '<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"/>'
    with pytest.raises(RdfSyntaxError):
        rdfxml_graph(doc, base="http://ex.org/x")


def test_reader_handles_common_abbreviations():
    doc = """<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xmlns:ex="http://ex.org/poultry#"
         xml:base="http://ex.org/poultry">
  <owl:Ontology rdf:about=""/>
  <owl:Class rdf:ID="Layer">
    <rdfs:subClassOf xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#">
      <owl:Class rdf:about="#Chicken"/>
    </rdfs:subClassOf>
  </owl:Class>
  <owl:ObjectProperty rdf:about="#hasPeriod"/>
  <ex:Layer rdf:about="#hen1" ex:hasPeriod="ignored-literal"/>
</rdf:RDF>"""
    decoded = read_rdfxml(doc)
    names = {iri.local_name for iri in decoded.ontology.classes}
    assert {"Layer", "Chicken"} <= names
    assert decoded.ontology.base_iri.value == "http://ex.org/poultry"
    # a literal on an object property cannot be interpreted
    assert len(decoded.residue) == 1


@settings(max_examples=100, deadline=None)
@given(ontologies())
def test_round_trip(ont):
    assert parse_rdfxml(write_rdfxml(ont)) == ont


@settings(max_examples=50, deadline=None)
@given(ontologies())
def test_random_fixpoint(ont):
    once = write_rdfxml(ont)
    assert write_rdfxml(parse_rdfxml(once)) == once


rdflib = pytest.importorskip("rdflib")


def _iso(a, b):
    from rdflib.compare import isomorphic
    return isomorphic(a, b)


def test_rdflib_reads_our_output_as_the_same_graph(corpus):
    theirs = rdflib.Graph().parse(data=write_rdfxml(corpus), format="xml")
    ours = rdflib.Graph().parse(data=write_ntriples(corpus), format="nt")
    assert _iso(theirs, ours)


@settings(max_examples=25, deadline=None)
@given(ontologies(max_classes=6, max_individuals=4, max_axioms=15))
def test_we_read_rdflib_output(ont):
    g = rdflib.Graph().parse(data=write_ntriples(ont), format="nt")
    assert parse_rdfxml(g.serialize(format="xml")) == ont
    check = rdflib.Graph().parse(data=write_rdfxml(ont), format="xml")
    assert _iso(check, g)
