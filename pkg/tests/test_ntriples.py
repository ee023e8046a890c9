import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from owlet.corpus import build_poultry_ontology
from owlet.errors import RdfSyntaxError
from owlet.iri import OWL, RDF, XSD, Iri
from owlet.model import Literal
from owlet.rdf import BNode, Graph, Triple, parse_ntriples, to_triples, write_ntriples

from strategies import literals, ontologies, text

S, P = Iri("http://ex.org/n#s"), Iri("http://ex.org/n#p")


def test_empty_graph():
    assert write_ntriples(Graph()) == ""
    assert parse_ntriples("") == Graph()
    assert parse_ntriples("# comment only\n\n") == Graph()


def test_one_line_per_triple_sorted():
    out = write_ntriples(build_poultry_ontology())
    lines = out.splitlines()
    assert len(lines) == len(to_triples(build_poultry_ontology()))
    assert lines == sorted(lines)
    assert out.endswith(" .\n")


def test_escapes():
    lit = Literal('a "quoted"\\ line\nnext\rcr\ttab')
    line = write_ntriples(Graph([Triple(S, P, lit)]))
    assert line == '<http://ex.org/n#s> <http://ex.org/n#p> "a \\"quoted\\"\\\\ line\\nnext\\rcr\ttab" .\n'
    assert parse_ntriples(line) == Graph([Triple(S, P, lit)])


def test_reader_accepts_unicode_escapes_and_typed_literals():
    g = parse_ntriples('<http://ex.org/n#s> <http://ex.org/n#p> "\\u00e9t\\U0001F414"^^'
                       '<http://www.w3.org/2001/XMLSchema#string> .\n')
    [t] = g
    assert t.object == Literal("ét\U0001F414", XSD["string"])


@pytest.mark.parametrize("bad", [
    "<http://ex.org/s> <http://ex.org/p> .",
    '"lit" <http://ex.org/p> <http://ex.org/o> .',
    "<http://ex.org/s> _:b <http://ex.org/o> .",
    '<http://ex.org/s> <http://ex.org/p> "x\\q" .',
    "<http://ex.org/s> <http://ex.org/p> <http://ex.org/o>",
])
def test_reader_rejects(bad):
    with pytest.raises(RdfSyntaxError) as info:
        parse_ntriples("\n" + bad)
    assert info.value.line == 2


def test_blank_labels_do_not_matter():
    def graph(x, y):
        return Graph([Triple(BNode(x), RDF["type"], OWL["Class"]),
                      Triple(BNode(x), OWL["complementOf"], S),
                      Triple(BNode(y), OWL["complementOf"], P),
                      Triple(P, RDF["type"], BNode(y))])
    a = write_ntriples(graph("x1", "q"))
    assert a == write_ntriples(graph("zz", "a0"))
    assert "_:b0" in a and "_:b1" in a and "x1" not in a


@settings(max_examples=100, deadline=None)
@given(ontologies())
def test_fixpoint(ont):
    once = write_ntriples(ont)
    assert write_ntriples(parse_ntriples(once)) == once


@settings(max_examples=200, deadline=None)
@given(st.one_of(literals(), text.map(Literal)))
def test_literal_round_trip(lit):
    g = Graph([Triple(S, P, lit)])
    assert parse_ntriples(write_ntriples(g)) == g
