import re

from hypothesis import given, settings

from owlet.corpus import build_poultry_ontology, cls, prop
from owlet.iri import THING
from owlet.model import ClassAssertion, DisjointClasses, Domain, Named, ObjectAssertion, Ontology, Range, SubClassOf
from owlet.rdf import export_dot
from owlet.rdf.dot import PALETTE

from strategies import BASE, ontologies

_ID = r'"(?:[^"\\]|\\.)*"'
_ATTR = rf'\w+=(?:{_ID}|[\w.]+)'
_ATTRS = rf'\[{_ATTR}(?:, {_ATTR})*\]'
NODE = re.compile(rf'  ({_ID}) {_ATTRS};\Z')
EDGE = re.compile(rf'  ({_ID}) -> ({_ID}) ({_ATTRS});\Z')
HEADER = ["digraph ontology {", "  rankdir=BT;", '  node [fontname="Helvetica"];',
          '  edge [fontname="Helvetica", fontsize=10];']


def parse(dot: str):
    """Check the output against the small DOT subset we emit; return nodes and edges."""
    lines = dot.split("\n")
    assert lines[:4] == HEADER and lines[-2:] == ["}", ""]
    nodes, edges = [], []
    for line in lines[4:-2]:
        if m := NODE.match(line):
            nodes.append(m.group(1))
        elif m := EDGE.match(line):
            assert m.group(1) in nodes and m.group(2) in nodes, line
            edges.append((m.group(1), m.group(2), m.group(3)))
        else:
            raise AssertionError(f"not a DOT statement: {line!r}")
    assert len(set(nodes)) == len(nodes)
    return nodes, edges


def expected_edge_count(ont):
    parented = {ax.sub.iri for ax in ont.of_type(SubClassOf)
                if isinstance(ax.sub, Named) and isinstance(ax.sup, Named)}
    roots = [c for c in ont.classes if c != THING and c not in parented]
    domains, ranges = {}, {}
    for ax in ont.of_type(Domain):
        if ax.prop in ont.object_properties:
            domains.setdefault(ax.prop, set()).add(ax.cls)
    for ax in ont.of_type(Range):
        if isinstance(ax.target, Named):
            ranges.setdefault(ax.prop, set()).add(ax.target.iri)
    prop_edges = {(d, r, p) for p in domains for d in domains[p] for r in ranges.get(p, ())}
    prop_edges |= {(ax.subject, ax.object, ax.prop) for ax in ont.of_type(ObjectAssertion)}
    count = lambda kind: sum(1 for _ in ont.of_type(kind))  # noqa: E731
    return (count(SubClassOf) + len(roots) + count(DisjointClasses) + count(ClassAssertion)
            + len(prop_edges))


def test_corpus_drawing():
    ont = build_poultry_ontology()
    nodes, edges = parse(export_dot(ont))
    assert len(nodes) == len(ont.classes) + len(ont.individuals)
    assert ('"Vaccination"', '"Health_monitoring_and_disease_control"', '[label="subClassOf", style=solid]') in edges
    assert len(edges) == expected_edge_count(ont)


def test_same_property_same_colour():
    _, edges = parse(export_dot(build_poultry_ontology()))
    colours = {}
    for _, _, attrs in edges:
        if m := re.search(r'label="(\w+)", color="(#\w+)"', attrs):
            colours.setdefault(m.group(1), set()).add(m.group(2))
    assert set(colours) >= {"Causes", "Prevents"}
    assert all(len(v) == 1 and v <= set(PALETTE) for v in colours.values())


def test_inferred_edges_are_dashed():
    ont = build_poultry_ontology()
    plain = export_dot(ont)
    _, edges = parse(export_dot(ont, include_inferred=True))
    dashed = [e for e in edges if "style=dashed" in e[2]]
    assert ('"FowlTyphoidCase1"', '"SalmonellaGallinarum"') in {(a, b) for a, b, attrs in dashed
                                                                if 'label="isCausedBy"' in attrs}
    assert "dashed" not in plain


def test_empty_ontology():
    nodes, edges = parse(export_dot(Ontology(BASE)))
    assert nodes == ['"Thing"'] and edges == []


def test_ambiguous_local_names_use_full_iris():
    a, b = cls("Layer"), type(cls("Layer"))("http://other.org/x#Layer")
    nodes, _ = parse(export_dot(Ontology(BASE, [SubClassOf(a, b)])))
    assert '"http://other.org/x#Layer"' in nodes


def test_disjoint_is_undirected():
    _, edges = parse(export_dot(Ontology(BASE, [DisjointClasses(cls("Layer"), cls("Broiler"))])))
    assert any("style=dotted" in e[2] and "arrowhead=none" in e[2] for e in edges)


@settings(max_examples=100, deadline=None)
@given(ontologies())
def test_random_drawings_parse_and_count(ont):
    nodes, edges = parse(export_dot(ont))
    assert len(nodes) == len(ont.classes) + len(ont.individuals)
    assert len(edges) == expected_edge_count(ont)
    _, inferred = parse(export_dot(ont, include_inferred=True))
    assert len(inferred) >= len(edges)
