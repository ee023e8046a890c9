"""owlet: a small OWL-DL ontology engine.

Build ontologies from typed axioms, materialize them with forward-chaining
rules, check them for clashes, and read or write RDF/XML and N-Triples.
"""

from owlet.iri import OWL, RDF, RDFS, THING, XSD, Iri, Namespace
from owlet.model import (
    Annotation,
    Characteristic,
    ClassAssertion,
    ComplementOf,
    DataAssertion,
    DeclareClass,
    DeclareIndividual,
    DeclareProperty,
    Diagnostic,
    DifferentIndividuals,
    DisjointClasses,
    Domain,
    HasCharacteristic,
    InverseOf,
    Literal,
    Named,
    ObjectAssertion,
    Ontology,
    PropertyKind,
    Range,
    Severity,
    SubClassOf,
    annotate,
    assert_axiom,
    declared_subclasses,
    merge,
    new_ontology,
)
from owlet.rdf import (
    export_dot,
    from_triples,
    parse_ntriples,
    parse_rdfxml,
    to_triples,
    write_ntriples,
    write_rdfxml,
)
from owlet.reasoner import (
    check_consistency,
    check_profile,
    classify,
    enumerate_models,
    materialize,
)

__version__ = "0.1.0"
