"""RDF terms and the serializations built on them."""

from owlet.rdf.dot import export_dot
from owlet.rdf.mapping import Decoded, decode_graph, from_triples, to_triples
from owlet.rdf.ntriples import parse_ntriples, write_ntriples
from owlet.rdf.rdfxml import parse_rdfxml, rdfxml_graph, read_rdfxml, write_rdfxml
from owlet.rdf.terms import BNode, Graph, Triple

__all__ = [
    "BNode", "Graph", "Triple", "Decoded", "to_triples", "from_triples", "decode_graph",
    "write_ntriples", "parse_ntriples", "write_rdfxml", "parse_rdfxml", "read_rdfxml",
    "rdfxml_graph", "export_dot",
]
