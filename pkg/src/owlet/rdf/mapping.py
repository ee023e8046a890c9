"""Mapping between axioms and RDF triples.

``to_triples`` follows a fixed table, one or more triples per axiom kind.
``decode_graph`` inverts it and returns, besides the ontology, every triple
it could not interpret, so nothing in the input is lost without a trace.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass

from owlet.errors import RdfError
from owlet.iri import OWL, RDF, RDFS, THING, XSD, Iri
from owlet.model import (
    Annotation,
    Axiom,
    Characteristic,
    ClassAssertion,
    ComplementOf,
    DataAssertion,
    DeclareClass,
    DeclareIndividual,
    DeclareProperty,
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
    SubClassOf,
)
from owlet.rdf.terms import GENERATED_PREFIX, BNode, Graph, Triple

__all__ = ["to_triples", "from_triples", "decode_graph", "Decoded",
           "BUILTIN_ANNOTATION_PROPERTIES"]

log = logging.getLogger(__name__)

TYPE = RDF["type"]

_KIND_TYPE = {
    PropertyKind.OBJECT: OWL["ObjectProperty"],
    PropertyKind.DATATYPE: OWL["DatatypeProperty"],
    PropertyKind.ANNOTATION: OWL["AnnotationProperty"],
}
_TYPE_KIND = {v: k for k, v in _KIND_TYPE.items()}
_CHAR_TYPE = {ch: OWL[f"{ch.value}Property"] for ch in Characteristic}
_TYPE_CHAR = {v: k for k, v in _CHAR_TYPE.items()}

BUILTIN_ANNOTATION_PROPERTIES = frozenset({
    RDFS["label"], RDFS["comment"], RDFS["seeAlso"], RDFS["isDefinedBy"],
    OWL["versionInfo"], OWL["deprecated"],
})

_VOCAB_NAMESPACES = (RDF.base, RDFS.base, OWL.base)


def _complement_blanks(ont: Ontology) -> dict[Iri, BNode]:
    targets = set()
    for ax in ont.axioms:
        for v in (getattr(ax, "sub", None), getattr(ax, "sup", None),
                  getattr(ax, "cls", None), getattr(ax, "target", None)):
            if isinstance(v, ComplementOf):
                targets.add(v.iri)
    return {c: BNode(f"{GENERATED_PREFIX}{i}") for i, c in enumerate(sorted(targets))}


def _axiom_triples(ax: Axiom, blank: dict[Iri, BNode]) -> list[Triple]:
    def ce(x):
        return x.iri if isinstance(x, Named) else blank[x.iri]

    match ax:
        case DeclareClass(cls=c):
            return [Triple(c, TYPE, OWL["Class"])]
        case DeclareProperty(prop=p, kind=k):
            return [Triple(p, TYPE, _KIND_TYPE[k])]
        case DeclareIndividual(individual=a):
            return [Triple(a, TYPE, OWL["NamedIndividual"])]
        case SubClassOf(sub=sub, sup=sup):
            return [Triple(ce(sub), RDFS["subClassOf"], ce(sup))]
        case DisjointClasses(first=c, second=d):
            return [Triple(c, OWL["disjointWith"], d)]
        case HasCharacteristic(prop=p, characteristic=ch):
            return [Triple(p, TYPE, _CHAR_TYPE[ch])]
        case InverseOf(prop=p, inverse=q):
            return [Triple(p, OWL["inverseOf"], q)]
        case Domain(prop=p, cls=c):
            return [Triple(p, RDFS["domain"], c)]
        case Range(prop=p, target=t):
            return [Triple(p, RDFS["range"], t if isinstance(t, Iri) else ce(t))]
        case ClassAssertion(cls=c, individual=a):
            return [Triple(a, TYPE, ce(c))]
        case ObjectAssertion(prop=p, subject=s, object=o):
            return [Triple(s, p, o)]
        case DataAssertion(prop=p, subject=s, value=v):
            return [Triple(s, p, v)]
        case DifferentIndividuals(first=a, second=b):
            return [Triple(a, OWL["differentFrom"], b)]
        case Annotation(target=t, prop=p, value=v):
            return [Triple(t, p, v)]
    raise TypeError(f"no triple mapping for {ax!r}")


def to_triples(ont: Ontology) -> Graph:
    """RDF graph of ``ont``: an ontology header, then the mapping table per axiom.

    Each complemented class gets one anonymous ``owl:Class`` node carrying
    ``owl:complementOf``, shared by every axiom that mentions it.
    """
    blank = _complement_blanks(ont)
    triples = [Triple(ont.base_iri, TYPE, OWL["Ontology"])]
    for c, b in blank.items():
        triples.append(Triple(b, TYPE, OWL["Class"]))
        triples.append(Triple(b, OWL["complementOf"], c))
    for ax in ont.axioms:
        triples.extend(_axiom_triples(ax, blank))
    return Graph(triples)


# --------------------------------------------------------------- decoding


@dataclass(frozen=True)
class Decoded:
    ontology: Ontology
    residue: tuple[Triple, ...]
    consumed: frozenset[Triple]


def _is_vocab(iri: Iri) -> bool:
    return iri.value.startswith(_VOCAB_NAMESPACES)


def _is_datatype(iri: Iri) -> bool:
    return iri.value.startswith(XSD.base) or iri in (RDFS["Literal"], RDF["PlainLiteral"],
                                                       RDF["langString"], RDF["XMLLiteral"])


def decode_graph(g: Graph, base: Iri | str | None = None) -> Decoded:
    """Invert :func:`to_triples`.

    Raises :class:`RdfError` for patterns that are malformed rather than
    merely unknown: complement nodes with no class or several, and
    complement nodes nothing refers to.
    """
    triples = list(g)
    consumed: set[Triple] = set()
    residue: list[Triple] = []

    # complement nodes
    complement: dict[BNode, Iri] = {}
    for t in triples:
        if t.predicate == OWL["complementOf"] and isinstance(t.subject, BNode):
            if not isinstance(t.object, Iri):
                raise RdfError(f"complement of something other than a named class: {t}")
            if t.subject in complement and complement[t.subject] != t.object:
                raise RdfError(f"blank node {t.subject} is the complement of two classes")
            complement[t.subject] = t.object
    structural = {}
    for t in triples:
        if isinstance(t.subject, BNode) and t.subject in complement and (
                t.predicate == OWL["complementOf"]
                or (t.predicate == TYPE and t.object == OWL["Class"])):
            structural[t] = t.subject
    referenced = set()
    for t in triples:
        if t in structural:
            continue
        for x in (t.subject, t.object):
            if isinstance(x, BNode):
                referenced.add(x)
    for b in sorted(complement):
        if b not in referenced:
            raise RdfError(f"dangling complement: blank node {b} is never used")
    consumed.update(structural)

    def ce(x):
        if isinstance(x, Iri):
            return Named(x)
        if isinstance(x, BNode) and x in complement:
            return ComplementOf(complement[x])
        return None

    # ontology header
    headers = sorted(t.subject for t in triples
                     if t.predicate == TYPE and t.object == OWL["Ontology"]
                     and isinstance(t.subject, Iri))
    if headers:
        base_iri = headers[0]
    elif base is not None:
        base_iri = base if isinstance(base, Iri) else Iri(base)
    else:
        raise RdfError("no owl:Ontology header and no base IRI given")

    declarations: list[Axiom] = []
    other: list[tuple[Axiom, Triple]] = []
    kinds: dict[Iri, set[PropertyKind]] = defaultdict(set)

    for t in triples:
        if t in structural:
            continue
        s, p, o = t.subject, t.predicate, t.object
        if p == TYPE and o == OWL["Ontology"] and s == base_iri:
            consumed.add(t)
        elif p == TYPE and isinstance(s, Iri) and isinstance(o, Iri):
            if o == OWL["Class"]:
                declarations.append(DeclareClass(s))
                consumed.add(t)
            elif o == OWL["NamedIndividual"]:
                declarations.append(DeclareIndividual(s))
                consumed.add(t)
            elif o in _TYPE_KIND:
                declarations.append(DeclareProperty(s, _TYPE_KIND[o]))
                kinds[s].add(_TYPE_KIND[o])
                consumed.add(t)

    def add(ax: Axiom, t: Triple) -> None:
        other.append((ax, t))
        consumed.add(t)

    for t in triples:
        if t in consumed:
            continue
        s, p, o = t.subject, t.predicate, t.object
        if not isinstance(s, Iri) and not (isinstance(s, BNode) and s in complement):
            residue.append(t)
            continue
        if p == TYPE:
            if isinstance(s, Iri) and isinstance(o, Iri) and o in _TYPE_CHAR:
                add(HasCharacteristic(s, _TYPE_CHAR[o]), t)
            elif isinstance(s, Iri) and isinstance(o, (Iri, BNode)) and ce(o) is not None \
                    and (o == THING or not (isinstance(o, Iri) and _is_vocab(o))):
                add(ClassAssertion(ce(o), s), t)
            else:
                residue.append(t)
        elif p == RDFS["subClassOf"]:
            if ce(s) is not None and ce(o) is not None:
                add(SubClassOf(ce(s), ce(o)), t)
            else:
                residue.append(t)
        elif p in (OWL["disjointWith"], OWL["inverseOf"], RDFS["domain"], OWL["differentFrom"]):
            if isinstance(s, Iri) and isinstance(o, Iri):
                cls = {OWL["disjointWith"]: DisjointClasses, OWL["inverseOf"]: InverseOf,
                       RDFS["domain"]: Domain, OWL["differentFrom"]: DifferentIndividuals}[p]
                add(cls(s, o), t)
            else:
                residue.append(t)
        elif p == RDFS["range"]:
            if not isinstance(s, Iri):
                residue.append(t)
            elif isinstance(o, Iri) and (PropertyKind.DATATYPE in kinds[s]
                                         or (not kinds[s] and _is_datatype(o))):
                add(Range(s, o), t)
            elif ce(o) is not None:
                add(Range(s, ce(o)), t)
            else:
                residue.append(t)
        elif _is_vocab(p) and p not in BUILTIN_ANNOTATION_PROPERTIES:
            residue.append(t)
        elif not isinstance(s, Iri):
            residue.append(t)
        elif isinstance(o, Literal):
            if PropertyKind.ANNOTATION in kinds[p] or (not kinds[p] and p in BUILTIN_ANNOTATION_PROPERTIES):
                add(Annotation(s, p, o), t)
            elif PropertyKind.DATATYPE in kinds[p]:
                add(DataAssertion(p, s, o), t)
            else:
                residue.append(t)
        elif isinstance(o, Iri) and PropertyKind.OBJECT in kinds[p]:
            add(ObjectAssertion(p, s, o), t)
        else:
            residue.append(t)

    ont = Ontology(base_iri, declarations + [ax for ax, _ in other], strict=False)
    return Decoded(ont, tuple(residue), frozenset(consumed))


def from_triples(g: Graph, base: Iri | str | None = None) -> Ontology:
    """Ontology encoded by ``g``. Uninterpreted triples are logged as warnings."""
    decoded = decode_graph(g, base)
    for t in decoded.residue:
        log.warning("uninterpreted triple: %s", t)
    return decoded.ontology
