"""Hypothesis strategies for random ontologies within the supported fragment."""

from hypothesis import strategies as st

from owlet.iri import RDFS, XSD, Iri
from owlet.model import (
    Annotation,
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

BASE = Iri("http://example.org/onto")
NAMESPACES = ("http://example.org/onto#", "http://example.org/other/", "urn:x-test:")
LOCAL_NAMES = ("A", "Größe", "Œuf", "b-2", "x.y", "_u", "Kükenaufzucht")

text = st.text(
    alphabet=st.characters(blacklist_categories=("Cs",), min_codepoint=0x09).filter(
        lambda c: c in "\t\n\r" or ord(c) >= 0x20 and c not in "￾￿"
    ),
    max_size=12,
)
lang = st.sampled_from(("en", "de", "en-GB", "hi-Latn"))


@st.composite
def literals(draw):
    kind = draw(st.integers(0, 2))
    if kind == 0:
        return Literal(draw(text))
    if kind == 1:
        return Literal(draw(text), lang=draw(lang))
    return Literal(str(draw(st.integers(-1000, 1000))), XSD["integer"])


def _names(draw, prefix: str, n: int) -> list[Iri]:
    out = []
    for i in range(n):
        ns = draw(st.sampled_from(NAMESPACES))
        stem = draw(st.sampled_from(LOCAL_NAMES))
        out.append(Iri(f"{ns}{prefix}{i}{stem}"))
    return out


@st.composite
def ontologies(draw, max_classes=20, max_props=8, max_individuals=10, max_axioms=40):
    n_cls = draw(st.integers(0, max_classes))
    n_obj = draw(st.integers(0, min(5, max_props)))
    n_data = draw(st.integers(0, min(3, max_props - n_obj)))
    n_ann = draw(st.integers(0, 1))
    n_ind = draw(st.integers(0, max_individuals))
    classes = _names(draw, "C", n_cls)
    objs = _names(draw, "p", n_obj)
    datas = _names(draw, "d", n_data)
    anns = _names(draw, "note", n_ann) + [RDFS["label"]]
    inds = _names(draw, "i", n_ind)

    axioms = [DeclareClass(c) for c in classes]
    axioms += [DeclareProperty(p, PropertyKind.OBJECT) for p in objs]
    axioms += [DeclareProperty(p, PropertyKind.DATATYPE) for p in datas]
    axioms += [DeclareIndividual(a) for a in inds]

    def ce():
        c = draw(st.sampled_from(classes))
        return ComplementOf(c) if draw(st.integers(0, 4)) == 0 else Named(c)

    choices = []
    if len(classes) >= 2:
        def sub():
            i, j = sorted(draw(st.lists(st.integers(0, n_cls - 1), min_size=2, max_size=2, unique=True)))
            # mostly a DAG (child index above parent), occasionally a complement
            if draw(st.integers(0, 5)) == 0:
                return SubClassOf(ce(), ce())
            return SubClassOf(classes[j], classes[i])
        choices += [sub, sub, lambda: DisjointClasses(*draw(st.lists(st.sampled_from(classes),
                                                                    min_size=2, max_size=2, unique=True)))]
    if objs:
        choices += [
            lambda: HasCharacteristic(draw(st.sampled_from(objs)), draw(st.sampled_from(list(Characteristic)))),
            lambda: InverseOf(draw(st.sampled_from(objs)), draw(st.sampled_from(objs))),
        ]
        if classes:
            choices += [lambda: Domain(draw(st.sampled_from(objs)), draw(st.sampled_from(classes))),
                        lambda: Range(draw(st.sampled_from(objs)), ce())]
        if inds:
            choices += [lambda: ObjectAssertion(draw(st.sampled_from(objs)), draw(st.sampled_from(inds)),
                                                draw(st.sampled_from(inds)))] * 2
    if datas:
        choices += [
            lambda: HasCharacteristic(draw(st.sampled_from(datas)), Characteristic.FUNCTIONAL),
            lambda: Range(draw(st.sampled_from(datas)), draw(st.sampled_from((XSD["string"], XSD["integer"])))),
        ]
        if classes:
            choices.append(lambda: Domain(draw(st.sampled_from(datas)), draw(st.sampled_from(classes))))
        if inds:
            choices.append(lambda: DataAssertion(draw(st.sampled_from(datas)), draw(st.sampled_from(inds)),
                                                 draw(literals())))
    if inds and classes:
        choices += [lambda: ClassAssertion(ce(), draw(st.sampled_from(inds)))] * 2
    if len(inds) >= 2:
        choices.append(lambda: DifferentIndividuals(*draw(st.lists(st.sampled_from(inds),
                                                                   min_size=2, max_size=2, unique=True))))
    targets = classes + objs + datas + inds
    if targets:
        choices.append(lambda: Annotation(draw(st.sampled_from(targets)), draw(st.sampled_from(anns)),
                                          draw(literals())))
    if choices:
        n = draw(st.integers(0, max_axioms))
        for _ in range(n):
            axioms.append(draw(st.sampled_from(choices))())
    return Ontology(BASE, axioms)


def small_ontologies():
    """Ontologies inside the model-enumeration bounds.

    The pure-Python kernel cannot search three properties over three
    elements in reasonable time, so it gets one property fewer.
    """
    from owlet.reasoner.models import kernel

    props = 3 if kernel.IMPLEMENTATION == "cython" else 2
    return ontologies(max_classes=3, max_props=props, max_individuals=3, max_axioms=8)
