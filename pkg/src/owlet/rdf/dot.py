"""Graphviz DOT export of the class hierarchy, individuals and property links."""

from __future__ import annotations

from owlet.iri import THING, Iri
from owlet.model import (
    ClassAssertion,
    ComplementOf,
    DisjointClasses,
    Domain,
    Named,
    ObjectAssertion,
    Ontology,
    Range,
    SubClassOf,
)

__all__ = ["export_dot", "PALETTE", "property_colors"]

# distinguishable on white, cycled when there are more properties than colours
PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)


def property_colors(ont: Ontology) -> dict[Iri, str]:
    return {p: PALETTE[i % len(PALETTE)] for i, p in enumerate(sorted(ont.object_properties))}


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


class _Ids:
    """Node ids: local names where unambiguous, full IRIs otherwise."""

    def __init__(self, iris):
        counts: dict[str, int] = {}
        for iri in iris:
            counts[iri.local_name] = counts.get(iri.local_name, 0) + 1
        self.counts = counts

    def __call__(self, iri: Iri) -> str:
        if iri == THING:
            return _quote("Thing")
        name = iri.local_name
        return _quote(name if self.counts.get(name) == 1 and name != "Thing" else iri.value)


def export_dot(ont: Ontology, include_inferred: bool = False) -> str:
    """DOT digraph. Classes are boxes, individuals ellipses.

    Every class without a named superclass hangs under Thing. Each object
    property keeps one colour for its domain/range edges and its links.
    With ``include_inferred`` the materialized links, memberships and
    subsumptions that were not asserted are added as dashed edges.
    """
    classes = sorted(ont.classes)
    individuals = sorted(ont.individuals)
    ids = _Ids([*classes, *individuals])
    color = property_colors(ont)

    lines = ["digraph ontology {", "  rankdir=BT;", '  node [fontname="Helvetica"];',
             '  edge [fontname="Helvetica", fontsize=10];']
    for c in classes:
        lines.append(f"  {ids(c)} [shape=box, label={_quote(c.local_name)}];")
    for a in individuals:
        lines.append(f"  {ids(a)} [shape=ellipse, label={_quote(a.local_name)}];")

    edges: list[tuple] = []
    with_parent = set()
    for ax in ont.of_type(SubClassOf):
        sub, sup = ax.sub, ax.sup
        if isinstance(sub, Named) and isinstance(sup, Named):
            with_parent.add(sub.iri)
            edges.append((sub.iri, sup.iri, "subClassOf", "solid", None))
        elif isinstance(sub, Named):
            edges.append((sub.iri, sup.iri, "subClassOf not", "solid", "tee"))
        else:
            edges.append((sub.iri, sup.iri, "not subClassOf", "solid", None))
    for c in classes:
        if c != THING and c not in with_parent:
            edges.append((c, THING, "subClassOf", "solid", None))
    for ax in ont.of_type(DisjointClasses):
        edges.append((ax.first, ax.second, "disjointWith", "dotted", "none"))
    for ax in ont.of_type(ClassAssertion):
        if isinstance(ax.cls, ComplementOf):
            edges.append((ax.individual, ax.cls.iri, "type not", "solid", "tee"))
        else:
            edges.append((ax.individual, ax.cls.iri, "type", "solid", None))

    domains: dict[Iri, list[Iri]] = {}
    ranges: dict[Iri, list[Iri]] = {}
    for ax in ont.of_type(Domain):
        if ax.prop in color:
            domains.setdefault(ax.prop, []).append(ax.cls)
    for ax in ont.of_type(Range):
        if ax.prop in color and isinstance(ax.target, Named):
            ranges.setdefault(ax.prop, []).append(ax.target.iri)
    prop_edges = []
    for p in sorted(color):
        for d in domains.get(p, ()):
            for r in ranges.get(p, ()):
                prop_edges.append((d, r, p, "solid"))
    for ax in ont.of_type(ObjectAssertion):
        prop_edges.append((ax.subject, ax.object, ax.prop, "solid"))

    if include_inferred:
        from owlet.reasoner.rules import materialize
        from owlet.reasoner.graph import Link, Membership, Subsumption

        graph = materialize(ont)
        asserted_links = {(ax.prop, ax.subject, ax.object) for ax in ont.of_type(ObjectAssertion)}
        asserted_types = {(ax.individual, ax.cls.iri) for ax in ont.of_type(ClassAssertion)
                          if isinstance(ax.cls, Named)}
        asserted_subs = {(ax.sub.iri, ax.sup.iri) for ax in ont.of_type(SubClassOf)
                         if isinstance(ax.sub, Named) and isinstance(ax.sup, Named)}
        for atom in sorted(graph.inferred(), key=lambda a: a.key()):
            if isinstance(atom, Link) and tuple(atom) not in asserted_links:
                prop_edges.append((atom.subject, atom.object, atom.prop, "dashed"))
            elif isinstance(atom, Membership) and atom.cls != THING \
                    and (atom.individual, atom.cls) not in asserted_types:
                edges.append((atom.individual, atom.cls, "type", "dashed", None))
            elif isinstance(atom, Subsumption) and atom.sup != THING and atom.sub != atom.sup \
                    and (atom.sub, atom.sup) not in asserted_subs:
                edges.append((atom.sub, atom.sup, "subClassOf", "dashed", None))

    for a, b, label, style, head in sorted(edges, key=lambda e: (e[0], e[1], e[2], e[3])):
        attrs = [f"label={_quote(label)}", f"style={style}"]
        if head:
            attrs.append(f"arrowhead={head}")
        lines.append(f"  {ids(a)} -> {ids(b)} [{', '.join(attrs)}];")
    for a, b, p, style in sorted(set(prop_edges), key=lambda e: (e[2], e[0], e[1], e[3])):
        c = color[p]
        lines.append(f"  {ids(a)} -> {ids(b)} [label={_quote(p.local_name)}, "
                     f"color=\"{c}\", fontcolor=\"{c}\", style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
