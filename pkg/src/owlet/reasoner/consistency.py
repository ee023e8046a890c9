"""Clash detection over the materialized graph."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from owlet.iri import THING, XSD, Iri
from owlet.model import (
    Characteristic,
    Diagnostic,
    DifferentIndividuals,
    DisjointClasses,
    HasCharacteristic,
    Literal,
    Ontology,
    Severity,
)
from owlet.reasoner.graph import InferredGraph, Link, Membership
from owlet.reasoner.rules import materialize

__all__ = [
    "ConsistencyReport", "check_characteristic_compatibility", "check_consistency",
    "REFLEXIVE_ASYMMETRIC", "REFLEXIVE_IRREFLEXIVE", "SYMMETRIC_ASYMMETRIC",
    "IRREFLEXIVE_CLASH", "ASYMMETRIC_CLASH", "DISJOINTNESS_CLASH", "COMPLEMENT_CLASH",
    "FUNCTIONAL_CLASH", "INVERSE_FUNCTIONAL_CLASH", "SELF_DIFFERENCE_CLASH",
    "CHARACTERISTIC_PAIR_KINDS", "CLASH_KINDS",
]

REFLEXIVE_ASYMMETRIC = "reflexive-asymmetric"
REFLEXIVE_IRREFLEXIVE = "reflexive-irreflexive"
SYMMETRIC_ASYMMETRIC = "symmetric-asymmetric"
IRREFLEXIVE_CLASH = "irreflexive-clash"            # K1
ASYMMETRIC_CLASH = "asymmetric-clash"              # K2
DISJOINTNESS_CLASH = "disjointness-clash"          # K3
COMPLEMENT_CLASH = "complement-clash"              # K4
FUNCTIONAL_CLASH = "functional-clash"              # K5
INVERSE_FUNCTIONAL_CLASH = "inverse-functional-clash"  # K6
SELF_DIFFERENCE_CLASH = "self-difference-clash"

CHARACTERISTIC_PAIR_KINDS = (REFLEXIVE_ASYMMETRIC, REFLEXIVE_IRREFLEXIVE, SYMMETRIC_ASYMMETRIC)
CLASH_KINDS = (IRREFLEXIVE_CLASH, ASYMMETRIC_CLASH, DISJOINTNESS_CLASH, COMPLEMENT_CLASH,
               FUNCTIONAL_CLASH, INVERSE_FUNCTIONAL_CLASH)

C = Characteristic


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool
    diagnostics: tuple[Diagnostic, ...]

    @property
    def errors(self) -> tuple[Diagnostic, ...]:
        return tuple(d for d in self.diagnostics if d.is_error)

    @property
    def warnings(self) -> tuple[Diagnostic, ...]:
        return tuple(d for d in self.diagnostics if not d.is_error)

    def kinds(self) -> set[str]:
        return {d.kind for d in self.diagnostics}

    def to_json(self) -> dict:
        return {"consistent": self.consistent,
                "diagnostics": [d.to_json() for d in self.diagnostics]}


def _char_axiom(p: Iri, ch: Characteristic) -> HasCharacteristic:
    return HasCharacteristic(p, ch)


def _name(iri: Iri) -> str:
    return iri.local_name


def check_characteristic_compatibility(ont: Ontology) -> list[Diagnostic]:
    """Characteristic combinations that are contradictory on their own.

    Reflexive with Asymmetric or Irreflexive has no model over any non-empty
    domain. Symmetric with Asymmetric only forces the property to be empty,
    so it is a warning until the property is used.
    """
    by_prop: dict[Iri, set[Characteristic]] = defaultdict(set)
    for ax in ont.of_type(HasCharacteristic):
        by_prop[ax.prop].add(ax.characteristic)
    out = []
    for p in sorted(by_prop):
        chars = by_prop[p]
        if C.REFLEXIVE in chars and C.ASYMMETRIC in chars:
            out.append(Diagnostic(
                Severity.ERROR, REFLEXIVE_ASYMMETRIC, (p,),
                f"{_name(p)} is both reflexive and asymmetric: reflexivity relates every "
                f"individual to itself, asymmetry forbids it",
                (_char_axiom(p, C.REFLEXIVE), _char_axiom(p, C.ASYMMETRIC)),
            ))
        if C.REFLEXIVE in chars and C.IRREFLEXIVE in chars:
            out.append(Diagnostic(
                Severity.ERROR, REFLEXIVE_IRREFLEXIVE, (p,),
                f"{_name(p)} is both reflexive and irreflexive",
                (_char_axiom(p, C.REFLEXIVE), _char_axiom(p, C.IRREFLEXIVE)),
            ))
        if C.SYMMETRIC in chars and C.ASYMMETRIC in chars:
            out.append(Diagnostic(
                Severity.WARNING, SYMMETRIC_ASYMMETRIC, (p,),
                f"{_name(p)} is both symmetric and asymmetric; it can never hold between any individuals",
                (_char_axiom(p, C.SYMMETRIC), _char_axiom(p, C.ASYMMETRIC)),
            ))
    return out


def _sorted_axioms(axs) -> tuple:
    return tuple(sorted(set(axs), key=lambda a: a.key()))


def _distinct_values(a: Literal, b: Literal) -> bool:
    """True when two literals certainly denote different data values.

    Only plain and language-tagged strings are compared; other datatypes
    would need value-space normalization ("1" and "01" as integers).
    """
    if a == b:
        return False
    return a.datatype == XSD["string"] and b.datatype == XSD["string"]


def check_consistency(ont: Ontology, graph: InferredGraph | None = None) -> ConsistencyReport:
    if graph is None:
        graph = materialize(ont)
    diags: list[Diagnostic] = []
    chars: dict[Iri, set[Characteristic]] = defaultdict(set)
    for ax in ont.of_type(HasCharacteristic):
        chars[ax.prop].add(ax.characteristic)

    out_links = defaultdict(set)
    in_links = defaultdict(set)
    for link in graph.property_links:
        out_links[(link.prop, link.subject)].add(link.object)
        in_links[(link.prop, link.object)].add(link.subject)
    used = {l.prop for l in graph.property_links}

    for d in check_characteristic_compatibility(ont):
        if d.kind == SYMMETRIC_ASYMMETRIC and d.entities[0] in used:
            p = d.entities[0]
            witness = min((l for l in graph.property_links if l.prop == p), key=lambda l: l.key())
            d = Diagnostic(
                Severity.ERROR, d.kind, d.entities,
                f"{_name(p)} is both symmetric and asymmetric and is used in {witness}",
                _sorted_axioms(d.provenance + tuple(graph.support(witness))),
            )
        diags.append(d)

    different = {(a.first, a.second) for a in ont.of_type(DifferentIndividuals)}
    for a, b in sorted(different):
        if a == b:
            diags.append(Diagnostic(
                Severity.ERROR, SELF_DIFFERENCE_CLASH, (a,),
                f"{_name(a)} is declared different from itself",
                (DifferentIndividuals(a, b),),
            ))

    # K1 / K2
    for link in sorted(graph.property_links, key=lambda l: l.key()):
        p, x, y = link
        pc = chars.get(p, ())
        if C.IRREFLEXIVE in pc and x == y:
            diags.append(Diagnostic(
                Severity.ERROR, IRREFLEXIVE_CLASH, (p, x),
                f"irreflexive property {_name(p)} relates {_name(x)} to itself",
                _sorted_axioms((_char_axiom(p, C.IRREFLEXIVE), *graph.support(link))),
            ))
        if C.ASYMMETRIC in pc and x <= y and x in out_links.get((p, y), ()):
            back = Link(p, y, x)
            what = (f"{_name(p)}({_name(x)}, {_name(x)})" if x == y else
                    f"both {_name(p)}({_name(x)}, {_name(y)}) and {_name(p)}({_name(y)}, {_name(x)})")
            diags.append(Diagnostic(
                Severity.ERROR, ASYMMETRIC_CLASH, (p, x) if x == y else (p, x, y),
                f"asymmetric property {_name(p)} holds as {what}",
                _sorted_axioms((_char_axiom(p, C.ASYMMETRIC), *graph.support(link, back))),
            ))

    # K3
    types = defaultdict(set)
    for m in graph.class_memberships:
        types[m.individual].add(m.cls)
    for ax in ont.of_type(DisjointClasses):
        for x in sorted(graph.members_of(ax.first)):
            if ax.second in types[x]:
                diags.append(Diagnostic(
                    Severity.ERROR, DISJOINTNESS_CLASH, (x, ax.first, ax.second),
                    f"{_name(x)} is an instance of disjoint classes {_name(ax.first)} and {_name(ax.second)}",
                    _sorted_axioms((ax, *graph.support(Membership(x, ax.first), Membership(x, ax.second)))),
                ))

    # K4
    for nm in sorted(graph.complement_memberships, key=lambda m: m.key()):
        x, c = nm
        if c == THING or c in types[x]:
            premises = (nm,) if c == THING else (nm, Membership(x, c))
            diags.append(Diagnostic(
                Severity.ERROR, COMPLEMENT_CLASH, (x, c),
                f"{_name(x)} is an instance of both {_name(c)} and its complement",
                _sorted_axioms(graph.support(*premises)),
            ))

    # K5 / K6
    for p in sorted(chars):
        pc = chars[p]
        for ch, kind, index, position in (
            (C.FUNCTIONAL, FUNCTIONAL_CLASH, out_links, "values"),
            (C.INVERSE_FUNCTIONAL, INVERSE_FUNCTIONAL_CLASH, in_links, "subjects"),
        ):
            if ch not in pc:
                continue
            for (q, anchor), fillers in sorted(index.items()):
                if q != p or len(fillers) < 2:
                    continue
                for y, z in combinations(sorted(fillers), 2):
                    if ch is C.FUNCTIONAL:
                        links = (Link(p, anchor, y), Link(p, anchor, z))
                    else:
                        links = (Link(p, y, anchor), Link(p, z, anchor))
                    distinct = (y, z) in different
                    prov = [_char_axiom(p, ch), *graph.support(*links)]
                    if distinct:
                        prov.append(DifferentIndividuals(y, z))
                    diags.append(Diagnostic(
                        Severity.ERROR if distinct else Severity.WARNING, kind, (p, anchor, y, z),
                        f"{'functional' if ch is C.FUNCTIONAL else 'inverse-functional'} property "
                        f"{_name(p)} has two {position} {_name(y)} and {_name(z)} for {_name(anchor)}"
                        + ("" if distinct else "; they must denote the same individual"),
                        _sorted_axioms(prov),
                    ))
        if C.FUNCTIONAL in pc:
            diags.extend(_data_functional(p, graph))

    diags.sort(key=Diagnostic.sort_key)
    return ConsistencyReport(not any(d.is_error for d in diags), tuple(diags))


def _data_functional(p: Iri, graph: InferredGraph) -> list[Diagnostic]:
    values = defaultdict(list)
    for dl in graph.data_links:
        if dl.prop == p:
            values[dl.subject].append(dl)
    out = []
    for s in sorted(values):
        links = sorted(values[s], key=lambda d: d.key())
        for a, b in combinations(links, 2):
            distinct = _distinct_values(a.value, b.value)
            out.append(Diagnostic(
                Severity.ERROR if distinct else Severity.WARNING, FUNCTIONAL_CLASH, (p, s),
                f"functional data property {_name(p)} has two values {a.value} and {b.value} "
                f"for {_name(s)}",
                _sorted_axioms((_char_axiom(p, C.FUNCTIONAL), *graph.support(a, b))),
            ))
    return out
