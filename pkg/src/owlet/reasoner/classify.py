"""Inferred class hierarchy as direct-parent edges."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from owlet.iri import THING, Iri
from owlet.model import Diagnostic, Ontology, Severity
from owlet.reasoner.consistency import check_consistency
from owlet.reasoner.rules import materialize

__all__ = ["Classification", "classify", "transitive_closure", "transitive_reduction"]

Edge = tuple[Iri, Iri]


class Classification(frozenset):
    """Set of ``(sub, sup)`` direct-parent edges, plus warnings raised while classifying."""

    diagnostics: tuple[Diagnostic, ...]

    def __new__(cls, edges: Iterable[Edge] = (), diagnostics: tuple[Diagnostic, ...] = ()):
        self = super().__new__(cls, edges)
        self.diagnostics = diagnostics
        return self

    def parents(self, c: Iri) -> set[Iri]:
        return {sup for sub, sup in self if sub == c}

    def children(self, c: Iri) -> set[Iri]:
        return {sub for sub, sup in self if sup == c}


def transitive_closure(edges: Iterable[Edge]) -> set[Edge]:
    """Irreflexive closure: (a, a) appears only if a lies on a cycle."""
    succ = defaultdict(set)
    for a, b in edges:
        succ[a].add(b)
    out = set()
    for start in list(succ):
        seen = set()
        stack = list(succ[start])
        while stack:
            n = stack.pop()
            if n in seen:
                continue
            seen.add(n)
            stack.extend(succ.get(n, ()))
        out.update((start, n) for n in seen)
    return out


def transitive_reduction(closure: set[Edge]) -> set[Edge]:
    """Minimal edge set with the same transitive closure as ``closure``.

    ``closure`` must already be transitively closed. Cycles (equivalent
    classes) are kept as a ring over their members in IRI order, and edges
    between cycles leave from and arrive at each cycle's smallest member.
    A self-loop on a class outside any larger cycle says nothing about
    the hierarchy and is dropped.
    """
    nodes = {n for e in closure for n in e}
    up = defaultdict(set)
    for a, b in closure:
        if a != b:
            up[a].add(b)
    # equivalence groups: mutual reachability
    rep: dict = {}
    groups: dict = {}
    for n in sorted(nodes):
        if n in rep:
            continue
        members = sorted({n} | {m for m in up[n] if n in up[m]})
        for m in members:
            rep[m] = members[0]
        groups[members[0]] = members
    out: set[Edge] = set()
    for head, members in groups.items():
        if len(members) > 1:
            out.update(zip(members, members[1:] + members[:1]))
        strict = {rep[m] for m in up[head] if rep[m] != head}
        for s in strict:
            # s is direct unless some other strict super-group sits between
            if not any(s in {rep[m] for m in up[t]} for t in strict if t != s):
                out.add((head, s))
    return out


def classify(ont: Ontology) -> Classification:
    """Direct-parent edges of the R1 subsumption closure; orphan classes hang off Thing.

    An inconsistent ontology is still classified, with a warning attached.
    """
    graph = materialize(ont)
    closure = {(s.sub, s.sup) for s in graph.subsumptions}
    edges = transitive_reduction(closure)
    warnings: tuple[Diagnostic, ...] = ()
    report = check_consistency(ont, graph)
    if not report.consistent:
        warnings = (Diagnostic(
            Severity.WARNING, "classify-inconsistent", (ont.base_iri,),
            "the ontology is inconsistent; the hierarchy shows derived subsumptions only",
        ),)
    return Classification(edges, warnings)
