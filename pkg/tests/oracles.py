"""Reference implementations the library is checked against.

They share no code with the library beyond the axiom classes: facts are
plain tagged tuples and every rule is re-applied to every fact until a
full pass adds nothing.
"""

from dataclasses import fields
from itertools import product

from owlet.iri import THING, XSD
from owlet.model import (
    Characteristic,
    ClassAssertion,
    ComplementOf,
    DataAssertion,
    DifferentIndividuals,
    DisjointClasses,
    Domain,
    HasCharacteristic,
    InverseOf,
    Named,
    ObjectAssertion,
    Range,
    SubClassOf,
)
from owlet.reasoner.graph import DataLink, Link, Membership, NonMembership, Subsumption


def naive_fixpoint(ont, rule_order=None):
    facts = set()
    for ax in ont.axioms:
        match ax:
            case SubClassOf(sub=Named(iri=a), sup=Named(iri=b)):
                facts.add(("sub", a, b))
            case ClassAssertion(cls=Named(iri=c), individual=x):
                facts.add(("mem", x, c))
            case ClassAssertion(cls=ComplementOf(iri=c), individual=x):
                facts.add(("non", x, c))
            case ObjectAssertion(prop=p, subject=x, object=y):
                facts.add(("link", p, x, y))
            case DataAssertion(prop=p, subject=x, value=v):
                facts.add(("data", p, x, v))

    subclass = [(ax.sub, ax.sup) for ax in ont.of_type(SubClassOf)]
    domains = [(ax.prop, ax.cls) for ax in ont.of_type(Domain)]
    ranges = [(ax.prop, ax.target) for ax in ont.of_type(Range) if not ax.is_datatype]
    inverses = [(ax.prop, ax.inverse) for ax in ont.of_type(InverseOf)]
    chars = {(ax.prop, ax.characteristic) for ax in ont.of_type(HasCharacteristic)}

    def r1(f):
        out = {("sub", c, THING) for c in ont.classes if c != THING}
        subs = [x for x in f if x[0] == "sub"]
        for (_, a, b), (_, b2, c) in product(subs, subs):
            if b == b2:
                out.add(("sub", a, c))
        return out

    def r2(f):
        out = set()
        for x in f:
            if x[0] == "mem":
                for y in f:
                    if y[0] == "sub" and y[1] == x[2]:
                        out.add(("mem", x[1], y[2]))
        # axioms with a complement on either side
        for sub, sup in subclass:
            if isinstance(sub, Named) and isinstance(sup, Named):
                continue
            src = "mem" if isinstance(sub, Named) else "non"
            dst = "mem" if isinstance(sup, Named) else "non"
            for x in f:
                if x[0] == src and x[2] == sub.iri:
                    out.add((dst, x[1], sup.iri))
        return out

    def r3(f):
        out = set()
        for p, c in domains:
            for x in f:
                if x[0] in ("link", "data") and x[1] == p:
                    out.add(("mem", x[2], c))
        return out

    def r4(f):
        out = set()
        for p, t in ranges:
            for x in f:
                if x[0] == "link" and x[1] == p:
                    out.add(("mem" if isinstance(t, Named) else "non", x[3], t.iri))
        return out

    def r5(f):
        out = set()
        for p, q in inverses:
            for x in f:
                if x[0] == "link" and x[1] == p:
                    out.add(("link", q, x[3], x[2]))
                if x[0] == "link" and x[1] == q:
                    out.add(("link", p, x[3], x[2]))
        return out

    def r6(f):
        return {("link", x[1], x[3], x[2]) for x in f
                if x[0] == "link" and (x[1], Characteristic.SYMMETRIC) in chars}

    def r7(f):
        out = set()
        links = [x for x in f if x[0] == "link" and (x[1], Characteristic.TRANSITIVE) in chars]
        for a, b in product(links, links):
            if a[1] == b[1] and a[3] == b[2]:
                out.add(("link", a[1], a[2], b[3]))
        return out

    def r8(f):
        return {("link", p, x, x) for (p, ch) in chars if ch is Characteristic.REFLEXIVE
                for x in ont.individuals}

    rules = [r1, r2, r3, r4, r5, r6, r7, r8]
    if rule_order is not None:
        rules = [rules[i] for i in rule_order]
    changed = True
    while changed:
        changed = False
        for rule in rules:
            new = rule(facts) - facts
            if new:
                facts |= new
                changed = True
    return facts


def as_facts(graph):
    """InferredGraph atoms as the oracle's tagged tuples."""
    out = set()
    for a in graph.atoms():
        if isinstance(a, Subsumption):
            out.add(("sub", a.sub, a.sup))
        elif isinstance(a, Membership):
            out.add(("mem", a.individual, a.cls))
        elif isinstance(a, NonMembership):
            out.add(("non", a.individual, a.cls))
        elif isinstance(a, Link):
            out.add(("link", a.prop, a.subject, a.object))
        elif isinstance(a, DataLink):
            out.add(("data", a.prop, a.subject, a.value))
    return out


def expected_triple_count(ont):
    """Triples to_triples must emit: header, one per axiom, two per complement node."""
    complemented = set()
    for ax in ont.axioms:
        for f in fields(ax):
            v = getattr(ax, f.name)
            if isinstance(v, ComplementOf):
                complemented.add(v.iri)
    return 1 + len(ont) + 2 * len(complemented)


def semantic_clash(ont):
    """Error verdict by direct inspection of a fixpoint, for cross-checking K1-K6."""
    facts = naive_fixpoint(ont)
    chars = {(ax.prop, ax.characteristic) for ax in ont.of_type(HasCharacteristic)}
    links = {x[1:] for x in facts if x[0] == "link"}
    mem = {x[1:] for x in facts if x[0] == "mem"}
    non = {x[1:] for x in facts if x[0] == "non"}
    diff = {frozenset((ax.first, ax.second)) for ax in ont.of_type(DifferentIndividuals)}
    C = Characteristic
    props = {p for p, _ in chars}
    for p in props:
        has = lambda ch: (p, ch) in chars  # noqa: E731
        if has(C.REFLEXIVE) and (has(C.ASYMMETRIC) or has(C.IRREFLEXIVE)):
            return True
        if has(C.SYMMETRIC) and has(C.ASYMMETRIC) and any(q == p for q, _, _ in links):
            return True
    for p, x, y in links:
        if (p, C.IRREFLEXIVE) in chars and x == y:
            return True
        if (p, C.ASYMMETRIC) in chars and (p, y, x) in links:
            return True
        for q, x2, y2 in links:
            if q != p:
                continue
            if (p, C.FUNCTIONAL) in chars and x == x2 and frozenset((y, y2)) in diff:
                return True
            if (p, C.INVERSE_FUNCTIONAL) in chars and y == y2 and frozenset((x, x2)) in diff:
                return True
    for ax in ont.of_type(DisjointClasses):
        if any((x, ax.first) in mem and (x, ax.second) in mem for x in ont.individuals):
            return True
    if mem & non:
        return True
    if any((x, THING) in non for x in ont.individuals):
        return True
    datas = [x[1:] for x in facts if x[0] == "data"]
    for p, x, v in datas:
        for q, x2, w in datas:
            if q == p and x == x2 and (p, C.FUNCTIONAL) in chars and v != w \
                    and v.datatype == w.datatype == XSD["string"]:
                return True
    return bool(diff & {frozenset((x,)) for x in ont.individuals})
