"""Brute-force model enumeration, the semantic oracle for the clash rules.

The search itself runs in :mod:`owlet._modelcheck` when the compiled
extension is importable and falls back to :mod:`owlet._modelcheck_py`
otherwise. Set ``OWLET_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass

from owlet.errors import BoundsError
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
    Ontology,
    Range,
    SubClassOf,
)

if os.environ.get("OWLET_PURE_PYTHON"):
    from owlet import _modelcheck_py as kernel
else:
    try:
        from owlet import _modelcheck as kernel
    except ImportError:
        from owlet import _modelcheck_py as kernel

from owlet import _modelcheck_py

__all__ = ["enumerate_models", "compile_problem", "Problem", "kernel",
           "MAX_PROPERTIES", "MAX_INDIVIDUALS", "MAX_CLASSES"]

MAX_PROPERTIES = 3
MAX_INDIVIDUALS = 3
MAX_CLASSES = 16

_FLAG = {
    Characteristic.FUNCTIONAL: _modelcheck_py.FUNCTIONAL,
    Characteristic.INVERSE_FUNCTIONAL: _modelcheck_py.INVERSE_FUNCTIONAL,
    Characteristic.TRANSITIVE: _modelcheck_py.TRANSITIVE,
    Characteristic.SYMMETRIC: _modelcheck_py.SYMMETRIC,
    Characteristic.ASYMMETRIC: _modelcheck_py.ASYMMETRIC,
    Characteristic.REFLEXIVE: _modelcheck_py.REFLEXIVE,
    Characteristic.IRREFLEXIVE: _modelcheck_py.IRREFLEXIVE,
}


@dataclass(frozen=True)
class Problem:
    """An ontology lowered to the integer encoding the kernels take."""

    n_ind: int
    n_cls: int
    prop_flags: tuple
    inverse_pairs: tuple
    links: tuple
    distinct: tuple
    memberships: tuple
    domains: tuple
    ranges: tuple
    implications: tuple

    def args(self, n: int) -> tuple:
        return (n, self.n_ind, self.n_cls, list(self.prop_flags), list(self.inverse_pairs),
                list(self.links), list(self.distinct), list(self.memberships),
                list(self.domains), list(self.ranges), list(self.implications))


def _distinct_strings(a, b) -> bool:
    return a != b and a.datatype == XSD["string"] and b.datatype == XSD["string"]


def compile_problem(ont: Ontology) -> Problem:
    """Lower ``ont`` to kernel input.

    Data properties are not enumerated: their extension only ever needs to
    be the asserted one, so a functional data property with two distinct
    string values becomes an inequality between the two subjects, and a
    data domain becomes a class requirement on the subject.
    """
    props = sorted(ont.object_properties)
    data_props = ont.datatype_properties
    if len(props) + len(data_props) > MAX_PROPERTIES:
        raise BoundsError(f"model enumeration supports at most {MAX_PROPERTIES} properties")
    classes = sorted(ont.classes - {THING})
    if len(classes) > MAX_CLASSES:
        raise BoundsError(f"model enumeration supports at most {MAX_CLASSES} classes besides Thing")
    inds = sorted(ont.individuals)
    pi = {p: i for i, p in enumerate(props)}
    ci = {c: i for i, c in enumerate(classes)}
    ci[THING] = -1
    ii = {a: i for i, a in enumerate(inds)}

    def lit(ce):
        return (ci[ce.iri], 0 if isinstance(ce, Named) else 1)

    flags = [0] * len(props)
    functional_data = set()
    inverse_pairs, links, distinct, memberships, domains, ranges, implications = ([] for _ in range(7))
    data_values = defaultdict(list)
    data_domains = defaultdict(list)
    for ax in ont.axioms:
        match ax:
            case HasCharacteristic(prop=p, characteristic=ch):
                if p in pi:
                    flags[pi[p]] |= _FLAG[ch]
                elif ch is Characteristic.FUNCTIONAL:
                    functional_data.add(p)
            case InverseOf(prop=p, inverse=q):
                inverse_pairs.append((pi[p], pi[q]))
            case Domain(prop=p, cls=c):
                if p in pi:
                    domains.append((pi[p], ci[c], 0))
                else:
                    data_domains[p].append((ci[c], 0))
            case Range(prop=p, target=Named() | ComplementOf() as t):
                ranges.append((pi[p], *lit(t)))
            case SubClassOf(sub=sub, sup=sup):
                implications.append((*lit(sub), *lit(sup)))
            case DisjointClasses(first=c, second=d):
                implications.append((ci[c], 0, ci[d], 1))
            case ClassAssertion(cls=ce, individual=a):
                memberships.append((ii[a], *lit(ce)))
            case ObjectAssertion(prop=p, subject=s, object=o):
                links.append((pi[p], ii[s], ii[o]))
            case DataAssertion(prop=p, subject=s, value=v):
                data_values[p].append((s, v))
            case DifferentIndividuals(first=a, second=b):
                distinct.append((ii[a], ii[b]))
    for p, values in data_values.items():
        for s, _ in values:
            for c, neg in data_domains.get(p, ()):
                memberships.append((ii[s], c, neg))
        if p in functional_data:
            for k, (s1, v1) in enumerate(values):
                for s2, v2 in values[k + 1:]:
                    if _distinct_strings(v1, v2):
                        distinct.append((ii[s1], ii[s2]))
    return Problem(
        n_ind=len(inds), n_cls=len(classes), prop_flags=tuple(flags),
        inverse_pairs=tuple(inverse_pairs), links=tuple(links), distinct=tuple(distinct),
        memberships=tuple(memberships), domains=tuple(domains), ranges=tuple(ranges),
        implications=tuple(implications),
    )


def enumerate_models(ont: Ontology, max_individuals: int = MAX_INDIVIDUALS, *, backend=None) -> bool:
    """Whether ``ont`` has a model with at most ``max_individuals`` elements.

    Every interpretation over universes of 1 to ``max_individuals``
    elements is tried. The named individuals must fit, since a model of
    this fragment restricted to the named individuals is again a model;
    with that guarantee the search is complete.
    """
    if not 1 <= max_individuals <= MAX_INDIVIDUALS:
        raise BoundsError(f"max_individuals must be between 1 and {MAX_INDIVIDUALS}")
    if len(ont.individuals) > max_individuals:
        raise BoundsError(
            f"{len(ont.individuals)} named individuals do not fit in {max_individuals} elements"
        )
    problem = compile_problem(ont)
    k = backend or kernel
    return any(k.satisfiable(*problem.args(n)) for n in range(1, max_individuals + 1))
