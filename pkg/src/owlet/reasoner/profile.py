"""OWL DL profile check: constructs from OWL Full that cannot be classified."""

from __future__ import annotations

from owlet.model import (
    LOGICAL_AXIOMS,
    PROPERTY_ROLES,
    Axiom,
    Diagnostic,
    Ontology,
    Role,
    Severity,
)

__all__ = ["check_profile", "PUNNING", "ANNOTATION_IN_LOGICAL_AXIOM"]

PUNNING = "punning"
ANNOTATION_IN_LOGICAL_AXIOM = "annotation-in-logical-axiom"

_ROLE_ORDER = [Role.CLASS, Role.OBJECT_PROPERTY, Role.DATATYPE_PROPERTY,
               Role.ANNOTATION_PROPERTY, Role.INDIVIDUAL]


def _mentions(ax: Axiom, iri) -> bool:
    for name in ax.__dataclass_fields__:
        v = getattr(ax, name)
        if v == iri or getattr(v, "iri", None) == iri:
            return True
    return False


def check_profile(ont: Ontology) -> list[Diagnostic]:
    """One error per IRI that occupies more than one role.

    Strict ontologies cannot contain such IRIs; this is meant for ontologies
    read from files, which are built non-strict.
    """
    out = []
    for iri in sorted(ont.signature):
        roles = ont.roles(iri)
        if len(roles) < 2:
            continue
        names = [r.value for r in _ROLE_ORDER if r in roles]
        prov = tuple(a for a in ont.axioms if _mentions(a, iri))
        logical = roles & (PROPERTY_ROLES - {Role.ANNOTATION_PROPERTY})
        if Role.ANNOTATION_PROPERTY in roles and logical:
            uses = tuple(a for a in prov if isinstance(a, LOGICAL_AXIOMS))
            out.append(Diagnostic(
                Severity.ERROR, ANNOTATION_IN_LOGICAL_AXIOM, (iri,),
                f"annotation property {iri.local_name} is used in logical axioms "
                f"(as {', '.join(names)}); annotations carry no formal meaning in OWL DL",
                uses or prov,
            ))
        else:
            out.append(Diagnostic(
                Severity.ERROR, PUNNING, (iri,),
                f"{iri.local_name} is used as {' and '.join(names)}; "
                f"metamodelling of this kind is OWL Full and cannot be classified",
                prov,
            ))
    return out
