"""Rule-based materialization, clash detection, classification and model search."""

from owlet.reasoner.classify import Classification, classify, transitive_closure, transitive_reduction
from owlet.reasoner.consistency import (
    ConsistencyReport,
    check_characteristic_compatibility,
    check_consistency,
)
from owlet.reasoner.graph import (
    DataLink,
    Derivation,
    InferredGraph,
    Link,
    Membership,
    NonMembership,
    Subsumption,
)
from owlet.reasoner.models import enumerate_models
from owlet.reasoner.profile import check_profile
from owlet.reasoner.rules import RULES, materialize, replay

__all__ = [
    "Classification", "classify", "transitive_closure", "transitive_reduction",
    "ConsistencyReport", "check_characteristic_compatibility", "check_consistency",
    "DataLink", "Derivation", "InferredGraph", "Link", "Membership", "NonMembership",
    "Subsumption", "enumerate_models", "check_profile", "RULES", "materialize", "replay",
]
