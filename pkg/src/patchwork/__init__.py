"""Patchwork closures of set families and convexity-compatible orderings."""

from .closure import Closed, Exceeded, Patchwork, close, close_bounded, is_patchwork
from .orderability import (
    Certificate,
    Decision,
    QuotientMap,
    Verdict,
    construct_order,
    decide,
    find_adjacent_triple,
    lift_order,
    quotient,
    verify_order,
)
from .setcore import GroundSet, InstanceError, SetFamily, overlap, parse_family, serialize_family
from .structure import (
    AutonomyTree,
    CaseLabel,
    TreeSpec,
    adjacent,
    autonomous_sets,
    autonomy_tree,
    classify_node,
    cohort_adjacency,
    maximal_autonomous_decomposition,
    synthesize_patchwork,
)

__all__ = [
    "AutonomyTree", "CaseLabel", "Certificate", "Closed", "Decision", "Exceeded",
    "GroundSet", "InstanceError", "Patchwork", "QuotientMap", "SetFamily", "TreeSpec",
    "Verdict", "adjacent", "autonomous_sets", "autonomy_tree", "classify_node", "close",
    "close_bounded", "cohort_adjacency", "construct_order", "decide", "find_adjacent_triple",
    "is_patchwork", "lift_order", "maximal_autonomous_decomposition", "overlap",
    "parse_family", "quotient", "serialize_family", "synthesize_patchwork", "verify_order",
]
