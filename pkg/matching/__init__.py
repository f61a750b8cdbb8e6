from .audit import LocalityReport, audit_locality, gadget_graph
from .matching import Matching, MatchingError, defect, is_matching
from .reduction import (
    ChainGadget,
    MatchingInstance,
    TriangleGadget,
    cycle_for_matching,
    matching_for_cycle,
    reduce,
)
from .search import (
    BacktrackingStrategy,
    ExhaustiveStrategy,
    MatchingStrategy,
    PerfectMatchingSearch,
    SearchGuardError,
    enumerate_perfect_matchings,
    pm_weight_enumerator,
)

__all__ = [
    "BacktrackingStrategy",
    "ChainGadget",
    "ExhaustiveStrategy",
    "LocalityReport",
    "Matching",
    "MatchingError",
    "MatchingInstance",
    "MatchingStrategy",
    "PerfectMatchingSearch",
    "SearchGuardError",
    "TriangleGadget",
    "audit_locality",
    "cycle_for_matching",
    "defect",
    "enumerate_perfect_matchings",
    "gadget_graph",
    "is_matching",
    "matching_for_cycle",
    "pm_weight_enumerator",
    "reduce",
]
