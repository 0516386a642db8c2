"""Hypergraph duality: decide H = tr(G), find new transversals, dualize."""
from .core import (
    Hypergraph,
    HypergraphError,
    Instance,
    PreconditionError,
    is_minimal_transversal,
    is_new_transversal,
    is_simple,
    is_transversal,
    members,
    minimize,
    vset,
)
from .kernel import BACKEND
from .solver import (
    IntersectionPropertyError,
    NotSimpleError,
    Reason,
    SearchStats,
    Status,
    Verdict,
    check_dual,
    compute_new_transversal,
    det_new_transversal,
    dualize,
    minimize_transversal,
    nd_check_random,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Hypergraph", "HypergraphError", "Instance", "IntersectionPropertyError",
    "NotSimpleError", "PreconditionError", "Reason", "SearchStats", "Status", "Verdict",
    "check_dual", "compute_new_transversal", "det_new_transversal", "dualize",
    "is_minimal_transversal", "is_new_transversal", "is_simple", "is_transversal",
    "members", "minimize", "minimize_transversal", "nd_check_random", "vset",
]
