"""Exact divisor theory on finite connected vertex-weighted multigraphs.

Chip-firing equivalence, q-reduced canonical forms, Picard group
structure, Baker-Norine rank (on general graphs through the weightless
loopless model), Riemann-Roch and Clifford verification, edge contraction
with divisor push-forward, and semibalanced multidegree analysis. All
arithmetic is exact: Python integers and fractions only.
"""

from .divisors import (
    Divisor,
    RationalFunction,
    canonical_divisor,
    firing_divisor,
    principal_divisor,
)
from .errors import DivisorGraphError
from .graphs import ContractionMap, Graph, LooplessModel
from .picard import (
    PicardStructure,
    ReducedDivisor,
    enumerate_classes,
    is_equivalent,
    picard_structure,
    principal_lattice,
    q_reduce,
)
from .rank import (
    DegreeZeroClass,
    RankResult,
    certify_rank_below,
    clifford_check,
    degree_zero_classification,
    is_class_effective,
    rank,
    rank_weightless,
    riemann_roch_check,
)
from .transforms import (
    BalanceReport,
    balance_bound,
    balance_report,
    bridge_rank_preservation,
    find_semibalanced_representative,
    push_forward,
    verify_prin_pushforward,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceReport",
    "ContractionMap",
    "DegreeZeroClass",
    "Divisor",
    "DivisorGraphError",
    "Graph",
    "LooplessModel",
    "PicardStructure",
    "RankResult",
    "RationalFunction",
    "ReducedDivisor",
    "balance_bound",
    "balance_report",
    "bridge_rank_preservation",
    "canonical_divisor",
    "certify_rank_below",
    "clifford_check",
    "degree_zero_classification",
    "enumerate_classes",
    "find_semibalanced_representative",
    "firing_divisor",
    "is_class_effective",
    "is_equivalent",
    "picard_structure",
    "principal_divisor",
    "principal_lattice",
    "push_forward",
    "q_reduce",
    "rank",
    "rank_weightless",
    "riemann_roch_check",
    "verify_prin_pushforward",
]
