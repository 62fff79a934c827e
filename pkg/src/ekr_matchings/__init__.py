"""Intersecting families of perfect-matching fragments in complete graphs.

The package builds rotational one-factorizations of K_{2n}, orders their
edges cyclically, and uses window counting over the symmetric group to
bound and then pin down the largest families of pairwise-intersecting
r-matchings.  A small exact search and a Kneser-graph bridge double-check
the combinatorics on instances where exhaustion is feasible.
"""

from .core import (
    Edge,
    Matching,
    MatchingFamily,
    Parameters,
    all_edges,
    chi,
    enumerate_matchings,
    intersects,
    make_edge,
    phi,
    star_family,
)
from .baranyai import (
    CyclicOrder,
    GoodnessReport,
    Interval,
    Permutation,
    RootedBaranyaiOrder,
    all_permutations,
    baranyai_edge,
    cyclic_order,
    edge_position,
    half_order,
    interval,
    rooted_order,
    sample_permutations,
    shift,
    verify_goodness,
    wrap_index,
)
from .katona import (
    CompatibilityCount,
    DoubleCountReport,
    TraceResult,
    compatible_member_keys,
    is_compatible,
    q_bruteforce,
    q_formula,
    trace,
    verify_double_count,
)
from .transposition_lab import (
    CenterMap,
    CenterViolation,
    center_map,
    composition_identity,
    construct_interval_permutation,
    reflect_swap,
    transpose_adjacent,
)
from .kneser import (
    HamPowerCertificate,
    KneserGraph,
    certificate_from_json,
    certificate_to_json,
    ham_power_certificate,
    kneser_graph,
    verify_ham_power,
)
from .ekr_search import (
    BridgeReport,
    EkrReport,
    SearchBudget,
    intersection_graph,
    is_star,
    kneser_complement_bridge,
    max_intersecting,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "Edge",
    "Matching",
    "MatchingFamily",
    "Parameters",
    "all_edges",
    "chi",
    "enumerate_matchings",
    "intersects",
    "make_edge",
    "phi",
    "star_family",
    "CyclicOrder",
    "GoodnessReport",
    "Interval",
    "Permutation",
    "RootedBaranyaiOrder",
    "all_permutations",
    "baranyai_edge",
    "cyclic_order",
    "edge_position",
    "half_order",
    "interval",
    "rooted_order",
    "sample_permutations",
    "shift",
    "verify_goodness",
    "wrap_index",
    "CompatibilityCount",
    "DoubleCountReport",
    "TraceResult",
    "compatible_member_keys",
    "is_compatible",
    "q_bruteforce",
    "q_formula",
    "trace",
    "verify_double_count",
    "CenterMap",
    "CenterViolation",
    "center_map",
    "composition_identity",
    "construct_interval_permutation",
    "reflect_swap",
    "transpose_adjacent",
    "HamPowerCertificate",
    "KneserGraph",
    "certificate_from_json",
    "certificate_to_json",
    "ham_power_certificate",
    "kneser_graph",
    "verify_ham_power",
    "BridgeReport",
    "EkrReport",
    "SearchBudget",
    "intersection_graph",
    "is_star",
    "kneser_complement_bridge",
    "max_intersecting",
    "verify_theorem",
    "__version__",
]
