"""Exact outage and capacity analysis of source-terminal networks.

Models a directed acyclic network whose edges fail independently (or
in correlated blocks), and computes the exact outage polynomial, its
bounds, the diversity and coding gain, capacity distribution
polynomials, the ergodic capacity, and seeded Monte Carlo estimates of
all of the above.
"""

from .capacity import (
    CapacitySpectrum,
    capacity_spectrum,
    capacity_spectrum_disjoint,
    instantaneous_capacity,
    survivor_tail_poly,
)
from .correlated import (
    CorrelationPartition,
    block_outage_weight,
    block_outage_weight_poly,
    correlated_outage,
    correlated_outage_poly,
    partition_from_json,
)
from .enumeration import (
    CutFamily,
    PathSet,
    enumerate_cutsets,
    enumerate_paths,
    min_cut_size,
)
from .errors import (
    BudgetExceeded,
    CutBudgetExceeded,
    CyclicGraph,
    DisjointCutsRequired,
    InternalError,
    InvalidConfig,
    InvalidCount,
    InvalidNetwork,
    NetOutageError,
    NonPositiveSnr,
    NotConnected,
    ParseError,
    PartitionMismatch,
    PathBudgetExceeded,
    SourceEqualsTerminal,
    TooManyEdges,
    ValidationError,
)
from .network import (
    MAX_EDGES,
    Network,
    build_network,
    indices_from_mask,
    load_network,
    mask_from_indices,
    network_from_dot,
    network_from_json,
    rayleigh_outage_prob,
)
from .outage import (
    AsymptoticSummary,
    OutageBounds,
    asymptotic_summary,
    cut_enumerator,
    outage_bounds,
    outage_by_cuts,
    outage_by_paths,
    outage_by_reliability_sum,
    outage_polynomial,
)
from .polynomial import Poly, Poly2
from .simulate import ExactReference, SimConfig, SimReport, exact_reference, simulate

__version__ = "0.1.0"

__all__ = [
    "AsymptoticSummary",
    "BudgetExceeded",
    "CapacitySpectrum",
    "CorrelationPartition",
    "CutBudgetExceeded",
    "CutFamily",
    "CyclicGraph",
    "DisjointCutsRequired",
    "ExactReference",
    "InternalError",
    "InvalidConfig",
    "InvalidCount",
    "InvalidNetwork",
    "MAX_EDGES",
    "NetOutageError",
    "Network",
    "NonPositiveSnr",
    "NotConnected",
    "OutageBounds",
    "ParseError",
    "PartitionMismatch",
    "PathBudgetExceeded",
    "PathSet",
    "Poly",
    "Poly2",
    "SimConfig",
    "SimReport",
    "SourceEqualsTerminal",
    "TooManyEdges",
    "ValidationError",
    "asymptotic_summary",
    "block_outage_weight",
    "block_outage_weight_poly",
    "build_network",
    "capacity_spectrum",
    "capacity_spectrum_disjoint",
    "correlated_outage",
    "correlated_outage_poly",
    "cut_enumerator",
    "enumerate_cutsets",
    "enumerate_paths",
    "exact_reference",
    "indices_from_mask",
    "instantaneous_capacity",
    "load_network",
    "mask_from_indices",
    "min_cut_size",
    "network_from_dot",
    "network_from_json",
    "outage_bounds",
    "outage_by_cuts",
    "outage_by_paths",
    "outage_by_reliability_sum",
    "outage_polynomial",
    "partition_from_json",
    "rayleigh_outage_prob",
    "simulate",
    "survivor_tail_poly",
    "__version__",
]
