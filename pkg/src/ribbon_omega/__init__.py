"""Exact Omega polynomials of ribbon graphs and edge-point ribbon graphs."""

from .catalog import CATALOG, get, invariant_vector, named_instances, random_instance
from .document import parse, serialize
from .engine import OmegaResult, omega, omega_k_polynomial, omega_recursive, omega_state_sum
from .medial import build_medial, enumerate_k_valuations, omega_k_bruteforce, transition_poly_bruteforce
from .ops import (
    OrderedPartition,
    apply_partition,
    contract,
    contract_to_point,
    delete,
    geometric_dual,
    partial_petrial,
    penrose_contract,
    petrie_dual,
)
from .poly import MultiPoly, poly_eval, poly_subst_w
from .ribbon import (
    RibbonGraph,
    boundary_walks,
    connected_component_count,
    euler_genus,
    make_graph,
    pinched_boundary_count,
    validate,
)
from .special import pointed_penrose, topological_penrose

__all__ = [
    "CATALOG",
    "MultiPoly",
    "OmegaResult",
    "OrderedPartition",
    "RibbonGraph",
    "apply_partition",
    "boundary_walks",
    "build_medial",
    "connected_component_count",
    "contract",
    "contract_to_point",
    "delete",
    "enumerate_k_valuations",
    "euler_genus",
    "geometric_dual",
    "get",
    "invariant_vector",
    "make_graph",
    "named_instances",
    "omega",
    "omega_k_bruteforce",
    "omega_k_polynomial",
    "omega_recursive",
    "omega_state_sum",
    "parse",
    "partial_petrial",
    "penrose_contract",
    "petrie_dual",
    "pinched_boundary_count",
    "poly_eval",
    "poly_subst_w",
    "pointed_penrose",
    "random_instance",
    "serialize",
    "topological_penrose",
    "transition_poly_bruteforce",
    "validate",
]
