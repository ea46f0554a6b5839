"""Two independent evaluators of the polynomial Omega.

``omega_state_sum`` sums ``w^|A| x^|B| y^|C| z^|D| t^boundary(G[A,B,C,D])``
over all ordered partitions of the non-singular edges.  ``omega_recursive``
applies the four-term skein relation

    Omega(G) = w Omega(G . e) + x Omega(G / e) + y Omega(G \\ e) + z Omega(G ~ e)

down to edgeless objects, which evaluate to ``t^kappa``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .ops import contract, contract_to_point, delete, penrose_contract
from .poly import MultiPoly, poly_subst_w
from .ribbon import RibbonGraph, connected_component_count, natural_key, pinched_boundary_count

DEFAULT_MAX_EDGES = 14


class TooLargeError(ValueError):
    pass


@dataclass
class OmegaResult:
    polynomial: MultiPoly
    method: str
    stats: dict[str, int] = field(default_factory=dict)


_OPS = (contract_to_point, contract, delete, penrose_contract)


def _partition_terms(H: RibbonGraph, edges: list[str], prefix: tuple[int, ...]) -> Counter:
    # exponent vector -> multiplicity, for every partition extending ``prefix``.
    # Depth-first over the base-4 digits so partitions sharing a prefix share
    # the partially reduced graph.
    acc: Counter = Counter()
    for e, d in zip(edges, prefix):
        H = _OPS[d](H, e)
    counts = [0, 0, 0, 0]
    for d in prefix:
        counts[d] += 1

    def walk(G: RibbonGraph, i: int) -> None:
        if i == len(edges):
            acc[(*counts, pinched_boundary_count(G))] += 1
            return
        e = edges[i]
        for d, op in enumerate(_OPS):
            counts[d] += 1
            walk(op(G, e), i + 1)
            counts[d] -= 1

    walk(H, len(prefix))
    return acc


def _chunk(args):
    return _partition_terms(*args)


def omega_state_sum(H: RibbonGraph, *, max_edges: int = DEFAULT_MAX_EDGES, workers: int | None = None) -> OmegaResult:
    """Omega by direct enumeration of the ``4^|E|`` ordered partitions.

    Partitions are visited as a base-4 counter over the non-singular edges
    in id order (digit 0..3 = A, B, C, D).  With ``workers > 1`` the leading
    digits are farmed out to processes; the integer sums are identical.
    """
    edges = sorted(H.nonsingular_edges, key=natural_key)
    if len(edges) > max_edges:
        raise TooLargeError(f"{len(edges)} edges exceeds the state-sum limit {max_edges}")
    if workers and workers > 1 and len(edges) >= 2:
        depth = 1 if len(edges) < 4 else 2
        prefixes = list(itertools.product(range(4), repeat=depth))
        acc: Counter = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_chunk, [(H, edges, p) for p in prefixes]):
                acc.update(part)
    else:
        acc = _partition_terms(H, edges, ())
    poly = MultiPoly(dict(acc))
    return OmegaResult(poly, "statesum", {"partitions": 4 ** len(edges)})


EdgeChooser = Callable[[RibbonGraph], str]


def prefer_non_loop(H: RibbonGraph) -> str:
    """Smallest-id non-loop edge, else the smallest-id loop."""
    edges = sorted(H.nonsingular_edges, key=natural_key)
    for e in edges:
        if not H.is_loop(e):
            return e
    return edges[0]


def order_chooser(order: Sequence[str]) -> EdgeChooser:
    """Choose the first edge of ``order`` still present and non-singular."""
    rank = {e: i for i, e in enumerate(order)}

    def choose(H: RibbonGraph) -> str:
        return min(H.nonsingular_edges, key=lambda e: (rank.get(e, len(rank)), natural_key(e)))

    return choose


def omega_recursive(
    H: RibbonGraph,
    *,
    choose: EdgeChooser | None = None,
    order: Sequence[str] | None = None,
    cache: dict | None = None,
) -> OmegaResult:
    """Omega via the skein relation with memoization on the labelled structure."""
    if choose is None:
        choose = order_chooser(order) if order is not None else prefer_non_loop
    memo = {} if cache is None else cache
    stats = {"calls": 0, "cache_hits": 0}
    w, x, y, z, t = MultiPoly.gens()

    def go(G: RibbonGraph) -> MultiPoly:
        stats["calls"] += 1
        key = G.key()
        hit = memo.get(key)
        if hit is not None:
            stats["cache_hits"] += 1
            return hit
        if not G.nonsingular_edges:
            val = t ** connected_component_count(G)
        else:
            e = choose(G)
            val = (
                w * go(contract_to_point(G, e))
                + x * go(contract(G, e))
                + y * go(delete(G, e))
                + z * go(penrose_contract(G, e))
            )
        memo[key] = val
        return val

    return OmegaResult(go(H), "recursive", stats)


def omega(H: RibbonGraph, method: str = "recursive", **kw) -> MultiPoly:
    if method == "statesum":
        return omega_state_sum(H, **kw).polynomial
    if method == "recursive":
        return omega_recursive(H, **kw).polynomial
    raise ValueError(f"unknown method {method!r}")


def omega_k_polynomial(H: RibbonGraph, method: str = "recursive") -> MultiPoly:
    """Omega_k as a polynomial, with t standing for k: Omega(w - x - y - z, x, y, z, t)."""
    return poly_subst_w(omega(H, method))
