"""Edge operations on (edge-point) ribbon graphs.

The five single-edge operations and the geometric dual, plus the four-way
``G[A, B, C, D]`` operation built from them.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .ribbon import Edge, RibbonGraph, boundary_walks, natural_key


class EdgeOperationError(ValueError):
    pass


def _require_edge(H: RibbonGraph, e: str, *, allow_singular: bool = False) -> None:
    if e not in H.edges:
        raise EdgeOperationError(f"unknown edge {e!r}")
    if not allow_singular and e in H.singular:
        raise EdgeOperationError(f"edge {e!r} is singular; only partial Petrials apply to it")


def delete(H: RibbonGraph, e: str) -> RibbonGraph:
    _require_edge(H, e)
    darts = set(H.edges[e].darts)
    rots = tuple(tuple(d for d in rot if d not in darts) for rot in H.vertices)
    edges = {k: v for k, v in H.edges.items() if k != e}
    return RibbonGraph(rots, edges, H.singular)


def contract(H: RibbonGraph, e: str) -> RibbonGraph:
    """Contract ``e``: glue discs onto the boundary curves of ``e`` and its ends.

    The curves are traced around the end vertices; every other dart met
    along a curve becomes part of the new vertex's rotation in the order
    met.  A dart met while travelling against its old vertex orientation
    has its edge's twist toggled.
    """
    _require_edge(H, e)
    a, b = H.edges[e].darts
    tw = H.edges[e].twisted
    u, v = H.vertex_of(a), H.vertex_of(b)
    local = list(H.vertices[u]) + ([] if u == v else list(H.vertices[v]))

    def step(x: str, s: int) -> tuple[str, int]:
        if x == a or x == b:
            y = b if x == a else a
            s = -s if tw else s
        else:
            y = x
        return (H.succ(y) if s > 0 else H.pred(y)), s

    def reverse(x: str, s: int) -> tuple[str, int]:
        if x == a or x == b:
            return (b if x == a else a), (s if tw else -s)
        return x, -s

    visited: set[tuple[str, int]] = set()
    new_rots: list[tuple[str, ...]] = []
    flips: dict[str, int] = {}
    for start in [(x, 1) for x in local] + [(x, -1) for x in local]:
        if start in visited:
            continue
        rot = []
        cur = start
        while cur not in visited:
            visited.add(cur)
            visited.add(reverse(*cur))
            x, s = cur
            if x != a and x != b:
                rot.append(x)
                if s < 0:
                    f = H.edge_of(x)
                    flips[f] = flips.get(f, 0) ^ 1
            cur = step(x, s)
        new_rots.append(tuple(rot))

    rots = [r for i, r in enumerate(H.vertices) if i != u and i != v] + new_rots
    edges = {}
    for k, ed in H.edges.items():
        if k == e:
            continue
        edges[k] = Edge(ed.darts, ed.twisted ^ bool(flips.get(k, 0)))
    return RibbonGraph(tuple(rots), edges, H.singular)


def partial_petrial(H: RibbonGraph, e: str) -> RibbonGraph:
    """Toggle the half-twist of ``e`` (allowed on singular edges)."""
    _require_edge(H, e, allow_singular=True)
    edges = dict(H.edges)
    edges[e] = Edge(edges[e].darts, not edges[e].twisted)
    return RibbonGraph(H.vertices, edges, H.singular)


def partial_petrial_set(H: RibbonGraph, A: Iterable[str]) -> RibbonGraph:
    A = set(A)
    for e in A:
        _require_edge(H, e, allow_singular=True)
    edges = {k: (Edge(v.darts, not v.twisted) if k in A else v) for k, v in H.edges.items()}
    return RibbonGraph(H.vertices, edges, H.singular)


def petrie_dual(H: RibbonGraph) -> RibbonGraph:
    return partial_petrial_set(H, H.edges)


def penrose_contract(H: RibbonGraph, e: str) -> RibbonGraph:
    _require_edge(H, e)
    return contract(partial_petrial(H, e), e)


def contract_to_point(H: RibbonGraph, e: str) -> RibbonGraph:
    if e in H.singular:
        raise EdgeOperationError(f"edge {e!r} is already singular")
    _require_edge(H, e)
    return RibbonGraph(H.vertices, H.edges, H.singular | {e})


def flip_vertex(H: RibbonGraph, vi: int) -> RibbonGraph:
    """Reverse one rotation and toggle twists of edges with exactly one end there.

    The result is the same ribbon graph described from the other side of
    the vertex disc.
    """
    rots = list(H.vertices)
    rots[vi] = tuple(reversed(rots[vi]))
    edges = {}
    for k, ed in H.edges.items():
        ends = [H.vertex_of(d) == vi for d in ed.darts]
        edges[k] = Edge(ed.darts, ed.twisted ^ (ends[0] != ends[1]))
    return RibbonGraph(tuple(rots), edges, H.singular)


def disjoint_union(G: RibbonGraph, H: RibbonGraph, prefix: str = "h") -> RibbonGraph:
    """Disjoint union; every edge and dart id of ``H`` is prefixed."""
    ren = {}
    for eid, ed in H.edges.items():
        ren[eid] = prefix + eid
        for d in ed.darts:
            ren[d] = prefix + d
    clash = set(ren.values()) & (set(G.edges) | set(G.darts()))
    if clash:
        raise ValueError(f"prefix {prefix!r} collides with {sorted(clash)}")
    rots = G.vertices + tuple(tuple(ren[d] for d in rot) for rot in H.vertices)
    edges = dict(G.edges)
    for eid, ed in H.edges.items():
        edges[ren[eid]] = Edge((ren[ed.darts[0]], ren[ed.darts[1]]), ed.twisted)
    return RibbonGraph(rots, edges, G.singular | {ren[e] for e in H.singular})


def geometric_dual(G: RibbonGraph) -> RibbonGraph:
    """Cap each boundary component with a disc and drop the original vertices.

    Dual dart ``d1`` (resp. ``d2``) of edge ``e`` sits where the chosen
    traversal of side 1 (resp. side 2) of ``e`` lies.  The dual edge is
    untwisted iff its two sides are traversed in opposite directions along
    the band.
    """
    if G.singular:
        raise EdgeOperationError("geometric dual is only defined here for ribbon graphs without singular edges")
    rots = []
    direction: dict[tuple[str, int], int] = {}
    for walk in boundary_walks(G):
        rot = []
        for arc in walk.side_arcs():
            d1, d2 = G.edges[arc.edge].darts
            rot.append(d1 if arc.side == 1 else d2)
            direction[(arc.edge, arc.side)] = 1 if arc.start[0] == d1 else -1
        rots.append(tuple(rot))
    edges = {}
    for eid, ed in G.edges.items():
        same = direction[(eid, 1)] == direction[(eid, 2)]
        edges[eid] = Edge(ed.darts, same)
    return RibbonGraph(tuple(rots), edges)


@dataclass(frozen=True)
class OrderedPartition:
    """``(A, B, C, D)``: contract-to-point, contract, delete, Penrose-contract."""

    A: frozenset[str] = frozenset()
    B: frozenset[str] = frozenset()
    C: frozenset[str] = frozenset()
    D: frozenset[str] = frozenset()

    def __post_init__(self):
        blocks = [frozenset(getattr(self, n)) for n in "ABCD"]
        for n, blk in zip("ABCD", blocks):
            object.__setattr__(self, n, blk)
        total = sum(len(b) for b in blocks)
        if len(frozenset().union(*blocks)) != total:
            raise EdgeOperationError("partition blocks are not pairwise disjoint")

    def edges(self) -> frozenset[str]:
        return self.A | self.B | self.C | self.D

    def assignments(self) -> list[tuple[str, str]]:
        """``(edge, block-name)`` pairs in natural edge order."""
        out = [(e, n) for n in "ABCD" for e in getattr(self, n)]
        return sorted(out, key=lambda p: natural_key(p[0]))


_BLOCK_OPS = {"A": contract_to_point, "B": contract, "C": delete, "D": penrose_contract}


def apply_partition(
    H: RibbonGraph, p: OrderedPartition, order: Sequence[str] | None = None, rng: random.Random | None = None
) -> RibbonGraph:
    """``G[A, B, C, D]``: pinch A, contract B, delete C, Penrose-contract D.

    The operations act on distinct edges and commute, so ``order`` (or a
    shuffle by ``rng``) only changes the labelled representative.
    """
    if p.edges() != frozenset(H.nonsingular_edges):
        raise EdgeOperationError("partition must cover exactly the non-singular edges")
    block = {e: n for e, n in p.assignments()}
    seq = list(order) if order is not None else [e for e, _ in p.assignments()]
    if sorted(seq) != sorted(block):
        raise EdgeOperationError("order must list each partitioned edge once")
    if rng is not None:
        rng.shuffle(seq)
    for e in seq:
        H = _BLOCK_OPS[block[e]](H, e)
    return H
