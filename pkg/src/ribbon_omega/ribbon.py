"""Signed rotation systems for ribbon graphs and edge-point ribbon graphs.

A ribbon graph is stored as a list of vertex rotations (cyclic sequences of
dart ids) plus, for every edge, its two darts and a twist bit.  An
edge-point ribbon graph additionally marks a set of edges as *singular*:
those edges have been contracted to a point.

Each dart's attachment segment on its vertex has two endpoints, the one
toward the rotation successor (``+1``) and the one toward the predecessor
(``-1``).  Such an endpoint ``(dart, sign)`` is called a slot.  The two side
arcs of an edge join slots of its two darts: ``d1:-1`` with ``d2:+1`` and
``d1:+1`` with ``d2:-1`` when untwisted, ``d1:-1`` with ``d2:-1`` and
``d1:+1`` with ``d2:+1`` when twisted.  Side 1 is the arc through ``d1:-1``.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Union

Slot = tuple[str, int]


def natural_key(s: str) -> tuple:
    """Sort key treating digit runs numerically: ``e2 < e10``."""
    return tuple(int(p) if p.isdigit() else p for p in re.split(r"(\d+)", s))


@dataclass(frozen=True)
class Edge:
    darts: tuple[str, str]
    twisted: bool = False


def _normalize_rotation(rot: Iterable[str]) -> tuple[str, ...]:
    rot = tuple(rot)
    if len(rot) < 2:
        return rot
    i = min(range(len(rot)), key=lambda j: natural_key(rot[j]))
    return rot[i:] + rot[:i]


def _vertex_order(rot: tuple[str, ...]) -> tuple:
    return (0, natural_key(rot[0])) if rot else (1,)


@dataclass(frozen=True, eq=False)
class RibbonGraph:
    """An (edge-point) ribbon graph as a signed rotation system.

    Rotations are normalized on construction (each starts at its smallest
    dart, vertices sorted by first dart, isolated vertices last), so two
    instances with the same labelled structure compare equal.
    """

    vertices: tuple[tuple[str, ...], ...]
    edges: Mapping[str, Edge]
    singular: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        rots = sorted((_normalize_rotation(r) for r in self.vertices), key=_vertex_order)
        edges = {}
        for eid in sorted(self.edges, key=natural_key):
            e = self.edges[eid]
            if not isinstance(e, Edge):
                e = Edge(tuple(e[0]), bool(e[1]))
            edges[eid] = e
        object.__setattr__(self, "vertices", tuple(rots))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "singular", frozenset(self.singular))

    # identity

    def key(self) -> tuple:
        """Exact serialization of the labelled structure."""
        return (
            self.vertices,
            tuple((eid, e.darts, e.twisted) for eid, e in self.edges.items()),
            tuple(sorted(self.singular, key=natural_key)),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RibbonGraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        sing = f", singular={sorted(self.singular, key=natural_key)}" if self.singular else ""
        edges = ", ".join(
            f"{eid}:{'~' if e.twisted else ''}{e.darts[0]}-{e.darts[1]}" for eid, e in self.edges.items()
        )
        return f"RibbonGraph(vertices={list(self.vertices)}, edges=[{edges}]{sing})"

    # lookups

    @cached_property
    def _position(self) -> dict[str, tuple[int, int]]:
        pos = {}
        for vi, rot in enumerate(self.vertices):
            for i, d in enumerate(rot):
                pos[d] = (vi, i)
        return pos

    @cached_property
    def _dart_edge(self) -> dict[str, str]:
        return {d: eid for eid, e in self.edges.items() for d in e.darts}

    @property
    def underlying(self) -> RibbonGraph:
        """The same ribbon graph with no singular edges."""
        if not self.singular:
            return self
        return RibbonGraph(self.vertices, self.edges)

    @property
    def edge_ids(self) -> list[str]:
        return list(self.edges)

    @property
    def nonsingular_edges(self) -> list[str]:
        return [e for e in self.edges if e not in self.singular]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def darts(self) -> list[str]:
        return [d for rot in self.vertices for d in rot]

    def vertex_of(self, dart: str) -> int:
        return self._position[dart][0]

    def edge_of(self, dart: str) -> str:
        return self._dart_edge[dart]

    def other(self, dart: str) -> str:
        """The edge involution: the other dart of the same edge."""
        a, b = self.edges[self._dart_edge[dart]].darts
        return b if dart == a else a

    def twisted(self, eid: str) -> bool:
        return self.edges[eid].twisted

    def succ(self, dart: str) -> str:
        vi, i = self._position[dart]
        rot = self.vertices[vi]
        return rot[(i + 1) % len(rot)]

    def pred(self, dart: str) -> str:
        vi, i = self._position[dart]
        rot = self.vertices[vi]
        return rot[i - 1]

    def endpoints(self, eid: str) -> tuple[int, int]:
        a, b = self.edges[eid].darts
        return self.vertex_of(a), self.vertex_of(b)

    def is_loop(self, eid: str) -> bool:
        u, v = self.endpoints(eid)
        return u == v

    def isolated_vertices(self) -> list[int]:
        return [i for i, rot in enumerate(self.vertices) if not rot]

    def degree(self, vi: int) -> int:
        return len(self.vertices[vi])


EdgePointRibbonGraph = RibbonGraph


def make_graph(
    vertices: Iterable[Iterable[str]],
    edges: Mapping[str, tuple[Iterable[str], bool] | Edge],
    singular: Iterable[str] = (),
) -> RibbonGraph:
    """Convenience constructor taking plain tuples for edges."""
    es = {}
    for eid, e in edges.items():
        es[eid] = e if isinstance(e, Edge) else Edge(tuple(e[0]), bool(e[1]))
    return RibbonGraph(tuple(tuple(r) for r in vertices), es, frozenset(singular))


class InvalidGraphError(ValueError):
    def __init__(self, diagnostics: list[str]):
        self.diagnostics = diagnostics
        super().__init__("; ".join(diagnostics))


def validate(G: RibbonGraph) -> list[str]:
    """Return one diagnostic per violated structural invariant (empty if valid)."""
    diags = []
    seen: dict[str, int] = {}
    for vi, rot in enumerate(G.vertices):
        for d in rot:
            if d in seen:
                diags.append(f"dart {d!r} appears in rotation of vertex {seen[d]} and again at vertex {vi}")
            else:
                seen[d] = vi
    owner: dict[str, str] = {}
    for eid, e in G.edges.items():
        if len(e.darts) != 2:
            diags.append(f"edge {eid!r} must have exactly two darts, got {len(e.darts)}")
            continue
        if e.darts[0] == e.darts[1]:
            diags.append(f"edge {eid!r} uses dart {e.darts[0]!r} twice")
        for d in e.darts:
            if d in owner and owner[d] != eid:
                diags.append(f"dart {d!r} belongs to both edge {owner[d]!r} and edge {eid!r}")
            owner[d] = eid
            if d not in seen:
                diags.append(f"dart {d!r} of edge {eid!r} is in no vertex rotation")
    for d in seen:
        if d not in owner:
            diags.append(f"dart {d!r} at vertex {seen[d]} belongs to no edge")
    for eid in sorted(G.singular, key=natural_key):
        if eid not in G.edges:
            diags.append(f"singular edge {eid!r} is not an edge")
    return diags


def check(G: RibbonGraph) -> RibbonGraph:
    diags = validate(G)
    if diags:
        raise InvalidGraphError(diags)
    return G


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def count(self) -> int:
        return sum(1 for i in range(len(self.parent)) if self.find(i) == i)


def connected_component_count(G: RibbonGraph) -> int:
    """Number of connected components; singular edges connect like ordinary ones."""
    uf = _UnionFind(G.num_vertices)
    for eid in G.edges:
        u, v = G.endpoints(eid)
        uf.union(u, v)
    return uf.count()


def component_labels(G: RibbonGraph) -> list[int]:
    """Component root for each vertex index."""
    uf = _UnionFind(G.num_vertices)
    for eid in G.edges:
        uf.union(*G.endpoints(eid))
    return [uf.find(i) for i in range(G.num_vertices)]


# boundary tracing


class SideArc(NamedTuple):
    """A traversal of one side of an edge band, from slot ``start`` to slot ``end``."""

    edge: str
    side: int
    start: Slot
    end: Slot


class Corner(NamedTuple):
    """A traversal of the vertex corner between ``darts[0]`` and its successor ``darts[1]``."""

    vertex: int
    darts: tuple[str, str]
    forward: bool


class VertexBoundary(NamedTuple):
    """The whole boundary circle of an isolated vertex."""

    vertex: int


Record = Union[SideArc, Corner, VertexBoundary]


@dataclass(frozen=True)
class BoundaryWalk:
    index: int
    records: tuple[Record, ...]

    def side_arcs(self) -> list[SideArc]:
        return [r for r in self.records if isinstance(r, SideArc)]


def _side(G: RibbonGraph, dart: str, sign: int, arrive_sign: int) -> int:
    d1 = G.edges[G.edge_of(dart)].darts[0]
    if dart == d1:
        return 1 if sign > 0 else 2
    return 2 if arrive_sign > 0 else 1


def trace_step(G: RibbonGraph, dart: str, sign: int) -> tuple[SideArc, Corner, tuple[str, int]]:
    """Cross the band of ``dart`` then follow the far vertex in the current direction."""
    eid = G.edge_of(dart)
    far = G.other(dart)
    s2 = -sign if G.edges[eid].twisted else sign
    arc = SideArc(eid, _side(G, dart, sign, s2), (dart, -sign), (far, s2))
    if s2 > 0:
        nxt = G.succ(far)
        corner = Corner(G.vertex_of(far), (far, nxt), True)
    else:
        nxt = G.pred(far)
        corner = Corner(G.vertex_of(far), (nxt, far), False)
    return arc, corner, (nxt, s2)


def reverse_state(G: RibbonGraph, dart: str, sign: int) -> tuple[str, int]:
    """The state of the oppositely directed traversal crossing the same band."""
    far = G.other(dart)
    return far, (sign if G.edges[G.edge_of(dart)].twisted else -sign)


def boundary_walks(G: RibbonGraph) -> list[BoundaryWalk]:
    """Boundary components of ``G`` as a surface (singular flags are ignored).

    Dart-sign states are traced; orbits come in direction-reversed pairs and
    one orbit of each pair is reported.  Isolated vertices give one walk each.
    """
    walks: list[BoundaryWalk] = []
    visited: set[tuple[str, int]] = set()
    starts = [(d, 1) for rot in G.vertices for d in rot] + [(d, -1) for rot in G.vertices for d in rot]
    for state in starts:
        if state in visited:
            continue
        records: list[Record] = []
        cur = state
        while cur not in visited:
            visited.add(cur)
            visited.add(reverse_state(G, *cur))
            arc, corner, cur = trace_step(G, *cur)
            records.append(arc)
            records.append(corner)
        walks.append(BoundaryWalk(len(walks), tuple(records)))
    for vi in G.isolated_vertices():
        walks.append(BoundaryWalk(len(walks), (VertexBoundary(vi),)))
    return walks


def boundary_count(G: RibbonGraph) -> int:
    """Number of boundary components of the underlying ribbon graph."""
    return len(boundary_walks(G))


def pinched_boundary_count(H: RibbonGraph, walks: list[BoundaryWalk] | None = None) -> int:
    """Boundary components of an edge-point ribbon graph.

    Walks through the two sides of a singular edge are wedged together at
    the singular point, so they are merged.
    """
    if walks is None:
        walks = boundary_walks(H)
    if not H.singular:
        return len(walks)
    where: dict[tuple[str, int], int] = {}
    for w in walks:
        for r in w.records:
            if isinstance(r, SideArc) and r.edge in H.singular:
                where[(r.edge, r.side)] = w.index
    uf = _UnionFind(len(walks))
    for eid in H.singular:
        uf.union(where[(eid, 1)], where[(eid, 2)])
    return uf.count()


def euler_genus(G: RibbonGraph) -> int:
    """Euler genus ``2 - |V| + |E| - boundary`` of a connected ribbon graph."""
    if connected_component_count(G) != 1:
        raise ValueError("euler_genus needs a connected ribbon graph; sum over components instead")
    return 2 - G.num_vertices + G.num_edges - boundary_count(G)


def is_orientable(G: RibbonGraph) -> bool:
    """True if some choice of vertex flips removes every twist."""
    orient: dict[int, int] = {}
    for start in range(G.num_vertices):
        if start in orient:
            continue
        orient[start] = 1
        stack = [start]
        while stack:
            v = stack.pop()
            for d in G.vertices[v]:
                eid = G.edge_of(d)
                u = G.vertex_of(G.other(d))
                want = -orient[v] if G.edges[eid].twisted else orient[v]
                if u not in orient:
                    orient[u] = want
                    stack.append(u)
                elif orient[u] != want:
                    return False
    return True
