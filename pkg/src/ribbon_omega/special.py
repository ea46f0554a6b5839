"""Named evaluations of Omega and the classical graph polynomials they are compared with."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .engine import omega
from .ops import geometric_dual, partial_petrial_set
from .poly import MultiPoly
from .ribbon import RibbonGraph, _UnionFind


@dataclass(frozen=True)
class AbstractGraph:
    """A multigraph: vertices ``0..n-1`` and edges as endpoint pairs (loops allowed)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_ribbon(cls, G: RibbonGraph) -> AbstractGraph:
        return cls(G.num_vertices, tuple(G.endpoints(e) for e in G.edges))

    def is_cubic(self) -> bool:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return all(d == 3 for d in deg)


def pointed_penrose(H: RibbonGraph, method: str = "recursive") -> MultiPoly:
    """Omega at (w, x, y, z) = (-2, 1, 0, 1); t plays the role of lambda."""
    return omega(H, method).evaluate(w=-2, x=1, y=0, z=1)


def topological_penrose(G: RibbonGraph, method: str = "recursive") -> MultiPoly:
    """Omega at (w, x, y, z) = (0, 1, 0, -1)."""
    if G.singular:
        raise ValueError("topological Penrose polynomial needs a ribbon graph without singular edges")
    return omega(G, method).evaluate(w=0, x=1, y=0, z=-1)


def transition_poly(G: RibbonGraph, alpha: int, beta: int, gamma: int, method: str = "recursive") -> MultiPoly:
    """Omega at (0, alpha, beta, gamma), a polynomial in t."""
    return omega(G, method).evaluate(w=0, x=alpha, y=beta, z=gamma)


def _canonical(n: int, edges) -> tuple[int, tuple[tuple[int, int], ...]]:
    return n, tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def _contract_edge(n: int, edges, i: int) -> tuple[int, list[tuple[int, int]]]:
    u, v = edges[i]
    keep, gone = min(u, v), max(u, v)

    def relabel(a: int) -> int:
        a = keep if a == gone else a
        return a - 1 if a > gone else a

    return n - 1, [(relabel(a), relabel(b)) for j, (a, b) in enumerate(edges) if j != i]


@lru_cache(maxsize=None)
def _chromatic(n: int, edges: tuple[tuple[int, int], ...]) -> MultiPoly:
    if any(u == v for u, v in edges):
        return MultiPoly()
    simple = sorted(set(edges))
    if not simple:
        return MultiPoly.var("t", n)
    i = len(simple) - 1
    deleted = _canonical(n, simple[:i])
    contracted = _canonical(*_contract_edge(n, simple, i))
    return _chromatic(*deleted) - _chromatic(*contracted)


def chromatic_poly(G: AbstractGraph) -> MultiPoly:
    """Chromatic polynomial in t by deletion-contraction; zero if any loop."""
    return _chromatic(*_canonical(G.n, G.edges))


def _is_bridge(n: int, edges, i: int) -> bool:
    def comps(es):
        uf = _UnionFind(n)
        for a, b in es:
            uf.union(a, b)
        return uf.count()

    return comps(edges[:i] + edges[i + 1 :]) > comps(edges)


@lru_cache(maxsize=None)
def _tutte(n: int, edges: tuple[tuple[int, int], ...]) -> MultiPoly:
    if not edges:
        return MultiPoly.const(1)
    es = list(edges)
    i = len(es) - 1
    u, v = es[i]
    x, y = MultiPoly.var("x"), MultiPoly.var("y")
    if u == v:
        return y * _tutte(*_canonical(n, es[:i]))
    contracted = _canonical(*_contract_edge(n, es, i))
    if _is_bridge(n, es, i):
        return x * _tutte(*contracted)
    return _tutte(*_canonical(n, es[:i])) + _tutte(*contracted)


def tutte_poly(G: AbstractGraph) -> MultiPoly:
    """Tutte polynomial T(x, y), using the x and y variables."""
    return _tutte(*_canonical(G.n, G.edges))


def edge_3_colouring_count(G: AbstractGraph) -> int:
    """Proper edge 3-colourings by exhaustive search (edges sharing an end differ)."""
    if any(u == v for u, v in G.edges):
        return 0
    m = len(G.edges)
    count = 0
    for cols in itertools.product(range(3), repeat=m):
        ok = True
        used: dict[tuple[int, int], bool] = {}
        for (u, v), c in zip(G.edges, cols):
            if (u, c) in used or (v, c) in used:
                ok = False
                break
            used[(u, c)] = used[(v, c)] = True
        count += ok
    return count


def petrial_chromatic_sum(G: RibbonGraph, signed: bool = False) -> MultiPoly:
    """Sum over edge subsets A of chi of the dual of the partial Petrial at A.

    With ``signed`` each term carries ``(-1)^|A|``.
    """
    if G.singular:
        raise ValueError("petrial_chromatic_sum needs a ribbon graph without singular edges")
    total = MultiPoly()
    edges = list(G.edges)
    for r in range(len(edges) + 1):
        for A in itertools.combinations(edges, r):
            dual = geometric_dual(partial_petrial_set(G, A))
            chi = chromatic_poly(AbstractGraph.from_ribbon(dual))
            total = total - chi if (signed and r % 2) else total + chi
    return total
