import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import ribbon_graphs
from ribbon_omega.catalog import CATALOG, get
from ribbon_omega.engine import omega
from ribbon_omega.ops import geometric_dual, partial_petrial
from ribbon_omega.poly import MultiPoly
from ribbon_omega.special import (
    AbstractGraph,
    chromatic_poly,
    edge_3_colouring_count,
    petrial_chromatic_sum,
    pointed_penrose,
    topological_penrose,
    transition_poly,
    tutte_poly,
)

w, x, y, z, t = MultiPoly.gens()

TRIANGLE = AbstractGraph(3, ((0, 1), (1, 2), (2, 0)))
LOOP = AbstractGraph(1, ((0, 0),))
BRIDGE = AbstractGraph(2, ((0, 1),))


def colourings(G: AbstractGraph, k: int) -> int:
    return sum(
        all(c[u] != c[v] for u, v in G.edges) for c in itertools.product(range(k), repeat=G.n)
    )


def spanning_subgraph_tutte(G: AbstractGraph, xv: int, yv: int):
    # rank-nullity expansion over all edge subsets
    def rank(sub):
        parent = list(range(G.n))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        r = 0
        for u, v in sub:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                r += 1
        return r

    full = rank(G.edges)
    total = Fraction(0)
    for mask in range(1 << len(G.edges)):
        sub = [e for i, e in enumerate(G.edges) if mask >> i & 1]
        r = rank(sub)
        total += Fraction(xv - 1) ** (full - r) * Fraction(yv - 1) ** (len(sub) - r)
    return int(total)


def test_pointed_penrose_examples():
    assert pointed_penrose(get("I3")) == t**3
    assert pointed_penrose(get("B1t")) == t**2 - t
    assert pointed_penrose(get("E1")) == 0


def test_topological_penrose_examples():
    assert topological_penrose(get("B1")) == t**2 - t
    assert topological_penrose(get("B1t")) == t - t**2
    assert topological_penrose(get("I3")) == t**3


def test_topological_penrose_rejects_singular():
    with pytest.raises(ValueError):
        topological_penrose(get("THETA2S"))


def test_pointed_penrose_accepts_singular():
    assert pointed_penrose(get("E1S")) == t


def test_chromatic_examples():
    assert chromatic_poly(TRIANGLE) == t * (t - 1) * (t - 2)
    assert chromatic_poly(LOOP) == 0
    assert chromatic_poly(BRIDGE) == t * (t - 1)


@pytest.mark.parametrize("name", ["THETA", "K4P", "P2", "DIGON", "I3"])
def test_chromatic_matches_colouring_count(name):
    A = AbstractGraph.from_ribbon(get(name))
    p = chromatic_poly(A)
    for k in range(4):
        assert p.evaluate(t=k) == colourings(A, k)


def test_tutte_examples():
    assert tutte_poly(BRIDGE) == x
    assert tutte_poly(LOOP) == y
    assert tutte_poly(TRIANGLE) == x**2 + x + y


@pytest.mark.parametrize("name", ["THETA", "K4P", "DIGON", "B2", "P2"])
def test_tutte_matches_subset_expansion(name):
    A = AbstractGraph.from_ribbon(get(name))
    for xv, yv in ((2, 5), (3, 2), (0, 0)):
        assert tutte_poly(A).evaluate(x=xv, y=yv) == spanning_subgraph_tutte(A, xv, yv)


def test_edge_3_colouring_examples():
    assert edge_3_colouring_count(AbstractGraph.from_ribbon(get("THETA"))) == 6
    assert edge_3_colouring_count(AbstractGraph.from_ribbon(get("K4P"))) == 6
    assert edge_3_colouring_count(AbstractGraph(3, ((0, 1), (1, 2)))) == 6
    assert edge_3_colouring_count(LOOP) == 0


def test_petrial_chromatic_examples():
    # dual(B1t) is a one-vertex loop and dual(B1) is a single edge
    assert chromatic_poly(AbstractGraph.from_ribbon(geometric_dual(get("B1t")))) == 0
    assert chromatic_poly(AbstractGraph.from_ribbon(geometric_dual(get("B1")))) == t**2 - t
    assert petrial_chromatic_sum(get("B1t")) == t**2 - t
    assert petrial_chromatic_sum(get("B1"), signed=True) == t**2 - t
    assert topological_penrose(get("B1")) == t**2 - t


def test_transition_specialization():
    assert transition_poly(get("B1"), 1, 0, 0) == t**2
    assert transition_poly(get("E1"), 1, 1, 1) == 2 * t + t**2


def test_plane_penrose_on_catalog():
    for inst in CATALOG.values():
        if inst.plane and not inst.graph.singular:
            assert pointed_penrose(inst.graph) == topological_penrose(inst.graph), inst.name


def test_embedding_independence_on_k4():
    for name in ("K4P", "K4NP", "THETA"):
        assert pointed_penrose(get(name)).evaluate(t=3) == 6
    assert pointed_penrose(get("K4P")) == pointed_penrose(get("K4NP"))


@given(ribbon_graphs(max_edges=3, singular=False))
@settings(max_examples=40, deadline=None)
def test_petrial_chromatic_sums(G):
    assert petrial_chromatic_sum(G) == omega(G).evaluate(w=-2, x=1, y=0, z=1)
    assert petrial_chromatic_sum(G, signed=True) == omega(G).evaluate(w=0, x=1, y=0, z=-1)


@given(ribbon_graphs(max_edges=4, singular=False))
@settings(max_examples=40, deadline=None)
def test_pointed_penrose_invariant_under_single_petrial(G):
    # the unsigned sum runs over every Petrial, so it cannot see one twist
    for e in G.edges:
        assert pointed_penrose(partial_petrial(G, e)) == pointed_penrose(G)
