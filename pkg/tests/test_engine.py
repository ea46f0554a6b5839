import random

import pytest
from hypothesis import given, settings

from conftest import ribbon_graphs
from ribbon_omega.catalog import CATALOG, get, random_instance
from ribbon_omega.engine import (
    TooLargeError,
    omega,
    omega_k_polynomial,
    omega_recursive,
    omega_state_sum,
    order_chooser,
    prefer_non_loop,
)
from ribbon_omega.medial import omega_k_bruteforce
from ribbon_omega.ops import (
    OrderedPartition,
    apply_partition,
    disjoint_union,
)
from ribbon_omega.poly import MultiPoly
from ribbon_omega.ribbon import connected_component_count, make_graph, pinched_boundary_count

w, x, y, z, t = MultiPoly.gens()

SINGLE_VERTEX = make_graph([()], {})


def both(H):
    return omega_state_sum(H).polynomial, omega_recursive(H).polynomial


def test_edgeless_and_single_edge():
    for p in both(get("I3")):
        assert p == t**3
    for p in both(get("E1")):
        assert p == (w + x + z) * t + y * t**2


def test_loops():
    # hand evaluation of the four branches, checked by both engines
    for p in both(get("B1")):
        assert p == (w + y + z) * t + x * t**2
    for p in both(get("B1t")):
        assert p == (w + x + y) * t + z * t**2


def test_two_edge_worked_values():
    # two-edge values: the plane digon and a pair of interlaced loops
    digon = w * (w + x + y + z) * t + x * (w + y + z) * t + y * (w + x + z) * t + z * (w + x + y) * t
    digon = digon + (x**2 + y**2 + z**2) * t**2
    inter = w * (w + x + y + z) * t + x * (w + x + z) * t + y * (w + y + z) * t + z * (w + x + y) * t
    inter = inter + (2 * x * y + z**2) * t**2
    assert omega(get("DIGON")) == digon
    assert omega(get("B2X")) == inter
    assert omega(get("DIGON"), "statesum") == digon
    assert omega(get("B2X"), "statesum") == inter


def test_theta_engines_agree():
    ss, rec = both(get("THETA"))
    assert ss == rec


def test_brute_partition_sum_theta():
    # state sum written out with apply_partition, independent of the
    # depth-first enumeration inside the engine
    T = get("THETA")
    edges = T.nonsingular_edges
    total = MultiPoly()
    for code in range(4 ** len(edges)):
        blocks = {n: set() for n in "ABCD"}
        digits = []
        for e in edges:
            code, d = divmod(code, 4)
            blocks["ABCD"[d]].add(e)
            digits.append(d)
        H = apply_partition(T, OrderedPartition(**blocks))
        ex = [0, 0, 0, 0, pinched_boundary_count(H)]
        for d in digits:
            ex[d] += 1
        total = total + MultiPoly({tuple(ex): 1})
    assert total == omega(T)


def test_singular_edges_stay_pinched():
    # E1 with its edge already pinched is edgeless: Omega = t^kappa
    assert omega(get("E1S")) == t
    assert omega(get("E1S"), "statesum") == t
    ss, rec = both(get("THETA2S"))
    assert ss == rec
    assert all(sum(e[:4]) == 2 for e, _ in ss.items())


def test_omega_k_examples():
    assert omega_k_polynomial(get("E1")) == (w - y) * t + y * t**2
    assert omega_k_polynomial(get("I3")) == t**3
    assert omega_k_polynomial(get("B1")) == (w - x) * t + x * t**2


def test_omega_k_e1_at_k_matches_oracle():
    ok = omega_k_polynomial(get("E1"))
    for k in (1, 2, 3):
        assert ok.evaluate(t=k) == k * w + (k * k - k) * y
        assert omega_k_bruteforce(get("E1"), k, 2, 0, 5, 0) == 2 * k + 5 * (k * k - k)


def test_state_sum_guard():
    with pytest.raises(TooLargeError):
        omega_state_sum(get("K4P"), max_edges=5)


def test_state_sum_stats_and_parallel():
    r = omega_state_sum(get("K4P"))
    assert r.stats["partitions"] == 4**6
    assert r.method == "statesum"
    par = omega_state_sum(get("K4P"), workers=2)
    assert par.polynomial == r.polynomial


def test_recursive_cache_hits():
    r = omega_recursive(get("K4P"))
    assert r.stats["cache_hits"] > 0
    assert r.stats["calls"] > r.stats["cache_hits"]


def test_edge_choosers():
    G = make_graph([("e1.1", "e1.2", "e2.1"), ("e2.2",)], {"e1": (("e1.1", "e1.2"), False), "e2": (("e2.1", "e2.2"), False)})
    assert prefer_non_loop(G) == "e2"
    assert order_chooser(["e1", "e2"])(G) == "e1"
    assert prefer_non_loop(get("B2")) == "e1"


def test_unknown_method():
    with pytest.raises(ValueError):
        omega(get("E1"), "magic")


def test_single_vertex_random_instance():
    G = random_instance(1, 0, 123)
    assert omega(G) == t


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_engine_equivalence(name):
    H = CATALOG[name].graph
    ss, rec = both(H)
    assert ss == rec
    rng = random.Random(name)
    for _ in range(3):
        order = H.edge_ids
        rng.shuffle(order)
        assert omega_recursive(H, order=order).polynomial == ss


@given(ribbon_graphs(max_edges=5))
@settings(max_examples=60, deadline=None)
def test_engines_agree(H):
    ss, rec = both(H)
    assert ss == rec


def all_partitions(H):
    edges = H.nonsingular_edges
    for code in range(4 ** len(edges)):
        blocks = {n: set() for n in "ABCD"}
        for e in edges:
            code, d = divmod(code, 4)
            blocks["ABCD"[d]].add(e)
        yield apply_partition(H, OrderedPartition(**blocks))


@given(ribbon_graphs(max_edges=4))
@settings(max_examples=40, deadline=None)
def test_homogeneous_and_t_degree_bound(H):
    p = omega(H)
    n = len(H.nonsingular_edges)
    assert all(sum(e[:4]) == n for e, _ in p.items())
    assert p.degree("t") <= max(pinched_boundary_count(G) for G in all_partitions(H))


@given(ribbon_graphs(max_edges=3), ribbon_graphs(max_edges=2))
@settings(max_examples=40, deadline=None)
def test_multiplicative_over_disjoint_union(G, H):
    U = disjoint_union(G, H)
    assert omega(U) == omega(G) * omega(H)


@given(ribbon_graphs(max_edges=4))
@settings(max_examples=40, deadline=None)
def test_isolated_vertex_multiplies_by_t(H):
    U = disjoint_union(H, SINGLE_VERTEX)
    assert omega(U) == omega(H) * t
    assert connected_component_count(U) == connected_component_count(H) + 1
