from collections import Counter

import pytest
from hypothesis import given, settings

from conftest import faces_by_permutation, ribbon_graphs
from ribbon_omega.catalog import CATALOG, get
from ribbon_omega.ops import contract_to_point, flip_vertex, partial_petrial
from ribbon_omega.ribbon import (
    Corner,
    InvalidGraphError,
    SideArc,
    boundary_count,
    boundary_walks,
    check,
    connected_component_count,
    euler_genus,
    is_orientable,
    make_graph,
    pinched_boundary_count,
    validate,
)


def test_validate_catalog_clean():
    assert validate(get("THETA")) == []
    for inst in CATALOG.values():
        assert validate(inst.graph) == [], inst.name


def test_validate_duplicated_dart():
    G = make_graph([("e1.1",), ("e1.1", "e1.2")], {"e1": (("e1.1", "e1.2"), False)})
    diags = validate(G)
    assert any("e1.1" in d and "again" in d for d in diags)
    with pytest.raises(InvalidGraphError):
        check(G)


def test_validate_dangling_singular():
    G = make_graph([("e1.1",), ("e1.2",)], {"e1": (("e1.1", "e1.2"), False)}, ["e9"])
    assert validate(G) == ["singular edge 'e9' is not an edge"]


def test_validate_one_diagnostic_per_violation():
    G = make_graph([("e1.1", "x")], {"e1": (("e1.1", "e1.2"), False)}, ["e7"])
    diags = validate(G)
    assert len(diags) == 3


def test_normalization_is_rotation_invariant():
    a = make_graph([("e2.1", "e1.1", "e3.1"), ("e1.2", "e3.2", "e2.2")], {f"e{i}": ((f"e{i}.1", f"e{i}.2"), False) for i in (1, 2, 3)})
    b = make_graph([("e3.2", "e2.2", "e1.2"), ("e1.1", "e3.1", "e2.1")], {f"e{i}": ((f"e{i}.1", f"e{i}.2"), False) for i in (1, 2, 3)})
    assert a == b
    assert hash(a) == hash(b)


@pytest.mark.parametrize("name, kappa", [("I3", 3), ("THETA", 1), ("E1S", 1), ("E1", 1), ("K4P", 1)])
def test_connected_components(name, kappa):
    assert connected_component_count(get(name)) == kappa


@pytest.mark.parametrize("name, walks", [("THETA", 3), ("E1", 1), ("B1t", 1), ("B1", 2), ("I3", 3), ("B2X", 1)])
def test_boundary_walk_counts(name, walks):
    G = get(name)
    assert len(boundary_walks(G)) == walks
    # independent count from the orientation double cover
    assert faces_by_permutation(G) == walks


def test_moebius_trace_by_hand():
    # one twisted loop: start at e1.1 with sign +, cross to e1.2 with sign -,
    # step back to the predecessor e1.1; then cross again and return to (e1.1, +)
    (walk,) = boundary_walks(get("B1t"))
    arcs = walk.side_arcs()
    assert len(arcs) == 2
    assert {a.side for a in arcs} == {1, 2}


@pytest.mark.parametrize(
    "name, expected",
    [("THETA2S", 2), ("THETA", 3), ("E1S", 1)],
)
def test_pinched_boundary(name, expected):
    assert pinched_boundary_count(get(name)) == expected


def test_pinched_theta_matches_contract_to_point():
    assert contract_to_point(get("THETA"), "e2") == get("THETA2S")


@pytest.mark.parametrize("name, genus", [("THETA", 0), ("B1t", 1), ("E1", 0), ("B2X", 2), ("K4P", 0), ("K4NP", 2)])
def test_euler_genus(name, genus):
    assert euler_genus(get(name)) == genus


def test_euler_genus_rejects_disconnected():
    with pytest.raises(ValueError):
        euler_genus(get("I3"))


def test_orientability():
    assert is_orientable(get("B1"))
    assert not is_orientable(get("B1t"))
    assert is_orientable(flip_vertex(get("E1"), 0))


@given(ribbon_graphs(max_edges=6))
@settings(max_examples=150, deadline=None)
def test_walk_records_cover_sides_and_corners(G):
    walks = boundary_walks(G)
    sides = Counter()
    corners = Counter()
    for w in walks:
        for r in w.records:
            if isinstance(r, SideArc):
                sides[(r.edge, r.side)] += 1
            elif isinstance(r, Corner):
                corners[(r.vertex, r.darts)] += 1
    assert sum(sides.values()) == 2 * G.num_edges
    assert set(sides) == {(e, s) for e in G.edges for s in (1, 2)}
    assert sum(corners.values()) == sum(G.degree(v) for v in range(G.num_vertices))
    assert set(corners.values()) <= {1}


@given(ribbon_graphs(max_edges=6, singular=False))
@settings(max_examples=150, deadline=None)
def test_boundary_count_matches_permutation_oracle(G):
    assert boundary_count(G) == faces_by_permutation(G)


@given(ribbon_graphs(max_edges=6))
@settings(max_examples=100, deadline=None)
def test_pinched_at_most_plain(G):
    walks = boundary_walks(G)
    where = {}
    for w in walks:
        for a in w.side_arcs():
            where[(a.edge, a.side)] = w.index
    p = pinched_boundary_count(G)
    assert p <= len(walks)
    if all(where[(e, 1)] == where[(e, 2)] for e in G.singular):
        assert p == len(walks)


def test_plane_catalog_euler_formula():
    for inst in CATALOG.values():
        G = inst.graph
        if inst.plane and connected_component_count(G) == 1:
            assert G.num_vertices - G.num_edges + boundary_count(G) == 2, inst.name


@given(ribbon_graphs(max_edges=5))
@settings(max_examples=100, deadline=None)
def test_vertex_flip_invariance(G):
    for v in range(G.num_vertices):
        F = flip_vertex(G, v)
        assert connected_component_count(F) == connected_component_count(G)
        assert boundary_count(F) == boundary_count(G)
        assert pinched_boundary_count(F) == pinched_boundary_count(G)


@given(ribbon_graphs(max_edges=5))
@settings(max_examples=100, deadline=None)
def test_petrial_on_singular_edge_keeps_pinched_count(G):
    for e in G.singular:
        assert pinched_boundary_count(partial_petrial(G, e)) == pinched_boundary_count(G)
