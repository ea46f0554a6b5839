"""Named ribbon graphs and a seeded random generator."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ribbon import (
    RibbonGraph,
    boundary_count,
    component_labels,
    connected_component_count,
    make_graph,
    pinched_boundary_count,
)

MAX_RANDOM_EDGES = 14


@dataclass(frozen=True)
class Instance:
    name: str
    graph: RibbonGraph
    plane: bool
    # asserted (kappa, boundary, euler genus); boundary is the pinched count
    invariants: tuple[int, int, int]
    description: str = ""


def _g(vertices, edges, singular=()):
    es = {}
    for eid, kind in edges.items():
        twisted = kind.endswith("~")
        es[eid] = ((f"{eid}.1", f"{eid}.2"), twisted)
    return make_graph(vertices, es, singular)


def _build() -> dict[str, Instance]:
    out = {}

    def add(name, graph, plane, inv, desc):
        out[name] = Instance(name, graph, plane, inv, desc)

    add("I3", make_graph([(), (), ()], {}), True, (3, 3, 0), "three isolated vertices")
    add("E1", _g([("e1.1",), ("e1.2",)], {"e1": ""}), True, (1, 1, 0), "one untwisted non-loop edge")
    add("E1S", _g([("e1.1",), ("e1.2",)], {"e1": ""}, ["e1"]), False, (1, 1, 0), "E1 with its edge singular")
    add("B1", _g([("e1.1", "e1.2")], {"e1": ""}), True, (1, 2, 0), "untwisted loop (annulus)")
    add("B1t", _g([("e1.1", "e1.2")], {"e1": "~"}), False, (1, 1, 1), "twisted loop (Moebius band)")
    add(
        "P2",
        _g([("e1.1",), ("e1.2", "e2.1"), ("e2.2",)], {"e1": "", "e2": ""}),
        True,
        (1, 1, 0),
        "path with two edges",
    )
    add(
        "DIGON",
        _g([("e1.1", "e2.1"), ("e2.2", "e1.2")], {"e1": "", "e2": ""}),
        True,
        (1, 2, 0),
        "two parallel edges, plane",
    )
    add(
        "B2",
        _g([("e1.1", "e1.2", "e2.1", "e2.2")], {"e1": "", "e2": ""}),
        True,
        (1, 3, 0),
        "two non-interlaced untwisted loops at one vertex",
    )
    add(
        "B2X",
        _g([("e1.1", "e2.1", "e1.2", "e2.2")], {"e1": "", "e2": ""}),
        False,
        (1, 1, 2),
        "two interlaced untwisted loops (punctured torus)",
    )
    theta_rot = [("e1.1", "e2.1", "e3.1"), ("e3.2", "e2.2", "e1.2")]
    theta_edges = {"e1": "", "e2": "", "e3": ""}
    add("THETA", _g(theta_rot, theta_edges), True, (1, 3, 0), "plane theta graph")
    add("THETA2S", _g(theta_rot, theta_edges, ["e2"]), False, (1, 2, 0), "plane theta with e2 contracted to a point")
    k4_edges = {f"e{i}": "" for i in range(1, 7)}
    # e1:0-1 e2:0-2 e3:0-3 e4:1-2 e5:2-3 e6:3-1; rotations counter-clockwise in a plane drawing
    add(
        "K4P",
        _g(
            [("e1.1", "e2.1", "e3.1"), ("e4.1", "e1.2", "e6.2"), ("e5.1", "e2.2", "e4.2"), ("e6.1", "e3.2", "e5.2")],
            k4_edges,
        ),
        True,
        (1, 4, 0),
        "plane K4",
    )
    add(
        "K4NP",
        _g(
            [("e1.1", "e3.1", "e2.1"), ("e4.1", "e1.2", "e6.2"), ("e5.1", "e2.2", "e4.2"), ("e6.1", "e3.2", "e5.2")],
            k4_edges,
        ),
        False,
        (1, 2, 2),
        "K4 on the torus (one rotation reversed)",
    )
    return out


CATALOG: dict[str, Instance] = _build()


def named_instances() -> dict[str, Instance]:
    return dict(CATALOG)


def get(name: str) -> RibbonGraph:
    return CATALOG[name].graph


def invariant_vector(G: RibbonGraph) -> tuple[int, int, int]:
    """``(kappa, pinched boundary, Euler genus summed over components)``."""
    kappa = connected_component_count(G)
    genus = 2 * kappa - G.num_vertices + G.num_edges - boundary_count(G)
    return kappa, pinched_boundary_count(G), genus


def random_instance(
    n_vertices: int,
    n_edges: int,
    seed: int,
    *,
    p_twist: float = 0.5,
    p_singular: float = 0.0,
    max_edges: int = MAX_RANDOM_EDGES,
) -> RibbonGraph:
    """A random valid (edge-point) ribbon graph, deterministic in ``seed``."""
    if n_edges > max_edges:
        raise ValueError(f"n_edges={n_edges} exceeds the bound {max_edges}")
    if n_vertices < 1 or n_edges < 0:
        raise ValueError("need at least one vertex and a non-negative edge count")
    rng = random.Random(seed)
    rots: list[list[str]] = [[] for _ in range(n_vertices)]
    edges = {}
    singular = []
    for i in range(1, n_edges + 1):
        eid = f"e{i}"
        for end in (1, 2):
            rot = rots[rng.randrange(n_vertices)]
            rot.insert(rng.randrange(len(rot) + 1), f"{eid}.{end}")
        edges[eid] = ((f"{eid}.1", f"{eid}.2"), rng.random() < p_twist)
        if rng.random() < p_singular:
            singular.append(eid)
    return make_graph(rots, edges, singular)


def random_connected_instance(n_vertices: int, n_edges: int, seed: int, **kw) -> RibbonGraph:
    """Like :func:`random_instance` but retries seeds until the graph is connected."""
    for k in range(1000):
        G = random_instance(n_vertices, n_edges, seed * 1000 + k, **kw)
        if len(set(component_labels(G))) == 1:
            return G
    raise ValueError("could not generate a connected instance")
