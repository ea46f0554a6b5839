"""Medial graphs, with brute-force k-valuations and transition-polynomial states.

The medial graph has one vertex per edge of the ribbon graph and one
medial edge per vertex corner.  The four half-edges at medial vertex ``e``
are the slots ``(d, +1)``, ``(d, -1)`` for both darts ``d`` of ``e``.  The
medial edge of the corner starting at dart ``d`` joins slot ``(d, +1)`` to
slot ``(succ d, -1)``.

At each medial vertex the slots are paired three ways:

* black: the two slots of the same dart (the smoothing that deletes ``e``);
* white: the two slots joined by a side arc of ``e`` (contracts ``e``);
* crossing: the remaining pairing (Penrose-contracts ``e``).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import NamedTuple

from .ribbon import RibbonGraph, Slot, SideArc, _UnionFind, boundary_walks, natural_key

WHITE, BLACK, CROSSING, TOTAL = "white", "black", "crossing", "total"
PAIRINGS = (WHITE, BLACK, CROSSING)

MAX_ORACLE_EDGES = 6
MAX_ORACLE_K = 4


class OracleLimitError(ValueError):
    pass


class ValuationError(ValueError):
    pass


Pair = tuple[Slot, Slot]


@dataclass(frozen=True)
class MedialVertex:
    edge: str
    singular: bool
    slots: tuple[Slot, Slot, Slot, Slot]
    pairings: Mapping[str, tuple[Pair, Pair]]


@dataclass(frozen=True)
class MedialGraph:
    vertices: tuple[MedialVertex, ...]
    # medial edge id (the dart starting the corner) -> its two slots
    edges: Mapping[str, tuple[Slot, Slot]]
    slot_edge: Mapping[Slot, str]
    free_loops: int

    @property
    def num_colourable(self) -> int:
        """Number of colour-carrying objects: medial edges plus free-loops."""
        return len(self.edges) + self.free_loops

    def vertex(self, edge: str) -> MedialVertex:
        for mv in self.vertices:
            if mv.edge == edge:
                return mv
        raise KeyError(edge)

    def is_four_regular(self) -> bool:
        deg = Counter()
        for a, b in self.edges.values():
            deg[a] += 1
            deg[b] += 1
        return all(sum(deg[s] for s in mv.slots) == 4 for mv in self.vertices)

    def to_dict(self) -> dict:
        return {
            "vertices": [
                {
                    "edge": mv.edge,
                    "singular": mv.singular,
                    "slots": [_slot_str(s) for s in mv.slots],
                    "pairings": {
                        name: [[_slot_str(a), _slot_str(b)] for a, b in pairs] for name, pairs in mv.pairings.items()
                    },
                }
                for mv in self.vertices
            ],
            "edges": {mid: [_slot_str(a), _slot_str(b)] for mid, (a, b) in self.edges.items()},
            "free_loops": self.free_loops,
        }


def _slot_str(s: Slot) -> str:
    return f"{s[0]}{'+' if s[1] > 0 else '-'}"


def _pair(a: Slot, b: Slot) -> Pair:
    return (a, b) if (natural_key(a[0]), -a[1]) <= (natural_key(b[0]), -b[1]) else (b, a)


def build_medial(H: RibbonGraph) -> MedialGraph:
    """Medial graph with its canonical checkerboard pairings.

    White pairs are read off the boundary walks: each side-arc record joins
    the slot it leaves from to the slot it arrives at.
    """
    edges: dict[str, tuple[Slot, Slot]] = {}
    slot_edge: dict[Slot, str] = {}
    for rot in H.vertices:
        for d in rot:
            a, b = (d, 1), (H.succ(d), -1)
            edges[d] = (a, b)
            slot_edge[a] = d
            slot_edge[b] = d
    white: dict[str, list[Pair]] = {eid: [] for eid in H.edges}
    for walk in boundary_walks(H):
        for r in walk.records:
            if isinstance(r, SideArc):
                white[r.edge].append(_pair(r.start, r.end))
    verts = []
    for eid, ed in H.edges.items():
        d1, d2 = ed.darts
        slots = ((d1, 1), (d1, -1), (d2, 1), (d2, -1))
        wp = tuple(sorted(white[eid], key=lambda p: (natural_key(p[0][0]), -p[0][1])))
        if len(wp) != 2:
            raise AssertionError(f"edge {eid} has {len(wp)} side-arc traversals")
        bp = (((d1, 1), (d1, -1)), ((d2, 1), (d2, -1)))
        # the remaining perfect matching on four slots
        partner = dict(wp) | {b: a for a, b in wp}
        cp = (_pair((d1, 1), _other_pair((d1, 1), partner, bp)), _pair((d1, -1), _other_pair((d1, -1), partner, bp)))
        verts.append(MedialVertex(eid, eid in H.singular, slots, {WHITE: wp, BLACK: bp, CROSSING: cp}))
    return MedialGraph(tuple(verts), edges, slot_edge, len(H.isolated_vertices()))


def _other_pair(s: Slot, white_partner: Mapping[Slot, Slot], black: tuple[Pair, Pair]) -> Slot:
    black_partner = {a: b for a, b in black} | {b: a for a, b in black}
    used = {s, white_partner[s], black_partner[s]}
    slots = {x for p in black for x in p}
    (rest,) = slots - used
    return rest


# k-valuations


class ConfigTally(NamedTuple):
    tot: int
    wh: int
    bl: int
    cr: int


def classify_slots(mv: MedialVertex, colours: Mapping[Slot, int]) -> str:
    """Configuration of a vertex given the colours of its four slots."""
    cs = [colours[s] for s in mv.slots]
    if cs[0] == cs[1] == cs[2] == cs[3]:
        return TOTAL
    for name in PAIRINGS:
        if all(colours[a] == colours[b] for a, b in mv.pairings[name]):
            return name
    raise ValuationError(f"colours {cs} at medial vertex {mv.edge} violate the evenness condition")


def classify_vertex(M: MedialGraph, phi: Mapping[str, int], v: str) -> str:
    """Configuration at medial vertex ``v`` under the edge colouring ``phi``."""
    mv = M.vertex(v)
    if mv.singular:
        raise ValuationError(f"medial vertex {v} is singular")
    return classify_slots(mv, {s: phi[M.slot_edge[s]] for s in mv.slots})


def _check_limits(H: RibbonGraph, k: int, max_edges: int | None, max_k: int | None) -> None:
    if k < 1:
        raise ValueError("k must be a positive integer")
    if max_edges is not None and H.num_edges > max_edges:
        raise OracleLimitError(f"{H.num_edges} edges exceeds the oracle limit {max_edges}")
    if max_k is not None and k > max_k:
        raise OracleLimitError(f"k={k} exceeds the oracle limit {max_k}")


def enumerate_k_valuations(
    M: MedialGraph, k: int
) -> Iterator[tuple[dict[str, int], ConfigTally]]:
    """Every k-valuation (colours of medial edges and free-loops) with its tally.

    Free-loops are keyed ``"free:0"``, ``"free:1"``, ...  Medial edges are
    coloured one at a time; a vertex is checked as soon as its last slot is
    coloured.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    order = _edge_order(M)
    # vertices that become fully coloured once order[i] is assigned
    completes: list[list[MedialVertex]] = [[] for _ in order]
    pos = {mid: i for i, mid in enumerate(order)}
    for mv in M.vertices:
        last = max(pos[M.slot_edge[s]] for s in mv.slots)
        completes[last].append(mv)
    colour: dict[str, int] = {}
    tally = [0, 0, 0, 0]
    idx = {TOTAL: 0, WHITE: 1, BLACK: 2, CROSSING: 3}
    free = [f"free:{i}" for i in range(M.free_loops)]

    def rec(i: int) -> Iterator[tuple[dict[str, int], ConfigTally]]:
        if i == len(order):
            base = ConfigTally(*tally)
            for fc in _product(k, len(free)):
                phi = dict(colour)
                phi.update(zip(free, fc))
                yield phi, base
            return
        mid = order[i]
        for c in range(1, k + 1):
            colour[mid] = c
            seen = []
            ok = True
            for mv in completes[i]:
                slot_col = {s: colour[M.slot_edge[s]] for s in mv.slots}
                try:
                    kind = classify_slots(mv, slot_col)
                except ValuationError:
                    ok = False
                    break
                if mv.singular:
                    if kind != TOTAL:
                        ok = False
                        break
                    continue
                seen.append(idx[kind])
            if ok:
                for j in seen:
                    tally[j] += 1
                yield from rec(i + 1)
                for j in seen:
                    tally[j] -= 1
        del colour[mid]

    yield from rec(0)


def _product(k: int, n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for rest in _product(k, n - 1):
        for c in range(1, k + 1):
            yield rest + (c,)


def _edge_order(M: MedialGraph) -> list[str]:
    # walk vertices in order so each vertex's slots are coloured close together
    order: list[str] = []
    seen = set()
    for mv in M.vertices:
        for s in mv.slots:
            mid = M.slot_edge[s]
            if mid not in seen:
                seen.add(mid)
                order.append(mid)
    return order


def tally_counts(H: RibbonGraph, k: int, *, max_edges: int | None = MAX_ORACLE_EDGES, max_k: int | None = MAX_ORACLE_K) -> Counter:
    """Number of k-valuations of the medial graph of ``H`` per configuration tally."""
    _check_limits(H, k, max_edges, max_k)
    return Counter(t for _, t in enumerate_k_valuations(build_medial(H), k))


def weighted_sum(tallies: Mapping[ConfigTally, int], w: int, x: int, y: int, z: int) -> int:
    return sum(n * w**t.tot * x**t.wh * y**t.bl * z**t.cr for t, n in tallies.items())


def omega_k_bruteforce(
    H: RibbonGraph, k: int, w: int, x: int, y: int, z: int, **limits
) -> int:
    """Sum over k-valuations of ``w^tot x^wh y^bl z^cr``."""
    return weighted_sum(tally_counts(H, k, **limits), w, x, y, z)


def valuation_count(H: RibbonGraph, k: int, **limits) -> int:
    return sum(tally_counts(H, k, **limits).values())


def admissible_count(G: RibbonGraph, k: int, **limits) -> int:
    """Number of k-valuations with no black configuration."""
    return sum(n for t, n in tally_counts(G, k, **limits).items() if t.bl == 0)


# transition polynomial


def count_curves(M: MedialGraph, choice: Mapping[str, str]) -> int:
    """Closed curves after smoothing every vertex by ``choice[edge]``.

    Singular vertices join all four slots.  Free-loops count one each.
    """
    ids = {mid: i for i, mid in enumerate(M.edges)}
    uf = _UnionFind(len(ids))
    for mv in M.vertices:
        if mv.singular:
            first = ids[M.slot_edge[mv.slots[0]]]
            for s in mv.slots[1:]:
                uf.union(first, ids[M.slot_edge[s]])
            continue
        for a, b in mv.pairings[choice[mv.edge]]:
            uf.union(ids[M.slot_edge[a]], ids[M.slot_edge[b]])
    return uf.count() + M.free_loops


def transition_poly_bruteforce(G: RibbonGraph, alpha: int, beta: int, gamma: int, t_val: int) -> int:
    """Sum over smoothings of ``alpha^#white beta^#black gamma^#crossing t^#curves``."""
    M = build_medial(G)
    weight = {WHITE: alpha, BLACK: beta, CROSSING: gamma}
    free = [mv.edge for mv in M.vertices if not mv.singular]
    total = 0
    for states in _states(len(free)):
        choice = dict(zip(free, states))
        term = t_val ** count_curves(M, choice)
        for s in states:
            term *= weight[s]
            if not term:
                break
        total += term
    return total


def _states(n: int) -> Iterator[tuple[str, ...]]:
    if n == 0:
        yield ()
        return
    for rest in _states(n - 1):
        for s in PAIRINGS:
            yield rest + (s,)
