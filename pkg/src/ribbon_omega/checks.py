"""Identity suites run by ``ribbon-omega verify``.

Each check compares two independently computed quantities and yields a
:class:`CheckResult`.  Suites: ``engines``, ``oracle``, ``corollaries``.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass

from .catalog import invariant_vector
from .engine import omega_k_polynomial, omega_recursive, omega_state_sum
from .medial import (
    MAX_ORACLE_EDGES,
    tally_counts,
    transition_poly_bruteforce,
    weighted_sum,
)
from .ribbon import RibbonGraph
from .special import (
    AbstractGraph,
    edge_3_colouring_count,
    petrial_chromatic_sum,
    pointed_penrose,
    topological_penrose,
    tutte_poly,
)

SUITES = ("engines", "oracle", "corollaries")
WEIGHTS = ((1, 1, 1, 1), (2, -1, 3, 5), (0, 1, 0, 1), (-2, 1, 1, 1), (3, 2, -2, 7))


@dataclass(frozen=True)
class CheckResult:
    instance: str
    check: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.instance} {self.check}{tail}"


def engine_checks(name: str, H: RibbonGraph, orders: int = 3, seed: int = 0) -> Iterator[CheckResult]:
    ss = omega_state_sum(H).polynomial
    rec = omega_recursive(H).polynomial
    yield CheckResult(name, "statesum=recursive", ss == rec, "" if ss == rec else f"{ss} vs {rec}")
    rng = random.Random(seed)
    for i in range(orders):
        order = H.edge_ids
        rng.shuffle(order)
        other = omega_recursive(H, order=order).polynomial
        yield CheckResult(name, f"order-independence[{i}]", other == ss, ",".join(order))
    n = len(H.nonsingular_edges)
    homog = all(sum(e[:4]) == n for e, _ in ss.items())
    yield CheckResult(name, "homogeneous", homog)


def oracle_checks(name: str, H: RibbonGraph, ks=(1, 2, 3)) -> Iterator[CheckResult]:
    if H.num_edges > MAX_ORACLE_EDGES:
        return
    omk = omega_k_polynomial(H)
    om = omega_recursive(H).polynomial
    for k in ks:
        tallies = tally_counts(H, k)
        ok = all(
            weighted_sum(tallies, *wt) == int(omk.evaluate(w=wt[0], x=wt[1], y=wt[2], z=wt[3], t=k))
            for wt in WEIGHTS
        )
        yield CheckResult(name, f"valuations=omega_k[k={k}]", ok)
        count = sum(tallies.values())
        expect = int(om.evaluate(w=-2, x=1, y=1, z=1, t=k))
        yield CheckResult(name, f"valuation-count[k={k}]", count == expect, f"{count} vs {expect}")
    rng = random.Random(7)
    ok = True
    for _ in range(5):
        a, b, c, tv = (rng.randint(-3, 3) for _ in range(4))
        ok &= int(om.evaluate(w=0, x=a, y=b, z=c, t=tv)) == transition_poly_bruteforce(H, a, b, c, tv)
    yield CheckResult(name, "transition", ok)


def corollary_checks(name: str, G: RibbonGraph, plane: bool | None = None) -> Iterator[CheckResult]:
    if G.singular:
        return
    pp = pointed_penrose(G)
    tp = topological_penrose(G)
    if G.num_edges <= 6:
        s = petrial_chromatic_sum(G)
        yield CheckResult(name, "petrial-chromatic-sum", s == pp, "" if s == pp else f"{s} vs {pp}")
        s = petrial_chromatic_sum(G, signed=True)
        yield CheckResult(name, "signed-petrial-chromatic-sum", s == tp, "" if s == tp else f"{s} vs {tp}")
    if plane is None:
        plane = _is_plane(G)
    if plane:
        yield CheckResult(name, "plane-penrose", pp == tp)
        if G.num_edges:
            A = AbstractGraph.from_ribbon(G)
            om = omega_recursive(G).polynomial
            lhs = int(om.evaluate(w=0, x=2, y=1, z=0, t=2))
            rhs = 2**G.num_vertices * int(tutte_poly(A).evaluate(x=2, y=5))
            yield CheckResult(name, "tutte-spot", lhs == rhs, f"{lhs} vs {rhs}")
    A = AbstractGraph.from_ribbon(G)
    if A.n and A.is_cubic() and G.num_edges <= 9:
        got = int(pp.evaluate(t=3))
        want = edge_3_colouring_count(A)
        yield CheckResult(name, "edge-3-colourings", got == want, f"{got} vs {want}")


def _is_plane(G: RibbonGraph) -> bool:
    # every component embeds in the sphere
    return invariant_vector(G)[2] == 0


def run(name: str, H: RibbonGraph, suites=SUITES, plane: bool | None = None) -> list[CheckResult]:
    out: list[CheckResult] = []
    if "engines" in suites:
        out.extend(engine_checks(name, H))
    if "oracle" in suites:
        out.extend(oracle_checks(name, H))
    if "corollaries" in suites:
        out.extend(corollary_checks(name, H, plane))
    return out
