import pytest
from hypothesis import strategies as st

from ribbon_omega.catalog import CATALOG, random_instance
from ribbon_omega.ribbon import RibbonGraph


@st.composite
def ribbon_graphs(draw, max_vertices=3, max_edges=4, singular=True):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_edges))
    seed = draw(st.integers(0, 10**6))
    p_sing = draw(st.sampled_from((0.0, 0.0, 0.3))) if singular else 0.0
    return random_instance(n, m, seed, p_singular=p_sing)


def faces_by_permutation(G: RibbonGraph) -> int:
    """Boundary count from the orientation double cover.

    Lifted darts (d, s): the rotation acts as succ on sheet +1 and pred on
    sheet -1; the edge map switches sheet across twisted edges.  Every
    boundary circle lifts to two cycles of rotation∘edge-map.
    """
    def rot(d, s):
        return (G.succ(d) if s > 0 else G.pred(d), s)

    def across(d, s):
        return (G.other(d), -s if G.twisted(G.edge_of(d)) else s)

    seen = set()
    cycles = 0
    for d in G.darts():
        for s in (1, -1):
            if (d, s) in seen:
                continue
            cycles += 1
            cur = (d, s)
            while cur not in seen:
                seen.add(cur)
                cur = rot(*across(*cur))
    return cycles // 2 + len(G.isolated_vertices())


@pytest.fixture
def catalog():
    return CATALOG
