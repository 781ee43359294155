"""Named graphs and hypothesis strategies shared by the tests."""

from __future__ import annotations

from hypothesis import strategies as st

from trapgi.graph import Graph, from_edges


# -- named graphs --------------------------------------------------------------------

def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(s: int, t: int) -> Graph:
    return from_edges(s + t, [(a, s + b) for a in range(s) for b in range(t)])


def star(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, k) for k in range(1, leaves + 1)])


def g_star_graph() -> Graph:
    # a1..a3 = 0..2, b1..b3 = 3..5; edges a1b1 a1b2 a2b2 a2b3 a3b3
    return from_edges(6, [(0, 3), (0, 4), (1, 4), (1, 5), (2, 5)])


# -- hypothesis strategies -------------------------------------------------------------

@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep))
