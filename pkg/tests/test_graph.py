from __future__ import annotations

import pytest
from hypothesis import given, settings

from helpers import complete, complete_bipartite, cycle, graphs, path, star
from trapgi.graph import (
    BipartiteGraph,
    EdgeListError,
    Graph,
    NotBipartiteError,
    bipartition,
    complement,
    degree_sequence,
    from_edge_list,
    from_edges,
    is_connected,
    to_edge_list,
)
from trapgi.isomorphism import brute_force_isomorphic


def has_odd_closed_walk(g: Graph) -> bool:
    """Oracle: search (vertex, parity) states for an odd closed walk."""
    for start in g.vertices:
        seen = {(start, 0)}
        stack = [(start, 0)]
        while stack:
            v, parity = stack.pop()
            for w in g.neighbors(v):
                state = (w, 1 - parity)
                if state == (start, 1):
                    return True
                if state not in seen:
                    seen.add(state)
                    stack.append(state)
    return False


# -- parsing -----------------------------------------------------------------------------

def test_parse_path():
    g = from_edge_list("3\n0 1\n1 2")
    assert g.n == 3
    assert g.sorted_edges() == [(0, 1), (1, 2)]


def test_parse_edgeless():
    g = from_edge_list("4\n")
    assert g.n == 4 and g.edge_count == 0


def test_parse_self_loop_rejected():
    with pytest.raises(EdgeListError, match="self-loop"):
        from_edge_list("2\n0 0")


def test_parse_comments_blank_lines_and_duplicates():
    text = "# header comment\n\n3\n# edge comment\n0 1\n1 0\n\n1 2\n"
    assert from_edge_list(text).sorted_edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text", ["3\n0 5", "3\n0 x", "3\n0 1 2", "3\n-1 2"])
def test_parse_malformed(text):
    with pytest.raises(EdgeListError):
        from_edge_list(text)


def test_parse_without_header_infers_count():
    assert from_edge_list("0 1\n1 4").n == 5


@given(graphs())
def test_edge_list_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 2)}))


def test_adjacency_symmetric():
    g = from_edges(4, [(2, 0), (1, 3)])
    assert g.edges == {(0, 2), (1, 3)}
    for u, v in g.edges:
        assert v in g.neighbors(u) and u in g.neighbors(v)


# -- complement --------------------------------------------------------------------------

def test_complement_of_complete_is_edgeless():
    assert complement(complete(4)) == Graph(4)


def test_complement_of_edgeless_is_triangle():
    assert complement(Graph(3)) == complete(3)


def test_c5_is_self_complementary():
    assert brute_force_isomorphic(complement(cycle(5)), cycle(5)).isomorphic


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs())
def test_complement_edge_count(g):
    assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


# -- connectivity --------------------------------------------------------------------------

@pytest.mark.parametrize(
    "g, expected",
    [
        (path(3), True),
        (from_edges(4, [(0, 1), (2, 3)]), False),
        (Graph(1), True),
        (Graph(0), True),
    ],
)
def test_is_connected(g, expected):
    assert is_connected(g) is expected


# -- bipartition ----------------------------------------------------------------------------

def test_bipartition_c4():
    b = bipartition(cycle(4))
    assert (b.side_a, b.side_b) == ((0, 2), (1, 3))


def test_bipartition_k3_witness():
    with pytest.raises(NotBipartiteError) as info:
        bipartition(complete(3))
    assert sorted(info.value.cycle) == [0, 1, 2]


def test_bipartition_c6_sides():
    b = bipartition(cycle(6))
    assert (len(b.side_a), len(b.side_b)) == (3, 3)


def test_bipartition_lowest_vertex_in_side_a():
    g = from_edges(4, [(3, 0), (3, 1), (2, 1)])
    assert 0 in bipartition(g).side_a


@settings(max_examples=300)
@given(graphs(max_n=8))
def test_bipartition_iff_no_odd_cycle(g):
    odd = has_odd_closed_walk(g)
    if odd:
        with pytest.raises(NotBipartiteError) as info:
            bipartition(g)
        cyc = info.value.cycle
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
        assert all(g.has_edge(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc)))
    else:
        b = bipartition(g)
        a = set(b.side_a)
        assert all((u in a) != (v in a) for u, v in g.edges)


def test_bipartite_graph_validates_sides():
    with pytest.raises(ValueError):
        BipartiteGraph(path(3), (0, 1), (2,))
    with pytest.raises(ValueError):
        BipartiteGraph(path(3), (0,), (1,))


# -- degrees / helpers ------------------------------------------------------------------------

def test_degree_sequences():
    assert degree_sequence(complete(3)) == [2, 2, 2]
    assert degree_sequence(star(3)) == [1, 1, 1, 3]


def test_relabel_and_induced():
    g = path(3).relabel([2, 0, 1])
    assert g.edges == {(0, 2), (0, 1)}
    sub = complete_bipartite(3, 3).induced([0, 1, 3])
    assert sub.n == 3 and sub.edges == {(0, 2), (1, 2)}
    with pytest.raises(ValueError):
        path(3).relabel([0, 0, 1])
