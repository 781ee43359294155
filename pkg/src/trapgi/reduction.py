"""The bipartite-to-gadget reduction and its inverse.

From a connected bipartite graph ``G`` with sides ``A``, ``B`` (both of size
at least 3) the gadget ``H`` subdivides every edge ``ab`` with a new vertex
``c`` and then completes ``A x B``. Numbering in ``H``: A-vertices are
``0..s-1``, B-vertices ``s..s+t-1``, and subdivision vertices follow, sorted
by the (a-index, b-index) of the edge they replaced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import (
    BipartiteGraph,
    Graph,
    NotBipartiteError,
    bipartition,
    from_edge_list,
    is_connected,
    to_edge_list,
)
from .isomorphism import IsoResult, is_isomorphic

MIN_SIDE = 3


class ReductionError(ValueError):
    """A precondition of the reduction does not hold for the input graph."""


class GadgetError(ValueError):
    """A graph does not have the shape of a reduction gadget."""


@dataclass(frozen=True)
class TripartiteGadget:
    graph: Graph
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    side_c: tuple[int, ...]
    origin_edge: Mapping[int, tuple[int, int]]

    @property
    def s(self) -> int:
        return len(self.side_a)

    @property
    def t(self) -> int:
        return len(self.side_b)

    @property
    def m(self) -> int:
        return len(self.side_c)

    def a_index(self, v: int) -> int:
        """1-based position of ``v`` in side A."""
        return self.side_a.index(v) + 1

    def b_index(self, v: int) -> int:
        return self.side_b.index(v) + 1

    def side_of(self, v: int) -> str:
        if v in self.side_a:
            return "A"
        if v in self.side_b:
            return "B"
        return "C"

    def validate(self) -> None:
        """Raise :class:`GadgetError` unless every gadget invariant holds."""
        h = self.graph
        a, b, c = set(self.side_a), set(self.side_b), set(self.side_c)
        if len(a) + len(b) + len(c) != h.n or (a | b | c) != set(h.vertices):
            raise GadgetError("sides do not partition the vertex set")
        if len(a) < MIN_SIDE or len(b) < MIN_SIDE:
            raise GadgetError(f"side smaller than {MIN_SIDE}")
        if not c:
            raise GadgetError("gadget has no subdivision vertices")
        if set(self.origin_edge) != c:
            raise GadgetError("origin map must cover exactly side C")
        for u in a:
            if b - h.neighbors(u) or h.neighbors(u) & a:
                raise GadgetError("subgraph on A and B is not complete bipartite")
        for u in b:
            if h.neighbors(u) & b:
                raise GadgetError("subgraph on A and B is not complete bipartite")
        seen: dict[tuple[int, int], int] = {}
        for x in self.side_c:
            nbrs = h.neighbors(x)
            if len(nbrs) != 2:
                raise GadgetError(f"subdivision vertex {x} has degree {len(nbrs)}")
            na, nb = nbrs & a, nbrs & b
            if len(na) != 1 or len(nb) != 1:
                raise GadgetError(
                    f"subdivision vertex {x} is not adjacent to one A-vertex and one B-vertex"
                )
            pair = (next(iter(na)), next(iter(nb)))
            if self.origin_edge[x] != pair:
                raise GadgetError(f"origin of {x} does not match its neighbors")
            if pair in seen:
                raise GadgetError(
                    f"subdivision vertices {seen[pair]} and {x} share both neighbors"
                )
            seen[pair] = x


def reduce(g: BipartiteGraph) -> TripartiteGadget:
    if not is_connected(g.graph):
        raise ReductionError("input not connected")
    if g.s < MIN_SIDE or g.t < MIN_SIDE:
        raise ReductionError(f"side smaller than {MIN_SIDE} (|A| = {g.s}, |B| = {g.t})")
    s, t = g.s, g.t
    a_pos = {v: i for i, v in enumerate(g.side_a)}
    b_pos = {v: j for j, v in enumerate(g.side_b)}
    pairs = sorted(
        (a_pos[u], b_pos[v]) if u in a_pos else (a_pos[v], b_pos[u]) for u, v in g.graph.edges
    )
    m = len(pairs)
    edges = {(i, s + j) for i in range(s) for j in range(t)}
    origin: dict[int, tuple[int, int]] = {}
    for k, (i, j) in enumerate(pairs):
        c = s + t + k
        edges.add((i, c))
        edges.add((s + j, c))
        origin[c] = (i, s + j)
    labels = [f"a{i + 1}" for i in range(s)] + [f"b{j + 1}" for j in range(t)]
    labels += [f"c{k + 1}" for k in range(m)]
    h = Graph(s + t + m, frozenset(edges), tuple(labels))
    return TripartiteGadget(
        h,
        tuple(range(s)),
        tuple(range(s, s + t)),
        tuple(range(s + t, s + t + m)),
        origin,
    )


def identify_gadget(h: Graph) -> TripartiteGadget:
    """Recover the tripartition of ``h`` from degrees alone.

    Degree-2 vertices form C and all others form A and B; side A is the
    side holding the lowest-numbered non-C vertex.
    """
    side_c = tuple(v for v in h.vertices if h.degree(v) == 2)
    rest = [v for v in h.vertices if h.degree(v) != 2]
    if not rest:
        raise GadgetError("every vertex has degree 2; no A or B vertices")
    low = [v for v in rest if h.degree(v) < 3]
    if low:
        raise GadgetError(f"vertex {low[0]} outside C has degree {h.degree(low[0])} < 3")
    if not side_c:
        raise GadgetError("no degree-2 vertices; gadget would have no subdivision vertices")
    core = h.induced(rest)
    try:
        split = bipartition(core)
    except NotBipartiteError:
        raise GadgetError("subgraph on A and B is not bipartite") from None
    side_a = tuple(rest[i] for i in split.side_a)
    side_b = tuple(rest[i] for i in split.side_b)
    if core.edge_count != len(side_a) * len(side_b):
        raise GadgetError("subgraph on A and B is not complete bipartite")
    a = set(side_a)
    origin: dict[int, tuple[int, int]] = {}
    for c in side_c:
        x, y = sorted(h.neighbors(c))
        if (x in a) == (y in a) or x not in rest or y not in rest:
            raise GadgetError(
                f"subdivision vertex {c} is not adjacent to one A-vertex and one B-vertex"
            )
        origin[c] = (x, y) if x in a else (y, x)
    gadget = TripartiteGadget(h, side_a, side_b, side_c, origin)
    gadget.validate()
    return gadget


def recover(h: Graph) -> BipartiteGraph:
    """Undo the reduction: drop A-B edges and contract each C-vertex to an edge.

    The result is renumbered densely over the A and B vertices of ``h`` in
    ascending order and keeps their labels.
    """
    gadget = identify_gadget(h)
    keep = sorted(gadget.side_a + gadget.side_b)
    index = {v: i for i, v in enumerate(keep)}
    edges = frozenset((index[a], index[b]) for a, b in gadget.origin_edge.values())
    g = Graph(len(keep), edges, tuple(h.label(v) for v in keep))
    if not is_connected(g):
        raise GadgetError("recovered graph is not connected")
    side_a = tuple(index[v] for v in gadget.side_a)
    side_b = tuple(index[v] for v in gadget.side_b)
    return BipartiteGraph(g, side_a, side_b)


@dataclass(frozen=True)
class IsoAgreement:
    source: IsoResult
    gadget: IsoResult

    @property
    def agree(self) -> bool:
        return self.source.isomorphic == self.gadget.isomorphic


def reduction_preserves_iso(g1: BipartiteGraph, g2: BipartiteGraph) -> IsoAgreement:
    h1, h2 = reduce(g1), reduce(g2)
    return IsoAgreement(is_isomorphic(g1.graph, g2.graph), is_isomorphic(h1.graph, h2.graph))


# -- serialization ---------------------------------------------------------------

def gadget_to_text(gadget: TripartiteGadget) -> str:
    out = [to_edge_list(gadget.graph)]
    out.append("#A: " + " ".join(map(str, gadget.side_a)) + "\n")
    out.append("#B: " + " ".join(map(str, gadget.side_b)) + "\n")
    out.append("#C: " + " ".join(map(str, gadget.side_c)) + "\n")
    for c in gadget.side_c:
        a, b = gadget.origin_edge[c]
        out.append(f"#origin: {c} {a} {b}\n")
    return "".join(out)


def gadget_from_text(text: str) -> TripartiteGadget:
    """Parse a gadget file; without a tripartition trailer, identify it by degrees."""
    g = from_edge_list(text)
    sides: dict[str, tuple[int, ...]] = {}
    origin: dict[int, tuple[int, int]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        for key in ("A", "B", "C"):
            if line.startswith(f"#{key}:"):
                sides[key] = tuple(int(x) for x in line[3:].split())
        if line.startswith("#origin:"):
            c, a, b = (int(x) for x in line[len("#origin:"):].split())
            origin[c] = (a, b)
    if not sides:
        gadget = identify_gadget(g)
    else:
        if set(sides) != {"A", "B", "C"}:
            raise GadgetError("tripartition trailer must list #A, #B and #C")
        gadget = TripartiteGadget(g, sides["A"], sides["B"], sides["C"], origin)
        gadget.validate()
    labels = [""] * g.n
    for key, side in (("a", gadget.side_a), ("b", gadget.side_b), ("c", gadget.side_c)):
        for k, v in enumerate(side, start=1):
            labels[v] = f"{key}{k}"
    gadget = TripartiteGadget(
        Graph(g.n, g.edges, tuple(labels)),
        gadget.side_a,
        gadget.side_b,
        gadget.side_c,
        gadget.origin_edge,
    )
    return gadget
