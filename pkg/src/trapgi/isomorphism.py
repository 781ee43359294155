"""Graph isomorphism at desk scale.

Three tools live here:

* :func:`color_refine` - 1-dimensional Weisfeiler-Leman refinement with
  canonical color ids, so equal ids mean equal signatures across graphs.
* :func:`is_isomorphic` - individualization-refinement backtracking on the
  disjoint union of the two graphs.
* :func:`brute_force_isomorphic` - plain backtracking over bijections, used
  as a test oracle. It shares no code with the refinement path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .graph import Graph

WITNESS_FOUND = "witness-found"
REFINEMENT_MISMATCH = "refinement-mismatch"
SEARCH_EXHAUSTED = "search-exhausted"

DEFAULT_BRUTE_FORCE_CAP = 10

Coloring = tuple[int, ...]


class SizeCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class IsoResult:
    """Verdict of an isomorphism test.

    ``mapping`` is the witness bijection (vertex of the first graph to vertex
    of the second) when ``isomorphic`` is true, else ``None``.
    """

    isomorphic: bool
    reason: str
    mapping: dict[int, int] | None = None

    def __bool__(self) -> bool:
        return self.isomorphic

    def mapping_lines(self) -> str:
        if self.mapping is None:
            return ""
        return "".join(f"{u} -> {v}\n" for u, v in sorted(self.mapping.items()))


def verify_mapping(g1: Graph, g2: Graph, mapping: dict[int, int]) -> bool:
    """Check bijectivity and edge preservation in both directions."""
    if g1.n != g2.n or len(mapping) != g1.n:
        return False
    if set(mapping) != set(g1.vertices) or set(mapping.values()) != set(g2.vertices):
        return False
    forward = all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges)
    inverse = {v: u for u, v in mapping.items()}
    backward = all(g1.has_edge(inverse[u], inverse[v]) for u, v in g2.edges)
    return forward and backward


# -- color refinement --------------------------------------------------------

def _canonical(values: Sequence[Hashable]) -> list[int]:
    ranks = {x: i for i, x in enumerate(sorted(set(values)))}
    return [ranks[x] for x in values]


def _refine(adj: Sequence[Sequence[int]], colors: Sequence[int]) -> list[int]:
    colors = _canonical(colors)
    classes = len(set(colors))
    for _ in range(len(colors)):
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))
        ]
        new = _canonical(signatures)
        new_classes = len(set(new))
        colors = new
        if new_classes == classes:
            break
        classes = new_classes
    return colors


def color_refine(g: Graph, initial: Sequence[Hashable] | None = None) -> Coloring:
    """Coarsest stable refinement of ``initial`` (uniform when omitted).

    Color ids are ranks of sorted class signatures, so they do not depend on
    vertex numbering.
    """
    if initial is None:
        initial = [0] * g.n
    if len(initial) != g.n:
        raise ValueError("initial coloring must color every vertex")
    adj = [sorted(g.neighbors(v)) for v in g.vertices]
    return tuple(_refine(adj, list(initial)))


def is_stable(g: Graph, coloring: Sequence[int]) -> bool:
    """True iff equally colored vertices see equal multisets of neighbor colors."""
    seen: dict[int, tuple[int, ...]] = {}
    for v in g.vertices:
        sig = tuple(sorted(coloring[w] for w in g.neighbors(v)))
        if seen.setdefault(coloring[v], sig) != sig:
            return False
    return True


# -- individualization-refinement ---------------------------------------------

class _PairSearch:
    def __init__(self, g1: Graph, g2: Graph):
        self.g1, self.g2 = g1, g2
        self.n = g1.n
        off = g1.n
        self.adj = [sorted(g1.neighbors(v)) for v in g1.vertices]
        self.adj += [[w + off for w in sorted(g2.neighbors(v))] for v in g2.vertices]

    def _balanced(self, colors: list[int]) -> bool:
        left: dict[int, int] = {}
        for v in range(self.n):
            left[colors[v]] = left.get(colors[v], 0) + 1
        right: dict[int, int] = {}
        for v in range(self.n, 2 * self.n):
            right[colors[v]] = right.get(colors[v], 0) + 1
        return left == right

    def run(self, colors: list[int]) -> dict[int, int] | None:
        colors = _refine(self.adj, colors)
        if not self._balanced(colors):
            return None
        cells: dict[int, list[int]] = {}
        for v in range(self.n):
            cells.setdefault(colors[v], []).append(v)
        if all(len(cell) == 1 for cell in cells.values()):
            where = {colors[w]: w - self.n for w in range(self.n, 2 * self.n)}
            mapping = {v: where[colors[v]] for v in range(self.n)}
            return mapping if verify_mapping(self.g1, self.g2, mapping) else None
        target = min((c for c, cell in cells.items() if len(cell) > 1),
                     key=lambda c: (len(cells[c]), c))
        v = cells[target][0]
        fresh = max(colors) + 1
        for w in range(self.n, 2 * self.n):
            if colors[w] != target:
                continue
            branch = list(colors)
            branch[v] = branch[w] = fresh
            found = self.run(branch)
            if found is not None:
                return found
        return None


def is_isomorphic(g1: Graph, g2: Graph) -> IsoResult:
    """Decide isomorphism by individualization-refinement.

    Target cells are the smallest non-singleton color classes (lowest color
    id on ties); the lowest first-graph vertex of the cell is individualized
    against every candidate of the second graph in id order. A returned
    mapping has been re-verified edge by edge.
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return IsoResult(False, REFINEMENT_MISMATCH)
    search = _PairSearch(g1, g2)
    start = _refine(search.adj, [0] * (2 * g1.n))
    if not search._balanced(start):
        return IsoResult(False, REFINEMENT_MISMATCH)
    mapping = search.run(start)
    if mapping is None:
        return IsoResult(False, SEARCH_EXHAUSTED)
    return IsoResult(True, WITNESS_FOUND, mapping)


# -- brute-force oracle --------------------------------------------------------

def brute_force_isomorphic(
    g1: Graph, g2: Graph, max_vertices: int | None = DEFAULT_BRUTE_FORCE_CAP
) -> IsoResult:
    """Exhaustive search over bijections, pruned by degree.

    Vertices of ``g1`` are assigned in id order; a partial assignment is
    abandoned as soon as it breaks adjacency with an earlier vertex. Pass
    ``max_vertices=None`` to lift the size cap.
    """
    if max_vertices is not None and max(g1.n, g2.n) > max_vertices:
        raise SizeCapExceeded(
            f"brute force limited to {max_vertices} vertices, got {max(g1.n, g2.n)}"
        )
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return IsoResult(False, SEARCH_EXHAUSTED)
    n = g1.n
    deg1 = [g1.degree(v) for v in range(n)]
    deg2 = [g2.degree(v) for v in range(n)]
    if sorted(deg1) != sorted(deg2):
        return IsoResult(False, SEARCH_EXHAUSTED)
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or deg2[w] != deg1[v]:
                continue
            if any(g1.has_edge(v, u) != g2.has_edge(w, mapping[u]) for u in range(v)):
                continue
            mapping[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            used[w] = False
            del mapping[v]
        return False

    if extend(0):
        result = dict(mapping)
        if not verify_mapping(g1, g2, result):
            raise AssertionError("brute force produced an invalid mapping")
        return IsoResult(True, WITNESS_FOUND, result)
    return IsoResult(False, SEARCH_EXHAUSTED)
