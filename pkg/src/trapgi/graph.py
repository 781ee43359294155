"""Undirected simple graphs on dense integer vertex ids.

Graphs are immutable. Vertices are ``0..n-1`` with an optional label table;
edges are stored as normalized ``(u, v)`` pairs with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class EdgeListError(ValueError):
    """Raised when an edge-list document cannot be parsed."""


class NotBipartiteError(ValueError):
    """Raised by :func:`bipartition` when the graph contains an odd cycle.

    ``cycle`` holds one witness odd cycle as a vertex list (closing edge implied).
    """

    def __init__(self, cycle: list[int]):
        self.cycle = cycle
        super().__init__(f"graph is not bipartite: odd cycle {cycle}")


def _normalize(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            normalized.add(_normalize(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise ValueError("label table length must equal vertex count")
            object.__setattr__(self, "labels", labels)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _normalize(u, v) in self.edges

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertex set")
        labels = None
        if self.labels is not None:
            new_labels = [""] * self.n
            for v, w in enumerate(perm):
                new_labels[w] = self.labels[v]
            labels = tuple(new_labels)
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges), labels)

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on ``keep``, renumbered densely in ascending id order."""
        order = sorted(set(keep))
        index = {v: i for i, v in enumerate(order)}
        edges = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(order), edges, tuple(self.label(v) for v in order))


@dataclass(frozen=True)
class BipartiteGraph:
    graph: Graph
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    def __post_init__(self) -> None:
        a, b = set(self.side_a), set(self.side_b)
        if a & b or (a | b) != set(self.graph.vertices):
            raise ValueError("sides must partition the vertex set")
        if len(a) != len(self.side_a) or len(b) != len(self.side_b):
            raise ValueError("duplicate vertex in a side")
        for u, v in self.graph.edges:
            if (u in a) == (v in a):
                raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")

    @property
    def s(self) -> int:
        return len(self.side_a)

    @property
    def t(self) -> int:
        return len(self.side_b)


# -- construction / serialization -------------------------------------------

def from_edges(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Graph:
    return Graph(n, frozenset(edges), tuple(labels) if labels is not None else None)


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list format.

    The first non-comment line is the vertex count; each further line is
    ``u v``. Lines starting with ``#`` and blank lines are ignored. If the
    first data line already holds two tokens there is no header and the
    vertex count is ``max id + 1``.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            values = [int(tok) for tok in tokens]
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer token in {line!r}") from None
        if first and len(values) == 1:
            n = values[0]
            if n < 0:
                raise EdgeListError(f"line {lineno}: negative vertex count")
            first = False
            continue
        first = False
        if len(values) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = values
        if u < 0 or v < 0:
            raise EdgeListError(f"line {lineno}: negative vertex id")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at vertex {u}")
        if n is not None and (u >= n or v >= n):
            raise EdgeListError(f"line {lineno}: vertex not declared in header (n = {n})")
        edges.append((u, v))
    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1
    return Graph(n, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# -- basic operations --------------------------------------------------------

def complement(g: Graph) -> Graph:
    edges = frozenset(
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in g.edges
    )
    return Graph(g.n, edges, g.labels)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degree(v) for v in g.vertices)


def bipartition(g: Graph) -> BipartiteGraph:
    """2-color ``g`` by breadth-first layering.

    Components are processed in order of their lowest vertex, and that
    vertex is always placed in side A. Raises :class:`NotBipartiteError`
    carrying an odd cycle otherwise.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in g.vertices:
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(g.neighbors(v)):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    raise NotBipartiteError(_odd_cycle(v, w, parent, depth))
    side_a = tuple(v for v in g.vertices if color[v] == 0)
    side_b = tuple(v for v in g.vertices if color[v] == 1)
    return BipartiteGraph(g, side_a, side_b)


def _odd_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> list[int]:
    # u and w are adjacent with equal color; join their BFS-tree paths.
    left, right = [u], [w]
    x, y = u, w
    while depth[x] > depth[y]:
        x = parent[x]
        left.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        right.append(y)
    while x != y:
        x, y = parent[x], parent[y]
        left.append(x)
        right.append(y)
    right.pop()
    # lca .. u, then w .. (child of lca)
    return left[::-1] + right
