"""Finite strict partial orders and the gadget poset."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Sequence

from .graph import Graph
from .reduction import TripartiteGadget


class PosetFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Poset:
    """Strict order on ``0..n-1``: ``(x, y)`` in ``relation`` means x precedes y.

    The axioms are not enforced on construction; use :func:`verify_axioms`.
    """

    n: int
    relation: frozenset[tuple[int, int]] = frozenset()
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "relation", frozenset(self.relation))
        for x, y in self.relation:
            if not (0 <= x < self.n and 0 <= y < self.n):
                raise ValueError(f"pair ({x}, {y}) outside 0..{self.n - 1}")

    @cached_property
    def successors(self) -> tuple[frozenset[int], ...]:
        up: list[set[int]] = [set() for _ in range(self.n)]
        for x, y in self.relation:
            up[x].add(y)
        return tuple(frozenset(s) for s in up)

    def less(self, x: int, y: int) -> bool:
        return (x, y) in self.relation

    def comparable(self, x: int, y: int) -> bool:
        return (x, y) in self.relation or (y, x) in self.relation

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)


@dataclass
class AxiomReport:
    reflexive: list[int] = field(default_factory=list)
    antisymmetric: list[tuple[int, int]] = field(default_factory=list)
    transitive: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.reflexive or self.antisymmetric or self.transitive)


def build_gadget_poset(h: TripartiteGadget) -> Poset:
    """A below B everywhere; each C-vertex sits between its own two neighbors."""
    h.validate()
    rel = {(a, b) for a in h.side_a for b in h.side_b}
    for c in h.side_c:
        a, b = h.origin_edge[c]
        rel.add((a, c))
        rel.add((c, b))
    return Poset(h.graph.n, frozenset(rel), h.graph.labels)


def height(p: Poset) -> int:
    if p.n == 0:
        raise ValueError("height of the empty poset is undefined")
    sorter = TopologicalSorter({x: () for x in range(p.n)})
    for x, y in p.relation:
        sorter.add(y, x)
    try:
        order = list(sorter.static_order())
    except CycleError as exc:
        raise ValueError("relation has a cycle") from exc
    longest = [1] * p.n
    for x in order:
        for y in p.successors[x]:
            longest[y] = max(longest[y], longest[x] + 1)
    return max(longest)


def maximum_chains(p: Poset) -> list[tuple[int, ...]]:
    """All chains of length ``height(p)``, as tuples in increasing order."""
    h = height(p)
    chains: list[tuple[int, ...]] = []

    def walk(chain: tuple[int, ...]) -> None:
        if len(chain) == h:
            chains.append(chain)
            return
        for y in sorted(p.successors[chain[-1]]):
            walk(chain + (y,))

    for x in range(p.n):
        walk((x,))
    return chains


def comparability_graph(p: Poset) -> Graph:
    return Graph(p.n, frozenset(p.relation), p.labels)


def verify_axioms(p: Poset) -> AxiomReport:
    report = AxiomReport()
    for x, y in sorted(p.relation):
        if x == y:
            report.reflexive.append(x)
        elif x < y and (y, x) in p.relation:
            report.antisymmetric.append((x, y))
    for x, y in sorted(p.relation):
        for z in sorted(p.successors[y]):
            if (x, z) not in p.relation:
                report.transitive.append((x, y, z))
    return report


def intersect(posets: Sequence[Poset]) -> Poset:
    first = posets[0]
    rel = set(first.relation)
    for q in posets[1:]:
        if q.n != first.n:
            raise ValueError("posets live on different ground sets")
        rel &= q.relation
    return Poset(first.n, frozenset(rel), first.labels)


# -- serialization ---------------------------------------------------------------

def poset_to_text(p: Poset) -> str:
    lines = [str(p.n)]
    lines.extend(f"{x} < {y}" for x, y in sorted(p.relation))
    return "\n".join(lines) + "\n"


def poset_from_text(text: str) -> Poset:
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise PosetFormatError(f"line {lineno}: expected element count") from None
            continue
        parts = line.split("<")
        try:
            x, y = (int(part) for part in parts)
        except ValueError:
            raise PosetFormatError(f"line {lineno}: expected 'x < y', got {line!r}") from None
        pairs.append((x, y))
    if n is None:
        raise PosetFormatError("missing element count")
    return Poset(n, frozenset(pairs))


def from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    return Poset(n, frozenset(pairs))
