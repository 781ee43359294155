"""Two interval orders whose intersection is the gadget poset.

Coordinates live on an integer grid with slot width ``K = m + 1``::

    P1:  a_1 < a_2 < ... < a_s < 0 < b_1 < ... < b_t
    P2:  a_s < ... < a_1 < 0 < b_t < ... < b_1

A- and B-vertices are points on multiples of ``K``. A C-vertex with
neighbors ``a_i``, ``b_j`` starts just right of ``a_i`` and ends just left of
``b_j`` in both orders, offset by its rank inside the group sharing that
neighbor, so every C-interval straddles the origin.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from .poset import Poset, build_gadget_poset, intersect
from .reduction import TripartiteGadget

Interval = tuple[int, int]

ORIGIN = 0


class RealizerError(ValueError):
    pass


@dataclass(frozen=True)
class IntervalRepresentation:
    index: int
    intervals: tuple[Interval, ...]
    origin: int = ORIGIN

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple((int(l), int(r)) for l, r in self.intervals))
        for x, (l, r) in enumerate(self.intervals):
            if l > r:
                raise ValueError(f"interval of element {x} has l > r: [{l}, {r}]")

    def left(self, x: int) -> int:
        return self.intervals[x][0]

    def right(self, x: int) -> int:
        return self.intervals[x][1]

    def precedes(self, x: int, y: int) -> bool:
        return self.intervals[x][1] < self.intervals[y][0]


@dataclass(frozen=True)
class Realizer:
    rep1: IntervalRepresentation
    rep2: IntervalRepresentation
    target: Poset
    sides: tuple[str, ...] | None = None


@dataclass
class RealizerReport:
    missing: list[tuple[int, int]] = field(default_factory=list)
    spurious: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.spurious)


def _group_ranks(h: TripartiteGadget) -> tuple[dict[int, int], dict[int, int]]:
    # within an A-group order by b-index, within a B-group by a-index
    by_a: dict[int, list[int]] = {}
    by_b: dict[int, list[int]] = {}
    for c in h.side_c:
        a, b = h.origin_edge[c]
        by_a.setdefault(a, []).append(c)
        by_b.setdefault(b, []).append(c)
    rank_a: dict[int, int] = {}
    for group in by_a.values():
        group.sort(key=lambda c: h.b_index(h.origin_edge[c][1]))
        rank_a.update((c, k) for k, c in enumerate(group, start=1))
    rank_b: dict[int, int] = {}
    for group in by_b.values():
        group.sort(key=lambda c: h.a_index(h.origin_edge[c][0]))
        rank_b.update((c, k) for k, c in enumerate(group, start=1))
    return rank_a, rank_b


def build_realizer(h: TripartiteGadget, p: Poset | None = None) -> Realizer:
    expected = build_gadget_poset(h)
    if p is None:
        p = expected
    elif p.n != expected.n or p.relation != expected.relation:
        raise RealizerError("poset is not the gadget poset of the given gadget")
    s, t, m = h.s, h.t, h.m
    k = m + 1
    n = h.graph.n
    one: list[Interval] = [(0, 0)] * n
    two: list[Interval] = [(0, 0)] * n
    for i, a in enumerate(h.side_a, start=1):
        one[a] = ((i - s - 1) * k,) * 2
        two[a] = (-i * k,) * 2
    for j, b in enumerate(h.side_b, start=1):
        one[b] = (j * k,) * 2
        two[b] = ((t - j + 1) * k,) * 2
    rank_a, rank_b = _group_ranks(h)
    for c in h.side_c:
        a, b = h.origin_edge[c]
        one[c] = (one[a][0] + rank_a[c], one[b][0] - rank_b[c])
        two[c] = (two[a][0] + rank_a[c], two[b][0] - rank_b[c])
    sides = tuple(h.side_of(v) for v in range(n))
    return Realizer(IntervalRepresentation(1, tuple(one)), IntervalRepresentation(2, tuple(two)), p, sides)


def interval_order_relation(rep: IntervalRepresentation) -> Poset:
    n = len(rep.intervals)
    pairs = frozenset(
        (x, y) for x in range(n) for y in range(n) if x != y and rep.precedes(x, y)
    )
    return Poset(n, pairs)


def verify_realizes(r: Realizer) -> RealizerReport:
    report = RealizerReport()
    n = r.target.n
    if len(r.rep1.intervals) != n or len(r.rep2.intervals) != n:
        raise RealizerError("representations and target have different ground sets")
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            both = r.rep1.precedes(x, y) and r.rep2.precedes(x, y)
            wanted = r.target.less(x, y)
            if wanted and not both:
                report.missing.append((x, y))
            elif both and not wanted:
                report.spurious.append((x, y))
    return report


def realized_order(r: Realizer) -> Poset:
    return intersect([interval_order_relation(r.rep1), interval_order_relation(r.rep2)])


def placement_violations(r: Realizer, h: TripartiteGadget) -> list[str]:
    """Check every point-ordering and endpoint-placement chain on ``r``.

    Boundary convention: the missing neighbors ``a_{s+1}``, ``b_0`` (order 1)
    and ``a_0``, ``b_{t+1}`` (order 2) sit at the origin.
    """
    out: list[str] = []
    o = r.rep1.origin
    s, t = h.s, h.t

    def point(rep: IntervalRepresentation, v: int) -> int:
        l, rr = rep.intervals[v]
        if l != rr:
            out.append(f"order {rep.index}: element {v} is not a point")
        return l

    p1a = [point(r.rep1, a) for a in h.side_a]
    p1b = [point(r.rep1, b) for b in h.side_b]
    p2a = [point(r.rep2, a) for a in h.side_a]
    p2b = [point(r.rep2, b) for b in h.side_b]

    if not _strictly_increasing(p1a + [o] + p1b):
        out.append("order 1: points not in order a_1 < ... < a_s < o < b_1 < ... < b_t")
    if not _strictly_increasing(p2a[::-1] + [o] + p2b[::-1]):
        out.append("order 2: points not in order a_s < ... < a_1 < o < b_t < ... < b_1")

    def p1_a(i: int) -> int:
        return o if i == s + 1 else p1a[i - 1]

    def p1_b(j: int) -> int:
        return o if j == 0 else p1b[j - 1]

    def p2_a(i: int) -> int:
        return o if i == 0 else p2a[i - 1]

    def p2_b(j: int) -> int:
        return o if j == t + 1 else p2b[j - 1]

    for c in h.side_c:
        a, b = h.origin_edge[c]
        i, j = h.a_index(a), h.b_index(b)
        l1, r1 = r.rep1.intervals[c]
        l2, r2 = r.rep2.intervals[c]
        chain1 = [p1_a(i), l1, p1_a(i + 1), o, p1_b(j - 1), r1, p1_b(j)]
        chain2 = [p2_a(i), l2, p2_a(i - 1), o, p2_b(j + 1), r2, p2_b(j)]
        for idx, x in ((1, chain1), (2, chain2)):
            if not (x[0] < x[1] < x[2] <= x[3] <= x[4] < x[5] < x[6]):
                out.append(f"order {idx}: placement chain fails for element {c}: {x}")
        if not (l1 < o < r1 and l2 < o < r2):
            out.append(f"element {c}: interval does not contain the origin strictly")

    for rep in (r.rep1, r.rep2):
        coords = [rep.intervals[v][0] for v in h.side_a + h.side_b]
        for c in h.side_c:
            coords.extend(rep.intervals[c])
        coords.append(o)
        if len(set(coords)) != len(coords):
            out.append(f"order {rep.index}: endpoint coordinates are not distinct")
    return out


def _strictly_increasing(xs: Sequence[int]) -> bool:
    return all(x < y for x, y in zip(xs, xs[1:]))


# -- serialization ---------------------------------------------------------------

def _elements(intervals1: Sequence[Interval], intervals2: Sequence[Interval],
              labels: Sequence[str], sides: Sequence[str] | None) -> list[dict[str, Any]]:
    out = []
    for v, (one, two) in enumerate(zip(intervals1, intervals2)):
        out.append({
            "id": v,
            "label": labels[v],
            "side": sides[v] if sides is not None else None,
            "interval1": list(one),
            "interval2": list(two),
        })
    return out


def realizer_to_dict(r: Realizer) -> dict[str, Any]:
    labels = [r.target.label(v) for v in range(r.target.n)]
    return {
        "origin": r.rep1.origin,
        "elements": _elements(r.rep1.intervals, r.rep2.intervals, labels, r.sides),
        "relation": [list(pair) for pair in sorted(r.target.relation)],
    }


def realizer_to_json(r: Realizer) -> str:
    return json.dumps({"realizer": realizer_to_dict(r)}, indent=2) + "\n"


def realizer_from_dict(data: dict[str, Any]) -> Realizer:
    elements = sorted(data["elements"], key=lambda e: e["id"])
    if [e["id"] for e in elements] != list(range(len(elements))):
        raise RealizerError("element ids must be 0..n-1")
    origin = int(data.get("origin", ORIGIN))
    if origin != ORIGIN:
        raise RealizerError("origin must be 0")
    n = len(elements)
    labels = tuple(str(e.get("label", e["id"])) for e in elements)
    sides = tuple(e["side"] for e in elements) if all(e.get("side") for e in elements) else None
    target = Poset(n, frozenset((int(x), int(y)) for x, y in data.get("relation", [])), labels)
    rep1 = IntervalRepresentation(1, tuple(tuple(e["interval1"]) for e in elements))
    rep2 = IntervalRepresentation(2, tuple(tuple(e["interval2"]) for e in elements))
    return Realizer(rep1, rep2, target, sides)


def realizer_from_json(text: str) -> Realizer:
    data = json.loads(text)
    return realizer_from_dict(data.get("realizer", data))


def realizer_to_text(r: Realizer) -> str:
    lines = ["# id label side I1 I2"]
    for v in range(r.target.n):
        side = r.sides[v] if r.sides is not None else "?"
        l1, r1 = r.rep1.intervals[v]
        l2, r2 = r.rep2.intervals[v]
        lines.append(f"{v} {r.target.label(v)} {side} [{l1},{r1}] [{l2},{r2}]")
    return "\n".join(lines) + "\n"
