"""Exact planar predicates for convex polygons with integer corners.

Used as an independent check of the combinatorial trapezoid predicate: it
works on actual corner coordinates (L1 at y = 1, L2 at y = 0) and knows
nothing about interval separation.
"""

from __future__ import annotations

Point = tuple[int, int]


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p)."""
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def on_segment(p: Point, q: Point, r: Point) -> bool:
    """True if r lies on the closed segment pq."""
    return (
        orient(p, q, r) == 0
        and min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
        and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    )


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Closed segments, zero-length segments allowed."""
    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        on_segment(p1, p2, q1)
        or on_segment(p1, p2, q2)
        or on_segment(q1, q2, p1)
        or on_segment(q1, q2, p2)
    )


def _edges(poly: list[Point]) -> list[tuple[Point, Point]]:
    return [(poly[k], poly[(k + 1) % len(poly)]) for k in range(len(poly))]


def twice_area(poly: list[Point]) -> int:
    return abs(sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in _edges(poly)))


def contains(poly: list[Point], pt: Point) -> bool:
    """Closed convex polygon (possibly degenerate) contains ``pt``."""
    if twice_area(poly) == 0:
        return any(on_segment(p, q, pt) for p, q in _edges(poly))
    signs = {orient(p, q, pt) for p, q in _edges(poly) if p != q}
    return not (1 in signs and -1 in signs)


def convex_polygons_intersect(first: list[Point], second: list[Point]) -> bool:
    if any(segments_intersect(p1, p2, q1, q2) for p1, p2 in _edges(first) for q1, q2 in _edges(second)):
        return True
    return any(contains(second, p) for p in first) or any(contains(first, q) for q in second)


def trapezoid_corners(top: tuple[int, int], bottom: tuple[int, int]) -> list[Point]:
    return [(top[0], 1), (top[1], 1), (bottom[1], 0), (bottom[0], 0)]
