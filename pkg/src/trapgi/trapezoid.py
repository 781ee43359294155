"""Trapezoids between two horizontal lines and their intersection graphs.

A trapezoid is a pair of closed intervals: ``top`` on L1 and ``bottom`` on
L2. Either may be a single point, giving triangles, segments and points.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Sequence
from xml.sax.saxutils import escape

from .graph import Graph
from .realizer import Realizer, RealizerError, verify_realizes

Interval = tuple[int, int]


@dataclass(frozen=True)
class Trapezoid:
    top: Interval
    bottom: Interval

    def __post_init__(self) -> None:
        for name in ("top", "bottom"):
            l, r = getattr(self, name)
            if l > r:
                raise ValueError(f"{name} interval has l > r: [{l}, {r}]")

    @property
    def is_segment(self) -> bool:
        return self.top[0] == self.top[1] and self.bottom[0] == self.bottom[1]


@dataclass(frozen=True)
class TrapezoidRepresentation:
    trapezoids: tuple[Trapezoid, ...]
    labels: tuple[str, ...] | None = None
    sides: tuple[str, ...] | None = None

    def __len__(self) -> int:
        return len(self.trapezoids)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def _left_of(t1: Trapezoid, t2: Trapezoid) -> bool:
    return t1.top[1] < t2.top[0] and t1.bottom[1] < t2.bottom[0]


def trapezoids_intersect(t1: Trapezoid, t2: Trapezoid) -> bool:
    """Closed trapezoids are disjoint iff one lies strictly left of the other on both lines."""
    return not (_left_of(t1, t2) or _left_of(t2, t1))


def from_realizer(r: Realizer) -> TrapezoidRepresentation:
    report = verify_realizes(r)
    if not report.ok:
        raise RealizerError(
            f"realizer is invalid: {len(report.missing)} missing, {len(report.spurious)} spurious pairs"
        )
    traps = tuple(Trapezoid(one, two) for one, two in zip(r.rep1.intervals, r.rep2.intervals))
    labels = tuple(r.target.label(v) for v in range(r.target.n))
    return TrapezoidRepresentation(traps, labels, r.sides)


def intersection_graph(t: TrapezoidRepresentation) -> Graph:
    traps = t.trapezoids
    edges = frozenset(
        (u, v)
        for u in range(len(traps))
        for v in range(u + 1, len(traps))
        if trapezoids_intersect(traps[u], traps[v])
    )
    return Graph(len(traps), edges, t.labels)


# -- serialization ---------------------------------------------------------------

def representation_to_json(t: TrapezoidRepresentation) -> str:
    elements = []
    for v, trap in enumerate(t.trapezoids):
        elements.append({
            "id": v,
            "label": t.label(v),
            "side": t.sides[v] if t.sides is not None else None,
            "interval1": list(trap.top),
            "interval2": list(trap.bottom),
        })
    return json.dumps({"trapezoid": {"origin": 0, "elements": elements}}, indent=2) + "\n"


def representation_from_dict(data: dict[str, Any]) -> TrapezoidRepresentation:
    elements = sorted(data["elements"], key=lambda e: e["id"])
    traps = tuple(Trapezoid(tuple(e["interval1"]), tuple(e["interval2"])) for e in elements)
    labels = tuple(str(e.get("label", e["id"])) for e in elements)
    sides = tuple(e["side"] for e in elements) if all(e.get("side") for e in elements) else None
    return TrapezoidRepresentation(traps, labels, sides)


def representation_from_json(text: str) -> TrapezoidRepresentation:
    data = json.loads(text)
    return representation_from_dict(data.get("trapezoid", data))


# -- SVG ---------------------------------------------------------------------------

_FILL = {"A": "#1f77b4", "B": "#d62728", "C": "#7f7f7f"}


@dataclass(frozen=True)
class SvgOptions:
    width: int = 1000
    height: int = 400
    labels: bool = True
    margin: int = 40


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(t: TrapezoidRepresentation, options: SvgOptions | None = None) -> str:
    """Render L1 above L2, one shape per vertex, with the origin marked.

    Vertices degenerate on both lines become ``<line class="segment">``;
    everything else becomes ``<polygon class="trapezoid">``.
    """
    opt = options or SvgOptions()
    xs = [0]
    for trap in t.trapezoids:
        xs.extend(trap.top)
        xs.extend(trap.bottom)
    lo, hi = min(xs), max(xs)
    if lo == hi:
        lo, hi = lo - 1, hi + 1
    span = opt.width - 2 * opt.margin
    y1, y2 = opt.margin, opt.height - opt.margin

    def sx(x: int) -> str:
        return _fmt(opt.margin + (x - lo) * span / (hi - lo))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opt.width}" '
        f'height="{opt.height}" viewBox="0 0 {opt.width} {opt.height}">',
        f'<line class="axis" id="L1" x1="{sx(lo)}" y1="{y1}" x2="{sx(hi)}" y2="{y1}" stroke="black"/>',
        f'<line class="axis" id="L2" x1="{sx(lo)}" y1="{y2}" x2="{sx(hi)}" y2="{y2}" stroke="black"/>',
        f'<text class="axis-label" x="{opt.margin / 4:.2f}" y="{y1 + 4}" font-size="12">L1</text>',
        f'<text class="axis-label" x="{opt.margin / 4:.2f}" y="{y2 + 4}" font-size="12">L2</text>',
        f'<line class="origin" x1="{sx(0)}" y1="{y1}" x2="{sx(0)}" y2="{y2}" '
        'stroke="black" stroke-dasharray="4 4"/>',
        f'<text class="origin-label" x="{sx(0)}" y="{y2 + 16}" font-size="12" '
        'text-anchor="middle">o</text>',
    ]
    for v, trap in enumerate(t.trapezoids):
        side = t.sides[v] if t.sides is not None else "C"
        color = _FILL.get(side, "#7f7f7f")
        if trap.is_segment:
            out.append(
                f'<line class="segment" data-vertex="{v}" x1="{sx(trap.top[0])}" y1="{y1}" '
                f'x2="{sx(trap.bottom[0])}" y2="{y2}" stroke="{color}" stroke-width="2"/>'
            )
        else:
            pts = [(trap.top[0], y1), (trap.top[1], y1), (trap.bottom[1], y2), (trap.bottom[0], y2)]
            points = " ".join(f"{sx(x)},{y}" for x, y in pts)
            out.append(
                f'<polygon class="trapezoid" data-vertex="{v}" points="{points}" '
                f'fill="{color}" fill-opacity="0.25" stroke="{color}"/>'
            )
        if opt.labels:
            mid = (trap.top[0] + trap.top[1]) / 2
            x = opt.margin + (mid - lo) * span / (hi - lo)
            out.append(
                f'<text class="vertex-label" x="{_fmt(x)}" y="{y1 - 6 - 12 * (v % 2)}" '
                f'font-size="11" text-anchor="middle">{escape(t.label(v))}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def shape_counts(svg: str) -> tuple[int, int]:
    """(segments, trapezoids) drawn in an SVG produced by :func:`render_svg`."""
    return svg.count('class="segment"'), svg.count('class="trapezoid"')


def trapezoids_from_pairs(pairs: Sequence[tuple[Interval, Interval]]) -> TrapezoidRepresentation:
    return TrapezoidRepresentation(tuple(Trapezoid(top, bottom) for top, bottom in pairs))
