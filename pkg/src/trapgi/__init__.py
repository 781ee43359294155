"""Constructive isomorphism reduction from bipartite graphs to trapezoid graphs.

A connected bipartite graph is turned into a gadget whose comparability
poset has height 3 and interval dimension 2; the two interval orders give a
trapezoid model of the gadget's complement.
"""

from .graph import (
    BipartiteGraph,
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
from .isomorphism import IsoResult, brute_force_isomorphic, color_refine, is_isomorphic
from .poset import Poset, build_gadget_poset, comparability_graph, height, verify_axioms
from .realizer import (
    IntervalRepresentation,
    Realizer,
    build_realizer,
    interval_order_relation,
    placement_violations,
    verify_realizes,
)
from .reduction import TripartiteGadget, recover, reduce, reduction_preserves_iso
from .trapezoid import (
    Trapezoid,
    TrapezoidRepresentation,
    from_realizer,
    intersection_graph,
    render_svg,
    trapezoids_intersect,
)

__version__ = "0.1.0"
