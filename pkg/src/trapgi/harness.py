"""Random instances and the seeded self-check of the reduction."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import BipartiteGraph, Graph, bipartition, degree_sequence, is_connected
from .isomorphism import DEFAULT_BRUTE_FORCE_CAP, brute_force_isomorphic, is_isomorphic
from .reduction import GadgetError, recover, reduce

# brute force also runs on the gadgets, so keep the source graphs small
ORACLE_SOURCE_LIMIT = 8


def random_connected_bipartite(
    rng: random.Random, min_side: int = 3, max_side: int = 6, edge_prob: float = 0.3
) -> BipartiteGraph:
    """Random spanning tree alternating sides, then each other A-B pair with ``edge_prob``.

    Side A is ``0..s-1`` and side B is ``s..s+t-1``.
    """
    if min_side < 1 or max_side < min_side:
        raise ValueError("need 1 <= min_side <= max_side")
    s = rng.randint(min_side, max_side)
    t = rng.randint(min_side, max_side)
    side_a = list(range(s))
    side_b = list(range(s, s + t))
    first_a, first_b = rng.choice(side_a), rng.choice(side_b)
    tree_a, tree_b = [first_a], [first_b]
    edges = {(first_a, first_b)}
    rest = [v for v in side_a + side_b if v not in (first_a, first_b)]
    rng.shuffle(rest)
    for v in rest:
        if v < s:
            edges.add((v, rng.choice(tree_b)))
            tree_a.append(v)
        else:
            edges.add((rng.choice(tree_a), v))
            tree_b.append(v)
    for a in side_a:
        for b in side_b:
            if (a, b) not in edges and rng.random() < edge_prob:
                edges.add((a, b))
    return BipartiteGraph(Graph(s + t, frozenset(edges)), tuple(side_a), tuple(side_b))


def random_relabel(g: BipartiteGraph, rng: random.Random) -> BipartiteGraph:
    perm = list(range(g.graph.n))
    rng.shuffle(perm)
    return bipartition(g.graph.relabel(perm))


def rewired_mutant(
    g: BipartiteGraph, rng: random.Random, cap: int = DEFAULT_BRUTE_FORCE_CAP, attempts: int = 50
) -> BipartiteGraph | None:
    """Move one edge to a non-edge so that the result is connected and certified non-isomorphic.

    Certification is the brute-force oracle within ``cap`` vertices and a
    degree-sequence difference above it. Returns ``None`` if no certified
    mutant turns up.
    """
    edges = g.graph.sorted_edges()
    non_edges = [
        (min(a, b), max(a, b)) for a in g.side_a for b in g.side_b if not g.graph.has_edge(a, b)
    ]
    if not non_edges:
        return None
    for _ in range(attempts):
        drop = rng.choice(edges)
        add = rng.choice(non_edges)
        mutant = Graph(g.graph.n, (g.graph.edges - {drop}) | {add})
        if not is_connected(mutant):
            continue
        if g.graph.n <= cap:
            if brute_force_isomorphic(g.graph, mutant, cap):
                continue
        elif degree_sequence(g.graph) == degree_sequence(mutant):
            continue
        return BipartiteGraph(mutant, g.side_a, g.side_b)
    return None


@dataclass
class Trial:
    index: int
    seed: str
    s: int
    t: int
    m: int
    kind: str
    expected: bool
    iso_source: bool
    iso_gadget: bool
    recovered: bool
    oracle_source: bool | None = None
    oracle_gadget: bool | None = None

    @property
    def ok(self) -> bool:
        verdicts = [self.expected, self.iso_source, self.iso_gadget]
        if self.oracle_source is not None:
            verdicts += [self.oracle_source, self.oracle_gadget]
        return self.recovered and len(set(verdicts)) == 1

    def line(self) -> str:
        oracle = "-" if self.oracle_source is None else f"{int(self.oracle_source)}{int(self.oracle_gadget)}"
        return (
            f"trial {self.index} seed={self.seed} s={self.s} t={self.t} m={self.m} "
            f"kind={self.kind} expected={int(self.expected)} iso_g={int(self.iso_source)} "
            f"iso_h={int(self.iso_gadget)} oracle={oracle} recover={int(self.recovered)} "
            f"{'ok' if self.ok else 'DISAGREE'}"
        )


@dataclass
class SelfCheckSummary:
    seed: int
    trials: list[Trial] = field(default_factory=list)

    @property
    def disagreements(self) -> list[Trial]:
        return [tr for tr in self.trials if not tr.ok]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def render(self) -> str:
        lines = [f"selfcheck seed={self.seed} trials={len(self.trials)}"]
        lines.extend(tr.line() for tr in self.trials)
        relabels = sum(tr.kind == "relabel" for tr in self.trials)
        oracle = sum(tr.oracle_source is not None for tr in self.trials)
        lines.append(
            f"summary: trials={len(self.trials)} relabel={relabels} "
            f"mutant={len(self.trials) - relabels} oracle_checked={oracle} "
            f"disagreements={len(self.disagreements)}"
        )
        return "\n".join(lines) + "\n"


def trial_seed(seed: int, index: int) -> str:
    return f"{seed}:{index}"


def run_trial(
    index: int,
    seed: int,
    min_side: int = 3,
    max_side: int = 6,
    edge_prob: float = 0.3,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
) -> Trial:
    tag = trial_seed(seed, index)
    rng = random.Random(tag)
    g1 = random_connected_bipartite(rng, min_side, max_side, edge_prob)
    g2 = None
    kind = "relabel"
    if rng.random() < 0.5:
        mutant = rewired_mutant(g1, rng, cap)
        if mutant is not None:
            g2 = random_relabel(mutant, rng)
            kind = "mutant"
    if g2 is None:
        g2 = random_relabel(g1, rng)
    expected = kind == "relabel"
    h1, h2 = reduce(g1), reduce(g2)
    iso_g = is_isomorphic(g1.graph, g2.graph).isomorphic
    iso_h = is_isomorphic(h1.graph, h2.graph).isomorphic
    try:
        back = recover(h1.graph)
        recovered = is_isomorphic(back.graph, g1.graph).isomorphic
    except GadgetError:
        recovered = False
    trial = Trial(index, tag, g1.s, g1.t, g1.graph.edge_count, kind, expected, iso_g, iso_h, recovered)
    if g1.graph.n <= ORACLE_SOURCE_LIMIT:
        trial.oracle_source = brute_force_isomorphic(g1.graph, g2.graph, cap).isomorphic
        trial.oracle_gadget = brute_force_isomorphic(h1.graph, h2.graph, None).isomorphic
    return trial


def selfcheck(
    seed: int,
    trials: int,
    min_side: int = 3,
    max_side: int = 6,
    edge_prob: float = 0.3,
    cap: int = DEFAULT_BRUTE_FORCE_CAP,
) -> SelfCheckSummary:
    summary = SelfCheckSummary(seed)
    for k in range(trials):
        summary.trials.append(run_trial(k, seed, min_side, max_side, edge_prob, cap))
    return summary
