"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline; the
terminal summary repeats them under "acceptance criteria".
"""
from __future__ import annotations

import itertools
import os
import random
import subprocess
import sys
import time

import pytest

from helpers import complete_bipartite, g_star_graph
from trapgi.geometry import convex_polygons_intersect, trapezoid_corners
from trapgi.graph import Graph, bipartition, complement
from trapgi.harness import ORACLE_SOURCE_LIMIT, random_connected_bipartite, random_relabel, selfcheck
from trapgi.isomorphism import is_isomorphic
from trapgi.poset import build_gadget_poset, comparability_graph, height
from trapgi.realizer import build_realizer, placement_violations
from trapgi.reduction import recover, reduce
from trapgi.trapezoid import Trapezoid, from_realizer, intersection_graph, trapezoids_intersect

pytestmark = pytest.mark.acceptance

SELFCHECK_TRIALS = 500
INSTANCES = 150
TRAPEZOID_PAIRS = 12_000


def report(name: str, ok: bool, detail: str) -> None:
    print(f"\n{'PASS' if ok else 'FAIL'} {name}: {detail}")


@pytest.fixture(scope="module")
def instances():
    """Reference instance, dense cases and seeded random sources with sides in [3, 6]."""
    rng = random.Random(2024)
    sources = [bipartition(g_star_graph()), bipartition(complete_bipartite(3, 3)), bipartition(complete_bipartite(6, 6))]
    while len(sources) < INSTANCES:
        sources.append(random_connected_bipartite(rng, 3, 6, rng.choice([0.0, 0.2, 0.4, 0.7])))
    return [(g, reduce(g)) for g in sources]


def test_criterion_1_reduction_equivalence():
    start = time.perf_counter()
    summary = selfcheck(seed=7, trials=SELFCHECK_TRIALS, min_side=3, max_side=6)
    elapsed = time.perf_counter() - start
    oracle = [tr for tr in summary.trials if tr.oracle_source is not None]
    small = [tr for tr in summary.trials if tr.s + tr.t <= ORACLE_SOURCE_LIMIT]
    kinds = {tr.kind for tr in summary.trials}
    ok = (
        len(summary.trials) >= 500
        and not summary.disagreements
        and len(oracle) == len(small) > 0
        and kinds == {"relabel", "mutant"}
        and elapsed < 120
    )
    report(
        "criterion 1 reduction equivalence",
        ok,
        f"{len(summary.trials)} trials, {len(summary.disagreements)} disagreements, "
        f"{len(oracle)} oracle-checked, {elapsed:.1f}s",
    )
    assert ok, "\n".join(tr.line() for tr in summary.disagreements)


def test_criterion_2_representation(instances):
    start = time.perf_counter()
    bad = []
    for k, (_, h) in enumerate(instances):
        rep = from_realizer(build_realizer(h, build_gadget_poset(h)))
        if intersection_graph(rep).edges != complement(h.graph).edges:
            bad.append(k)
    elapsed = time.perf_counter() - start
    ok = not bad and len(instances) >= 100 and elapsed < 60
    report("criterion 2 representation", ok, f"{len(instances)} instances, {len(bad)} mismatches, {elapsed:.1f}s")
    assert ok, bad


def test_criterion_3_realizer(instances):
    violations = []
    pairs = 0
    for k, (_, h) in enumerate(instances):
        p = build_gadget_poset(h)
        r = build_realizer(h, p)
        one, two = r.rep1.intervals, r.rep2.intervals
        # direct endpoint comparison, independent of the realizer module's own checker
        for x, y in itertools.permutations(range(h.graph.n), 2):
            pairs += 1
            both = one[x][1] < one[y][0] and two[x][1] < two[y][0]
            if both != p.less(x, y):
                violations.append((k, x, y))
        violations.extend((k, v) for v in placement_violations(r, h))
    ok = not violations
    report("criterion 3 realizer", ok, f"{pairs} ordered pairs over {len(instances)} instances, {len(violations)} violations")
    assert ok, violations[:10]


def test_criterion_4_structure(instances):
    failures = []
    for k, (g, h) in enumerate(instances):
        p = build_gadget_poset(h)
        if not h.side_c or height(p) != 3:
            failures.append((k, "height"))
        if any(h.graph.degree(c) != 2 for c in h.side_c):
            failures.append((k, "c-degree"))
        if any(h.graph.degree(v) < 3 for v in h.side_a + h.side_b):
            failures.append((k, "ab-degree"))
        if comparability_graph(p).edges != h.graph.edges:
            failures.append((k, "comparability"))
        if not is_isomorphic(recover(h.graph).graph, g.graph).isomorphic:
            failures.append((k, "recover"))
    ok = not failures
    report("criterion 4 structure", ok, f"{len(instances)} instances, {len(failures)} failures")
    assert ok, failures[:10]


def _random_interval(rng: random.Random) -> tuple[int, int]:
    a = rng.randint(-10, 10)
    if rng.random() < 0.25:
        return (a, a)
    b = rng.randint(-10, 10)
    return (min(a, b), max(a, b))


def test_criterion_5_predicate_oracle():
    rng = random.Random(5)
    disagreements = []
    degenerate = 0
    for _ in range(TRAPEZOID_PAIRS):
        t1 = Trapezoid(_random_interval(rng), _random_interval(rng))
        t2 = Trapezoid(_random_interval(rng), _random_interval(rng))
        degenerate += t1.is_segment or t2.is_segment
        oracle = convex_polygons_intersect(trapezoid_corners(t1.top, t1.bottom), trapezoid_corners(t2.top, t2.bottom))
        if trapezoids_intersect(t1, t2) != oracle:
            disagreements.append((t1, t2))
    ok = not disagreements and degenerate > 0
    report(
        "criterion 5 predicate oracle",
        ok,
        f"{TRAPEZOID_PAIRS} pairs ({degenerate} involving a segment), {len(disagreements)} disagreements",
    )
    assert ok, disagreements[:5]


def _random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.random()
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def test_criterion_6_complement():
    rng = random.Random(6)
    involution_bad = 0
    for _ in range(150):
        g = _random_graph(rng, rng.randint(0, 12))
        involution_bad += complement(complement(g)) != g
    verdict_bad = 0
    positives = 0
    for _ in range(150):
        g1 = _random_graph(rng, rng.randint(1, 10))
        if rng.random() < 0.5:
            perm = list(range(g1.n))
            rng.shuffle(perm)
            g2 = g1.relabel(perm)
        else:
            g2 = _random_graph(rng, g1.n)
        direct = is_isomorphic(g1, g2).isomorphic
        positives += direct
        verdict_bad += direct != is_isomorphic(complement(g1), complement(g2)).isomorphic
    ok = involution_bad == 0 and verdict_bad == 0 and 0 < positives < 150
    report(
        "criterion 6 complement",
        ok,
        f"150 involutions ({involution_bad} bad), 150 pairs ({positives} isomorphic, {verdict_bad} verdict changes)",
    )
    assert ok


def _cli(args: list[str], hash_seed: str) -> bytes:
    env = dict(os.environ, PYTHONHASHSEED=hash_seed)
    proc = subprocess.run([sys.executable, "-m", "trapgi", *args], capture_output=True, env=env, check=True)
    return proc.stdout


def test_criterion_7_determinism(tmp_path):
    source = tmp_path / "g.txt"
    source.write_text("6\n0 3\n0 4\n1 4\n1 5\n2 5\n")
    runs = {
        "selfcheck": ["selfcheck", "--seed", "11", "--trials", "40"],
        "render": ["render", "-i", str(source)],
    }
    differing = []
    for name, args in runs.items():
        outputs = {_cli(args, seed) for seed in ("0", "1", "random")}
        if len(outputs) != 1 or not next(iter(outputs)):
            differing.append(name)
    g = random_relabel(bipartition(g_star_graph()), random.Random(3))
    h1, h2 = reduce(g), reduce(g)
    if h1 != h2:
        differing.append("reduce")
    ok = not differing
    report("criterion 7 determinism", ok, "byte-identical across three hash seeds" if ok else f"differs: {differing}")
    assert ok
