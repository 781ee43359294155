"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .graph import (
    EdgeListError,
    NotBipartiteError,
    bipartition,
    complement,
    from_edge_list,
    to_edge_list,
)
from .harness import selfcheck
from .isomorphism import SizeCapExceeded, brute_force_isomorphic, is_isomorphic
from .poset import build_gadget_poset, comparability_graph, height, poset_to_text, verify_axioms
from .realizer import (
    RealizerError,
    build_realizer,
    placement_violations,
    realizer_from_json,
    realizer_to_json,
    realizer_to_text,
    verify_realizes,
)
from .reduction import (
    GadgetError,
    ReductionError,
    TripartiteGadget,
    gadget_from_text,
    gadget_to_text,
    identify_gadget,
    recover,
    reduce,
)
from .trapezoid import (
    SvgOptions,
    TrapezoidRepresentation,
    from_realizer,
    intersection_graph,
    render_svg,
    representation_from_json,
    representation_to_json,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

INPUT_ERRORS = (
    EdgeListError,
    NotBipartiteError,
    ReductionError,
    GadgetError,
    RealizerError,
    SizeCapExceeded,
    json.JSONDecodeError,
    KeyError,
    ValueError,
    OSError,
)


class UsageError(Exception):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_bipartite(text: str):
    g = from_edge_list(text)
    try:
        return bipartition(g)
    except NotBipartiteError as exc:
        raise ReductionError(f"input is not bipartite (odd cycle {exc.cycle})") from None


def _load_gadget(text: str) -> TripartiteGadget:
    """A gadget file, or a bipartite edge list that gets reduced first."""
    if any(line.startswith("#A:") for line in text.splitlines()):
        return gadget_from_text(text)
    g = from_edge_list(text)
    try:
        return reduce(bipartition(g))
    except NotBipartiteError:
        return identify_gadget(g)


def _load_representation(text: str) -> TrapezoidRepresentation:
    if text.lstrip().startswith("{"):
        data = json.loads(text)
        if "trapezoid" in data:
            return representation_from_json(text)
        return from_realizer(realizer_from_json(text))
    return from_realizer(build_realizer(_load_gadget(text)))


# -- subcommands -------------------------------------------------------------------

def cmd_reduce(args: argparse.Namespace) -> int:
    gadget = reduce(_load_bipartite(_read(args.input)))
    _write(args.output, gadget_to_text(gadget))
    return EXIT_OK


def cmd_recover(args: argparse.Namespace) -> int:
    g = recover(from_edge_list(_read(args.input)))
    text = to_edge_list(g.graph)
    text += "#A: " + " ".join(map(str, g.side_a)) + "\n"
    text += "#B: " + " ".join(map(str, g.side_b)) + "\n"
    _write(args.output, text)
    return EXIT_OK


def cmd_poset(args: argparse.Namespace) -> int:
    p = build_gadget_poset(_load_gadget(_read(args.input)))
    if args.format == "json":
        text = json.dumps({"n": p.n, "relation": [list(x) for x in sorted(p.relation)]}, indent=2) + "\n"
    else:
        text = poset_to_text(p)
    _write(args.output, text)
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    r = build_realizer(_load_gadget(_read(args.input)))
    _write(args.output, realizer_to_text(r) if args.format == "text" else realizer_to_json(r))
    return EXIT_OK


def cmd_trapezoidize(args: argparse.Namespace) -> int:
    rep = _load_representation(_read(args.input))
    _write(args.output, representation_to_json(rep))
    return EXIT_OK


def verify_claims(gadget: TripartiteGadget) -> list[tuple[str, bool]]:
    h = gadget.graph
    p = build_gadget_poset(gadget)
    r = build_realizer(gadget, p)
    traps = from_realizer(r) if verify_realizes(r).ok else None
    return [
        ("poset axioms hold", verify_axioms(p).ok),
        ("comparability graph of P_H equals H", comparability_graph(p).edges == h.edges),
        ("height of P_H is 3", height(p) == 3),
        (
            "two interval orders realize P_H",
            verify_realizes(r).ok and not placement_violations(r, gadget),
        ),
        (
            "trapezoid intersection graph equals complement of H",
            traps is not None and intersection_graph(traps).edges == complement(h).edges,
        ),
    ]


def cmd_verify(args: argparse.Namespace) -> int:
    gadget = reduce(_load_bipartite(_read(args.input)))
    claims = verify_claims(gadget)
    if args.format == "json":
        text = json.dumps({"claims": [{"claim": c, "pass": ok} for c, ok in claims]}, indent=2) + "\n"
    else:
        text = "".join(f"{'PASS' if ok else 'FAIL'} {c}\n" for c, ok in claims)
    _write(args.output, text)
    failed = [c for c, ok in claims if not ok]
    if failed:
        print(f"verification failed: {failed[0]}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_iso(args: argparse.Namespace) -> int:
    if not args.input or len(args.input) != 2:
        raise UsageError("iso needs exactly two inputs: -i FIRST -i SECOND")
    g1, g2 = (from_edge_list(_read(path)) for path in args.input)
    result = brute_force_isomorphic(g1, g2) if args.brute_force else is_isomorphic(g1, g2)
    if args.format == "json":
        text = json.dumps({
            "isomorphic": result.isomorphic,
            "reason": result.reason,
            "mapping": [[u, v] for u, v in sorted((result.mapping or {}).items())],
        }, indent=2) + "\n"
    else:
        verdict = "isomorphic" if result.isomorphic else "not isomorphic"
        text = f"{verdict} ({result.reason})\n" + result.mapping_lines()
    _write(args.output, text)
    return EXIT_OK


def cmd_selfcheck(args: argparse.Namespace) -> int:
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    if args.min_side < 3 or args.max_side < args.min_side:
        raise UsageError("side bounds must satisfy 3 <= --min-side <= --max-side")
    if not 0.0 <= args.edge_prob <= 1.0:
        raise UsageError("--edge-prob must lie in [0, 1]")
    summary = selfcheck(args.seed, args.trials, args.min_side, args.max_side, args.edge_prob)
    _write(args.output, summary.render())
    if not summary.ok:
        for trial in summary.disagreements:
            print(f"disagreement: trial {trial.index} seed={trial.seed}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    rep = _load_representation(_read(args.input))
    options = SvgOptions(width=args.width, height=args.height, labels=not args.no_labels)
    _write(args.output, render_svg(rep, options))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trapgi",
        description="Bipartite-graph to trapezoid-graph isomorphism reduction toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable[[argparse.Namespace], int], help: str,
            fmt: Sequence[str] = ("text", "json"), default_fmt: str = "text") -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("-i", "--input", help="input file (default: stdin)")
        p.add_argument("-o", "--output", help="output file (default: stdout)")
        p.add_argument("--format", choices=list(fmt), default=default_fmt)
        p.set_defaults(func=func)
        return p

    add("reduce", cmd_reduce, "build the gadget H from a connected bipartite graph")
    add("recover", cmd_recover, "recover G from a gadget graph")
    add("poset", cmd_poset, "emit the gadget poset P_H")
    add("realize", cmd_realize, "emit the two interval representations", default_fmt="json")
    add("trapezoidize", cmd_trapezoidize, "emit the trapezoid representation of the complement of H",
        fmt=("json",), default_fmt="json")
    add("verify", cmd_verify, "run the whole pipeline and check every structural claim")

    iso = sub.add_parser("iso", help="test two graphs for isomorphism")
    iso.add_argument("-i", "--input", action="append", help="graph file (give twice)")
    iso.add_argument("-o", "--output")
    iso.add_argument("--format", choices=["text", "json"], default="text")
    iso.add_argument("--brute-force", action="store_true", help="use the exhaustive oracle")
    iso.set_defaults(func=cmd_iso)

    check = sub.add_parser("selfcheck", help="seeded randomized check of the reduction")
    check.add_argument("-o", "--output")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--trials", type=int, default=100)
    check.add_argument("--min-side", type=int, default=3)
    check.add_argument("--max-side", type=int, default=6)
    check.add_argument("--edge-prob", type=float, default=0.3)
    check.set_defaults(func=cmd_selfcheck)

    render = add("render", cmd_render, "render a trapezoid representation as SVG",
                 fmt=("svg",), default_fmt="svg")
    render.add_argument("--width", type=int, default=1000)
    render.add_argument("--height", type=int, default=400)
    render.add_argument("--no-labels", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except INPUT_ERRORS as exc:
        print(f"trapgi {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
