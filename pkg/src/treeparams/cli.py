"""Command-line front end.

    treeparams gen {burling,completion,blowup,c5k,crown} ...
    treeparams solve --param P -i g.gr [--witness out]
    treeparams validate -g g.gr -t d.td [--param P]
    treeparams weights (-i g.gr --bound B --target W | --burling K) -o w.txt
    treeparams verify --suite S [--seed S] [--max-n N]

Exit codes: 0 success, 1 failed check / infeasible / invalid decomposition,
2 usage error, 3 budget exceeded, 4 malformed input file.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import io
from .constructions import (
    blowup_burling,
    burling,
    burling_star_forest_decomposition,
    cached_weighting_path,
    completion_star_decomposition,
    counterexample,
    crown_decomposition,
    find_weighting,
    one_completion,
    stable_bound,
    weight_total,
)
from .errors import BudgetExceeded, DependencyError, DomainError, InvalidParameter, MalformedInput, PreconditionError
from .solvers import chromatic_number, max_stable_set, tree_parameter
from .treedec import BagMeasure, bag_parameter, validate
from .verify import SUITES, report_lines, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_MALFORMED = 0, 1, 2, 3, 4

PARAMS = ("alpha", "chi", "tw", "tree-alpha", "tree-chi", "tree-tw")
_TREE_MEASURE = {
    "tw": BagMeasure.SIZE,
    "tree-alpha": BagMeasure.ALPHA,
    "tree-chi": BagMeasure.CHI,
    "tree-tw": BagMeasure.TW,
}

log = logging.getLogger("treeparams")


class UsageError(Exception):
    pass


def _existing(path: str) -> Path:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    return p


def _cmd_gen(args) -> int:
    what = args.what
    td = extra = None
    if what == "burling":
        lvl = burling(args.n)
        g = lvl.graph
        td = burling_star_forest_decomposition(args.n)
        if args.family:
            io.atomic_write(args.family, io.format_family(lvl.family, f"family of G_{args.n}"))
    elif what == "completion":
        h = io.read_graph(_existing(args.input))
        g = one_completion(h).graph
        td = completion_star_decomposition(h) if h.n >= 3 else None
    elif what == "blowup":
        g, proj = blowup_burling(args.k)
        extra = "".join(f"{v + 1} {x + 1}\n" for v, x in enumerate(proj.mapping))
    elif what == "c5k":
        g = counterexample("pentagon", args.k)
        td = completion_star_decomposition(one_completion_source(args.k))
    elif what == "crown":
        g = one_completion_empty(args.n)
        td = crown_decomposition(args.n) if args.n >= 3 else None
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(what)
    io.write_graph(g, args.output)
    if args.td and td is not None:
        io.write_td(td, args.td)
    if getattr(args, "projection", None) and extra is not None:
        io.atomic_write(args.projection, extra)
    print(f"{g.n} vertices, {g.m} edges -> {args.output}")
    return EXIT_OK


def one_completion_source(k: int):
    from .graph import cycle, disjoint_union

    return disjoint_union([cycle(5)] * k)


def one_completion_empty(n: int):
    from .graph import empty

    return one_completion(empty(n)).graph


def _cmd_solve(args) -> int:
    g = io.read_graph(_existing(args.input))
    p = args.param
    if p == "alpha":
        res = max_stable_set(g)
        witness_text = io.format_family([res.witness], "maximum stable set")
    elif p == "chi":
        res = chromatic_number(g)
        classes = [[v for v in range(g.n) if res.witness[v] == c] for c in range(res.value)]
        witness_text = io.format_family(classes, "colour classes")
    else:
        res = tree_parameter(g, _TREE_MEASURE[p], guard=args.guard)
        witness_text = io.format_td(res.witness) if res.witness is not None else None
    print(res.value)
    if args.witness and witness_text is not None:
        io.atomic_write(args.witness, witness_text)
    return EXIT_OK


def _cmd_validate(args) -> int:
    g = io.read_graph(_existing(args.graph))
    td = io.read_td(_existing(args.td), g)
    report = validate(td)
    if not report.ok:
        for v in report.violations:
            print(f"violation {v.describe(g)}")
        return EXIT_FAIL
    print(f"valid: {td.num_nodes} bags, width {td.width()}")
    if args.param:
        value, node = bag_parameter(td, BagMeasure.parse(args.param), check=False)
        print(f"{args.param}: {value} (bag {node + 1})")
    return EXIT_OK


def _cmd_weights(args) -> int:
    if args.burling is not None:
        g = burling(args.burling).graph
        bound, target = stable_bound(args.burling), weight_total(args.burling)
        out = args.output or cached_weighting_path(args.burling)
    else:
        if args.input is None or args.bound is None or args.target is None or args.output is None:
            raise UsageError("weights needs -i, --bound, --target and -o (or --burling K)")
        g = io.read_graph(_existing(args.input))
        bound, target, out = args.bound, args.target, args.output
    w = find_weighting(g, bound, target, time_budget=args.budget_ms / 1000.0)
    if w is None:
        print(f"infeasible: no weighting with total {target} and stable-set weight <= {bound}")
        return EXIT_FAIL
    io.atomic_write(out, io.format_weights(w, bound, target, io.graph_hash(g)))
    print(f"verified weighting: total {w.total}, bound {bound} -> {out}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, max_n=args.max_n, samples=args.samples, witness_dir=args.witness_dir)
    if args.no_timing:
        for r in results:
            r.ms = 0.0
    text = report_lines(results)
    if args.output:
        io.atomic_write(args.output, text)
    sys.stdout.write(text)
    failed = [r for r in results if not r.passed]
    log.info("%d checks, %d not passing", len(results), len(failed))
    return EXIT_OK if not failed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treeparams", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct a graph (and decomposition) and write it")
    gen.add_argument("what", choices=("burling", "completion", "blowup", "c5k", "crown"))
    gen.add_argument("-n", type=int, help="level (burling) or number of vertices (crown)")
    gen.add_argument("-k", type=int, help="blowup level or number of pentagons")
    gen.add_argument("-i", "--input", help="input graph for completion")
    gen.add_argument("-o", "--output", required=True, help="output .gr file")
    gen.add_argument("-t", "--td", help="also write the construction's decomposition")
    gen.add_argument("--family", help="burling: write the stable-set family")
    gen.add_argument("--projection", help="blowup: write the projection map")
    gen.set_defaults(func=_cmd_gen)

    solve = sub.add_parser("solve", help="compute a parameter exactly")
    solve.add_argument("--param", required=True, choices=PARAMS)
    solve.add_argument("-i", "--input", required=True)
    solve.add_argument("--witness", help="write the certificate here")
    solve.add_argument("--guard", type=int, help="override the vertex-count guard")
    solve.set_defaults(func=_cmd_solve)

    val = sub.add_parser("validate", help="check a decomposition against a graph")
    val.add_argument("-g", "--graph", required=True)
    val.add_argument("-t", "--td", required=True)
    val.add_argument("--param", choices=[m.value for m in BagMeasure])
    val.set_defaults(func=_cmd_validate)

    wts = sub.add_parser("weights", help="search for a bounded-stable-set weighting")
    wts.add_argument("-i", "--input")
    wts.add_argument("--bound", type=int)
    wts.add_argument("--target", type=int)
    wts.add_argument("--burling", type=int, help="use G_K with its standard bound and total")
    wts.add_argument("-o", "--output")
    wts.add_argument("--budget-ms", type=int, default=600_000)
    wts.set_defaults(func=_cmd_weights)

    ver = sub.add_parser("verify", help="run a verification suite, JSON lines on stdout")
    ver.add_argument("--suite", choices=SUITES, default="all")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--max-n", type=int)
    ver.add_argument("--samples", type=int)
    ver.add_argument("--witness-dir", default="witnesses")
    ver.add_argument("-o", "--output", help="also write the report to this file")
    ver.add_argument("--no-timing", action="store_true", help="zero the ms field for byte-stable reports")
    ver.set_defaults(func=_cmd_verify)
    return parser


_NEEDS = {"burling": "n", "crown": "n", "blowup": "k", "c5k": "k", "completion": "input"}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "gen" and getattr(args, _NEEDS[args.what]) is None:
        parser.error(f"gen {args.what} needs {'-' + _NEEDS[args.what] if len(_NEEDS[args.what]) == 1 else '--input'}")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidParameter, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except MalformedInput as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (PreconditionError, DependencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
