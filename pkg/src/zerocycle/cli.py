"""Command-line front end.

One binary, subcommand style.  Every subcommand writes a JSON document to
stdout (or --output) and a short human-readable summary to stderr.  Exit
codes: 0 completed, 2 witness/counterexample found, 3 budget exhausted,
64 usage error, 65 malformed input file, 70 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import BudgetExceeded, CodecError, LemmaViolation
from .explorer import (
    BoundReport,
    ExperimentConfig,
    probe_f_lower,
    question1_search,
    question2_probe,
    verify_lemma_inc,
    verify_theorem_sweep,
)
from .graphs import graph_to_doc, parse_graph, serialize_graph
from .groups import ResidueSet, classify_near_ap, shift_set
from .oracle import SearchBudget, distinct_weight_paths, find_zero_cycle
from .solver import (
    build_extremal_digraph,
    build_extremal_undirected,
    lemma_one_solve,
    theorem_main_solve,
)
from .undirected import theorem_undirected_solve

EXIT_OK = 0
EXIT_WITNESS = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_INTERNAL = 70


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_graph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CodecError("io", f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def _emit(doc, args, summary: str) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2)
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(summary, file=sys.stderr)


def _budget(args) -> Optional[SearchBudget]:
    cap = getattr(args, "budget", None)
    return SearchBudget(max_nodes=cap) if cap else None


def _parse_tree(args) -> list:
    if args.tree:
        edges = []
        for part in args.tree.split(","):
            a, _, b = part.partition("-")
            edges.append((int(a), int(b)))
        return edges
    t = args.tree_path or 2
    return [(i, i + 1) for i in range(t - 1)]


def _experiment_config(task: str, args) -> ExperimentConfig:
    return ExperimentConfig(
        task=task,
        k=getattr(args, "k", None),
        n=getattr(args, "n", None),
        strategy=getattr(args, "strategy", "exhaustive"),
        trials=getattr(args, "trials", None),
        seed=getattr(args, "seed", None),
        budget=getattr(args, "budget", None),
        jobs=getattr(args, "jobs", 1),
        prune=getattr(args, "prune", True),
        kmax=getattr(args, "kmax", None),
        n_max=getattr(args, "n_max", None),
        generator=getattr(args, "generator", None),
        which=getattr(args, "which", None),
        output=getattr(args, "output", None),
    )


def _emit_report(report: BoundReport, args) -> int:
    _emit(report.to_doc(), args,
          f"{report.task['task']}: {report.outcome} "
          f"({json.dumps(report.counters, sort_keys=True)})")
    return report.exit_code()


# -- subcommand handlers -----------------------------------------------------


def _cmd_find_zero_cycle(args) -> int:
    g = _read_graph(args.input)
    try:
        witness = find_zero_cycle(g, min_len=args.min_len, budget=_budget(args))
    except BudgetExceeded as exc:
        _emit({"outcome": "unknown", "reason": "budget-exhausted", "nodes": exc.nodes},
              args, f"budget exhausted after {exc.nodes} nodes")
        return EXIT_BUDGET
    if witness is None:
        _emit({"outcome": "none", "witness": None}, args, "no zero cycle")
        return EXIT_OK
    _emit({"outcome": "found", "witness": witness.to_doc()}, args,
          f"zero cycle of length {len(witness.vertices)}")
    return EXIT_WITNESS


def _cmd_paths(args) -> int:
    g = _read_graph(args.input)
    try:
        found = distinct_weight_paths(g, args.v, args.u, args.r,
                                      min_order=args.min_order, budget=_budget(args))
    except BudgetExceeded as exc:
        achieved = sorted(list(w) for w in (exc.partial or ()))
        _emit({"outcome": "unknown", "reason": "budget-exhausted",
               "achieved": achieved}, args, "budget exhausted")
        return EXIT_BUDGET
    achieved = sorted(list(w) for w in found.achieved)
    if found.family is None:
        _emit({"outcome": "none", "achieved": achieved, "family": None}, args,
              f"only {len(achieved)} distinct weights achievable")
        return EXIT_OK
    _emit({"outcome": "found", "achieved": achieved,
           "family": found.family.to_doc()}, args,
          f"{args.r} distinct-weight paths found")
    return EXIT_WITNESS


def _cmd_classify_nearap(args) -> int:
    members = frozenset(int(x) for x in args.set.split(",") if x != "")
    a_set = ResidueSet(args.k, members)
    cls = classify_near_ap(a_set)
    doc = {
        "k": args.k,
        "set": sorted(members),
        "kind": cls.kind,
        "d": cls.d,
        "a": cls.a,
        "shift_set": shift_set(a_set).sorted() if members else [],
        "witness": None,
        "both_cases": cls.both_cases,
    }
    if cls.witness is not None:
        doc["witness"] = {"b_set": sorted(cls.witness.b_set), "a": cls.witness.a}
    _emit(doc, args, f"classification: {cls.kind}"
          + (f" d={cls.d}" if cls.d else "") + (f" a={cls.a}" if cls.a else ""))
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.construction == "extremal-digraph":
        g = build_extremal_digraph(args.k)
        summary = f"extremal digraph of order {g.n} over Z_{args.k}"
    else:
        g = build_extremal_undirected(args.k, _parse_tree(args))
        summary = f"extremal undirected graph of order {g.n}, min degree {g.min_degree()}"
    text = serialize_graph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(summary, file=sys.stderr)
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = _read_graph(args.input)
    if args.problem == "lemma-one":
        outcome = lemma_one_solve(g, args.u, args.v, args.r, budget=_budget(args))
        _emit(outcome.to_doc(), args,
              f"lemma-one outcome: {outcome.tag} (trace {list(outcome.trace)})")
        return EXIT_OK
    if args.problem == "theorem-main":
        trace: list = []
        witness = theorem_main_solve(g, budget=_budget(args), trace=trace)
        _emit({"witness": witness.to_doc(), "trace": trace}, args,
              f"zero cycle of length {len(witness.vertices)}")
        return EXIT_OK
    witness = theorem_undirected_solve(g, budget=_budget(args))
    _emit({"witness": witness.to_doc()}, args,
          f"zero cycle of length {len(witness.vertices)}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.target == "lemma-inc":
        cfg = ExperimentConfig(task="lemma-inc", kmax=args.kmax)
        report = verify_lemma_inc(args.kmax, cfg)
    else:
        cfg = _experiment_config("verify-theorem", args)
        report = verify_theorem_sweep(args.which, args.k, cfg)
    return _emit_report(report, args)


def _cmd_explore(args) -> int:
    if args.question == "f-bound":
        cfg = _experiment_config("f-bound", args)
        report = probe_f_lower(args.k, args.n, cfg)
    elif args.question == "q1":
        cfg = _experiment_config("q1", args)
        report = question1_search(args.n, cfg)
    else:
        cfg = _experiment_config("q2", args)
        report = question2_probe(args.k, cfg)
    return _emit_report(report, args)


def build_parser() -> _Parser:
    parser = _Parser(prog="zerocycle",
                     description="Zero-weight cycles in group-weighted graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, budget=True, output=True):
        if budget:
            p.add_argument("--budget", type=int, default=None,
                           help="enumeration node cap")
        if output:
            p.add_argument("--output", default=None, help="write JSON here instead of stdout")

    p = sub.add_parser("find-zero-cycle", help="search a graph for a zero-weight cycle")
    p.add_argument("--input", default="-", help="graph JSON file, - for stdin")
    p.add_argument("--min-len", type=int, default=0, dest="min_len")
    common(p)
    p.set_defaults(handler=_cmd_find_zero_cycle)

    p = sub.add_parser("paths", help="search for distinct-weight path families")
    p.add_argument("--input", default="-")
    p.add_argument("--v", type=int, required=True, help="start vertex")
    p.add_argument("--u", type=int, required=True, help="end vertex")
    p.add_argument("--r", type=int, required=True, help="required family size")
    p.add_argument("--min-order", type=int, default=3, dest="min_order")
    common(p)
    p.set_defaults(handler=_cmd_paths)

    p = sub.add_parser("classify-nearap", help="divisor/unit classification of a subset of Z_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--set", required=True, help="comma-separated residues, e.g. 0,2,4")
    common(p, budget=False)
    p.set_defaults(handler=_cmd_classify_nearap)

    p = sub.add_parser("construct", help="emit an extremal construction as graph JSON")
    p.add_argument("construction", choices=["extremal-digraph", "extremal-undirected"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--tree", default=None, help="tree edges like 0-1,1-2")
    p.add_argument("--tree-path", type=int, default=None, dest="tree_path",
                   help="use a path tree on this many vertices")
    common(p, budget=False)
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("solve", help="run a constructive solver on a graph")
    p.add_argument("problem", choices=["lemma-one", "theorem-main", "theorem-undirected"])
    p.add_argument("--input", default="-")
    p.add_argument("--u", type=int, default=None)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    common(p)
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", help="verification sweeps")
    p.add_argument("target", choices=["lemma-inc", "theorem"])
    p.add_argument("--kmax", type=int, default=12)
    p.add_argument("--which", choices=["main", "corollary", "undirected"], default="main")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--strategy", choices=["exhaustive", "random"], default="random")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--generator", choices=["complete", "min-degree"], default=None)
    p.add_argument("--n-max", type=int, default=None, dest="n_max")
    common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("explore", help="open-question searches and bound probing")
    p.add_argument("question", choices=["f-bound", "q1", "q2"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--strategy", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--prune", action=argparse.BooleanOptionalAction, default=True,
                   help="prune exhaustive scans by vertex relabelings")
    p.add_argument("--generator", choices=["exhaustive-small", "random"], default=None)
    p.add_argument("--n-max", type=int, default=None, dest="n_max")
    common(p)
    p.set_defaults(handler=_cmd_explore)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except CodecError as exc:
        print(f"input error [{exc.code}]: {exc}", file=sys.stderr)
        print(json.dumps({"error": exc.code, "message": str(exc)}))
        return EXIT_DATA
    except LemmaViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        print(json.dumps({"error": "lemma-violation", "message": str(exc)}))
        return EXIT_INTERNAL
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        print(json.dumps({"error": "budget-exhausted", "nodes": exc.nodes}))
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps({"error": "usage", "message": str(exc)}))
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
