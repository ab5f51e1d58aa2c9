"""Command-line interface.

Every command prints a JSON report (``--text`` for a readable rendering).
Exit status is 0 whenever the command ran, whatever it found; 1 means an
input file could not be read or parsed and 2 a usage error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Callable

from . import report
from .covers import build_cover
from .errors import FormatError, SumGraphError
from .graph import Mode, format_graph, parse_graph
from .induction import format_bag, induce, parse_bag
from .labeling import Labeling, format_labeling, parse_labeling, validate
from .search import (BUDGET_ENV, SearchConfig, SigmaNotFound, available_kernels, default_time_budget,
                     find_labelings, sum_number_bounded)

PROG = "sumgraph"


class InputError(Exception):
    pass


class _Run:
    """Collects the inputs read by one command."""

    def __init__(self) -> None:
        self.inputs: dict[str, bytes] = {}

    def read(self, path: str) -> str:
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
        self.inputs[path] = data
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError:
            raise InputError(f"{path} is not UTF-8 text") from None

    def graph(self, path: str):
        return parse_graph(self.read(path), path)

    def labeling(self, path: str, G) -> Labeling:
        return parse_labeling(self.read(path), G, path)

    def bag(self, path: str):
        return parse_bag(self.read(path), path)


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _budget(args) -> float:
    return default_time_budget() if args.budget is None else args.budget


# commands; each returns (bounds, result)

def cmd_induce(args, run: _Run) -> tuple[dict, dict]:
    bag = run.bag(args.bag)
    ig = induce(bag, Mode.parse(args.mode))
    text = format_graph(ig.graph)
    if args.out:
        _write(args.out, text)
    if args.labeling_out:
        _write(args.labeling_out, format_labeling(Labeling(ig.graph, ig.labels)))
    return {"mode": ig.mode.value}, {
        "bag": format_bag(bag).strip(),
        "vertices": ig.graph.vertex_count,
        "edges": ig.graph.edge_count,
        "labels": list(ig.labels),
        "psi": {str(k): list(v) for k, v in sorted(ig.psi.items())},
        "graph": text,
    }


def _violations(L: Labeling) -> list[dict]:
    return [{"kind": v.kind.value, "pair": list(v.pair), "edge_number": v.edge_number} for v in validate(L)]


def cmd_validate(args, run: _Run) -> tuple[dict, dict]:
    G = run.graph(args.graph)
    L = run.labeling(args.labeling, G)
    bad = _violations(L)
    return {}, {"valid": not bad, "minimal": 1 in L.labels, "violations": bad}


def cmd_search(args, run: _Run) -> tuple[dict, dict]:
    G = run.graph(args.graph)
    cfg = SearchConfig(args.max_label, require_label_one=args.require_one, require_injective=args.injective,
                       mode=G.mode, max_results=args.limit, time_budget=_budget(args))
    out = find_labelings(G, cfg, args.kernel)
    report.revalidate(G, (L.labels for L in out.labelings))
    res = out.to_json()
    res.pop("kernel")
    if out.status.value == "ExhaustedWithinBound":
        res["statement"] = f"no labeling with every label <= {cfg.max_label} satisfies the constraints"
    return cfg.to_json(), res


def cmd_sigma(args, run: _Run) -> tuple[dict, dict]:
    G = run.graph(args.graph)
    if G.mode is not Mode.SIMPLE:
        raise InputError("sum numbers are defined for simple graphs")
    core, stripped = G.without_isolates()
    bounds = {"max_label": args.max_label, "max_isolates": args.max_isolates, "time_budget": _budget(args)}
    try:
        res = sum_number_bounded(core, args.max_isolates, args.max_label, _budget(args))
    except SigmaNotFound as exc:
        return bounds, {"sigma": None, "stripped_isolates": stripped, "statement": str(exc)}
    report.revalidate(core.with_isolates(res.sigma), [res.witness.labels])
    out = res.to_json()
    out["stripped_isolates"] = stripped
    return bounds, out


def cmd_cover(args, run: _Run) -> tuple[dict, dict]:
    G = run.graph(args.graph)
    L = run.labeling(args.labeling, G)
    bad = _violations(L)
    if bad:
        return {}, {"valid": False, "violations": bad, "covers": []}
    if args.generator is not None and not 0 <= args.generator < G.vertex_count:
        raise InputError(f"generator {args.generator} is not a vertex")
    gens = [args.generator] if args.generator is not None else range(G.vertex_count)
    return {}, {"valid": True, "covers": [build_cover(L, v).to_json() for v in gens]}


def cmd_refute(args, run: _Run) -> tuple[dict, dict]:
    from .refuter import check_trace, refute_minimal

    ig = induce(run.bag(args.bag), Mode.parse(args.mode))
    bounds = {"mode": ig.mode.value, "node_limit": args.node_limit, "time_budget": _budget(args)}
    res = refute_minimal(ig, args.node_limit, _budget(args))
    out = res.to_json()
    if res.refuted:
        out["checked"] = check_trace(ig, res.trace)
        if args.trace_out:
            _write(args.trace_out, res.trace.dumps())
    elif res.labeling is not None:
        report.revalidate(ig.graph, [res.labeling])
    return bounds, out


def cmd_check_trace(args, run: _Run) -> tuple[dict, dict]:
    from .refuter import check_trace

    ig = induce(run.bag(args.bag), Mode.parse(args.mode))
    return {"mode": ig.mode.value}, {"checked": check_trace(ig, run.read(args.trace))}


def cmd_verify(args, run: _Run) -> tuple[dict, dict]:
    from . import suites

    name = args.suite
    if name == "sigma-known":
        res = suites.sigma_known(args.max_label or 300, args.max_isolates, _budget(args))
    elif name == "gap-conjecture":
        res = suites.gap_conjecture(args.k_min or 10, args.k_max or 12, args.max_label or 300, _budget(args))
    elif name == "cAn-conjecture":
        res = suites.can_conjecture(args.n_min or 7, args.n_max or 7, args.max_label or 500, _budget(args))
    elif name == "term-struct":
        res = suites.term_struct_suite(args.n_min or 7, args.n_max or 39)
    else:
        res = suites.section2_claims(args.k_min or 5, args.k_max or 10)
    bounds = dict(res.pop("bounds"))
    bounds["time_budget"] = _budget(args)
    return bounds, res


# parser

def _positive(text: str) -> int:
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if x < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _count(text: str) -> int:
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if x < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return x


def _seconds(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if x < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return x


def _mode(text: str) -> str:
    try:
        return Mode.parse(text).value
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    from .suites import SUITES

    p = argparse.ArgumentParser(prog=PROG, description="Sum-graph labelings: induce, validate, search, refute.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--text", action="store_true", help="print a readable rendering instead of JSON")
    common.add_argument("--report", metavar="FILE", help="also write the JSON report to FILE")
    sub = p.add_subparsers(dest="command", required=True)
    budget_help = f"time budget in seconds (default: ${BUDGET_ENV} or 60; 0 = none)"

    s = sub.add_parser("induce", parents=[common], help="build the graph induced by a bag of labels")
    s.add_argument("bag")
    s.add_argument("--mode", type=_mode, default="simple")
    s.add_argument("-o", "--out", help="write the graph file here")
    s.add_argument("--labeling-out", help="write the inducing labeling here")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("validate", parents=[common], help="check a labeling against a graph")
    s.add_argument("graph")
    s.add_argument("labeling")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("search", parents=[common], help="bounded search for labelings")
    s.add_argument("graph")
    s.add_argument("--max-label", type=_positive, default=100)
    s.add_argument("--require-one", action="store_true")
    s.add_argument("--injective", action="store_true")
    s.add_argument("--limit", type=_count, default=1, help="labelings to report (0 = all)")
    s.add_argument("--budget", type=_seconds, help=budget_help)
    s.add_argument("--kernel", choices=available_kernels())
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("sigma", parents=[common], help="sum number relative to a label bound")
    s.add_argument("graph")
    s.add_argument("--max-isolates", type=_count, default=6)
    s.add_argument("--max-label", type=_positive, default=300)
    s.add_argument("--budget", type=_seconds, help=budget_help)
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("cover", parents=[common], help="sequence covers of a valid labeling")
    s.add_argument("graph")
    s.add_argument("labeling")
    s.add_argument("--generator", type=int)
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("refute", parents=[common], help="try to prove that no labeling uses the label 1")
    s.add_argument("bag")
    s.add_argument("--mode", type=_mode, default="loops")
    s.add_argument("--node-limit", type=_count, default=200_000)
    s.add_argument("--budget", type=_seconds, help=budget_help)
    s.add_argument("--trace-out", help="write the proof trace here")
    s.set_defaults(func=cmd_refute)

    s = sub.add_parser("check-trace", parents=[common], help="replay a proof trace")
    s.add_argument("bag")
    s.add_argument("trace")
    s.add_argument("--mode", type=_mode, default="loops")
    s.set_defaults(func=cmd_check_trace)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=SUITES)
    s.add_argument("--n-min", type=_positive)
    s.add_argument("--n-max", type=_positive)
    s.add_argument("--k-min", type=_positive)
    s.add_argument("--k-max", type=_positive)
    s.add_argument("--max-label", type=_positive)
    s.add_argument("--max-isolates", type=_count, default=6)
    s.add_argument("--budget", type=_seconds, help=budget_help)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    run = _Run()
    func: Callable[[Any, _Run], tuple[dict, dict]] = args.func
    start = time.monotonic()
    try:
        bounds, result = func(args, run)
    except (InputError, FormatError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    except (SumGraphError, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    rep = report.build([PROG, *argv], run.inputs, bounds, result, time.monotonic() - start)
    text = report.dumps(rep)
    if args.report:
        try:
            _write(args.report, text)
        except InputError as exc:
            print(f"{PROG}: error: {exc}", file=sys.stderr)
            return 1
    sys.stdout.write(report.render_text(rep) if args.text else text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
