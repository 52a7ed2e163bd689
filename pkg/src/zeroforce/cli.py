"""Command-line front end.

Exit codes: 0 on success (including a reported negative decision), 1 on
bad input or a violated precondition, 2 when verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from pathlib import Path
from typing import Optional

from . import corpus
from .forcing import Mode, closure, is_forcing_set, is_stalled
from .graph import FORMATS, Graph, GraphFormatError, is_connected, parse_graph, serialize_graph
from .reduction import connectify, reduce, verify_theorem
from .solvers import (
    DEFAULT_ORACLE_CAP,
    BudgetExceeded,
    EmptyGraphError,
    decide_failed,
    failed_forcing_number,
    failed_forcing_number_bruteforce,
    max_independent_set,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFY_FAILED = 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _modes(arg: str) -> list[Mode]:
    return [Mode.STANDARD, Mode.SKEW] if arg == "both" else [Mode(arg)]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args, path: Optional[str] = None) -> Graph:
    path = path or args.graph
    if path is None:
        raise UsageError("--graph is required")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = parse_graph(_read_text(path), args.format)
    for w in caught:
        print(f"warning: {path}: {w.message}", file=sys.stderr)
    return g


def _parse_ids(text: str, g: Graph):
    ids = []
    for tok in text.replace(",", " ").split():
        try:
            ids.append(int(tok))
        except ValueError:
            raise UsageError(f"bad vertex id {tok!r}") from None
    try:
        return g.vertex_set(ids)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _fmt_set(s) -> str:
    return ",".join(map(str, s)) if s else "∅"


def cmd_closure(args) -> int:
    g = _load(args)
    filled = _parse_ids(args.filled, g)
    for mode in _modes(args.mode):
        c = closure(g, filled, mode)
        forcing = c.bits == g.full_mask
        if args.json:
            print(_dump({"mode": mode.value, "closure": c.sorted(), "forcing": forcing}))
        else:
            prefix = f"{mode.value}: " if args.mode == "both" else ""
            print(f"{prefix}{_fmt_set(c)} forcing={str(forcing).lower()}")
    return EXIT_OK


def cmd_stalled(args) -> int:
    g = _load(args)
    filled = _parse_ids(args.filled, g)
    for mode in _modes(args.mode):
        stalled = is_stalled(g, filled, mode)
        if args.json:
            print(_dump({"mode": mode.value, "stalled": stalled, "forcing": is_forcing_set(g, filled, mode)}))
        else:
            prefix = f"{mode.value}: " if args.mode == "both" else ""
            print(f"{prefix}stalled={str(stalled).lower()}")
    return EXIT_OK


def _failed_report(g: Graph, mode: Mode, args) -> dict:
    res = failed_forcing_number(g, mode, budget=args.budget, workers=args.workers)
    out = res.to_json()
    if args.s is not None:
        out["s"] = args.s
        out["decision"] = res.value is not None and res.value >= args.s
    return out


def cmd_failed(args) -> int:
    g = _load(args)
    for mode in _modes(args.mode):
        print(_dump(_failed_report(g, mode, args)))
    return EXIT_OK


def cmd_decide(args) -> int:
    if args.s is None:
        raise UsageError("decide needs --s")
    g = _load(args)
    for mode in _modes(args.mode):
        decision = decide_failed(g, args.s, mode, budget=args.budget, workers=args.workers)
        print(_dump({"mode": mode.value, "s": args.s, "decision": decision}))
    return EXIT_OK


def cmd_mis(args) -> int:
    g = _load(args)
    out = max_independent_set(g).to_json()
    if args.c is not None:
        out["c"] = args.c
        out["decision"] = out["k"] >= args.c
    print(_dump(out))
    return EXIT_OK


def _source(g: Graph, args) -> Graph:
    if args.connectify and not is_connected(g):
        return connectify(g)
    return g


def cmd_reduce(args) -> int:
    g = _source(_load(args), args)
    rg = reduce(g)
    text = serialize_graph(rg.graph, args.format)
    labels = rg.labeling_json()
    if args.out:
        out = Path(args.out)
        out.write_text(text)
        Path(f"{out}.labels.json").write_text(_dump(labels) + "\n")
        print(_dump({"vertices": rg.graph.n, "edges": rg.graph.m, "epsilon": rg.epsilon, "path": str(out)}))
    elif args.json:
        print(_dump({"graph": text, "labels": labels}))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.n is None or args.seed is None:
        raise UsageError("gen needs --n and --seed")
    rng = corpus.SplitMix64(args.seed)
    try:
        g = corpus.random_connected_graph(args.n, args.p, rng)
    except corpus.ConnectivityError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(serialize_graph(g, args.format))
    return EXIT_OK


def _verify_corpus(args) -> list[Graph]:
    graphs: list[Graph] = []
    for path in args.graphs or []:
        graphs.append(_load(args, path))
    if args.graph:
        graphs.append(_load(args))
    if args.exhaustive_n is not None:
        for n in range(2, args.exhaustive_n + 1):
            graphs.extend(corpus.connected_graphs(n))
    if args.random:
        if args.n is None:
            raise UsageError("--random needs --n")
        seed = 0 if args.seed is None else args.seed
        try:
            graphs.extend(corpus.random_connected_graphs(args.count, args.n, args.p, seed, args.max_edges))
        except corpus.ConnectivityError as exc:
            raise UsageError(str(exc)) from None
    if not graphs:
        raise UsageError("verify needs --graph, --exhaustive-n or --random")
    return graphs


def _oracle_agrees(g: Graph, cap: int) -> bool:
    for mode in Mode:
        if failed_forcing_number(g, mode).value != failed_forcing_number_bruteforce(g, mode, cap=cap).value:
            return False
    return True


def cmd_verify(args) -> int:
    graphs = _verify_corpus(args)
    passed = failed = skipped = 0
    records = []
    for i, g in enumerate(graphs):
        rec: dict = {"instance": i, "n": g.n, "edges": [list(e) for e in g.edges()]}
        start = time.perf_counter()
        try:
            cert = verify_theorem(_source(g, args), budget=args.budget, workers=args.workers)
        except BudgetExceeded as exc:
            rec.update(status="skip", reason=str(exc))
            skipped += 1
        except ValueError as exc:
            rec.update(status="skip", reason=str(exc))
            skipped += 1
        else:
            ok = cert.verdict
            rec["certificate"] = cert.to_json()
            if args.oracle:
                if g.n <= args.oracle_cap:
                    agree = _oracle_agrees(g, args.oracle_cap)
                    rec["oracle"] = agree
                    ok = ok and agree
                else:
                    rec["oracle"] = None
            rec["status"] = "pass" if ok else "fail"
            if ok:
                passed += 1
            else:
                failed += 1
        if not args.deterministic:
            rec["seconds"] = round(time.perf_counter() - start, 6)
        records.append(rec)

    total = len(graphs)
    summary = f"passed {passed}/{total}"
    if skipped:
        summary += f" (skipped {skipped})"
    if args.json:
        print(_dump({"instances": records, "passed": passed, "failed": failed, "skipped": skipped, "total": total}))
    else:
        for rec in records:
            print(_dump(rec))
        print(summary)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


COMMANDS = {
    "closure": cmd_closure,
    "stalled": cmd_stalled,
    "failed": cmd_failed,
    "decide": cmd_decide,
    "reduce": cmd_reduce,
    "mis": cmd_mis,
    "gen": cmd_gen,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", metavar="PATH", help="graph file ('-' for stdin)")
    common.add_argument("--format", choices=FORMATS, default="edgelist")
    common.add_argument("--mode", choices=["standard", "skew", "both"], default="standard")
    common.add_argument("--filled", default="", metavar="IDS", help="comma-separated filled vertex ids")
    common.add_argument("--s", type=int, help="stalled-set size threshold")
    common.add_argument("--c", type=int, help="independent-set size threshold")
    common.add_argument("--connectify", action="store_true", help="add a universal vertex to disconnected input")
    common.add_argument("--seed", type=int)
    common.add_argument("--count", type=int, default=1)
    common.add_argument("--n", type=int)
    common.add_argument("--p", type=float, default=0.5)
    common.add_argument("--max-edges", type=int, help="random corpus: discard graphs with more edges")
    common.add_argument("--oracle", action="store_true", help="cross-check sources with the brute-force oracle")
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    common.add_argument("--budget", type=int, help="maximum subset checks per search")
    common.add_argument("--workers", type=int, default=1, help="processes per complement search")
    common.add_argument("--deterministic", action="store_true", help="omit timing from reports")
    common.add_argument("--json", action="store_true")
    common.add_argument("--out", metavar="PATH", help="reduce: write gadget here plus PATH.labels.json")

    parser = argparse.ArgumentParser(prog="zeroforce", description="Failed zero forcing toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "verify":
            p.add_argument("graphs", nargs="*", metavar="FILE")
            p.add_argument("--exhaustive-n", type=int, metavar="N", help="all connected graphs with 2..N vertices")
            p.add_argument("--random", action="store_true")
    return parser


def _validate(args) -> None:
    for name in ("s", "c", "budget", "seed"):
        value = getattr(args, name)
        if value is not None and value < 0:
            raise UsageError(f"--{name} must be non-negative")
    if args.seed is not None and args.seed >= 1 << 64:
        raise UsageError("--seed must fit in 64 bits")
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    if not 0.0 <= args.p <= 1.0:
        raise UsageError("--p must be between 0 and 1")


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _validate(args)
        return COMMANDS[args.command](args)
    except (UsageError, GraphFormatError, EmptyGraphError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
