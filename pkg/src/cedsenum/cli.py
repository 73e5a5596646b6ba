"""Command-line interface.

Subcommands: ``enumerate`` (all solutions), ``kbest`` (best-first prefix),
``verify`` (oracle-backed structural checks), ``gen`` (seeded random
connected graphs), ``bench`` (delay measurements as CSV).

Solutions stream to standard output as they are found; stats go to standard
error (or ``--stats-file``) so pipelines stay clean.  Exit codes: 0 success,
1 usage error, 2 unreadable or malformed input, 3 visited-limit abort,
4 verification counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .approx import approx_min_ceds
from .ceds import enumerate_trivial, min_ceds_is_singleton, solution_line
from .corpus import random_connected_graph
from .enumeration import EnumerationStats, MaxVisitedExceeded, enumerate_all, enumerate_kbest
from .graph import Graph, GraphError, ParseError, read_graph, to_edge_list_text
from .oracle import (
    ORACLE_EDGE_CAP,
    TooLargeError,
    _kbest_prefix_witness,
    _path_size_witness,
    _strong_connectivity_witness,
    brute_force_minimal_ceds,
    build_supergraph,
)

_BENCH_HEADER = "n,m,delta,outputs,max_delay_s,mean_delay_s,expansions"


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    inputs: list[str] = field(default_factory=list)
    fmt: str = "edgelist"
    k: int | None = None
    n: int | None = None
    p: float = 0.5
    seed: int | None = None
    max_visited: int | None = None
    output: str = "both"
    trace: bool = False
    stats_file: str | None = None
    max_edges: int = ORACLE_EDGE_CAP


def _err(message: str) -> None:
    print(f"cedsenum: {message}", file=sys.stderr)


def _load_graph(cfg: RunConfig) -> Graph | None:
    try:
        return read_graph(cfg.input, cfg.fmt)
    except (ParseError, GraphError) as exc:
        _err(f"{cfg.input}: {exc}")
        return None
    except OSError as exc:
        _err(str(exc))
        return None


def _write_stats(cfg: RunConfig, payload: dict) -> None:
    if cfg.output not in ("stats", "both"):
        return
    text = json.dumps(payload, sort_keys=True)
    if cfg.stats_file:
        with open(cfg.stats_file, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=sys.stderr)


def _solution_sink(cfg: RunConfig, g: Graph):
    if cfg.output in ("solutions", "both"):
        def sink(sol):
            print(solution_line(g, sol), flush=True)
    else:
        def sink(sol):
            pass
    return sink


def _tracer(cfg: RunConfig, g: Graph):
    if not cfg.trace:
        return None

    def hook(sol, prov):
        print(f"{prov.trace()} -> {solution_line(g, sol)}", file=sys.stderr)

    return hook


def cmd_enumerate(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if g is None:
        return 2
    try:
        stats = enumerate_all(
            g, _solution_sink(cfg, g), max_visited=cfg.max_visited, on_insert=_tracer(cfg, g)
        )
    except MaxVisitedExceeded as exc:
        _err(str(exc))
        return 3
    _write_stats(cfg, stats.to_json_dict())
    return 0


def cmd_kbest(cfg: RunConfig) -> int:
    if cfg.k is None or cfg.k < 1:
        _err(f"kbest requires -k >= 1, got {cfg.k}")
        return 1
    g = _load_graph(cfg)
    if g is None:
        return 2
    payload: dict = {}
    if min_ceds_is_singleton(g) is None:
        seed = approx_min_ceds(g)
        payload["seed_size"] = seed.solution.size
        payload["seed_lower_bound"] = seed.lower_bound
        payload["seed_ratio_bound"] = str(seed.observed_ratio_bound)
    try:
        stats = enumerate_kbest(
            g, cfg.k, _solution_sink(cfg, g), max_visited=cfg.max_visited,
            on_insert=_tracer(cfg, g),
        )
    except MaxVisitedExceeded as exc:
        _err(str(exc))
        return 3
    payload.update(stats.to_json_dict())
    _write_stats(cfg, payload)
    return 0


def _row(name: str, status: str) -> None:
    print(f"{name:<24}{status}")


def cmd_verify(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if g is None:
        return 2
    if g.m > cfg.max_edges:
        _err(f"graph has m={g.m} edges, above the verification cap {cfg.max_edges}")
        return 2
    sols = brute_force_minimal_ceds(g, max_edges=cfg.max_edges)
    got: list = []
    enumerate_all(g, got.append)
    oracle_keys = {s.canonical_key for s in sols}
    got_keys = {s.canonical_key for s in got}
    if oracle_keys != got_keys:
        _row("oracle-equivalence", "FAIL")
        diff = sorted(oracle_keys ^ got_keys)[0]
        side = "missing from enumeration" if diff in oracle_keys else "not in oracle"
        sol = next(s for s in sols + got if s.canonical_key == diff)
        _err(f"counterexample: solution '{solution_line(g, sol)}' {side}")
        return 4
    _row("oracle-equivalence", f"PASS ({len(sols)} solutions)")

    if min_ceds_is_singleton(g) is not None:
        trivial = enumerate_trivial(g)
        if {s.canonical_key for s in trivial} != oracle_keys:
            _row("trivial-fast-path", "FAIL")
            _err("counterexample: trivial enumeration disagrees with the oracle")
            return 4
        max_size = max(s.size for s in trivial)
        _row("trivial-fast-path", f"PASS ({len(trivial)} solutions, max size {max_size})")
        _row("strong-connectivity", "SKIP (trivial instance)")
        _row("kbest-prefix-bound", "SKIP (trivial instance)")
        _row("path-size-bound", "SKIP (trivial instance)")
        return 0

    cache: dict = {}
    snapshot = build_supergraph(g, max_edges=cfg.max_edges, neighbor_cache=cache)
    pair = _strong_connectivity_witness(snapshot)
    if pair is not None:
        _row("strong-connectivity", "FAIL")
        _err(
            f"counterexample: no path from '{solution_line(g, pair[0])}' "
            f"to '{solution_line(g, pair[1])}'"
        )
        return 4
    _row(
        "strong-connectivity",
        f"PASS ({snapshot.node_count} nodes, {snapshot.arc_count} arcs)",
    )

    optimum = min(s.size for s in sols)
    c_obs = Fraction(approx_min_ceds(g).solution.size, optimum)
    factor = c_obs + 2
    prefix = _kbest_prefix_witness(g, factor, solutions=sols, neighbor_cache=cache)
    if prefix is not None:
        k, emitted_max, left_min = prefix
        _row("kbest-prefix-bound", "FAIL")
        _err(
            f"counterexample: after k={k} outputs, max emitted size {emitted_max} "
            f"> {factor} * smallest remaining size {left_min}"
        )
        return 4
    _row("kbest-prefix-bound", f"PASS (factor {factor})")

    bad = _path_size_witness(g, snapshot=snapshot)
    if bad is not None:
        _row("path-size-bound", "FAIL")
        _err(
            f"counterexample: '{solution_line(g, bad)}' unreachable within "
            f"the size bound"
        )
        return 4
    _row("path-size-bound", "PASS")
    return 0


def cmd_gen(cfg: RunConfig) -> int:
    if cfg.n is None or cfg.seed is None:
        _err("gen requires -n and --seed")
        return 1
    try:
        g = random_connected_graph(cfg.n, cfg.p, cfg.seed)
    except ValueError as exc:
        _err(str(exc))
        return 1
    sys.stdout.write(to_edge_list_text(g))
    sys.stdout.flush()
    return 0


def cmd_bench(cfg: RunConfig) -> int:
    if not cfg.inputs:
        _err("bench: no input files")
        return 1
    print(_BENCH_HEADER, flush=True)
    failed = False
    for path in cfg.inputs:
        try:
            g = read_graph(path, cfg.fmt)
            stats = enumerate_all(g, lambda sol: None, max_visited=cfg.max_visited)
        except MaxVisitedExceeded as exc:
            _err(f"bench: {path}: {exc}")
            failed = True
            continue
        except (ParseError, GraphError, OSError, ValueError) as exc:
            _err(f"bench: {path}: {exc}")
            failed = True
            continue
        print(
            f"{g.n},{g.m},{g.max_degree},{stats.outputs},"
            f"{stats.max_delay_s:.6f},{stats.mean_delay_s:.6f},{stats.expansions}",
            flush=True,
        )
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cedsenum",
        description="Enumerate minimal connected edge dominating sets.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist",
                        help="input graph format")
        sp.add_argument("--output", choices=("solutions", "stats", "both"), default="both",
                        help="which streams to emit")
        sp.add_argument("--stats-file", help="write stats JSON here instead of stderr")
        sp.add_argument("--max-visited", type=int,
                        help="abort once this many solutions are recorded")
        sp.add_argument("--trace", action="store_true",
                        help="log move provenance for each new solution to stderr")

    sp = sub.add_parser("enumerate", help="stream every minimal CEDS")
    sp.add_argument("input", help="edge-list file, or - for stdin")
    common(sp)

    sp = sub.add_parser("kbest", help="stream up to k solutions, smallest first")
    sp.add_argument("input", help="edge-list file, or - for stdin")
    sp.add_argument("-k", type=int, help="number of solutions to emit")
    common(sp)

    sp = sub.add_parser("verify", help="run the oracle-backed structural checks")
    sp.add_argument("input", help="edge-list file, or - for stdin")
    sp.add_argument("--max-edges", type=int, default=ORACLE_EDGE_CAP,
                    help="largest edge count the oracle will accept")
    sp.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")

    sp = sub.add_parser("gen", help="emit a seeded random connected graph")
    sp.add_argument("-n", type=int, help="number of vertices")
    sp.add_argument("-p", type=float, default=0.5, help="edge probability")
    sp.add_argument("--seed", type=int, help="random seed")

    sp = sub.add_parser("bench", help="enumerate each input, report delays as CSV")
    sp.add_argument("inputs", nargs="*", help="edge-list files")
    sp.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    sp.add_argument("--max-visited", type=int)

    return ap


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        inputs=list(getattr(args, "inputs", []) or []),
        fmt=getattr(args, "format", "edgelist"),
        k=getattr(args, "k", None),
        n=getattr(args, "n", None),
        p=getattr(args, "p", 0.5),
        seed=getattr(args, "seed", None),
        max_visited=getattr(args, "max_visited", None),
        output=getattr(args, "output", "both"),
        trace=getattr(args, "trace", False),
        stats_file=getattr(args, "stats_file", None),
        max_edges=getattr(args, "max_edges", ORACLE_EDGE_CAP),
    )


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "kbest": cmd_kbest,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = _config_from_args(args)
    try:
        return _COMMANDS[cfg.command](cfg)
    except TooLargeError as exc:
        _err(str(exc))
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
