"""Command-line front end.

Machine-readable JSON goes to stdout, human-readable summaries to stderr.
Every run emits a manifest (command, arguments, seed, version, input digest,
timestamps); with identical arguments the numeric payload is byte-identical
across runs, timestamps and runtimes aside. Sub-seeds are split from --seed
with numpy's SeedSequence(seed).spawn, in argument order.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__, io
from .constructions import (
    BlowUpSpec,
    complete_bipartite,
    cycle,
    petersen,
    random_graph,
)
from .counting import count_fast, count_oracle, count_rooted
from .graph import Graph
from .search import exhaustive_max, local_search_max
from .suites import run_suites


@dataclass
class RunManifest:
    command: str
    args: dict
    seed: int | None
    version: str
    started_at: str
    finished_at: str = ""
    input_digest: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "args": self.args,
            "seed": self.seed,
            "version": self.version,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "input_digest": self.input_digest,
        }


def _now() -> str:
    return time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime()) + "Z"


def _parse_probability(text: str) -> float:
    if "/" in text:
        return float(Fraction(text))
    return float(text)


def parse_construct(spec: str, seed: int | None = None) -> Graph:
    """Build a graph from the construct mini-language.

    cycle:K | kbipartite:A,B | blowup:CK:t | iterated-blowup:CK:depth=M |
    random:N,P | petersen
    """
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "cycle" and len(parts) == 2:
            return cycle(int(parts[1]))
        if kind == "kbipartite" and len(parts) == 2:
            a, b = (int(t) for t in parts[1].split(","))
            return complete_bipartite(a, b)
        if kind == "blowup" and len(parts) == 3:
            base_k = int(parts[1].removeprefix("C"))
            t = int(parts[2])
            return BlowUpSpec(base_k, tuple([t] * base_k)).build()
        if kind == "iterated-blowup" and len(parts) == 3:
            base_k = int(parts[1].removeprefix("C"))
            if not parts[2].startswith("depth="):
                raise ValueError
            return BlowUpSpec(base_k, depth=int(parts[2].removeprefix("depth="))).build()
        if kind == "random" and len(parts) == 2:
            n_text, p_text = parts[1].split(",")
            if seed is None:
                raise ValueError("random construct needs --seed")
            return random_graph(int(n_text), _parse_probability(p_text), seed)
        if kind == "petersen" and len(parts) == 1:
            return petersen()
    except ValueError as exc:
        if str(exc):
            raise
    raise ValueError(f"cannot parse construct spec {spec!r}")


def _load_input(path: str) -> tuple[Graph, dict]:
    with open(path, "rb") as fh:
        raw = fh.read()
    digest = {path: hashlib.sha256(raw).hexdigest()}
    return io.loads(raw.decode("ascii")), digest


def _emit(manifest: RunManifest, report: dict, out_path: str | None) -> None:
    manifest.finished_at = _now()
    payload = json.dumps(
        {"manifest": manifest.to_json_dict(), "report": report},
        indent=2, sort_keys=True,
    )
    print(payload)
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(payload + "\n")


def _get_graph(args, seed: int | None) -> tuple[Graph, dict]:
    if bool(args.input) == bool(args.construct):
        raise SystemExit("exactly one of --input and --construct is required")
    if args.input:
        return _load_input(args.input)
    return parse_construct(args.construct, seed), {}


def cmd_count(args) -> int:
    manifest = RunManifest(
        "count", {k: v for k, v in vars(args).items() if k != "func"},
        args.seed, __version__, _now(),
    )
    g, digest = _get_graph(args, args.seed)
    manifest.input_digest = digest
    t0 = time.perf_counter()
    if args.mode == "oracle":
        report = count_oracle(g, args.k)
    else:
        report = count_fast(g, args.k, threads=args.threads)
    payload = report.to_json_dict()
    payload["n"] = g.n
    payload["m"] = g.num_edges
    payload["mode"] = args.mode
    payload["runtime_ms"] = (time.perf_counter() - t0) * 1000
    if args.roots:
        roots = (
            range(g.n) if args.roots == "all"
            else [int(t) for t in args.roots.split(",")]
        )
        payload["rooted"] = {str(v): count_rooted(g, args.k, v) for v in roots}
    if args.check:
        other = count_oracle(g, args.k) if args.mode == "fast" else count_fast(g, args.k)
        payload["check_total"] = other.total
        payload["check_agrees"] = other.total == report.total
        if not payload["check_agrees"]:
            _emit(manifest, payload, args.out)
            print("count check FAILED: modes disagree", file=sys.stderr)
            return 1
    _emit(manifest, payload, args.out)
    print(
        f"induced {args.k}-cycles: {report.total} (n={g.n}, mode={args.mode})",
        file=sys.stderr,
    )
    return 0


def cmd_search(args) -> int:
    manifest = RunManifest(
        "search", {k: v for k, v in vars(args).items() if k != "func"},
        args.seed, __version__, _now(),
    )
    if args.mode == "exhaustive":
        result = exhaustive_max(args.n, args.k, allow_large=args.allow_large)
    else:
        result = local_search_max(args.n, args.k, budget=args.budget, seed=args.seed or 0)
    _emit(manifest, result.to_json_dict(), args.out)
    print(
        f"best induced {args.k}-cycle count on n={args.n}: {result.best_count} "
        f"({'exact' if result.exhaustive else 'lower bound'})",
        file=sys.stderr,
    )
    return 0


def cmd_verify(args) -> int:
    manifest = RunManifest(
        "verify", {k: v for k, v in vars(args).items() if k != "func"},
        args.seed, __version__, _now(),
    )
    suites = run_suites(args.suite)
    report = {"suites": suites, "passed": all(s["passed"] for s in suites)}
    _emit(manifest, report, args.out)
    for s in suites:
        status = "ok" if s["passed"] else "FAILED"
        print(f"suite {s['suite']}: {status} ({len(s['checks'])} checks)", file=sys.stderr)
    return 0 if report["passed"] else 1


def cmd_construct(args) -> int:
    manifest = RunManifest(
        "construct", {k: v for k, v in vars(args).items() if k != "func"},
        args.seed, __version__, _now(),
    )
    g = parse_construct(args.construct, args.seed)
    text = io.to_graph6(g) if args.format == "graph6" else io.to_edge_list_text(g)
    report = {"n": g.n, "m": g.num_edges, "format": args.format, "graph": text.strip()}
    _emit(manifest, report, args.out)
    print(f"constructed {args.construct}: n={g.n}, m={g.num_edges}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclecount",
        description="Exact induced k-cycle counting, search, and verification",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_count = sub.add_parser("count", help="count induced k-cycles in one graph")
    p_count.add_argument("--k", type=int, required=True, help="cycle length")
    p_count.add_argument("--input", help="graph file (graph6 or edge list, autodetected)")
    p_count.add_argument("--construct", help="construct mini-language spec")
    p_count.add_argument("--mode", choices=("fast", "oracle"), default="fast")
    p_count.add_argument("--roots", help="comma-separated roots or 'all'")
    p_count.add_argument("--check", action="store_true",
                         help="run both modes and compare")
    p_count.add_argument("--seed", type=int, help="seed for random constructs")
    p_count.add_argument("--threads", type=int, default=1)
    p_count.add_argument("--out", help="also write the JSON report here")
    p_count.set_defaults(func=cmd_count)

    p_search = sub.add_parser("search", help="extremal search for the max count")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--k", type=int, required=True)
    p_search.add_argument("--mode", choices=("exhaustive", "local"), default="exhaustive")
    p_search.add_argument("--budget", type=int, default=1000)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--allow-large", action="store_true",
                          help="permit exhaustive n=8")
    p_search.add_argument("--out")
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", default="all",
                          choices=("analytic", "bounds", "identities", "headline", "all"))
    p_verify.add_argument("--seed", type=int, help="unused; suites are pinned")
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=cmd_verify)

    p_con = sub.add_parser("construct", help="emit a constructed graph")
    p_con.add_argument("--construct", required=True)
    p_con.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p_con.add_argument("--seed", type=int)
    p_con.add_argument("--out")
    p_con.set_defaults(func=cmd_construct)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
