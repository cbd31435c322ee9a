"""Command-line entry point.

Results go to stdout (JSON unless ``--pretty``; CSV for ``table``) and are
byte-identical for identical arguments. One run manifest, carrying
timestamps and a digest of the result, goes to stderr.

Exit codes: 0 success, 1 negative answer, 2 usage error, 3 capacity refusal.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from folkman import __version__, bounds, constructions
from folkman.arrowing import NonexistenceError, edge_arrows, vertex_arrows
from folkman.enumeration import certify_folkman_value, default_workers, minimal_graph_properties
from folkman.graph import CapacityError, Graph, from_graph6, to_graph6
from folkman.invariants import invariant_report, order_bound_report
from folkman.miner import Catalog, ImpossibleTargetError, MinerConfig, MinerStats, RamseyWitness, mine

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    seed: int | None
    version: str = __version__
    started: str = ""
    finished: str = ""
    digest: str = ""
    exit_code: int = 0
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "subcommand": self.subcommand,
            "parameters": self.parameters,
            "seed": self.seed,
            "version": self.version,
            "started": self.started,
            "finished": self.finished,
            "digest": self.digest,
            "exit_code": self.exit_code,
            **self.extra,
        }


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="milliseconds")


# --- argument helpers ------------------------------------------------------


def _pattern(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"pattern must be comma-separated integers: {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("pattern is empty")
    return vals


def _graphs(args) -> list[Graph]:
    if args.graph6:
        return [from_graph6(args.graph6)]
    if args.graph6_file:
        lines = Path(args.graph6_file).read_text().splitlines()
        out = [from_graph6(s.strip()) for s in lines if s.strip() and s.strip() != ">>graph6<<"]
        if not out:
            raise UsageError(f"{args.graph6_file} holds no graphs")
        return out
    raise UsageError("one of --graph6 or --graph6-file is required")


def _one_graph(args) -> Graph:
    gs = _graphs(args)
    if len(gs) != 1:
        raise UsageError("this subcommand takes exactly one graph")
    return gs[0]


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    return default_workers()


# --- subcommands -----------------------------------------------------------
# Each returns (result, exit_code); result is JSON-serialisable.


def cmd_invariants(args):
    out = []
    for g in _graphs(args):
        rec = invariant_report(g).to_dict()
        rec["order_bounds"] = order_bound_report(g).to_dict()
        out.append(rec)
    return (out[0] if args.graph6 else out), EXIT_OK


def cmd_arrows(args):
    _require(args, "pattern")
    g = _one_graph(args)
    if args.kind == "vertex":
        verdict = vertex_arrows(g, args.pattern)
    else:
        verdict = edge_arrows(g, args.pattern)
    rec = verdict.to_dict()
    rec["graph6"] = to_graph6(g)
    return rec, EXIT_OK if verdict.arrows else EXIT_NEGATIVE


def cmd_construct(args):
    fam = args.family
    if fam == "mycielskian":
        g = constructions.mycielskian(_one_graph(args))
        rep = invariant_report(g)
        rec = {"family": fam, "graph6": to_graph6(g), "order": g.n, "cl": rep.clique_number, "chi": rep.chromatic_number}
        return rec, EXIT_OK
    _require(args, "r")
    if fam == "dirac":
        cert = constructions.dirac_witness(args.r)
    elif fam == "double-c5":
        cert = constructions.double_c5_witness(args.r)
    elif fam == "triple-c5":
        cert = constructions.triple_c5_witness(args.r)
    else:
        _require(args, "m", "k")
        g = _one_graph(args)
        p = RamseyWitness(g, args.m - args.k, 3, {"kind": "input"})
        cert = constructions.ramsey_join_witness(args.m, args.k, args.r, p)
    return cert.to_dict(), EXIT_OK if cert.verified else EXIT_NEGATIVE


def cmd_mine(args):
    _require(args, "p", "n")
    seed = args.seed if args.seed is not None else 0
    cfg = MinerConfig(n=args.n, p=args.p, q=args.q or 3, seed=seed, max_restarts=args.max_restarts)
    stats = MinerStats()
    try:
        w = mine(cfg, stats)
    except ImpossibleTargetError as exc:
        return {"found": False, "reason": str(exc)}, EXIT_NEGATIVE
    if w is None:
        return {"found": False, "stats": stats.to_dict()}, EXIT_NEGATIVE
    if args.catalog:
        Catalog(args.catalog).store(w)
    if args.out:
        Path(args.out).write_text(to_graph6(w.graph) + "\n")
    return {"found": True, "witness": w.to_dict(), "stats": stats.to_dict()}, EXIT_OK


def cmd_certify(args):
    _require(args, "pattern", "q", "n_cap")
    stream = open(args.stream, "w") if args.stream else None

    def on_level(order, level):
        if stream:
            for g in level:
                stream.write(json.dumps({"order": order, "graph6": to_graph6(g)}) + "\n")

    try:
        cert = certify_folkman_value(
            args.pattern,
            args.q,
            args.n_cap,
            workers=_threads(args),
            checkpoint_dir=args.checkpoint_dir,
            order_wall=args.order_wall,
            on_level=on_level,
        )
    finally:
        if stream:
            stream.close()
    rec = cert.to_dict()
    if cert.value is not None and all(x == 2 for x in cert.pattern):
        rec["minimal_graph_properties"] = minimal_graph_properties(cert).to_dict()
    return rec, EXIT_OK if cert.value is not None else EXIT_NEGATIVE


def cmd_table(args):
    if args.pattern is not None:
        _require(args, "q")
        fn = bounds.edge_lower_bound if args.edge else bounds.general_vertex_lower_bound
        return fn(args.pattern, args.q).to_dict(), EXIT_OK
    if args.r is not None and args.k is not None:
        return bounds.all2_bounds(args.r, args.k).to_dict(), EXIT_OK
    rows = bounds.bound_grid(args.r_min, args.r_max, args.k_min, args.k_max)
    return rows, EXIT_OK


def cmd_witness(args):
    _require(args, "p")
    cat = Catalog(args.catalog)
    if args.action == "lookup":
        _require(args, "n")
        w = cat.lookup(args.p, args.n, args.q or 3)
        if w is None:
            return {"found": False, "p": args.p, "q": args.q or 3, "n": args.n}, EXIT_NEGATIVE
        if args.out:
            Path(args.out).write_text(to_graph6(w.graph) + "\n")
        return {"found": True, "witness": w.to_dict()}, EXIT_OK
    if not args.graph6_file:
        raise UsageError("--graph6-file is required for ingest")
    stored = cat.ingest(args.graph6_file, args.p, args.q or 3)
    return {"stored": [w.to_dict() for w in stored]}, EXIT_OK if stored else EXIT_NEGATIVE


# --- rendering -------------------------------------------------------------


def _render_json(result) -> str:
    return json.dumps(result, sort_keys=True, indent=None if isinstance(result, list) else 1) + "\n"


def _render_pretty(result, indent=0) -> str:
    pad = "  " * indent
    if isinstance(result, dict):
        lines = []
        for k in sorted(result):
            v = result[k]
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, str)) for x in v):
                lines.append(f"{pad}{k}:")
                lines.append(_render_pretty(v, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines) + "\n"
    if isinstance(result, list):
        return "".join(_render_pretty(x, indent) + (f"{pad}--\n" if isinstance(x, dict) else "") for x in result)
    return f"{pad}{result}\n"


def _render_table(rows, fmt, pretty) -> str:
    if fmt == "json":
        return bounds.grid_json(rows) + "\n"
    if pretty:
        cols = bounds.GRID_COLUMNS
        cells = [[("" if r[c] is None else str(r[c])) for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        out = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
        out += ["  ".join(x.ljust(w) for x, w in zip(row, widths)) for row in cells]
        return "\n".join(line.rstrip() for line in out) + "\n"
    return bounds.grid_csv(rows)


# --- parser ----------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph6")
    common.add_argument("--graph6-file")
    common.add_argument("--pattern", type=_pattern)
    common.add_argument("--q", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--n-cap", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--pretty", action="store_true")
    common.add_argument("--out")

    ap = argparse.ArgumentParser(prog="folkman", description="Folkman number toolkit")
    ap.add_argument("--version", action="version", version=f"folkman {__version__}")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    sub.add_parser("invariants", parents=[common], help="clique, independence and chromatic numbers")

    p = sub.add_parser("arrows", parents=[common], help="decide vertex or edge arrowing")
    p.add_argument("kind", choices=["vertex", "edge"])

    p = sub.add_parser("construct", parents=[common], help="build and verify a witness family")
    p.add_argument("family", choices=["dirac", "double-c5", "triple-c5", "ramsey-join", "mycielskian"])
    p.add_argument("--m", type=int)

    p = sub.add_parser("mine", parents=[common], help="tabu search for a (p,q)-graph")
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-restarts", type=int, default=200)
    p.add_argument("--catalog")

    p = sub.add_parser("certify", parents=[common], help="exact Folkman value by enumeration")
    p.add_argument("--checkpoint-dir")
    p.add_argument("--order-wall", type=int, default=11)
    p.add_argument("--stream", help="write every enumerated class as JSONL")

    p = sub.add_parser("table", parents=[common], help="bound grid or a single bound record")
    p.add_argument("--r-min", type=int, default=2)
    p.add_argument("--r-max", type=int, default=30)
    p.add_argument("--k-min", type=int, default=-1)
    p.add_argument("--k-max", type=int, default=15)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--edge", action="store_true", help="edge Folkman bound for --pattern")

    p = sub.add_parser("witness", parents=[common], help="witness catalogue lookup or ingest")
    p.add_argument("action", choices=["lookup", "ingest"])
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--catalog", default="witnesses")
    return ap


COMMANDS = {
    "invariants": cmd_invariants,
    "arrows": cmd_arrows,
    "construct": cmd_construct,
    "mine": cmd_mine,
    "certify": cmd_certify,
    "table": cmd_table,
    "witness": cmd_witness,
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.threads is None and os.environ.get("FOLKMAN_THREADS"):
        args.threads = int(os.environ["FOLKMAN_THREADS"])
    params = {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(vars(args).items()) if k != "subcommand"}
    manifest = RunManifest(args.subcommand, params, args.seed, started=_now())

    error = None
    try:
        result, code = COMMANDS[args.subcommand](args)
    except NonexistenceError as exc:
        result, code = {"error": "nonexistence", "message": str(exc)}, EXIT_NEGATIVE
    except CapacityError as exc:
        result, code = {"error": "capacity", "message": str(exc)}, EXIT_CAPACITY
    except (UsageError, ValueError, OSError) as exc:
        error = str(exc)
        result, code = None, EXIT_USAGE

    if code == EXIT_USAGE:
        ap.print_usage(stderr)
        print(f"folkman: error: {error}", file=stderr)
        text = ""
    elif args.subcommand == "table" and isinstance(result, list):
        text = _render_table(result, args.format, args.pretty)
    elif args.pretty:
        text = _render_pretty(result)
    else:
        text = _render_json(result)

    if text:
        if args.out and args.subcommand not in ("mine", "witness"):
            Path(args.out).write_text(text)
        else:
            stdout.write(text)
    manifest.digest = hashlib.sha256(text.encode()).hexdigest()
    manifest.exit_code = code
    manifest.finished = _now()
    print(json.dumps({"manifest": manifest.to_dict()}, sort_keys=True), file=stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
