"""Tabu edge-flip search for (p,q)-graphs and an on-disk witness catalogue."""

from __future__ import annotations

import json
import logging
import random
from dataclasses import asdict, dataclass, field
from pathlib import Path

from folkman import kernels
from folkman.graph import Graph, complement, from_graph6, to_graph6
from folkman.invariants import clique_number, independence_number
from folkman.ramsey import ramsey_interval

log = logging.getLogger(__name__)


class ImpossibleTargetError(ValueError):
    """The requested order is at least the known Ramsey number."""


@dataclass
class RamseyWitness:
    graph: Graph
    p: int
    q: int = 3
    provenance: dict = field(default_factory=lambda: {"kind": "constructed"})
    verified: bool = False

    @property
    def n(self) -> int:
        return self.graph.n

    def to_dict(self) -> dict:
        return {
            "graph6": to_graph6(self.graph),
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "provenance": self.provenance,
            "verified": self.verified,
        }


def verify_witness(w: RamseyWitness) -> bool:
    """Recompute clique and independence numbers and set ``w.verified``."""
    w.verified = clique_number(w.graph) < w.p and independence_number(w.graph) < w.q
    return w.verified


@dataclass
class MinerConfig:
    n: int
    p: int
    q: int = 3
    max_restarts: int = 200
    max_flips: int = 20000
    seed: int = 0
    w_clique: int = 1
    w_indep: int = 1
    tabu_tenure: int = 7
    plateau: int = 500
    density: float | None = None
    count_cap: int = 1 << 20

    def __post_init__(self):
        for name in ("n", "p", "q", "max_restarts", "max_flips", "w_clique", "w_indep", "plateau"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class MinerStats:
    restarts: int = 0
    flips: int = 0
    best_objective: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def check_target(n: int, p: int, q: int) -> bool:
    """True if a (p,q)-graph of order ``n`` is known to exist, False if unknown.

    Raises ImpossibleTargetError when ``n >= R(p,q)`` for a known value.
    """
    iv = ramsey_interval(p, q)
    if iv is None:
        return False
    lo, hi = iv
    if n >= hi:
        raise ImpossibleTargetError(f"no ({p},{q})-graph on {n} vertices: R({p},{q}) <= {hi}")
    return n < lo


def _objective(rows, crows, n, cfg):
    full = (1 << n) - 1
    c = kernels.count_cliques(rows, full, cfg.p, 0)
    i = kernels.count_cliques(crows, full, cfg.q, 0)
    return c, i


def _random_graph(rng: random.Random, n: int, density: float):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def _default_density(p: int, q: int) -> float:
    # balance the two forbidden structures: edge density ~ (q-1)/(p+q-2)
    return (p - 1) / (p + q - 2)


def mine(cfg: MinerConfig, stats: MinerStats | None = None) -> RamseyWitness | None:
    """Search for a (p,q)-graph on ``cfg.n`` vertices.

    Each step evaluates every edge toggle, takes the best non-tabu one
    (aspiration overrides tabu when it beats the restart's best), and
    restarts from a fresh random graph after ``plateau`` steps without
    improvement. Ties are broken with the seeded RNG, so a fixed config
    always returns the same graph.
    """
    check_target(cfg.n, cfg.p, cfg.q)
    stats = stats if stats is not None else MinerStats()
    n = cfg.n
    rng = random.Random(cfg.seed)
    density = cfg.density if cfg.density is not None else _default_density(cfg.p, cfg.q)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    full = (1 << n) - 1
    if n < 2:
        rows = [0] * n
        g = Graph._trusted(n, tuple(rows))
        w = RamseyWitness(g, cfg.p, cfg.q, {"kind": "mined", "seed": cfg.seed, "restart": 0, "flips": 0})
        return w if verify_witness(w) else None
    for restart in range(cfg.max_restarts):
        stats.restarts = restart + 1
        rows = _random_graph(rng, n, density)
        crows = [full ^ r ^ (1 << v) for v, r in enumerate(rows)]
        nc, ni = _objective(rows, crows, n, cfg)
        obj = cfg.w_clique * nc + cfg.w_indep * ni
        best = obj
        since_best = 0
        tabu_until = {}
        for step in range(cfg.max_flips):
            if obj == 0:
                break
            deltas = kernels.flip_deltas(rows, crows, n, cfg.p, cfg.q, cfg.count_cap)
            choice = None
            choice_val = None
            ties = []
            for idx, pair in enumerate(pairs):
                val = cfg.w_clique * deltas[2 * idx] + cfg.w_indep * deltas[2 * idx + 1]
                if tabu_until.get(idx, -1) >= step and obj + val >= best:
                    continue
                if choice_val is None or val < choice_val:
                    choice_val = val
                    ties = [idx]
                elif val == choice_val:
                    ties.append(idx)
            if not ties:
                break
            choice = ties[0] if len(ties) == 1 else ties[rng.randrange(len(ties))]
            u, v = pairs[choice]
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
            crows[u] ^= 1 << v
            crows[v] ^= 1 << u
            stats.flips += 1
            tabu_until[choice] = step + cfg.tabu_tenure
            dc, di = deltas[2 * choice], deltas[2 * choice + 1]
            if cfg.count_cap and (abs(dc) >= cfg.count_cap or abs(di) >= cfg.count_cap):
                nc, ni = _objective(rows, crows, n, cfg)
            else:
                nc += dc
                ni += di
            obj = cfg.w_clique * nc + cfg.w_indep * ni
            if obj < best:
                best = obj
                since_best = 0
            else:
                since_best += 1
                if since_best >= cfg.plateau:
                    break
        if stats.best_objective is None or best < stats.best_objective:
            stats.best_objective = best
        if obj == 0:
            g = Graph._trusted(n, tuple(rows))
            w = RamseyWitness(
                g,
                cfg.p,
                cfg.q,
                {"kind": "mined", "seed": cfg.seed, "restart": restart, "flips": stats.flips},
            )
            if verify_witness(w):
                log.info("mined (%d,%d)-graph on %d vertices after %d flips", cfg.p, cfg.q, n, stats.flips)
                return w
        log.debug("restart %d ended with objective %d", restart, obj)
    return None


# --- catalogue ------------------------------------------------------------


class CatalogError(RuntimeError):
    pass


class Catalog:
    """Witness store: ``p{p}_q{q}_n{n}.g6`` plus a ``.json`` metadata sidecar.

    The ``.g6`` file holds one graph6 line per stored witness; the sidecar
    holds one metadata record per line of the ``.g6`` file.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def _paths(self, p: int, q: int, n: int) -> tuple[Path, Path]:
        stem = f"p{p}_q{q}_n{n}"
        return self.root / f"{stem}.g6", self.root / f"{stem}.json"

    def store(self, w: RamseyWitness) -> None:
        if not verify_witness(w):
            raise CatalogError(f"refusing to store unverified ({w.p},{w.q})-witness on {w.n} vertices")
        self.root.mkdir(parents=True, exist_ok=True)
        g6_path, meta_path = self._paths(w.p, w.q, w.n)
        lines = g6_path.read_text().split() if g6_path.exists() else []
        meta = json.loads(meta_path.read_text()) if meta_path.exists() else []
        code = to_graph6(w.graph)
        if code in lines:
            return
        lines.append(code)
        meta.append({"graph6": code, "provenance": w.provenance})
        g6_path.write_text("".join(line + "\n" for line in lines))
        meta_path.write_text(json.dumps(meta, indent=1, sort_keys=True) + "\n")

    def load(self, p: int, q: int, n: int) -> list[RamseyWitness]:
        g6_path, meta_path = self._paths(p, q, n)
        if not g6_path.exists():
            return []
        meta = json.loads(meta_path.read_text()) if meta_path.exists() else []
        prov = {m["graph6"]: m["provenance"] for m in meta}
        out = []
        for code in g6_path.read_text().split():
            w = RamseyWitness(from_graph6(code), p, q, prov.get(code, {"kind": "catalog"}))
            if not verify_witness(w):
                raise CatalogError(f"catalogue entry {code} in {g6_path} fails verification")
            out.append(w)
        return out

    def lookup(self, p: int, n: int, q: int = 3) -> RamseyWitness | None:
        iv = ramsey_interval(p, q)
        if iv is not None and n >= iv[1]:
            return None
        found = self.load(p, q, n)
        return found[0] if found else None

    def ingest(self, path: str | Path, p: int, q: int = 3) -> list[RamseyWitness]:
        """Verify and store every graph6 line of an external file."""
        stored = []
        for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith(">>graph6<<") and len(line) == 10:
                continue
            g = from_graph6(line)
            w = RamseyWitness(g, p, q, {"kind": "catalog", "source": str(path), "line": lineno})
            if verify_witness(w):
                self.store(w)
                stored.append(w)
            else:
                log.warning("%s:%d is not a (%d,%d)-graph; skipped", path, lineno, p, q)
        return stored


def complement_witness(w: RamseyWitness) -> RamseyWitness:
    """The same witness read as a (q,p)-graph."""
    out = RamseyWitness(complement(w.graph), w.q, w.p, dict(w.provenance))
    verify_witness(out)
    return out
