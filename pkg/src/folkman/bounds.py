"""Lower and upper bounds for vertex and edge Folkman numbers.

All-2 numbers are indexed by ``(r, k)`` with ``q = r - k + 1``. Bounds that
hinge on the open value R(10,3) are reported once unconditionally and once
per branch, each branch carrying its assumption.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Sequence

from folkman.arrowing import NonexistenceError, normalize_pattern
from folkman.ramsey import RamseyTableEntry, multicolor_ramsey, ramsey_interval, ramsey_lookup

R10_SMALL = "R(10,3) <= 41"
R10_LARGE = "R(10,3) > 41"

__all__ = [
    "BoundRecord",
    "RamseyTableEntry",
    "all2_bounds",
    "all2_lower_bound",
    "all2_upper_bound",
    "bound_grid",
    "edge_lower_bound",
    "general_vertex_lower_bound",
    "join_bound_m",
    "m_parameter",
    "q_descent_chain",
    "ramsey_lookup",
]


@dataclass
class BoundRecord:
    r: int | None
    k: int | None
    q: int
    lower: int
    justification: str
    upper: int | None = None
    upper_witness: str | None = None
    assumptions: list[str] = field(default_factory=list)
    pattern: tuple[int, ...] | None = None
    formula_lower: int | None = None
    branches: list["BoundRecord"] = field(default_factory=list)
    witness_graph6: str | None = None

    @property
    def equality(self) -> bool:
        return self.upper is not None and self.upper == self.lower

    @property
    def exact(self) -> int | None:
        return self.lower if self.equality else None

    def to_dict(self) -> dict:
        out = {
            "r": self.r,
            "k": self.k,
            "q": self.q,
            "lower": self.lower,
            "upper": self.upper,
            "equality": self.equality,
            "justification": self.justification,
            "upper_witness": self.upper_witness,
            "assumptions": self.assumptions,
        }
        if self.pattern is not None:
            out["pattern"] = list(self.pattern)
        if self.formula_lower is not None:
            out["formula_lower"] = self.formula_lower
        if self.witness_graph6 is not None:
            out["witness_graph6"] = self.witness_graph6
        if self.branches:
            out["branches"] = [b.to_dict() for b in self.branches]
        return out


def m_parameter(a: Sequence[int]) -> int:
    """``sum(a_i - 1) + 1``: the order of the smallest complete graph arrowing ``a``."""
    if any(x < 2 for x in a):
        raise ValueError(f"entries must be at least 2: {tuple(a)}")
    return sum(x - 1 for x in a) + 1


# --- all-2 lower bounds ---------------------------------------------------


def _check_rk(r: int, k: int) -> None:
    if k < -1:
        raise ValueError(f"k must be at least -1 (q >= r+2 is the trivial regime), got {k}")
    if r < k + 2:
        raise NonexistenceError(f"F_v(2_{r}; {r - k + 1}) does not exist: needs r >= k+2")


def _all2_lower_unconditional(r: int, k: int) -> tuple[int, str]:
    if k <= 5:
        return r + 2 * k + 3, "r+2k+3"
    if k == 6:
        if r >= 13:
            return r + 14, "r+14"
        return r + 15, "r+15 (strict step from k=5 since R(r-5,3) <= r+14)"
    if k == 7:
        return r + 16, "r+16"
    if k == 8:
        if r >= 16:
            return r + 17, "r+17"
        return r + 18, "r+18 (strict step from k=7 since R(r-7,3) < r+17)"
    if k == 9:
        if r >= 17:
            return r + 18, "r+18"
        return r + 19, "r+19 (strict step from k=8 since R(r-8,3) <= r+18)"
    if k == 10:
        return r + 20, "r+20"
    if k == 11:
        return r + 21, "r+21"
    if k == 12:
        return r + 23, "r+23"
    return r + k + 11, "r+k+11 (one step per k from k=12)"


def all2_lower_bound(r: int, k: int) -> BoundRecord:
    """Strongest lower bound on F_v(2_r; r-k+1), with R(10,3) branches for k = 11."""
    _check_rk(r, k)
    lower, why = _all2_lower_unconditional(r, k)
    rec = BoundRecord(r, k, r - k + 1, lower, why)
    if k == 11:
        rec.branches = [
            BoundRecord(r, k, r - k + 1, r + 21, "r+21", assumptions=[R10_LARGE]),
            BoundRecord(r, k, r - k + 1, r + 22, "r+22", assumptions=[R10_SMALL]),
        ]
    return rec


# --- all-2 upper bounds ---------------------------------------------------


def join_bound_m(k: int, assume: str | None = None) -> int | None:
    """Least ``m >= k+3`` with ``2m-1 < R(m-k,3)`` certain from the table.

    Intervals count only through their lower end, except that
    ``assume=R10_LARGE`` lets R(10,3) be taken as at least 42.
    """
    best = None
    for p in range(3, 12):
        m = p + k
        if m < k + 3:
            continue
        iv = ramsey_interval(p, 3)
        lo = iv[0]
        if p == 10 and assume == R10_LARGE:
            lo = max(lo, 42)
        if 2 * m - 1 < lo:
            if best is None or m < best:
                best = m
    return best


def _upper_candidates(r: int, k: int, assume: str | None):
    out = []
    if k == -1:
        out.append((r + 1, "K_{r+1}"))
    if k == 0 and r >= 2:
        out.append((r + 3, "K_{r-2}+C5"))
    if k == 1 and r >= 5:
        out.append((r + 5, "K_{r-5}+C5+C5"))
    if k == 2 and r >= 8:
        out.append((r + 7, "K_{r-8}+C5+C5+C5"))
    if k >= 0:
        m = join_bound_m(k, assume)
        if m is not None and r >= m - 1:
            out.append((r + m, f"K_{{r-m+1}}+P, P an ({m - k},3)-graph on {2 * m - 1} vertices, m={m}"))
    return out


def _best_upper(r, k, assume=None):
    cands = _upper_candidates(r, k, assume)
    if not cands:
        return None, None
    return min(cands, key=lambda c: c[0])


def all2_bounds(r: int, k: int) -> BoundRecord:
    """Lower bound plus the best construction-backed upper bound for F_v(2_r; r-k+1)."""
    rec = all2_lower_bound(r, k)
    rec.upper, rec.upper_witness = _best_upper(r, k)
    for b in rec.branches:
        assume = b.assumptions[0]
        b.upper, b.upper_witness = _best_upper(r, k, assume)
    return rec


def all2_upper_bound(r: int, k: int, witness=None, verify: bool = True) -> BoundRecord:
    """Upper bound for F_v(2_r; r-k+1) backed by a built and verified graph.

    For k in {-1, 0, 1} the witness is a complete graph or a join with C5s.
    Otherwise a Ramsey graph P on 2m-1 vertices is needed: pass a
    ``RamseyWitness`` as ``witness`` or ``witness="mine"`` to search for one.
    """
    from folkman import constructions
    from folkman.graph import complete, to_graph6
    from folkman.miner import MinerConfig, RamseyWitness, mine

    rec = all2_bounds(r, k)
    if rec.upper is None:
        raise ValueError(f"no construction gives an upper bound for r={r}, k={k}")
    kind = rec.upper_witness
    if kind == "K_{r+1}":
        g = complete(r + 1)
        rec.witness_graph6 = to_graph6(g)
        return rec
    if kind == "K_{r-2}+C5":
        cert = constructions.dirac_witness(r, verify)
    elif kind == "K_{r-5}+C5+C5":
        cert = constructions.double_c5_witness(r, verify)
    elif kind == "K_{r-8}+C5+C5+C5":
        cert = constructions.triple_c5_witness(r, verify)
    else:
        m = rec.upper - r
        if witness == "mine":
            witness = mine(MinerConfig(n=2 * m - 1, p=m - k, q=3))
            if witness is None:
                raise RuntimeError(f"miner found no ({m - k},3)-graph on {2 * m - 1} vertices")
        if not isinstance(witness, RamseyWitness):
            raise ValueError(f"a ({m - k},3)-graph on {2 * m - 1} vertices is required")
        cert = constructions.ramsey_join_witness(m, k, r, witness, verify)
    if verify and not cert.verified:
        raise RuntimeError(f"construction failed verification: {cert.measured}")
    rec.witness_graph6 = to_graph6(cert.graph)
    return rec


# --- general patterns -----------------------------------------------------


def _offset_bound(base: int, k: int) -> list[tuple[int, str, list[str]]]:
    """Lines ``F >= base + offset`` for q = base - k, as (bound, label, assumptions)."""
    if k <= 5:
        return [(base + 2 * k + 2, "+2k+2", [])]
    table = {6: 13, 7: 15, 8: 16, 9: 17, 10: 19}
    if k in table:
        return [(base + table[k], f"+{table[k]}", [])]
    if k == 11:
        return [(base + 20, "+20", []), (base + 21, "+21", [R10_SMALL])]
    return [(base + k + 10, "+k+10", [])]


def _reduced_bound(a, q, base, name):
    k = base - q
    pattern = tuple(a)
    if k < -1:
        return BoundRecord(None, k, q, base, f"{name} (q > {name})", upper=base, pattern=pattern)
    lines = _offset_bound(base, k)
    formula, label, _ = lines[0]
    proj = all2_lower_bound(base - 1, k)
    rec = BoundRecord(
        base - 1,
        k,
        q,
        max(formula, proj.lower),
        f"{name}{label}" if proj.lower <= formula else f"{name}{label}; all-2 projection {proj.justification}",
        pattern=pattern,
        formula_lower=formula,
    )
    if k == -1:
        rec.upper = base
    for bound, blabel, assumptions in lines[1:]:
        rec.branches.append(
            BoundRecord(base - 1, k, q, bound, f"{name}{blabel}", assumptions=assumptions, pattern=pattern)
        )
    return rec


def general_vertex_lower_bound(a: Sequence[int], q: int) -> BoundRecord:
    """Lower bound on F_v(a; q) through F_v(a; q) >= F_v(2_{m-1}; q).

    ``formula_lower`` is the uniform offset line in ``m`` and ``k = m - q``;
    ``lower`` also folds in the sharper all-2 bounds at ``r = m - 1``.
    """
    pattern = normalize_pattern(a)
    if not pattern:
        raise ValueError("pattern has no entries >= 2")
    if q <= max(pattern):
        raise NonexistenceError(f"F_v{tuple(a)};{q} does not exist: q must exceed {max(pattern)}")
    return _reduced_bound(pattern, q, m_parameter(pattern), "m")


def edge_lower_bound(a: Sequence[int], q: int) -> BoundRecord:
    """Lower bound on F_e(a; q) through chi >= R(a) for edge-arrowing graphs."""
    pattern = tuple(sorted(a, reverse=True))
    if any(x < 2 for x in pattern):
        raise ValueError(f"entries must be at least 2: {pattern}")
    if q <= max(pattern):
        raise NonexistenceError(f"F_e{pattern};{q} does not exist: q must exceed {max(pattern)}")
    big = multicolor_ramsey(pattern)
    if big is None:
        raise ValueError(f"R{pattern} is not tabulated exactly")
    return _reduced_bound(pattern, q, big, "R")


# --- chains ---------------------------------------------------------------


def q_descent_chain(q_hi: int, q_lo: int, r: int, start: int | None = None) -> BoundRecord:
    """Walk a lower bound on F_v(2_r; q_hi) down to q_lo.

    Each step q -> q-1 adds 1, or 2 when the current bound plus 1 already
    reaches R(q-1,3) (then the minimal graph must hold an independent triple).
    Valid for 4 <= q_lo < q_hi < r + 3.
    """
    if not q_lo < q_hi:
        raise ValueError(f"need q_lo < q_hi, got {q_lo}, {q_hi}")
    if q_lo < 3 or q_hi >= r + 3 or q_lo + 1 < 4:
        raise ValueError(f"need 4 <= q_lo+1 and q_hi < r+3, got q_lo={q_lo}, q_hi={q_hi}, r={r}")
    bound = start if start is not None else all2_lower_bound(r, r - q_hi + 1).lower
    steps = []
    for q in range(q_hi, q_lo, -1):
        iv = ramsey_interval(q - 1, 3)
        strict = iv is not None and bound + 1 >= iv[1]
        bound += 2 if strict else 1
        steps.append(f"q={q - 1}: {'+2' if strict else '+1'}")
    return BoundRecord(r, r - q_lo + 1, q_lo, bound, "chain " + ", ".join(steps))


# --- grid -----------------------------------------------------------------

GRID_COLUMNS = ["r", "k", "q", "lower", "upper", "equality", "justification", "assumptions"]


def bound_grid(r_min: int = 2, r_max: int = 30, k_min: int = -1, k_max: int = 15) -> list[dict]:
    """One row per (r, k) with r >= k+2, plus one row per R(10,3) branch."""
    rows = []
    for r in range(r_min, r_max + 1):
        for k in range(k_min, k_max + 1):
            if r < k + 2:
                continue
            rec = all2_bounds(r, k)
            for item in [rec, *rec.branches]:
                rows.append(
                    {
                        "r": r,
                        "k": k,
                        "q": r - k + 1,
                        "lower": item.lower,
                        "upper": item.upper,
                        "equality": item.equality,
                        "justification": item.justification
                        + (f"; upper {item.upper_witness}" if item.upper_witness else ""),
                        "assumptions": "; ".join(item.assumptions),
                    }
                )
    return rows


def grid_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=GRID_COLUMNS, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({**row, "upper": "" if row["upper"] is None else row["upper"]})
    return buf.getvalue()


def grid_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=1, sort_keys=True)


# Values quoted from the literature; bounds must never contradict them.
CITED_VALUES = [
    {"r": 3, "q": 3, "lower": 11, "upper": 11},
    {"r": 4, "q": 3, "lower": 22, "upper": 22},
    {"r": 5, "q": 4, "lower": 12, "upper": 16},
]
