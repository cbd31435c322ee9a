"""Explicit witness graphs for vertex Folkman upper bounds, checked by the exact solvers."""

from __future__ import annotations

from dataclasses import dataclass, field

from folkman.graph import Graph, complete, cycle, join, mycielskian, to_graph6
from folkman.invariants import chromatic_number, clique_number, independence_number, is_colorable
from folkman.miner import RamseyWitness, verify_witness
from folkman.ramsey import ramsey_interval

__all__ = [
    "ConstructionCertificate",
    "PreconditionError",
    "dirac_witness",
    "double_c5_witness",
    "triple_c5_witness",
    "mycielskian",
    "ramsey_join_witness",
]


class PreconditionError(ValueError):
    pass


@dataclass
class ConstructionCertificate:
    """A built graph with the invariants it is claimed to have.

    ``claimed`` maps ``chi``/``cl``/``order`` to either an exact value
    (``("==", v)``) or a one-sided bound (``(">=", v)`` / ``("<=", v)``).
    ``verified`` is set only after the exact solvers confirm every claim.
    """

    graph: Graph
    claimed: dict
    context: dict
    measured: dict = field(default_factory=dict)
    verified: bool = False
    assumptions: list[str] = field(default_factory=list)

    @property
    def conditional(self) -> bool:
        return bool(self.assumptions)

    def verify(self) -> bool:
        g = self.graph
        ok = True
        for key, (op, value) in self.claimed.items():
            if key == "order":
                got = g.n
                holds = _compare(got, op, value)
            elif key == "cl":
                got = clique_number(g)
                holds = _compare(got, op, value)
            elif key == "chi":
                if op == "==":
                    got = chromatic_number(g)
                    holds = got == value
                elif op == ">=":
                    # refute a (value-1)-colouring rather than solve exactly
                    holds = not is_colorable(g, value - 1)
                    got = f">={value}" if holds else f"<{value}"
                else:
                    holds = is_colorable(g, value)
                    got = f"<={value}" if holds else f">{value}"
            else:
                raise KeyError(key)
            self.measured[key] = got
            ok = ok and holds
        self.verified = ok
        return ok

    def to_dict(self) -> dict:
        return {
            "graph6": to_graph6(self.graph),
            "claimed": {k: [op, v] for k, (op, v) in self.claimed.items()},
            "measured": self.measured,
            "verified": self.verified,
            "conditional": self.conditional,
            "assumptions": self.assumptions,
            "context": self.context,
        }


def _compare(got, op, value):
    return {"==": got == value, ">=": got >= value, "<=": got <= value}[op]


def _cert(graph, chi, cl, order, context, verify):
    cert = ConstructionCertificate(graph, {"chi": ("==", chi), "cl": ("==", cl), "order": ("==", order)}, context)
    if verify:
        cert.verify()
    return cert


def dirac_witness(r: int, verify: bool = True) -> ConstructionCertificate:
    """``K_{r-2} + C5``: chromatic number r+1, clique number r, r+3 vertices."""
    if r < 2:
        raise PreconditionError(f"needs r >= 2, got {r}")
    g = join(complete(r - 2), cycle(5))
    return _cert(g, r + 1, r, r + 3, {"family": "K_{r-2}+C5", "r": r}, verify)


def double_c5_witness(r: int, verify: bool = True) -> ConstructionCertificate:
    """``K_{r-5} + C5 + C5``: chromatic number r+1, clique number r-1, r+5 vertices."""
    if r < 5:
        raise PreconditionError(f"needs r >= 5, got {r}")
    g = join(complete(r - 5), cycle(5), cycle(5))
    return _cert(g, r + 1, r - 1, r + 5, {"family": "K_{r-5}+C5+C5", "r": r}, verify)


def triple_c5_witness(r: int, verify: bool = True) -> ConstructionCertificate:
    if r < 8:
        raise PreconditionError(f"needs r >= 8, got {r}")
    g = join(complete(r - 8), cycle(5), cycle(5), cycle(5))
    return _cert(g, r + 1, r - 2, r + 7, {"family": "K_{r-8}+C5+C5+C5", "r": r}, verify)


def ramsey_join_witness(m: int, k: int, r: int, p: RamseyWitness, verify: bool = True) -> ConstructionCertificate:
    """``K_{r-m+1} + P`` for a graph P on 2m-1 vertices with cl <= m-k-1 and alpha <= 2.

    Such a P exists whenever 2m-1 < R(m-k,3). Since alpha(P) <= 2 forces
    chi(P) >= m, the join has chromatic number at least r+1 and clique number
    at most r-k on r+m vertices, which bounds F_v(2_r; r-k+1) by r+m.
    """
    if m < k + 3:
        raise PreconditionError(f"needs m >= k+3, got m={m}, k={k}")
    if r < m - 1:
        raise PreconditionError(f"needs r >= m-1, got r={r}, m={m}")
    assumptions = []
    iv = ramsey_interval(m - k, 3)
    if iv is None:
        assumptions.append(f"R({m - k},3) > {2 * m - 1}")
    else:
        lo, hi = iv
        if hi <= 2 * m - 1:
            raise PreconditionError(f"2m-1 = {2 * m - 1} is not below R({m - k},3) = {hi}")
        if lo <= 2 * m - 1:
            assumptions.append(f"R({m - k},3) > {2 * m - 1} (known range {lo}..{hi})")
    g_p = p.graph
    if g_p.n != 2 * m - 1:
        raise PreconditionError(f"P must have {2 * m - 1} vertices, got {g_p.n}")
    if clique_number(g_p) > m - k - 1 or independence_number(g_p) > 2:
        raise PreconditionError("P fails cl(P) <= m-k-1 and alpha(P) <= 2")
    verify_witness(p)
    g = join(complete(r - m + 1), g_p)
    cert = ConstructionCertificate(
        g,
        {"chi": (">=", r + 1), "cl": ("<=", r - k), "order": ("==", r + m)},
        {"family": "K_{r-m+1}+P", "m": m, "k": k, "r": r, "P": to_graph6(g_p), "P_provenance": p.provenance},
        assumptions=assumptions,
    )
    if verify:
        cert.verify()
    return cert
