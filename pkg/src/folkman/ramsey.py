"""Golden Ramsey-number data: the R(p,3) row and two multicolour constants."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

EXPECTED_SHA256 = "cb34f419d5fec51a91dd3073593e3002cb7e20df1ddf41c78cc03d8d808511b3"


class RamseyDataError(RuntimeError):
    pass


@dataclass(frozen=True)
class RamseyTableEntry:
    p: int
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_dict(self) -> dict:
        return {"p": self.p, "lower": self.lower, "upper": self.upper, "exact": self.exact}


def _parse(text: str) -> dict:
    raw = json.loads(text)
    digest = raw.pop("sha256")
    body = json.dumps(raw, sort_keys=True, separators=(",", ":"))
    actual = hashlib.sha256(body.encode()).hexdigest()
    if digest != EXPECTED_SHA256 or actual != EXPECTED_SHA256:
        raise RamseyDataError("ramsey.json checksum mismatch; table edits must update EXPECTED_SHA256")
    return raw


@lru_cache(maxsize=None)
def _load() -> dict:
    return _parse(resources.files("folkman").joinpath("data/ramsey.json").read_text())


def ramsey_lookup(p: int) -> RamseyTableEntry:
    """Known value or interval for R(p,3), 3 <= p <= 11."""
    for row in _load()["r_p3"]:
        if row["p"] == p:
            return RamseyTableEntry(row["p"], row["lower"], row["upper"])
    raise ValueError(f"R({p},3) is tabulated only for 3 <= p <= 11")


def ramsey_interval(p: int, q: int) -> tuple[int, int] | None:
    """Interval for the two-colour R(p,q), or None when not tabulated."""
    if p < 1 or q < 1:
        raise ValueError("Ramsey arguments must be positive")
    if p == 1 or q == 1:
        return 1, 1
    if p == 2:
        return q, q
    if q == 2:
        return p, p
    if q == 3 or p == 3:
        other = p if q == 3 else q
        if 3 <= other <= 11:
            e = ramsey_lookup(other)
            return e.lower, e.upper
    return None


def multicolor_ramsey(pattern) -> int | None:
    """Exact R(a_1,...,a_r) when tabulated.

    Entries equal to 1 make the value 1; entries equal to 2 can be dropped
    (a colour that may not contain an edge is simply unused).
    """
    if any(x == 1 for x in pattern):
        return 1
    a = sorted((x for x in pattern if x != 2), reverse=True)
    if not a:
        return 2 if pattern else 1
    if len(a) == 1:
        return a[0]
    if len(a) == 2:
        iv = ramsey_interval(a[0], a[1])
        if iv and iv[0] == iv[1]:
            return iv[0]
        return None
    for row in _load()["multicolor"]:
        if sorted(row["pattern"], reverse=True) == a:
            return row["value"]
    return None
