"""Supplementary difference sets over Z_v.

An :class:`Sds` is a modulus plus an ordered tuple of base blocks.  Whether it
really is an SDS, and with which lambda, is decided by :func:`derive_params`
from the within-block difference table.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .seqcore import Block, format_block, make_block, parse_block, subset_to_sequence


class NotAnSdsError(ValueError):
    """Raised when the difference count is not constant on nonzero residues."""

    def __init__(self, message: str, residue: int):
        super().__init__(message)
        self.residue = residue


@dataclass(frozen=True)
class SdsParams:
    v: int
    k: tuple[int, ...]
    lam: int

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(x) for x in self.k))
        if self.v < 1 or self.lam < 0 or any(x < 0 or x > self.v for x in self.k):
            raise ValueError(f"invalid parameters {self}")

    @property
    def t(self) -> int:
        return len(self.k)

    @property
    def n(self) -> int:
        return sum(self.k) - self.lam

    def __str__(self) -> str:
        return f"({self.v};{','.join(map(str, self.k))};{self.lam})"


class XyPoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Sds:
    v: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(make_block(b, self.v) for b in self.blocks))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def to_record(self) -> dict:
        return {"v": self.v, "blocks": [list(b) for b in self.blocks]}

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    @classmethod
    def from_record(cls, rec: dict) -> Sds:
        if not isinstance(rec, dict) or set(rec) != {"v", "blocks"}:
            raise ValueError("SDS record needs exactly the fields 'v' and 'blocks'")
        v, blocks = rec["v"], rec["blocks"]
        if not isinstance(v, int) or not isinstance(blocks, list):
            raise ValueError("malformed SDS record")
        return cls(v, tuple(tuple(b) for b in blocks))

    @classmethod
    def from_json(cls, text: str) -> Sds:
        return cls.from_record(json.loads(text))


def difference_counts(S: Sds) -> np.ndarray:
    """counts[c] = number of ordered (a, b, i) with a, b in block i, a != b, a - b = c."""
    members = np.array([x for b in S.blocks for x in b], dtype=np.int64)
    offsets = np.cumsum([0] + [len(b) for b in S.blocks]).astype(np.int64)
    return kernels.difference_counts(members, offsets, S.v)


def derive_params(S: Sds) -> SdsParams:
    """Infer lambda from the blocks; raise :class:`NotAnSdsError` if none exists."""
    counts = difference_counts(S)
    lam = int(counts[1]) if S.v > 1 else 0
    for c in range(2, S.v):
        if counts[c] != lam:
            raise NotAnSdsError(
                f"not an SDS: residue {c} occurs {counts[c]} times, residue 1 occurs {lam} times",
                residue=c,
            )
    return SdsParams(S.v, S.sizes, lam)


def validate_params(S: Sds, expected: SdsParams) -> SdsParams:
    """Like :func:`derive_params` but also insist on ``expected``."""
    got = derive_params(S)
    if got != expected:
        raise ValueError(f"SDS has parameters {got}, expected {expected}")
    return got


def check_param_equation(p: SdsParams) -> bool:
    return p.lam * (p.v - 1) == sum(k * (k - 1) for k in p.k)


def pg_params_from_xy(p: XyPoint | tuple[int, int]) -> SdsParams:
    x, y = p
    if not (x >= y >= 0 and x > 0):
        raise ValueError(f"need x >= y >= 0 and x > 0, got ({x}, {y})")
    n = x * x + y * y
    return SdsParams(2 * n, (n - y, n - x), n - x - y)


def pg_params_to_xy(p: SdsParams) -> XyPoint:
    if p.t != 2 or p.v != 2 * p.n:
        raise ValueError(f"{p} is not a periodic Golay parameter set (need t=2, v=2n)")
    r, s = p.k
    return XyPoint(p.v // 2 - s, p.v // 2 - r)


def enumerate_pg_params(v_max: int) -> list[SdsParams]:
    """All normalized parameter sets with v = 2n <= v_max, by (v, s descending)."""
    out = []
    x = 1
    while 2 * x * x <= v_max:
        for y in range(x + 1):
            if 2 * (x * x + y * y) <= v_max:
                out.append(pg_params_from_xy((x, y)))
        x += 1
    out.sort(key=lambda p: (p.v, -p.k[1]))
    return out


def circulant(seq) -> np.ndarray:
    """Circulant matrix whose first row is ``seq`` (row i is seq shifted right by i)."""
    a = np.asarray(seq, dtype=np.int64)
    v = a.shape[0]
    return a[(np.arange(v)[None, :] - np.arange(v)[:, None]) % v]


def circulant_identity_check(S: Sds) -> bool:
    """Check sum_i C_i C_i^T == 4n I + (tv - 4n) J with explicit matrices.

    Meant as an oracle for small v; n comes from the block sizes and the
    lambda forced by the parameter equation.
    """
    v, t = S.v, len(S.blocks)
    total = np.zeros((v, v), dtype=np.int64)
    for b in S.blocks:
        C = circulant(subset_to_sequence(b, v))
        total += C @ C.T
    ks = S.sizes
    if v == 1:
        return True
    num = sum(k * (k - 1) for k in ks)
    if num % (v - 1):
        return False
    n = sum(ks) - num // (v - 1)
    want = 4 * n * np.eye(v, dtype=np.int64) + (t * v - 4 * n)
    return bool(np.array_equal(total, want))


def format_sds(S: Sds) -> str:
    """One-line text form, e.g. ``v=4 {0} {1}``."""
    return " ".join([f"v={S.v}"] + [format_block(b) for b in S.blocks])


def parse_sds(text: str) -> Sds:
    """Parse either a JSON record or the text form written by :func:`format_sds`."""
    s = text.strip()
    if s.startswith("{") and s.lstrip("{").lstrip().startswith('"'):
        return Sds.from_json(s)
    m = re.fullmatch(r"v\s*=\s*(\d+)((?:\s*\{[^{}]*\})*)", s, flags=re.S)
    if not m:
        raise ValueError(f"not an SDS record: {text[:60]!r}")
    v = int(m.group(1))
    return Sds(v, tuple(parse_block(b, v) for b in re.findall(r"\{[^{}]*\}", m.group(2))))
