"""Periodic Golay pairs, their SDS encoding, and the sieve of candidate lengths."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .sds import Sds, derive_params
from .seqcore import as_binary, format_sequence, paf, parse_sequence, psd, sequence_to_subset, subset_to_sequence

# lengths of the periodic Golay pairs that do not come from Golay numbers
PRIMITIVE_PERIODIC_LENGTHS = (1, 34, 50, 58, 72, 74, 82, 122, 202, 226)
GOLAY_BASES = (2, 10, 26)


class Pair(NamedTuple):
    a: np.ndarray
    b: np.ndarray

    @property
    def v(self) -> int:
        return int(self.a.shape[0])


def _checked(a, b) -> tuple[np.ndarray, np.ndarray]:
    a, b = as_binary(a), as_binary(b)
    if a.shape != b.shape:
        raise ValueError(f"sequence lengths differ: {a.shape[0]} vs {b.shape[0]}")
    return a, b


def is_periodic_golay_pair(a, b) -> bool:
    a, b = _checked(a, b)
    total = paf(a) + paf(b)
    return bool(np.all(total[1:] == 0))


def sds_to_pair(S: Sds) -> Pair:
    if len(S.blocks) != 2:
        raise ValueError(f"need two base blocks, got {len(S.blocks)}")
    p = derive_params(S)
    if p.v != 2 * p.n:
        raise ValueError(f"parameters {p} have v != 2n (n={p.n})")
    return Pair(subset_to_sequence(S.blocks[0], S.v), subset_to_sequence(S.blocks[1], S.v))


def pair_to_sds(a, b) -> Sds:
    a, b = _checked(a, b)
    if a.shape[0] == 1:
        raise ValueError("length 1 is the trivial case and has no SDS")
    return Sds(a.shape[0], (sequence_to_subset(a), sequence_to_subset(b)))


def psd_bound_ok(a, b, tol: float = 1e-6) -> bool:
    """Each member of a periodic Golay pair of length v has PSD <= 2v."""
    v = len(a)
    return bool(psd(a).max() <= 2 * v + tol and psd(b).max() <= 2 * v + tol)


def is_sum_of_two_squares(n: int) -> bool:
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = math.isqrt(n)
    while 2 * x * x >= n:
        rest = n - x * x
        y = math.isqrt(rest)
        if y * y == rest:
            return True
        x -= 1
    return False


def known_golay_lengths(v_max: int) -> list[int]:
    """Members of {2^a 10^b 26^c} up to ``v_max``."""
    found = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for g in frontier:
            for base in GOLAY_BASES:
                h = g * base
                if h <= v_max and h not in found:
                    found.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(x for x in found if x <= v_max)


def known_periodic_lengths(v_max: int) -> list[int]:
    golay = known_golay_lengths(v_max)
    return sorted({g * s for g in golay for s in PRIMITIVE_PERIODIC_LENGTHS if g * s <= v_max})


@dataclass(frozen=True)
class LengthStatus:
    v: int
    even: bool
    half_sum_of_two_squares: bool
    known: bool

    @property
    def open(self) -> bool:
        return self.even and self.half_sum_of_two_squares and not self.known


def length_status(v: int) -> LengthStatus:
    even = v % 2 == 0
    return LengthStatus(
        v=v,
        even=even,
        half_sum_of_two_squares=even and is_sum_of_two_squares(v // 2),
        known=v in known_periodic_lengths(v),
    )


def open_lengths(v_max: int) -> list[int]:
    """Even v <= v_max with v/2 a sum of two squares and no known pair.

    Only these two necessary conditions are applied; the Arasu-Xiang
    condition is not, so the list contains a few extra lengths (up to 300:
    18, 36, 98, 162, 196 and 242).
    """
    known = set(known_periodic_lengths(v_max))
    return [v for v in range(2, v_max + 1, 2) if is_sum_of_two_squares(v // 2) and v not in known]


# --- wire format ------------------------------------------------------------


def format_pair(a, b) -> str:
    return f"{format_sequence(a)}\n{format_sequence(b)}\n"


def parse_pair(text: str) -> Pair:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError(f"pair file needs exactly two sequence lines, found {len(lines)}")
    a, b = parse_sequence(lines[0]), parse_sequence(lines[1])
    if a.shape != b.shape:
        raise ValueError("pair sequences have different lengths")
    return Pair(a, b)
