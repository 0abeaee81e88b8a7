"""Equivalence of SDSs over Z_v.

The group acting here is generated by a common unit multiplier, independent
translations of each block, and swapping the two blocks when they have the
same size.  Complementation is handled separately by :func:`normalize_blocks`.
The canonical form is the lexicographically least element of the orbit
(blocks compared as sorted tuples, first block first).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .sds import Sds
from .seqcore import complement


@dataclass(frozen=True)
class AffineTransform:
    u: int
    shifts: tuple[int, ...]


def units(v: int) -> np.ndarray:
    return np.array([u for u in range(v) if math.gcd(u, v) == 1], dtype=np.int64)


def transform(S: Sds, T: AffineTransform) -> Sds:
    v = S.v
    if math.gcd(T.u, v) != 1:
        raise ValueError(f"multiplier {T.u} is not a unit mod {v}")
    if len(T.shifts) != len(S.blocks):
        raise ValueError("need one shift per block")
    return Sds(v, tuple(tuple((T.u * a + s) % v for a in b) for b, s in zip(S.blocks, T.shifts)))


def normalize_blocks(S: Sds) -> Sds:
    """Complement blocks larger than v/2, then order the blocks by size, largest first."""
    v = S.v
    blocks = [complement(b, v) if 2 * len(b) > v else b for b in S.blocks]
    blocks.sort(key=len, reverse=True)
    return Sds(v, tuple(blocks))


def _least_image(blocks, v: int, us: np.ndarray) -> tuple[tuple[int, ...], ...]:
    alive = np.arange(len(us))
    out = []
    for b in blocks:
        imgs = kernels.min_shift_images(np.asarray(b, dtype=np.int64), v, us[alive])
        rows = [tuple(int(x) for x in r) for r in imgs]
        best = min(rows)
        alive = alive[[r == best for r in rows]]
        out.append(best)
    return tuple(out)


def canonical_form(S: Sds) -> Sds:
    v = S.v
    us = units(v)
    if len(S.blocks) != 2:
        return Sds(v, _least_image(S.blocks, v, us))
    X, Y = (np.asarray(b, dtype=np.int64).reshape(1, -1) for b in S.blocks)
    cx, cy = kernels.canonical_pairs(X, Y, v, us, X.shape[1] == Y.shape[1])
    return Sds(v, (tuple(cx[0].tolist()), tuple(cy[0].tolist())))


def canonical_key(S: Sds) -> tuple:
    """Sort key for canonical SDSs."""
    return (S.v, S.sizes, S.blocks)


def are_equivalent(S1: Sds, S2: Sds) -> bool:
    if S1.v != S2.v or len(S1.blocks) != len(S2.blocks):
        raise ValueError("SDSs differ in modulus or number of blocks")
    return canonical_form(normalize_blocks(S1)) == canonical_form(normalize_blocks(S2))
