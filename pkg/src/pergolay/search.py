"""Two-stage compression search for periodic Golay SDSs.

Stage 1 lists every pair (Ac, Bc) of length-d sequences over {-m, ..., m}
(step 2) whose entry sums match the block sizes, whose PSD values are all at
most 2v, and whose periodic autocorrelations add up to (2v, 0, ..., 0).
Stage 2 lifts each such pair back to binary sequences of length v = m*d, fiber
by fiber, and keeps the lifts whose autocorrelations cancel.

Both stages match the two halves through a hash table keyed on the
autocorrelation vector instead of a nested loop.  Results are reduced to
canonical forms, so the output is a sorted list of equivalence class
representatives.

With ``fix_first`` (the default) two symmetries are factored out before
canonical deduplication: only candidates whose Ac and Bc are each the least of
their cyclic rotations are lifted, and within a candidate the first position
of the first fiber that contains a -1 is pinned to -1 (this position is 0 as
soon as fiber 0 is not all +1).  Both come from translating X and Y
independently, which is part of the equivalence group.
"""

from __future__ import annotations

import itertools
import logging
import os
import time
from collections import defaultdict
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import NamedTuple

import numpy as np

from . import kernels
from .equiv import canonical_key, units
from .sds import Sds, SdsParams, enumerate_pg_params
from .seqcore import is_compressed_sequence, psd_rows, sequence_to_subset

log = logging.getLogger(__name__)

PSD_TOL = 1e-6
CHUNK_ROWS = 200_000


def default_threads() -> int:
    return max(1, int(os.environ.get("PERGOLAY_THREADS", "1")))


@dataclass(frozen=True)
class SearchConfig:
    params: SdsParams
    d: int
    fix_first: bool = True
    limit: int | None = None
    threads: int = 1

    def __post_init__(self):
        p = self.params
        if p.t != 2 or p.v != 2 * p.n:
            raise ValueError(f"{p} is not a periodic Golay parameter set")
        if not (1 < self.d < p.v) or p.v % self.d:
            raise ValueError(f"d={self.d} is not a proper divisor of v={p.v}")
        if self.threads < 1:
            raise ValueError("threads must be positive")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be positive")

    @property
    def v(self) -> int:
        return self.params.v

    @property
    def m(self) -> int:
        return self.params.v // self.d


class CompressedCandidate(NamedTuple):
    ac: np.ndarray
    bc: np.ndarray


def configs_for_length(v: int, d: int, **kwargs) -> list[SearchConfig]:
    """One config per normalized parameter set of length v."""
    params = [p for p in enumerate_pg_params(v) if p.v == v]
    if not params:
        raise ValueError(f"no periodic Golay parameter set has v={v}")
    return [SearchConfig(p, d, **kwargs) for p in params]


def _psd_ok(rows: np.ndarray, v: int) -> np.ndarray:
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    return psd_rows(rows).max(axis=1) <= 2 * v + PSD_TOL


class _Half(NamedTuple):
    """Sequences for one side of a join, with their PAF table."""

    rows: np.ndarray
    pafs: np.ndarray
    index: dict[bytes, list[int]]


def _half(rows: np.ndarray) -> _Half:
    pafs = kernels.paf_rows(rows) if rows.shape[0] else np.empty_like(rows)
    index = defaultdict(list)
    for j, row in enumerate(pafs):
        index[row.tobytes()].append(j)
    return _Half(rows, pafs, dict(index))


def _join(left: _Half, right: _Half, v: int) -> tuple[np.ndarray, np.ndarray]:
    """Index arrays (i, j) with paf(left[i]) + paf(right[j]) == (2v, 0, ..., 0),
    ordered by i, then j."""
    ii: list[int] = []
    jj: list[int] = []
    if left.rows.shape[0] and right.rows.shape[0]:
        want = -left.pafs
        want[:, 0] += 2 * v
        for i, row in enumerate(want):
            for j in right.index.get(row.tobytes(), ()):
                ii.append(i)
                jj.append(j)
    return np.array(ii, dtype=np.int64), np.array(jj, dtype=np.int64)


# --- stage 1 ----------------------------------------------------------------


def _admissible_compressions(cfg: SearchConfig, size: int) -> np.ndarray:
    """Compressed sequences with the right sum and PSD <= 2v, lexicographic.

    Enumerated in chunks sharing a fixed prefix so that memory stays bounded.
    """
    d, m, v = cfg.d, cfg.m, cfg.v
    target = v - 2 * size
    tail = min(d, max(1, int(np.log(CHUNK_ROWS) / np.log(m + 1))))
    head = d - tail
    kept = []
    for prefix in itertools.product(range(-m, m + 1, 2), repeat=head):
        rest = target - sum(prefix)
        if abs(rest) > m * tail:
            continue
        rows = kernels.bounded_sequences(tail, m, rest)
        if head:
            rows = np.hstack([np.tile(np.array(prefix, dtype=np.int64), (rows.shape[0], 1)), rows])
        kept.append(rows[_psd_ok(rows, v)])
    return np.vstack(kept) if kept else np.empty((0, d), dtype=np.int64)


def stage1_candidates(cfg: SearchConfig) -> Iterator[CompressedCandidate]:
    """Every admissible compressed pair, in lexicographic order of (Ac, Bc)."""
    r, s = cfg.params.k
    As = _half(_admissible_compressions(cfg, r))
    Bs = As if r == s else _half(_admissible_compressions(cfg, s))
    for i, j in zip(*_join(As, Bs, cfg.v)):
        yield CompressedCandidate(As.rows[i], Bs.rows[j])


def is_least_rotation(row) -> bool:
    t = tuple(int(x) for x in row)
    return all(t <= t[k:] + t[:k] for k in range(1, len(t)))


# --- stage 2 ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _sign_patterns(m: int, total: int) -> tuple[tuple[int, ...], ...]:
    """All length-m +/-1 tuples summing to ``total``, lexicographic (-1 before +1)."""
    return tuple(p for p in itertools.product((-1, 1), repeat=m) if sum(p) == total)


def _pin_position(entries: tuple[int, ...], m: int) -> int | None:
    """First position of the first fiber holding a -1 (None if there is none)."""
    for j, e in enumerate(entries):
        if e < m:
            return j
    return None


@lru_cache(maxsize=4096)
def _lift_half(entries: tuple[int, ...], m: int, v: int, pin: bool) -> _Half:
    choices = [_sign_patterns(m, e) for e in entries]
    patterns = np.zeros((len(choices), max(len(c) for c in choices), m), dtype=np.int64)
    for j, c in enumerate(choices):
        patterns[j, : len(c)] = c
    counts = np.array([len(c) for c in choices], dtype=np.int64)
    rows = kernels.fiber_lifts(patterns, counts)
    if pin:
        j = _pin_position(entries, m)
        if j is not None:
            rows = rows[rows[:, j] == -1]
    return _half(rows[_psd_ok(rows, v)])


def _lift_pairs(c: CompressedCandidate, cfg: SearchConfig) -> tuple[np.ndarray, np.ndarray]:
    halves = []
    for entries in (c.ac, c.bc):
        if len(entries) != cfg.d or not is_compressed_sequence(entries, cfg.m):
            raise ValueError(f"{list(entries)} is not a length-{cfg.d} {cfg.m}-compression")
        halves.append(_lift_half(tuple(int(e) for e in entries), cfg.m, cfg.v, cfg.fix_first))
    ii, jj = _join(halves[0], halves[1], cfg.v)
    return halves[0].rows[ii], halves[1].rows[jj]


def stage2_lift(c: CompressedCandidate, cfg: SearchConfig) -> Iterator[Sds]:
    """Binary pairs compressing to ``c`` whose autocorrelations cancel, as SDSs.

    Without ``cfg.fix_first`` this is every such pair; with it, only those
    with the pinned position (see module docstring) in each nonempty block.
    """
    for a, b in zip(*_lift_pairs(c, cfg)):
        yield Sds(cfg.v, (sequence_to_subset(a), sequence_to_subset(b)))


def _minus_positions(rows: np.ndarray, k: int) -> np.ndarray:
    v = rows.shape[1]
    return np.sort(np.where(rows == -1, np.arange(v), v), axis=1)[:, :k]


def _classes_of(c: CompressedCandidate, cfg: SearchConfig) -> list[Sds]:
    """Canonical forms of all lifts of ``c``, sorted and without repeats."""
    r, s = cfg.params.k
    A, B = _lift_pairs(c, cfg)
    if A.shape[0] == 0:
        return []
    # sizes are already normalized (r >= s, both <= v/2)
    cx, cy = kernels.canonical_pairs(_minus_positions(A, r), _minus_positions(B, s), cfg.v, units(cfg.v), r == s)
    uniq = np.unique(np.hstack([cx, cy]), axis=0)
    return [Sds(cfg.v, (tuple(row[:r].tolist()), tuple(row[r:].tolist()))) for row in uniq]


# --- driver -------------------------------------------------------------------


def read_checkpoint(path: str | os.PathLike) -> int | None:
    p = Path(path)
    if not p.exists():
        return None
    text = p.read_text().strip()
    key, _, value = text.partition("=")
    if key != "candidate_index" or not value.lstrip("-").isdigit():
        raise ValueError(f"malformed checkpoint file {p}: {text!r}")
    return int(value)


def write_checkpoint(path: str | os.PathLike, index: int) -> None:
    p = Path(path)
    tmp = p.with_name(p.name + ".tmp")
    tmp.write_text(f"candidate_index={index}\n")
    tmp.replace(p)


def search_pg(
    cfg: SearchConfig,
    checkpoint: str | os.PathLike | None = None,
    on_solution: Callable[[Sds], None] | None = None,
) -> list[Sds]:
    """Run both stages and return the canonical solutions sorted.

    Stage-1 candidates are the units of work, indexed in stage-1 order.  With
    ``checkpoint`` the index of the last candidate of the completed prefix is
    recorded, and a rerun resumes after it (returning only the classes found
    in the resumed part).  ``on_solution`` sees each new class as soon as it
    is found, in candidate order.
    """
    candidates = list(stage1_candidates(cfg))
    start = 0
    if checkpoint is not None:
        done = read_checkpoint(checkpoint)
        if done is not None:
            start = done + 1
    work = [
        (i, c)
        for i, c in enumerate(candidates[start:], start=start)
        if not cfg.fix_first or (is_least_rotation(c.ac) and is_least_rotation(c.bc))
    ]
    log.info(
        "%s d=%d: %d stage-1 candidates, %d to lift from index %d",
        cfg.params, cfg.d, len(candidates), len(work), start,
    )

    found: dict[Sds, None] = {}
    full = False
    last_report = last_saved = time.monotonic()
    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        results = pool.map(lambda item: (item[0], _classes_of(item[1], cfg)), work)
        for n_done, (idx, classes) in enumerate(results, start=1):
            for canon in classes:
                if canon not in found and not full:
                    found[canon] = None
                    full = cfg.limit is not None and len(found) >= cfg.limit
                    if on_solution is not None:
                        on_solution(canon)
            now = time.monotonic()
            if checkpoint is not None and now - last_saved >= 1.0:
                write_checkpoint(checkpoint, idx)
                last_saved = now
            if now - last_report >= 1.0:
                log.info("lifted %d/%d candidates, %d classes", n_done, len(work), len(found))
                last_report = now
            if full:
                if checkpoint is not None:
                    write_checkpoint(checkpoint, idx)
                pool.shutdown(cancel_futures=True)
                break
        else:
            if checkpoint is not None and candidates:
                write_checkpoint(checkpoint, len(candidates) - 1)
    return sorted(found, key=canonical_key)


def search_length(v: int, d: int, **kwargs) -> list[Sds]:
    """Search every normalized parameter set of length v with divisor d."""
    out = []
    for cfg in configs_for_length(v, d, **kwargs):
        out.extend(search_pg(cfg))
    return sorted(set(out), key=canonical_key)
