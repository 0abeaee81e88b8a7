"""Sequences over Z_v: conversion to and from subsets, periodic autocorrelation,
DFT/PSD and m-compression.

Binary sequences are plain ``int64`` numpy arrays of +1/-1.  Blocks (subsets of
Z_v) are sorted tuples of ints.  The DFT uses the kernel ``exp(+2*pi*i*j*k/v)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from . import kernels

Block = tuple[int, ...]


def as_binary(seq: Iterable[int]) -> np.ndarray:
    """Return ``seq`` as an int64 array, checking every entry is +1 or -1."""
    a = np.asarray(list(seq) if not isinstance(seq, np.ndarray) else seq, dtype=np.int64)
    if a.ndim != 1 or a.size == 0:
        raise ValueError("binary sequence must be a non-empty 1-d sequence")
    if not np.all(np.abs(a) == 1):
        raise ValueError("binary sequence entries must be +1 or -1")
    return a


def make_block(members: Iterable[int], v: int) -> Block:
    """Validate a subset of Z_v and return it as a sorted tuple."""
    if v < 1:
        raise ValueError(f"modulus must be positive, got {v}")
    xs = [int(x) for x in members]
    if any(x < 0 or x >= v for x in xs):
        raise ValueError(f"block member out of range [0, {v}): {xs}")
    block = tuple(sorted(set(xs)))
    if len(block) != len(xs):
        raise ValueError("block has repeated members")
    return block


def complement(block: Sequence[int], v: int) -> Block:
    s = set(block)
    return tuple(i for i in range(v) if i not in s)


def subset_to_sequence(block: Iterable[int], v: int) -> np.ndarray:
    """Binary sequence of length v with -1 exactly at the members of ``block``."""
    a = np.ones(v, dtype=np.int64)
    a[list(make_block(block, v))] = -1
    return a


def sequence_to_subset(seq: Iterable[int]) -> Block:
    a = as_binary(seq)
    return tuple(int(i) for i in np.flatnonzero(a == -1))


def paf(seq) -> np.ndarray:
    """Periodic autocorrelation ``sum_j a[j+s] * a[j]`` for s = 0..v-1, exact."""
    a = np.asarray(seq, dtype=np.int64)
    return kernels.paf(a)


def dft(seq) -> np.ndarray:
    """Naive O(v^2) DFT with the positive-exponent convention."""
    a = np.asarray(seq, dtype=complex)
    v = a.shape[0]
    jk = np.outer(np.arange(v), np.arange(v))
    return np.exp(2j * np.pi * jk / v) @ a


def psd(seq) -> np.ndarray:
    return np.abs(dft(seq)) ** 2


def psd_rows(rows: np.ndarray) -> np.ndarray:
    """PSD of every row at once (FFT based; the modulus does not see the sign
    convention)."""
    return np.abs(np.fft.fft(rows, axis=1)) ** 2


def compress(seq, d: int) -> np.ndarray:
    """m-compression: entry j is ``a[j] + a[j+d] + ... + a[j+(m-1)d]``."""
    a = np.asarray(seq, dtype=np.int64)
    v = a.shape[0]
    if d < 1 or v % d:
        raise ValueError(f"d={d} does not divide the length {v}")
    return a.reshape(v // d, d).sum(axis=0)


def is_compressed_sequence(entries, m: int) -> bool:
    """True iff every entry lies in {m, m-2, ..., -m}."""
    c = np.asarray(entries, dtype=np.int64)
    return bool(np.all(np.abs(c) <= m) and np.all((c + m) % 2 == 0))


# --- text formats ---------------------------------------------------------


def format_sequence(seq) -> str:
    return "".join("-" if x == -1 else "+" for x in as_binary(seq))


def parse_sequence(text: str) -> np.ndarray:
    line = text.strip()
    bad = set(line) - {"+", "-"}
    if not line or bad:
        raise ValueError(f"not a +/- sequence: {text!r}")
    return np.array([-1 if ch == "-" else 1 for ch in line], dtype=np.int64)


def format_block(block: Iterable[int]) -> str:
    return "{" + ",".join(str(int(x)) for x in block) + "}"


def parse_block(text: str, v: int | None = None) -> Block:
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError(f"block must be written as {{a,b,...}}: {text!r}")
    body = s[1:-1].strip()
    xs = [int(t) for t in body.split(",")] if body else []
    if v is None:
        if xs != sorted(set(xs)) or any(x < 0 for x in xs):
            raise ValueError(f"block must be sorted nonnegative integers: {text!r}")
        return tuple(xs)
    return make_block(xs, v)
