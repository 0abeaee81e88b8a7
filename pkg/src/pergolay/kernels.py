"""Hot inner loops, each in two flavours.

``*_nb`` functions are explicit loops compiled by numba; ``*_np`` functions are
vectorized numpy.  The unsuffixed public names are bound to one or the other
at import time according to :data:`pergolay._jit.USE_NUMBA`.  Both flavours
return identical integer results (same dtype, same row order), which
``tests/test_kernels.py`` checks directly.

All arrays are ``int64``.
"""

import numpy as np

from ._jit import USE_NUMBA, njit

__all__ = [
    "USE_NUMBA",
    "paf",
    "paf_rows",
    "difference_counts",
    "cyclic_mul",
    "min_shift_images",
    "canonical_pairs",
    "fiber_lifts",
    "bounded_sequences",
]


# --------------------------------------------------------------------------
# periodic autocorrelation


@njit
def paf_nb(a):
    v = a.shape[0]
    out = np.zeros(v, dtype=np.int64)
    for s in range(v):
        acc = 0
        for j in range(v):
            k = j + s
            if k >= v:
                k -= v
            acc += a[k] * a[j]
        out[s] = acc
    return out


def paf_np(a):
    v = a.shape[0]
    idx = (np.arange(v)[:, None] + np.arange(v)[None, :]) % v
    return (a[idx] * a[None, :]).sum(axis=1).astype(np.int64)


@njit
def paf_rows_nb(rows):
    n, v = rows.shape
    out = np.zeros((n, v), dtype=np.int64)
    for r in range(n):
        for s in range(v):
            acc = 0
            for j in range(v):
                k = j + s
                if k >= v:
                    k -= v
                acc += rows[r, k] * rows[r, j]
            out[r, s] = acc
    return out


def paf_rows_np(rows):
    n, v = rows.shape
    out = np.empty((n, v), dtype=np.int64)
    for s in range(v):
        out[:, s] = (np.roll(rows, -s, axis=1) * rows).sum(axis=1)
    return out


# --------------------------------------------------------------------------
# SDS difference table


@njit
def difference_counts_nb(members, offsets, v):
    # members: concatenated blocks; block i is members[offsets[i]:offsets[i+1]]
    counts = np.zeros(v, dtype=np.int64)
    for b in range(offsets.shape[0] - 1):
        lo = offsets[b]
        hi = offsets[b + 1]
        for i in range(lo, hi):
            for j in range(lo, hi):
                if i != j:
                    c = (members[i] - members[j]) % v
                    counts[c] += 1
    return counts


def difference_counts_np(members, offsets, v):
    counts = np.zeros(v, dtype=np.int64)
    for b in range(len(offsets) - 1):
        x = members[offsets[b]:offsets[b + 1]]
        diffs = np.subtract.outer(x, x) % v
        off = ~np.eye(len(x), dtype=bool)
        counts += np.bincount(diffs[off], minlength=v).astype(np.int64)
    return counts


# --------------------------------------------------------------------------
# multiplication in Z[z]/(z^N - 1)


@njit
def cyclic_mul_nb(p, q):
    n = p.shape[0]
    out = np.zeros(n, dtype=np.int64)
    for i in range(n):
        if p[i] == 0:
            continue
        for j in range(n):
            k = i + j
            if k >= n:
                k -= n
            out[k] += p[i] * q[j]
    return out


def cyclic_mul_np(p, q):
    n = p.shape[0]
    idx = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    out = np.zeros(n, dtype=np.int64)
    np.add.at(out, idx.ravel(), np.outer(p, q).ravel())
    return out


# --------------------------------------------------------------------------
# canonical form: least translate of u*X for every unit u


@njit
def _least_translate(members, u, v, mask, img, best):
    # least translate of u*members, written into best.  It starts with 0, so only
    # shifts sending some member to 0 compete.
    k = members.shape[0]
    for j in range(k):
        a = v - (u * members[j]) % v
        for i in range(k):
            mask[(u * members[i] + a) % v] = 1
        pos = 0
        for c in range(v):
            if mask[c]:
                img[pos] = c
                pos += 1
                mask[c] = 0
        if j == 0:
            best[:] = img
        else:
            for i in range(k):
                if img[i] != best[i]:
                    if img[i] < best[i]:
                        best[:] = img
                    break


@njit
def min_shift_images_nb(members, v, units):
    k = members.shape[0]
    nu = units.shape[0]
    out = np.zeros((nu, k), dtype=np.int64)
    mask = np.zeros(v, dtype=np.uint8)
    img = np.empty(k, dtype=np.int64)
    for ui in range(nu):
        _least_translate(members, units[ui], v, mask, img, out[ui])
    return out


def min_shift_images_np(members, v, units):
    k = members.shape[0]
    out = np.zeros((units.shape[0], k), dtype=np.int64)
    if k == 0:
        return out
    for ui, u in enumerate(units):
        base = (u * members) % v
        imgs = np.sort((base[None, :] - base[:, None]) % v, axis=1)
        order = np.lexsort(imgs.T[::-1])
        out[ui] = imgs[order[0]]
    return out


# --------------------------------------------------------------------------
# canonical form of many two-block SDSs at once


@njit
def _lex_less(a, b):
    for i in range(a.shape[0]):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


@njit
def _canon_one(x, y, v, units, outx, outy, mask):
    r = x.shape[0]
    s = y.shape[0]
    nu = units.shape[0]
    imgx = np.empty(r, dtype=np.int64)
    candx = np.empty(r, dtype=np.int64)
    imgy = np.empty(s, dtype=np.int64)
    candy = np.empty(s, dtype=np.int64)
    tied = np.zeros(nu, dtype=np.bool_)
    for ui in range(nu):
        _least_translate(x, units[ui], v, mask, imgx, candx)
        if ui == 0 or _lex_less(candx, outx):
            outx[:] = candx
            tied[:ui] = False
            tied[ui] = True
        else:
            same = True
            for i in range(r):
                if candx[i] != outx[i]:
                    same = False
                    break
            tied[ui] = same
    first = True
    for ui in range(nu):
        if not tied[ui]:
            continue
        _least_translate(y, units[ui], v, mask, imgy, candy)
        if first or _lex_less(candy, outy):
            outy[:] = candy
            first = False


@njit
def canonical_pairs_nb(xs, ys, v, units, swap):
    """Canonical (X, Y) for each row pair; ``swap`` also tries (Y, X) (equal sizes only)."""
    n = xs.shape[0]
    r = xs.shape[1]
    s = ys.shape[1]
    outx = np.empty((n, r), dtype=np.int64)
    outy = np.empty((n, s), dtype=np.int64)
    mask = np.zeros(v, dtype=np.uint8)
    altx = np.empty(s, dtype=np.int64)
    alty = np.empty(r, dtype=np.int64)
    for row in range(n):
        _canon_one(xs[row], ys[row], v, units, outx[row], outy[row], mask)
        if swap:
            _canon_one(ys[row], xs[row], v, units, altx, alty, mask)
            take = False
            decided = False
            for i in range(r):
                if altx[i] != outx[row, i]:
                    take = altx[i] < outx[row, i]
                    decided = True
                    break
            if not decided:
                take = _lex_less(alty, outy[row])
            if take:
                outx[row, :] = altx
                outy[row, :] = alty
    return outx, outy


def _canon_one_np(x, y, v, units):
    ix = min_shift_images_np(x, v, units)
    if ix.shape[1]:
        keys = [tuple(row) for row in ix]
        best = min(keys)
        alive = np.array([k == best for k in keys])
    else:
        alive = np.ones(units.shape[0], dtype=bool)
    iy = min_shift_images_np(y, v, units[alive])
    bx = ix[np.flatnonzero(alive)[0]]
    by = min((tuple(row) for row in iy), default=())
    return tuple(bx), tuple(by)


def canonical_pairs_np(xs, ys, v, units, swap):
    n, r = xs.shape
    s = ys.shape[1]
    outx = np.empty((n, r), dtype=np.int64)
    outy = np.empty((n, s), dtype=np.int64)
    for row in range(n):
        best = _canon_one_np(xs[row], ys[row], v, units)
        if swap:
            best = min(best, _canon_one_np(ys[row], xs[row], v, units))
        outx[row], outy[row] = best
    return outx, outy


# --------------------------------------------------------------------------
# stage-2 lifting: every binary sequence with prescribed fiber patterns


@njit
def fiber_lifts_nb(patterns, counts):
    # patterns[j, c, l] is choice c for fiber j; output a[j + l*d] = patterns[j, c_j, l]
    d = patterns.shape[0]
    m = patterns.shape[2]
    total = 1
    for j in range(d):
        total *= counts[j]
    out = np.empty((total, d * m), dtype=np.int64)
    choice = np.zeros(d, dtype=np.int64)
    for r in range(total):
        for j in range(d):
            for l in range(m):
                out[r, j + l * d] = patterns[j, choice[j], l]
        # odometer, last fiber fastest
        j = d - 1
        while j >= 0:
            choice[j] += 1
            if choice[j] < counts[j]:
                break
            choice[j] = 0
            j -= 1
    return out


def fiber_lifts_np(patterns, counts):
    d, _, m = patterns.shape
    total = int(np.prod(counts))
    out = np.empty((total, d * m), dtype=np.int64)
    if total == 0:
        return out
    choice = np.unravel_index(np.arange(total), tuple(int(c) for c in counts))
    for j in range(d):
        rows = patterns[j, choice[j], :]
        for l in range(m):
            out[:, j + l * d] = rows[:, l]
    return out


# --------------------------------------------------------------------------
# stage-1 enumeration: sequences over {-m, -m+2, ..., m} with a fixed sum


@njit
def _bounded_walk(d, m, target, out, fill):
    alpha = m + 1
    choice = np.zeros(d, dtype=np.int64)
    psum = np.zeros(d + 1, dtype=np.int64)
    count = 0
    i = 0
    choice[0] = -1
    while i >= 0:
        choice[i] += 1
        if choice[i] >= alpha:
            i -= 1
            continue
        val = -m + 2 * choice[i]
        s = psum[i] + val
        rest = target - s
        span = m * (d - i - 1)
        if rest > span:
            continue
        if rest < -span:
            # values only grow from here on
            i -= 1
            continue
        psum[i + 1] = s
        if i == d - 1:
            if fill:
                for t in range(d):
                    out[count, t] = -m + 2 * choice[t]
            count += 1
        else:
            i += 1
            choice[i] = -1
    return count


@njit
def bounded_sequences_nb(d, m, target):
    empty = np.empty((0, d), dtype=np.int64)
    if (target + m * d) % 2 != 0 or abs(target) > m * d:
        return empty
    n = _bounded_walk(d, m, target, empty, False)
    out = np.empty((n, d), dtype=np.int64)
    _bounded_walk(d, m, target, out, True)
    return out


def bounded_sequences_np(d, m, target):
    if (target + m * d) % 2 != 0 or abs(target) > m * d:
        return np.empty((0, d), dtype=np.int64)
    alphabet = np.arange(-m, m + 1, 2, dtype=np.int64)
    rows = np.empty((1, 0), dtype=np.int64)
    sums = np.zeros(1, dtype=np.int64)
    for i in range(d):
        rows = np.hstack([np.repeat(rows, len(alphabet), axis=0),
                          np.tile(alphabet, len(rows))[:, None]])
        sums = np.repeat(sums, len(alphabet)) + np.tile(alphabet, len(sums))
        keep = np.abs(target - sums) <= m * (d - i - 1)
        rows, sums = rows[keep], sums[keep]
    return rows


if USE_NUMBA:
    paf = paf_nb
    paf_rows = paf_rows_nb
    difference_counts = difference_counts_nb
    cyclic_mul = cyclic_mul_nb
    min_shift_images = min_shift_images_nb
    canonical_pairs = canonical_pairs_nb
    fiber_lifts = fiber_lifts_nb
    bounded_sequences = bounded_sequences_nb
else:
    paf = paf_np
    paf_rows = paf_rows_np
    difference_counts = difference_counts_np
    cyclic_mul = cyclic_mul_np
    min_shift_images = min_shift_images_np
    canonical_pairs = canonical_pairs_np
    fiber_lifts = fiber_lifts_np
    bounded_sequences = bounded_sequences_np
