"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is called once untimed (numba compilation or cache load), then
the best of N runs is reported for both flavours.  A final row times a whole
search (v=26, d=13) in a subprocess per flavour.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from pergolay import kernels
from pergolay.equiv import units
from pergolay.search import _sign_patterns


def best_of(fn, args, repeat):
    fn(*args)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(rng):
    v = 72
    rows = rng.choice([-1, 1], size=(20_000, 26)).astype(np.int64)
    X = np.sort(rng.choice(v, size=36, replace=False)).astype(np.int64)
    xs = np.array([np.sort(rng.choice(v, 36, replace=False)) for _ in range(200)], dtype=np.int64)
    ys = np.array([np.sort(rng.choice(v, 30, replace=False)) for _ in range(200)], dtype=np.int64)
    members = np.concatenate([xs[0], ys[0]])
    offsets = np.array([0, 36, 66], dtype=np.int64)
    p = rng.integers(-1, 2, size=680).astype(np.int64)
    choice = [_sign_patterns(2, e) for e in [0] * 12 + [2]]
    patterns = np.zeros((13, 2, 2), dtype=np.int64)
    for j, c in enumerate(choice):
        patterns[j, : len(c)] = c
    counts = np.array([len(c) for c in choice], dtype=np.int64)
    return [
        ("paf_rows 20000x26", "paf_rows", (rows,)),
        ("difference_counts v=72", "difference_counts", (members, offsets, v)),
        ("cyclic_mul N=680", "cyclic_mul", (p, p[::-1].copy())),
        ("min_shift_images v=72", "min_shift_images", (X, v, units(v))),
        ("canonical_pairs 200 x v=72", "canonical_pairs", (xs, ys, v, units(v), False)),
        ("fiber_lifts 2^12 rows", "fiber_lifts", (patterns, counts)),
        ("bounded_sequences d=13 m=2", "bounded_sequences", (13, 2, 0)),
    ]


def time_search(disabled):
    env = dict(os.environ, PERGOLAY_NO_NUMBA="1" if disabled else "0")
    code = (
        "import time; from pergolay.search import search_length; search_length(8, 4);"
        "t = time.perf_counter(); n = len(search_length(26, 13)); print(time.perf_counter() - t, n)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    t, n = out.stdout.split()
    return float(t), int(n)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--no-search", action="store_true")
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'kernel':32} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for label, name, fargs in cases(rng):
        nb = best_of(getattr(kernels, name + "_nb"), fargs, args.repeat)
        np_ = best_of(getattr(kernels, name + "_np"), fargs, args.repeat)
        print(f"{label:32} {nb:10.5f} {np_:10.5f} {np_ / nb:8.1f}")
    if not args.no_search:
        tn, n = time_search(False)
        tp, _ = time_search(True)
        print(f"{f'search v=26 d=13 ({n} classes)':32} {tn:10.3f} {tp:10.3f} {tp / tn:8.1f}")


if __name__ == "__main__":
    main()
