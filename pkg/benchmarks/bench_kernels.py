"""Time the compiled kernels against the numpy fallback on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat N] [--m M]
"""

import argparse
import random
import timeit

import numpy as np

from ntcodes import _pykernels
from ntcodes.constructions import even_subcode_ph12, repetition_transitive_group
from ntcodes.hamming import digit_table

try:
    from ntcodes import _ckernels
except ImportError:
    _ckernels = None


def cases(m: int):
    rng = random.Random(0)
    words = np.array(sorted(rng.sample(range(2**m), 256)), dtype=np.uint64)
    digits = np.ascontiguousarray(digit_table(m, 2)[words.astype(np.int64)])
    pts = np.arange(2**m, dtype=np.uint64)
    e = even_subcode_ph12()
    rep = repetition_transitive_group(m)
    perms = np.stack([g.vertex_permutation() for g in rep])
    return {
        "pair_histogram_packed": lambda k: k.pair_histogram_packed(words, m),
        "pair_histogram_digits": lambda k: k.pair_histogram_digits(digits),
        "distance_profile_packed": lambda k: k.distance_profile_packed(pts, words[:32], m),
        "bfs_distances H(m,2)": lambda k: k.bfs_distances(words.astype(np.int64)[:4], m, 2),
        "bfs_distances E in H(11,2)": lambda k: k.bfs_distances(e.indices, 11, 2),
        "orbit_labels Rep(m,2) group": lambda k: k.orbit_labels(perms, 2**m),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--m", type=int, default=14)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is available")
    print(f"{'kernel':32} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, fn in cases(args.m).items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        if _ckernels is None:
            print(f"{name:32} {py:10.2f} {'-':>10} {'-':>8}")
            continue
        assert np.array_equal(np.asarray(fn(_ckernels)), np.asarray(fn(_pykernels)))
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:32} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
