"""Regenerate tests/frozen_values.json from the brute-force oracles.

Run from the repository root: ``python3 tests/freeze_oracles.py``.
"""

import json
import random
from collections import Counter
from pathlib import Path

import oracles as o


def fr(xs):
    return [str(x) for x in xs]


def regular_upto(words, m, q, rho):
    return max((s for s in range(rho + 1) if o.regularity(words, m, q, s) is not None), default=-1)


def main():
    p, e = o.paley_p(), o.paley_e()
    b0 = [1, 0, 0, 0, 0, 11, 11, 0, 0, 0, 0, 0]
    out = {
        "P": {
            "size": len(p),
            "min_distance": o.min_distance(p),
            "census": {str(k): v for k, v in sorted(Counter(map(sum, p)).items())},
            "distribution": fr(o.distribution(p)),
            "transform": fr(o.transform(o.distribution(p), 2)),
            "cell_sizes": o.partition_sizes(p, 11, 2),
            "lambda2_weight5": o.design_lambda([[i for i, x in enumerate(w) if x] for w in p if sum(w) == 5], 11, 2),
        },
        "E": {
            "size": len(e),
            "min_distance": o.min_distance(e),
            "cell_sizes": o.partition_sizes(e, 11, 2),
            "lambda2_weight6": o.design_lambda([[i for i, x in enumerate(w) if x] for w in e if sum(w) == 6], 11, 2),
            "lambda3_weight6": o.design_lambda([[i for i, x in enumerate(w) if x] for w in e if sum(w) == 6], 11, 3),
        },
        "transform_b0": fr(o.transform(b0, 2)),
        "repetition": {
            f"{m},{q}": {
                "cell_sizes": o.partition_sizes(o.repetition(m, q), m, q),
                "regular_upto": regular_upto(o.repetition(m, q), m, q, len(o.partition_sizes(o.repetition(m, q), m, q)) - 1),
            }
            for m, q in [(m, 2) for m in range(2, 9)] + [(4, 3), (3, 4)]
        },
        "krawtchouk_11_2": [[o.krawtchouk(11, 2, k, x) for x in range(12)] for k in range(12)],
        "krawtchouk_5_3": [[o.krawtchouk(5, 3, k, x) for x in range(6)] for k in range(6)],
    }
    rng = random.Random(20261015)
    randoms = []
    for _ in range(20):
        n = rng.randint(2, 12)
        idx = sorted(rng.sample(range(256), n))
        words = [tuple((i >> (7 - j)) & 1 for j in range(8)) for i in idx]
        sizes = o.partition_sizes(words, 8, 2)
        randoms.append({"indices": idx, "cell_sizes": sizes, "regular_upto": regular_upto(words, 8, 2, len(sizes) - 1)})
    out["random_h82"] = randoms
    path = Path(__file__).with_name("frozen_values.json")
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
