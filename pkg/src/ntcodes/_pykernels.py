"""Pure-Python/numpy versions of the compiled kernels.

Same signatures and results as ``_ckernels``; used when the extension is not
built or when ``NTCODES_PURE=1``.
"""

from collections import deque

import numpy as np


def _popcount(x):
    # numpy >= 2.0 has bitwise_count; keep a fallback for older releases
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(x).astype(np.int64)
    x = np.asarray(x, dtype=np.uint64)
    return np.array([bin(int(v)).count("1") for v in x.ravel()], dtype=np.int64).reshape(x.shape)


def pair_histogram_packed(words, m):
    words = np.asarray(words, dtype=np.uint64)
    d = _popcount(words[:, None] ^ words[None, :])
    return np.bincount(d.ravel(), minlength=m + 1).astype(np.int64)


def pair_histogram_digits(digits):
    digits = np.asarray(digits, dtype=np.uint8)
    m = digits.shape[1]
    d = (digits[:, None, :] != digits[None, :, :]).sum(axis=2)
    return np.bincount(d.ravel(), minlength=m + 1).astype(np.int64)


def distance_profile_packed(points, words, m):
    points = np.asarray(points, dtype=np.uint64)
    words = np.asarray(words, dtype=np.uint64)
    out = np.zeros((len(points), m + 1), dtype=np.int64)
    if len(points) == 0 or len(words) == 0:
        return out
    d = _popcount(points[:, None] ^ words[None, :])
    rows = np.repeat(np.arange(len(points)), len(words))
    np.add.at(out, (rows, d.ravel()), 1)
    return out


def distance_profile_digits(points, words):
    points = np.asarray(points, dtype=np.uint8)
    words = np.asarray(words, dtype=np.uint8)
    m = points.shape[1]
    out = np.zeros((len(points), m + 1), dtype=np.int64)
    if len(points) == 0 or len(words) == 0:
        return out
    d = (points[:, None, :] != words[None, :, :]).sum(axis=2)
    rows = np.repeat(np.arange(len(points)), len(words))
    np.add.at(out, (rows, d.ravel()), 1)
    return out


def bfs_distances(sources, m, q):
    size = q**m
    dist = np.full(size, -1, dtype=np.int32)
    frontier = np.unique(np.asarray(sources, dtype=np.int64))
    dist[frontier] = 0
    places = q ** np.arange(m, dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        found = []
        for place in places:
            digit = (frontier // place) % q
            for a in range(q):
                nb = frontier + (a - digit) * place
                found.append(nb[digit != a])
        nb = np.unique(np.concatenate(found))
        nb = nb[dist[nb] == -1]
        dist[nb] = level
        frontier = nb
    return dist


def orbit_labels(perms, n):
    perms = [list(map(int, p)) for p in np.asarray(perms, dtype=np.int64)]
    lab = [-1] * n
    for start in range(n):
        if lab[start] != -1:
            continue
        lab[start] = start
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for p in perms:
                u = p[v]
                if lab[u] == -1:
                    lab[u] = start
                    queue.append(u)
    return np.array(lab, dtype=np.int64)
