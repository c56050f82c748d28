"""Brute-force reference implementations.

Nothing here imports ntcodes. Vertices are plain tuples, codes are lists of
tuples, permutations are tuples of images.
"""

from __future__ import annotations

from collections import Counter, deque
from fractions import Fraction
from itertools import combinations, product
from math import comb


def all_vertices(m, q):
    return list(product(range(q), repeat=m))


def dist(u, v):
    return sum(a != b for a, b in zip(u, v))


def min_distance(code):
    return min(dist(u, v) for u, v in combinations(code, 2))


def distance_to_code(v, code):
    return min(dist(v, c) for c in code)


def partition_sizes(code, m, q):
    d = Counter(distance_to_code(v, code) for v in all_vertices(m, q))
    return [d[i] for i in range(max(d) + 1)]


def distribution(code):
    n = len(code)
    h = Counter(dist(u, v) for u in code for v in code)
    m = len(code[0])
    return [Fraction(h[i], n) for i in range(m + 1)]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def krawtchouk(m, q, k, x):
    """Coefficient of z^k in (1 + (q-1) z)^(m-x) (1 - z)^x."""
    poly = [1]
    for _ in range(m - x):
        poly = _poly_mul(poly, [1, q - 1])
    for _ in range(x):
        poly = _poly_mul(poly, [1, -1])
    return poly[k] if k < len(poly) else 0


def transform(dist_values, q):
    m = len(dist_values) - 1
    return [sum(Fraction(a) * krawtchouk(m, q, k, i) for i, a in enumerate(dist_values)) for k in range(m + 1)]


def regularity(code, m, q, s):
    """Intersection-number rows for levels 0..s, or None if some level is not uniform."""
    verts = all_vertices(m, q)
    level = {v: distance_to_code(v, code) for v in verts}
    rows = {}
    for i in range(s + 1):
        profiles = set()
        for v in verts:
            if level[v] != i:
                continue
            c = Counter(dist(v, w) for w in code)
            profiles.add(tuple(c[k] for k in range(m + 1)))
        if len(profiles) != 1:
            return None
        rows[i] = profiles.pop()
    return rows


def design_lambda(blocks, v, s):
    """Common count of blocks through each s-subset, or None."""
    counts = {sum(1 for b in blocks if set(t) <= set(b)) for t in combinations(range(v), s)}
    return counts.pop() if len(counts) == 1 else None


def apply_aut(entry_maps, sigma, v):
    out = [None] * len(v)
    for i, a in enumerate(v):
        out[sigma[i]] = entry_maps[i][a]
    return tuple(out)


def vertex_perm(entry_maps, sigma, m, q):
    """The automorphism as a permutation of the lexicographic vertex list."""
    verts = all_vertices(m, q)
    pos = {v: n for n, v in enumerate(verts)}
    return tuple(pos[apply_aut(entry_maps, sigma, v)] for v in verts)


def closure(gens):
    """All elements of the group generated by permutation tuples."""
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[x[i]] for i in range(n))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def orbits(gens, n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i in range(n):
            a, b = find(i), find(g[i])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def quadratic_residues(p):
    return {pow(a, 2, p) for a in range(1, p)}


def paley_p():
    """The 24 words: QR-plus-zero translates, their complements, 0 and 1."""
    qr0 = quadratic_residues(11) | {0}
    base = [tuple(int((a - t) % 11 in qr0) for a in range(11)) for t in range(11)]
    comp = [tuple(1 - x for x in w) for w in base]
    return sorted(base + comp + [(0,) * 11, (1,) * 11])


def paley_e():
    return [w for w in paley_p() if sum(w) % 2 == 0]


def repetition(m, q):
    return [(a,) * m for a in range(q)]
