"""Coordinate-permutation search on sets of binary words.

Words are ints with entry j stored at bit ``m-1-j`` (the vertex index of a
binary vertex). A permutation ``sigma`` maps a word set ``W`` onto ``T`` when
``{w^sigma : w in W} == T``. The search assigns images coordinate by
coordinate and prunes with two exact necessary conditions:

* per-coordinate fingerprints: the sorted weights of the words having a 1 at
  that coordinate must match between a coordinate and its image;
* partial projections: the multiset of restrictions of ``W`` to the assigned
  coordinates must equal that of ``T`` to their images.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from ntcodes.perm import PermAlgebra, StabilizerChain


def _bit(w: int, j: int, m: int) -> int:
    return (w >> (m - 1 - j)) & 1


def fingerprints(words: Sequence[int], m: int) -> list[tuple[int, ...]]:
    weights = [bin(w).count("1") for w in words]
    return [tuple(sorted(wt for w, wt in zip(words, weights) if _bit(w, j, m))) for j in range(m)]


class _Search:
    def __init__(self, src: Sequence[int], tgt: Sequence[int], m: int):
        self.m = m
        self.src_cols = [tuple(_bit(w, j, m) for w in src) for j in range(m)]
        self.tgt_cols = [tuple(_bit(w, j, m) for w in tgt) for j in range(m)]
        self.fp_src = fingerprints(src, m)
        self.fp_tgt = fingerprints(tgt, m)
        self.n = len(src)
        self.feasible = len(src) == len(tgt) and sorted(self.fp_src) == sorted(self.fp_tgt)
        self.nodes = 0

    def _extend(self, sig_s, sig_t, j, e):
        ns = [2 * s + b for s, b in zip(sig_s, self.src_cols[j])]
        nt = [2 * t + b for t, b in zip(sig_t, self.tgt_cols[e])]
        if Counter(ns) != Counter(nt):
            return None
        return ns, nt

    def find(self, fixed: Sequence[tuple[int, int]] = ()) -> tuple[int, ...] | None:
        """One permutation extending the (source, image) pairs in ``fixed``, or None."""
        if not self.feasible:
            return None
        m = self.m
        sigma = [-1] * m
        used = [False] * m
        sig_s, sig_t = [0] * self.n, [0] * self.n
        for j, e in fixed:
            if sigma[j] != -1 or used[e] or self.fp_src[j] != self.fp_tgt[e]:
                return None
            step = self._extend(sig_s, sig_t, j, e)
            if step is None:
                return None
            sig_s, sig_t = step
            sigma[j], used[e] = e, True
        order = [j for j in range(m) if sigma[j] == -1]
        found = self._dfs(order, 0, sigma, used, sig_s, sig_t)
        return tuple(found) if found else None

    def _dfs(self, order, depth, sigma, used, sig_s, sig_t):
        self.nodes += 1
        if depth == len(order):
            return list(sigma)
        j = order[depth]
        for e in range(self.m):
            if used[e] or self.fp_src[j] != self.fp_tgt[e]:
                continue
            step = self._extend(sig_s, sig_t, j, e)
            if step is None:
                continue
            sigma[j], used[e] = e, True
            found = self._dfs(order, depth + 1, sigma, used, *step)
            if found:
                return found
            sigma[j], used[e] = -1, False
        return None


def find_isomorphism(src: Sequence[int], tgt: Sequence[int], m: int, fixed=()) -> tuple[int, ...] | None:
    """A coordinate permutation mapping word set ``src`` onto ``tgt``."""
    return _Search(src, tgt, m).find(fixed)


def set_stabilizer(words: Sequence[int], m: int) -> list[tuple[int, ...]]:
    """Generators of ``{sigma in S_m : words^sigma == words}``.

    Levels are processed deepest first over the base ``0..m-1``. At level i a
    candidate image of ``i`` is searched only if it is not already in the
    orbit of the group found so far, so every surviving search either adds a
    generator or proves that image impossible.
    """
    search = _Search(words, words, m)
    base = list(range(m))
    gens: list[tuple[int, ...]] = []
    chain = StabilizerChain(PermAlgebra(m), (), base)
    for i in reversed(range(m)):
        for gamma in range(i + 1, m):
            if gamma in chain.transversals[i] or search.fp_src[i] != search.fp_tgt[gamma]:
                continue
            sigma = search.find([(b, b) for b in base[:i]] + [(i, gamma)])
            if sigma is not None:
                gens.append(sigma)
                chain.add(sigma)
    return gens
