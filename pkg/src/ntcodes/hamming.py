"""Vertices, codes and exact metric computations in the Hamming graph H(m, q).

The alphabet is always ``0..q-1`` with 0 the distinguished symbol. A vertex is
indexed by the base-q integer whose most significant digit is entry 0, so the
numeric order of indices is the lexicographic order of symbol tuples, and for
q = 2 the index doubles as the packed bit representation.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from ntcodes import kernels
from ntcodes.errors import (
    CapacityError,
    DimensionError,
    DomainError,
    MembershipError,
    PreconditionError,
    UndefinedMetricError,
)

DEFAULT_VERTEX_CAP = 2**24


def vertex_cap() -> int:
    """Largest vertex space ``q**m`` that full sweeps may enumerate."""
    raw = os.environ.get("CAPACITY_VERTICES")
    return int(raw) if raw else DEFAULT_VERTEX_CAP


def check_capacity(m: int, q: int, cap: int | None = None) -> int:
    size = q**m
    limit = vertex_cap() if cap is None else cap
    if size > limit:
        raise CapacityError(f"H({m},{q}) has {size} vertices, cap is {limit}")
    return size


@dataclass(frozen=True, order=True)
class Vertex:
    """An m-tuple over ``{0, ..., q-1}``."""

    symbols: tuple[int, ...]
    q: int = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if self.q < 2:
            raise DomainError(f"alphabet size must be >= 2, got {self.q}")
        if not self.symbols:
            raise DomainError("a vertex needs at least one entry")
        for s in self.symbols:
            if not 0 <= s < self.q:
                raise DomainError(f"symbol {s} outside 0..{self.q - 1}")

    @property
    def m(self) -> int:
        return len(self.symbols)

    @classmethod
    def zero(cls, m: int, q: int) -> Vertex:
        return cls((0,) * m, q)

    @classmethod
    def constant(cls, a: int, m: int, q: int) -> Vertex:
        return cls((a,) * m, q)

    @classmethod
    def block(cls, a: int, k: int, m: int, q: int) -> Vertex:
        """The vertex ``(a^k, 0^(m-k))``."""
        return cls((a,) * k + (0,) * (m - k), q)

    @classmethod
    def from_index(cls, index: int, m: int, q: int) -> Vertex:
        digits = []
        for _ in range(m):
            index, r = divmod(index, q)
            digits.append(r)
        return cls(tuple(reversed(digits)), q)

    @classmethod
    def from_support(cls, support: Iterable[int], m: int, a: int = 1, q: int = 2) -> Vertex:
        sup = set(support)
        return cls(tuple(a if i in sup else 0 for i in range(m)), q)

    @property
    def index(self) -> int:
        idx = 0
        for s in self.symbols:
            idx = idx * self.q + s
        return idx

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self.symbols) if s)

    @property
    def weight(self) -> int:
        return sum(1 for s in self.symbols if s)

    def __str__(self) -> str:
        sep = "" if self.q <= 10 else ","
        return sep.join(map(str, self.symbols))


def _same_space(u: Vertex, v: Vertex) -> None:
    if u.m != v.m or u.q != v.q:
        raise DimensionError(f"H({u.m},{u.q}) vs H({v.m},{v.q})")


def hamming_distance(u: Vertex, v: Vertex) -> int:
    _same_space(u, v)
    return sum(1 for a, b in zip(u.symbols, v.symbols) if a != b)


def diff_positions(u: Vertex, v: Vertex) -> tuple[int, ...]:
    """Entries where ``u`` and ``v`` differ, in increasing order."""
    _same_space(u, v)
    return tuple(i for i, (a, b) in enumerate(zip(u.symbols, v.symbols)) if a != b)


def support_and_weight(v: Vertex) -> tuple[frozenset[int], int]:
    sup = v.support
    return sup, len(sup)


@lru_cache(maxsize=16)
def digit_table(m: int, q: int) -> np.ndarray:
    """All q**m vertices as a read-only ``(q**m, m)`` uint8 array, index order."""
    check_capacity(m, q)
    idx = np.arange(q**m, dtype=np.int64)
    places = q ** np.arange(m - 1, -1, -1, dtype=np.int64)
    table = ((idx[:, None] // places[None, :]) % q).astype(np.uint8)
    table.setflags(write=False)
    return table


def place_values(m: int, q: int) -> np.ndarray:
    return q ** np.arange(m - 1, -1, -1, dtype=np.int64)


class Code:
    """A set of vertices of H(m, q) kept in lexicographic order.

    Metrics are computed lazily and cached; the object is otherwise immutable.
    """

    def __init__(self, codewords: Iterable[Vertex | Sequence[int]], m: int | None = None, q: int | None = None):
        words = []
        for w in codewords:
            if not isinstance(w, Vertex):
                if q is None:
                    raise DomainError("q is required when codewords are plain sequences")
                w = Vertex(tuple(w), q)
            words.append(w)
        if not words and (m is None or q is None):
            raise DomainError("an empty code needs explicit m and q")
        m = words[0].m if m is None else m
        q = words[0].q if q is None else q
        for w in words:
            if w.m != m or w.q != q:
                raise DimensionError(f"codeword {w} is not in H({m},{q})")
        if len(set(words)) != len(words):
            raise DomainError("duplicate codewords")
        self.m = m
        self.q = q
        self.words: tuple[Vertex, ...] = tuple(sorted(words))
        self._set = frozenset(self.words)

    @classmethod
    def from_indices(cls, indices: Iterable[int], m: int, q: int) -> Code:
        return cls((Vertex.from_index(int(i), m, q) for i in indices), m, q)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, v) -> bool:
        return v in self._set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return (self.m, self.q, self.words) == (other.m, other.q, other.words)

    def __hash__(self) -> int:
        return hash((self.m, self.q, self.words))

    def __repr__(self) -> str:
        return f"Code(m={self.m}, q={self.q}, size={len(self)})"

    @cached_property
    def indices(self) -> np.ndarray:
        arr = np.array([w.index for w in self.words], dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def digits(self) -> np.ndarray:
        arr = np.array([w.symbols for w in self.words], dtype=np.uint8).reshape(len(self), self.m)
        arr.setflags(write=False)
        return arr

    @property
    def is_binary(self) -> bool:
        return self.q == 2

    def pair_histogram(self, packed: bool | None = None) -> np.ndarray:
        """Counts of ordered codeword pairs at each distance 0..m."""
        if packed is None:
            packed = self.is_binary and self.m <= 64
        if packed:
            if not self.is_binary:
                raise DomainError("packed representation needs q = 2")
            return kernels.pair_histogram_packed(self.indices.astype(np.uint64), self.m)
        return kernels.pair_histogram_digits(self.digits)

    @cached_property
    def min_distance(self) -> int:
        return min_distance(self)

    @cached_property
    def covering_radius(self) -> int:
        return distance_partition(self).rho

    def weight_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for w in self.words:
            census[w.weight] = census.get(w.weight, 0) + 1
        return dict(sorted(census.items()))


def min_distance(code: Code) -> int:
    if len(code) < 2:
        raise UndefinedMetricError("minimum distance needs at least two codewords")
    hist = code.pair_histogram()
    return int(np.flatnonzero(hist[1:])[0]) + 1


@dataclass(frozen=True)
class DistancePartition:
    """Cells C_0, ..., C_rho of the vertex set by distance to a code."""

    m: int
    q: int
    distances: np.ndarray = field(repr=False)
    cells: tuple[np.ndarray, ...] = field(repr=False)

    @property
    def rho(self) -> int:
        return len(self.cells) - 1

    def cell(self, r: int) -> list[Vertex]:
        return [Vertex.from_index(int(i), self.m, self.q) for i in self.cells[r]]

    def cell_sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def distance_to_code(self, v: Vertex) -> int:
        return int(self.distances[v.index])


def distance_partition(code: Code, cap: int | None = None) -> DistancePartition:
    if len(code) < 1:
        raise UndefinedMetricError("distance partition needs a nonempty code")
    check_capacity(code.m, code.q, cap)
    dist = kernels.bfs_distances(code.indices, code.m, code.q)
    dist.setflags(write=False)
    rho = int(dist.max())
    order = np.argsort(dist, kind="stable")
    bounds = np.searchsorted(dist[order], np.arange(rho + 2))
    cells = tuple(order[bounds[r]:bounds[r + 1]].astype(np.int64) for r in range(rho + 1))
    for c in cells:
        c.setflags(write=False)
    if len(code) >= 2:
        e = (code.min_distance - 1) // 2
        for i in range(min(e, rho) + 1):
            expected = len(code) * math.comb(code.m, i) * (code.q - 1) ** i
            if len(cells[i]) != expected:
                raise RuntimeError(f"|C_{i}| = {len(cells[i])}, disjoint spheres give {expected}")
    return DistancePartition(code.m, code.q, dist, cells)


def _require_member(v: Vertex, code: Code, name: str) -> None:
    if v not in code:
        raise MembershipError(f"{name} = {v} is not a codeword")


def diff_class(alpha: Vertex, beta: Vertex, code: Code) -> list[Vertex]:
    """Codewords ``g`` with ``Diff(alpha, g) == Diff(alpha, beta)``, canonical order."""
    _require_member(alpha, code, "alpha")
    _require_member(beta, code, "beta")
    if alpha == beta:
        raise PreconditionError("alpha and beta must differ")
    target = diff_positions(alpha, beta)
    out = [g for g in code.words if diff_positions(alpha, g) == target]
    if len(code) >= 2 and len(target) == code.min_distance and len(out) > code.q - 1:
        raise RuntimeError(f"Diff class of size {len(out)} exceeds q - 1 = {code.q - 1}")
    return out


def normalize(code: Code, alpha: Vertex, beta: Vertex, a: int = 0):
    """Move ``alpha`` to ``(a,...,a)`` and its Diff class onto the first delta entries.

    Returns ``(x, code^x)``. Each member of ``diff_class(alpha, beta, code)``
    lands on ``(c^delta, a^(m-delta))`` with distinct ``c != a``; the members
    receive the symbols of ``{0..q-1} \\ {a}`` in increasing order.
    """
    from ntcodes.perm import HammingAutomorphism

    _require_member(alpha, code, "alpha")
    _require_member(beta, code, "beta")
    if not 0 <= a < code.q:
        raise DomainError(f"symbol {a} outside 0..{code.q - 1}")
    delta = code.min_distance
    if hamming_distance(alpha, beta) != delta:
        raise PreconditionError(f"d(alpha, beta) = {hamming_distance(alpha, beta)} but delta = {delta}")
    m, q = code.m, code.q
    diff = diff_positions(alpha, beta)
    members = diff_class(alpha, beta, code)
    targets = [c for c in range(q) if c != a][: len(members)]
    diff_set = set(diff)

    entry_maps = []
    for k in range(m):
        img = [-1] * q
        if k in diff_set:
            img[alpha.symbols[k]] = a
            for g, c in zip(members, targets):
                img[g.symbols[k]] = c
            free_src = [s for s in range(q) if img[s] == -1]
            free_dst = sorted(set(range(q)) - set(img))
            for s, t in zip(free_src, free_dst):
                img[s] = t
        else:
            img = list(range(q))
            img[a], img[alpha.symbols[k]] = alpha.symbols[k], a
        entry_maps.append(tuple(img))
    rest = [k for k in range(m) if k not in diff_set]
    coord = [0] * m
    for new, old in enumerate(list(diff) + rest):
        coord[old] = new
    x = HammingAutomorphism(tuple(entry_maps), tuple(coord))
    return x, x.apply_code(code)


def zero_form(code: Code, alpha: Vertex, beta: Vertex):
    """Equivalent code containing 0 and ``(c^delta, 0^(m-delta))`` for some c != 0."""
    return normalize(code, alpha, beta, a=0)
