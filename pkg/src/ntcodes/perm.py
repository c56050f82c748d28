"""Automorphisms of H(m, q), generated groups, orbits and stabiliser chains.

An automorphism ``(g_1, ..., g_m) sigma`` first applies ``g_i`` to the symbol
in entry i and then moves entry i to position ``sigma(i)``. Products are read
left to right: ``compose(x, y)`` applies x first, then y. Permutations of
``range(n)`` are tuples ``p`` with ``p[i]`` the image of i, and
``perm_mul(p, r)`` is "p then r".

Internally an automorphism is also encoded as a permutation of the m*q
literals ``(i, a) -> i*q + a``; that action is faithful and converts back
losslessly, so stabiliser chains run on short tuples.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from ntcodes import kernels
from ntcodes.errors import CapacityError, DimensionError, DomainError
from ntcodes.hamming import Code, Vertex, check_capacity, digit_table, place_values

DEFAULT_ORBIT_CAP = 10**7
CONVENTION = "entry-then-coord, left-to-right"


def perm_mul(p: Sequence[int], r: Sequence[int]) -> tuple[int, ...]:
    return tuple(map(r.__getitem__, p))


def perm_inv(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_perm(p: Sequence[int], n: int | None = None) -> bool:
    n = len(p) if n is None else n
    return len(p) == n and sorted(p) == list(range(n))


def perm_parity(p: Sequence[int]) -> int:
    """0 for even, 1 for odd."""
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


@dataclass(frozen=True)
class HammingAutomorphism:
    """The element ``(g_1, ..., g_m) sigma`` of ``S_q wr S_m``."""

    entry_maps: tuple[tuple[int, ...], ...]
    coord_perm: tuple[int, ...]

    def __post_init__(self):
        maps = tuple(tuple(int(a) for a in g) for g in self.entry_maps)
        coord = tuple(int(i) for i in self.coord_perm)
        object.__setattr__(self, "entry_maps", maps)
        object.__setattr__(self, "coord_perm", coord)
        if not maps:
            raise DomainError("automorphism needs at least one entry")
        q = len(maps[0])
        if len(maps) != len(coord):
            raise DimensionError(f"{len(maps)} entry maps but coord_perm of length {len(coord)}")
        if not is_perm(coord):
            raise DomainError(f"coord_perm {coord} is not a permutation")
        for g in maps:
            if not is_perm(g, q):
                raise DomainError(f"entry map {g} is not a permutation of 0..{q - 1}")

    @property
    def m(self) -> int:
        return len(self.coord_perm)

    @property
    def q(self) -> int:
        return len(self.entry_maps[0])

    @classmethod
    def identity(cls, m: int, q: int) -> HammingAutomorphism:
        return cls((tuple(range(q)),) * m, tuple(range(m)))

    @classmethod
    def from_coord_perm(cls, sigma: Sequence[int], q: int) -> HammingAutomorphism:
        return cls((tuple(range(q)),) * len(sigma), tuple(sigma))

    @classmethod
    def from_entry_maps(cls, maps: Sequence[Sequence[int]]) -> HammingAutomorphism:
        return cls(tuple(map(tuple, maps)), tuple(range(len(maps))))

    @classmethod
    def flip_all(cls, m: int) -> HammingAutomorphism:
        """``((01), ..., (01))`` in H(m, 2)."""
        return cls(((1, 0),) * m, tuple(range(m)))

    @classmethod
    def translation(cls, t: Vertex) -> HammingAutomorphism:
        """``v -> v + t`` with symbols added mod q."""
        q = t.q
        return cls(tuple(tuple((a + s) % q for a in range(q)) for s in t.symbols), tuple(range(t.m)))

    @classmethod
    def from_literal(cls, lit: Sequence[int], m: int, q: int) -> HammingAutomorphism:
        coord = tuple(lit[i * q] // q for i in range(m))
        maps = tuple(tuple(lit[i * q + a] % q for a in range(q)) for i in range(m))
        return cls(maps, coord)

    @property
    def literal(self) -> tuple[int, ...]:
        q = self.q
        return tuple(s * q + g[a] for g, s in zip(self.entry_maps, self.coord_perm) for a in range(q))

    def is_identity(self) -> bool:
        return self.coord_perm == tuple(range(self.m)) and all(g == tuple(range(self.q)) for g in self.entry_maps)

    def apply(self, v: Vertex) -> Vertex:
        if v.m != self.m or v.q != self.q:
            raise DimensionError(f"automorphism of H({self.m},{self.q}) applied to a vertex of H({v.m},{v.q})")
        out = [0] * self.m
        for i, a in enumerate(v.symbols):
            out[self.coord_perm[i]] = self.entry_maps[i][a]
        return Vertex(tuple(out), self.q)

    def apply_code(self, code: Code) -> Code:
        if code.m != self.m or code.q != self.q:
            raise DimensionError("code and automorphism live in different Hamming graphs")
        return Code((self.apply(w) for w in code), code.m, code.q)

    def vertex_permutation(self) -> np.ndarray:
        """Image index of every vertex index, as an int64 array of length q**m."""
        m, q = self.m, self.q
        digits = digit_table(m, q)
        new = np.empty_like(digits)
        for i in range(m):
            new[:, self.coord_perm[i]] = np.asarray(self.entry_maps[i], dtype=np.uint8)[digits[:, i]]
        return new.astype(np.int64) @ place_values(m, q)

    def sort_key(self):
        return (self.coord_perm, self.entry_maps)

    def __str__(self) -> str:
        maps = " ".join("".join(map(str, g)) for g in self.entry_maps)
        return f"[{maps}] {list(self.coord_perm)}"


def apply(x: HammingAutomorphism, v: Vertex) -> Vertex:
    return x.apply(v)


def _check_pair(x: HammingAutomorphism, y: HammingAutomorphism) -> None:
    if (x.m, x.q) != (y.m, y.q):
        raise DimensionError(f"H({x.m},{x.q}) vs H({y.m},{y.q})")


def compose(x: HammingAutomorphism, y: HammingAutomorphism) -> HammingAutomorphism:
    """x first, then y."""
    _check_pair(x, y)
    maps = tuple(perm_mul(g, y.entry_maps[s]) for g, s in zip(x.entry_maps, x.coord_perm))
    return HammingAutomorphism(maps, perm_mul(x.coord_perm, y.coord_perm))


def inverse(x: HammingAutomorphism) -> HammingAutomorphism:
    sinv = perm_inv(x.coord_perm)
    maps = tuple(perm_inv(x.entry_maps[sinv[j]]) for j in range(x.m))
    return HammingAutomorphism(maps, sinv)


def conjugate(x: HammingAutomorphism, y: HammingAutomorphism) -> HammingAutomorphism:
    """``y^-1 x y``: the image of x when the whole picture is moved by y."""
    return compose(compose(inverse(y), x), y)


def project_entries(x: HammingAutomorphism) -> tuple[int, ...]:
    return x.coord_perm


def binary_factor(x: HammingAutomorphism) -> tuple[Vertex, tuple[int, ...]]:
    """Split an automorphism of H(m, 2) as (translation vector, coordinate permutation)."""
    if x.q != 2:
        raise DomainError("binary factorisation needs q = 2")
    return Vertex(tuple(g[0] for g in x.entry_maps), 2), x.coord_perm


def from_binary_factor(t: Vertex, sigma: Sequence[int]) -> HammingAutomorphism:
    return compose(HammingAutomorphism.translation(t), HammingAutomorphism.from_coord_perm(sigma, 2))


def _canonical(items, key, is_identity):
    uniq = {key(g): g for g in items if not is_identity(g)}
    return tuple(uniq[k] for k in sorted(uniq))


@dataclass(frozen=True)
class GroupGens:
    """Generators of a subgroup of Aut(H(m, q)); identity dropped, canonical order."""

    m: int
    q: int
    generators: tuple[HammingAutomorphism, ...]

    def __post_init__(self):
        for g in self.generators:
            if (g.m, g.q) != (self.m, self.q):
                raise DimensionError(f"generator in H({g.m},{g.q}), expected H({self.m},{self.q})")
        object.__setattr__(
            self, "generators", _canonical(self.generators, HammingAutomorphism.sort_key, HammingAutomorphism.is_identity)
        )

    @classmethod
    def of(cls, m: int, q: int, gens: Iterable[HammingAutomorphism]) -> GroupGens:
        return cls(m, q, tuple(gens))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def literals(self) -> list[tuple[int, ...]]:
        return [g.literal for g in self.generators]

    def entry_perms(self) -> PermGens:
        return PermGens(self.m, tuple(g.coord_perm for g in self.generators))

    def conjugate_by(self, y: HammingAutomorphism) -> GroupGens:
        return GroupGens(self.m, self.q, tuple(conjugate(g, y) for g in self.generators))


@dataclass(frozen=True)
class PermGens:
    """Generators of a permutation group on ``range(degree)``."""

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(tuple(int(i) for i in p) for p in self.generators)
        for p in gens:
            if not is_perm(p, self.degree):
                raise DomainError(f"{p} is not a permutation of range({self.degree})")
        ident = tuple(range(self.degree))
        object.__setattr__(self, "generators", _canonical(gens, lambda p: p, lambda p: p == ident))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


# --- stabiliser chains ------------------------------------------------------


class PermAlgebra:
    """Permutations of ``range(n)`` acting on points ``0..n-1``."""

    def __init__(self, n: int):
        self.n = n
        self.identity = tuple(range(n))

    mul = staticmethod(perm_mul)
    inv = staticmethod(perm_inv)

    def is_identity(self, p) -> bool:
        return p == self.identity

    @staticmethod
    def image(p, point):
        return p[point]

    def first_moved(self, p):
        for i, j in enumerate(p):
            if i != j:
                return i
        raise ValueError("identity moves no point")


def entry_point(i: int) -> tuple[str, int]:
    """Tag for entry i when mixed with vertex indices in a chain base."""
    return ("entry", i)


class VertexAlgebra:
    """Literal-encoded automorphisms acting on vertex indices and tagged entries.

    New base points are the lowest-index moved vertices among 0 and the
    weight-1 vertices; every non-identity automorphism moves one of those.
    """

    def __init__(self, m: int, q: int):
        self.m, self.q = m, q
        self.identity = tuple(range(m * q))
        self._places = [q ** (m - 1 - i) for i in range(m)]
        self._candidates = sorted([0] + [a * p for p in self._places for a in range(1, q)])

    mul = staticmethod(perm_mul)
    inv = staticmethod(perm_inv)

    def is_identity(self, p) -> bool:
        return p == self.identity

    def image(self, lit, point):
        q = self.q
        if isinstance(point, tuple):
            return ("entry", lit[point[1] * q] // q)
        out = 0
        for i, place in enumerate(self._places):
            a = (point // place) % q
            t = lit[i * q + a]
            out += (t % q) * self._places[t // q]
        return out

    def first_moved(self, lit):
        for v in self._candidates:
            if self.image(lit, v) != v:
                return v
        raise ValueError("identity moves no vertex")


class StabilizerChain:
    """Deterministic Schreier-Sims chain (Knuth's sift-and-add variant).

    ``base`` seeds the first base points; further points are chosen by the
    algebra's ``first_moved``. Level ``l`` holds the orbit of ``base[l]``
    under the pointwise stabiliser of ``base[:l]``.
    """

    def __init__(self, algebra, gens: Iterable = (), base: Sequence[Hashable] = ()):
        self.alg = algebra
        self.base: list = []
        self.transversals: list[dict] = []
        self.strong: list[list] = []
        for b in base:
            self._new_level(b)
        for g in gens:
            self.add(g)

    def _new_level(self, point) -> None:
        ident = self.alg.identity
        self.base.append(point)
        self.transversals.append({point: (ident, ident)})
        self.strong.append([])

    def strip(self, g, start: int = 0):
        """Sift g from level ``start``; return (residue, level where sifting stopped)."""
        mul = self.alg.mul
        for lvl in range(start, len(self.base)):
            j = self.alg.image(g, self.base[lvl])
            rep = self.transversals[lvl].get(j)
            if rep is None:
                return g, lvl
            g = mul(g, rep[1])
        return g, len(self.base)

    def _contains_from(self, g, start: int) -> bool:
        h, lvl = self.strip(g, start)
        return lvl == len(self.base) and self.alg.is_identity(h)

    def contains(self, g) -> bool:
        return self._contains_from(g, 0)

    def add(self, g) -> None:
        alg = self.alg
        stack = [("add", 0, g)]
        while stack:
            op, lvl, g = stack.pop()
            if op == "add":
                if alg.is_identity(g) or self._contains_from(g, lvl):
                    continue
                if lvl == len(self.base):
                    self._new_level(alg.first_moved(g))
                self.strong[lvl].append(g)
                for t, _ in list(self.transversals[lvl].values()):
                    stack.append(("sift", lvl, alg.mul(t, g)))
            else:
                trans = self.transversals[lvl]
                j = alg.image(g, self.base[lvl])
                rep = trans.get(j)
                if rep is not None:
                    h = alg.mul(g, rep[1])
                    if not alg.is_identity(h):
                        stack.append(("add", lvl + 1, h))
                else:
                    trans[j] = (g, alg.inv(g))
                    for s in list(self.strong[lvl]):
                        stack.append(("sift", lvl, alg.mul(g, s)))

    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def orbit(self, level: int) -> list:
        return list(self.transversals[level])

    def level_generators(self, level: int) -> list:
        """Strong generators of the pointwise stabiliser of ``base[:level]``."""
        return [g for gs in self.strong[level:] for g in gs]

    def transversal_sizes(self) -> list[int]:
        return [len(t) for t in self.transversals]


def _chain_for(gens, domain: str, base: Sequence = ()) -> StabilizerChain:
    if isinstance(gens, PermGens):
        return StabilizerChain(PermAlgebra(gens.degree), gens.generators, base)
    if domain == "vertices":
        check_capacity(gens.m, gens.q)
        return StabilizerChain(VertexAlgebra(gens.m, gens.q), gens.literals(), base)
    if domain == "entries":
        return StabilizerChain(PermAlgebra(gens.m), gens.entry_perms().generators, base)
    raise DomainError(f"unknown action domain {domain!r}")


def stabilizer_chain(gens, domain: str = "vertices", base: Sequence = ()) -> StabilizerChain:
    """Chain for the group generated by ``gens``.

    For GroupGens on "vertices", base points are vertex indices or
    ``entry_point(i)`` tags; the chain's elements are literal tuples.
    """
    return _chain_for(gens, domain, base)


def group_order(gens, action_domain: str = "vertices") -> int:
    return _chain_for(gens, action_domain).order()


def contains(gens, x) -> bool:
    """Membership of x (an automorphism or a permutation) in the group generated by gens."""
    if isinstance(gens, PermGens):
        return _chain_for(gens, "points").contains(tuple(x))
    return _chain_for(gens, "vertices").contains(x.literal)


def same_group(a, b) -> bool:
    """Whether two generating sets generate the same group (mutual sifting)."""
    if isinstance(a, PermGens):
        ca, cb = _chain_for(a, "points"), _chain_for(b, "points")
        return all(cb.contains(g) for g in a) and all(ca.contains(g) for g in b)
    ca, cb = _chain_for(a, "vertices"), _chain_for(b, "vertices")
    return all(cb.contains(g.literal) for g in a) and all(ca.contains(g.literal) for g in b)


def stabilizer(gens: GroupGens, point) -> GroupGens:
    """Generators of the stabiliser of a vertex or of ``entry_point(i)``."""
    key = point.index if isinstance(point, Vertex) else point
    chain = _chain_for(gens, "vertices", base=[key])
    lits = chain.level_generators(1)
    return GroupGens(gens.m, gens.q, tuple(HammingAutomorphism.from_literal(l, gens.m, gens.q) for l in lits))


def entry_action(gens: GroupGens, i: int) -> PermGens:
    """Generators of the action of the entry-i stabiliser on the alphabet at entry i."""
    if not 0 <= i < gens.m:
        raise DomainError(f"entry {i} outside 0..{gens.m - 1}")
    stab = stabilizer(gens, entry_point(i))
    return PermGens(gens.q, tuple(g.entry_maps[i] for g in stab))


# --- orbits -----------------------------------------------------------------


def _bfs(seed, images: Sequence[Callable], cap: int) -> list:
    seen = {seed}
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for f in images:
            y = f(x)
            if y not in seen:
                if len(seen) >= cap:
                    raise CapacityError(f"orbit exceeds cap {cap}")
                seen.add(y)
                queue.append(y)
    return list(seen)


def _point_images(perms, action: str):
    if action in ("entries", "points"):
        return [lambda x, p=p: p[x] for p in perms]
    if action in ("entry-subsets", "subsets"):
        return [lambda s, p=p: frozenset(p[i] for i in s) for p in perms]
    if action in ("entry-tuples", "tuples"):
        return [lambda t, p=p: tuple(p[i] for i in t) for p in perms]
    raise DomainError(f"unknown action {action!r}")


def orbit(gens, seed, action: str = "vertices", cap: int = DEFAULT_ORBIT_CAP) -> tuple:
    """Orbit of ``seed`` in canonical order; closure under every generator is checked."""
    if isinstance(gens, GroupGens) and action == "vertices":
        if not isinstance(seed, Vertex):
            raise DomainError("vertex action needs a Vertex seed")
        alg = VertexAlgebra(gens.m, gens.q)
        lits = gens.literals()
        images = [lambda v, l=l: alg.image(l, v) for l in lits]
        pts = sorted(_bfs(seed.index, images, cap))
        members = set(pts)
        assert all(f(v) in members for f in images for v in pts)
        return tuple(Vertex.from_index(v, gens.m, gens.q) for v in pts)
    perms = gens.entry_perms().generators if isinstance(gens, GroupGens) else gens.generators
    if action in ("entry-subsets", "subsets"):
        seed = frozenset(seed)
    elif action in ("entry-tuples", "tuples"):
        seed = tuple(seed)
    images = _point_images(perms, action)
    pts = _bfs(seed, images, cap)
    members = set(pts)
    assert all(f(x) in members for f in images for x in pts)
    if action in ("entry-subsets", "subsets"):
        return tuple(sorted(tuple(sorted(s)) for s in pts))
    return tuple(sorted(pts))


def _perm_degree(gens, domain: str) -> tuple[int, list]:
    if isinstance(gens, PermGens):
        return gens.degree, list(gens.generators)
    if domain == "entries":
        return gens.m, list(gens.entry_perms().generators)
    raise DomainError("k-transitivity is tested on entries or on a PermGens domain")


def is_k_transitive(gens, domain: str = "entries", k: int = 1, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    n, perms = _perm_degree(gens, domain)
    if not 0 <= k <= n:
        raise DomainError(f"k = {k} outside 0..{n}")
    target = math.perm(n, k)
    if target > cap:
        raise CapacityError(f"{target} ordered {k}-tuples exceed cap {cap}")
    orb = _bfs(tuple(range(k)), _point_images(perms, "tuples"), cap)
    return len(orb) == target


def is_k_homogeneous(gens, domain: str = "entries", k: int = 1, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    n, perms = _perm_degree(gens, domain)
    if not 0 <= k <= n:
        raise DomainError(f"k = {k} outside 0..{n}")
    target = math.comb(n, k)
    if target > cap:
        raise CapacityError(f"{target} {k}-subsets exceed cap {cap}")
    orb = _bfs(frozenset(range(k)), _point_images(perms, "subsets"), cap)
    return len(orb) == target


def is_code_group(gens: GroupGens, code: Code) -> bool:
    if (gens.m, gens.q) != (code.m, code.q):
        raise DimensionError("group and code live in different Hamming graphs")
    words = set(code.words)
    return all({g.apply(w) for w in code.words} == words for g in gens)


def entry_faithful(gens: GroupGens) -> bool:
    """True iff the kernel of the action on entries is trivial."""
    return group_order(gens, "vertices") == group_order(gens, "entries")


def vertex_orbit_labels(gens: GroupGens) -> np.ndarray:
    """For every vertex index, the least index in its orbit."""
    n = check_capacity(gens.m, gens.q)
    if not gens.generators:
        return np.arange(n, dtype=np.int64)
    perms = np.stack([g.vertex_permutation() for g in gens])
    return kernels.orbit_labels(perms, n)
