"""Named codes and groups: repetition codes, the Paley Hadamard matrix of
order 12, the Hadamard code, its punctured code and even-weight subcode, plus
automorphism-group discovery for binary codes and designs.

Coordinates of the length-12 constructions are ``F_11`` in order, followed by
the extra point ``*`` at index 11.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ntcodes.backtrack import find_isomorphism, fingerprints, set_stabilizer
from ntcodes.errors import CapacityError, DomainError
from ntcodes.hamming import Code, Vertex
from ntcodes.perm import (
    GroupGens,
    HammingAutomorphism,
    compose,
    group_order,
    orbit,
    perm_parity,
)

STAR = 11
AUT_MAX_M = 16
AUT_MAX_WORDS = 64


@dataclass(frozen=True)
class SignMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def gram(self) -> list[list[int]]:
        return [[sum(a * b for a, b in zip(u, v)) for v in self.rows] for u in self.rows]

    def is_hadamard(self) -> bool:
        n = self.n
        g = self.gram()
        return all(g[i][j] == (n if i == j else 0) for i in range(n) for j in range(n))


@dataclass(frozen=True)
class DesignBlocks:
    """Equal-size blocks on points ``0..v-1``, sorted, without repeats."""

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted({tuple(sorted(b)) for b in self.blocks}))
        if len(blocks) != len(self.blocks):
            raise DomainError("repeated block")
        if len({len(b) for b in blocks}) > 1:
            raise DomainError("blocks of different sizes")
        for b in blocks:
            if any(not 0 <= p < self.v for p in b):
                raise DomainError(f"block {b} has points outside 0..{self.v - 1}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> int | None:
        return len(self.blocks[0]) if self.blocks else None

    @property
    def b(self) -> int:
        return len(self.blocks)

    def complement(self) -> DesignBlocks:
        pts = set(range(self.v))
        return DesignBlocks(self.v, tuple(tuple(sorted(pts - set(b))) for b in self.blocks))

    def words(self) -> list[int]:
        return [sum(1 << (self.v - 1 - p) for p in b) for b in self.blocks]


def repetition_code(m: int, q: int) -> Code:
    if m < 1 or q < 2:
        raise DomainError(f"need m >= 1 and q >= 2, got m={m}, q={q}")
    return Code([Vertex.constant(a, m, q) for a in range(q)], m, q)


def repetition_transitive_group(m: int) -> GroupGens:
    """S_m acting on H(m, 2): even sigma alone, odd sigma combined with the global flip.

    Generated from the images of a transposition and an m-cycle.
    """
    if m < 2:
        raise DomainError(f"need m >= 2, got {m}")
    flip = HammingAutomorphism.flip_all(m)
    sigmas = [(1, 0) + tuple(range(2, m)), tuple(range(1, m)) + (0,)]
    gens = []
    for s in sigmas:
        x = HammingAutomorphism.from_coord_perm(s, 2)
        gens.append(compose(flip, x) if perm_parity(s) else x)
    return GroupGens(m, 2, tuple(gens))


def quadratic_residues(p: int) -> frozenset[int]:
    """Nonzero squares mod p."""
    return frozenset((a * a) % p for a in range(1, p))


def paley_hadamard_12() -> SignMatrix:
    squares = quadratic_residues(11) | {0}
    v = tuple(-1 if a in squares else 1 for a in range(11)) + (1,)
    rows = [v]
    for t in range(1, 11):
        rows.append(tuple(v[(a - t) % 11] for a in range(11)) + (v[STAR],))
    rows.append((-1,) * 12)
    h = SignMatrix(tuple(rows))
    assert h.is_hadamard()
    return h


def hadamard_code_12() -> Code:
    h = paley_hadamard_12()
    signed = list(h.rows) + [tuple(-x for x in r) for r in h.rows]
    return Code([Vertex(tuple(1 if x == -1 else 0 for x in r), 2) for r in signed], 12, 2)


class Punctured(NamedTuple):
    code: Code
    merged: bool


def puncture(code: Code, i: int) -> Punctured:
    """Delete entry i from every codeword; ``merged`` flags collapsed codewords."""
    if not 0 <= i < code.m or code.m < 2:
        raise DomainError(f"cannot delete entry {i} from length {code.m}")
    words = {Vertex(w.symbols[:i] + w.symbols[i + 1:], code.q) for w in code}
    return Punctured(Code(words, code.m - 1, code.q), len(words) < len(code))


def even_weight_subcode(code: Code) -> Code:
    if code.q != 2:
        raise DomainError("even-weight subcode is defined for binary codes")
    return Code([w for w in code if w.weight % 2 == 0], code.m, 2)


def punctured_hadamard_12() -> Code:
    return puncture(hadamard_code_12(), STAR).code


def even_subcode_ph12() -> Code:
    return even_weight_subcode(punctured_hadamard_12())


def weight_class_blocks(code: Code, k: int) -> DesignBlocks:
    if code.q != 2:
        raise DomainError("block view needs q = 2")
    return DesignBlocks(code.m, tuple(tuple(sorted(w.support)) for w in code if w.weight == k))


def _check_aut_capacity(m: int, n: int) -> None:
    if m > AUT_MAX_M or n > AUT_MAX_WORDS:
        raise CapacityError(f"backtrack limited to m <= {AUT_MAX_M} and {AUT_MAX_WORDS} words; got m={m}, {n} words")


def _binary_aut_with_zero(words: list[int], m: int) -> list[HammingAutomorphism]:
    # an automorphism t.sigma sends t to 0, so with 0 in the code t ranges over codewords
    gens = [HammingAutomorphism.from_coord_perm(s, 2) for s in set_stabilizer(words, m)]
    zero = Vertex.zero(m, 2)
    reached = set(orbit(GroupGens(m, 2, tuple(gens)), zero))
    fps = fingerprints(words, m)
    for c in sorted(words):
        cv = Vertex.from_index(c, m, 2)
        if cv in reached:
            continue
        shifted = sorted(w ^ c for w in words)
        if sorted(fingerprints(shifted, m)) != sorted(fps):
            continue
        sigma = find_isomorphism(shifted, words, m)
        if sigma is None:
            continue
        gens.append(compose(HammingAutomorphism.translation(cv), HammingAutomorphism.from_coord_perm(sigma, 2)))
        reached = set(orbit(GroupGens(m, 2, tuple(gens)), zero))
    return gens


def binary_code_autgroup(code: Code) -> GroupGens:
    """Generators of the full automorphism group of a binary code."""
    if code.q != 2:
        raise DomainError("automorphism discovery is implemented for q = 2")
    m = code.m
    _check_aut_capacity(m, len(code))
    words = [int(i) for i in code.indices]
    zero = Vertex.zero(m, 2)
    if zero in code:
        gens = _binary_aut_with_zero(words, m)
    else:
        t = code.words[0]
        shift = HammingAutomorphism.translation(t)
        inner = _binary_aut_with_zero(sorted(w ^ t.index for w in words), m)
        gens = [compose(compose(shift, g), shift) for g in inner]
    group = GroupGens(m, 2, tuple(gens))
    # orbit-stabiliser: |Aut| = |codeword orbit| * |{sigma : C^sigma = C'}| for the 0-containing translate
    base = code.words[0] if zero not in code else zero
    stab = GroupGens(m, 2, tuple(g for g in gens if g.apply(base) == base))
    expected = len(orbit(group, base)) * group_order(stab, "vertices")
    if group_order(group, "vertices") != expected:
        raise RuntimeError("discovered generators do not close to the predicted order")
    return group


def design_autgroup(design: DesignBlocks) -> GroupGens:
    """Point permutations preserving the block set, as pure top-group elements."""
    _check_aut_capacity(design.v, design.b)
    if design.v > AUT_MAX_M:
        raise CapacityError(f"v = {design.v} exceeds {AUT_MAX_M}")
    perms = set_stabilizer(design.words(), design.v)
    return GroupGens(design.v, 2, tuple(HammingAutomorphism.from_coord_perm(p, 2) for p in perms))


def complete_design(v: int, k: int) -> DesignBlocks:
    from itertools import combinations

    return DesignBlocks(v, tuple(combinations(range(v), k)))


def parse_construction(name: str):
    """Resolve a registered identifier to a Code or GroupGens."""
    if name.startswith("repetition:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise DomainError(f"expected repetition:m:q, got {name!r}")
        return repetition_code(int(parts[1]), int(parts[2]))
    if name.startswith("repetition-group:"):
        return repetition_transitive_group(int(name.split(":", 1)[1]))
    table = {
        "hadamard12": hadamard_code_12,
        "punctured-hadamard-12": punctured_hadamard_12,
        "even-subcode-ph12": even_subcode_ph12,
    }
    if name not in table:
        raise DomainError(f"unknown construction {name!r}; known: repetition:m:q, repetition-group:m, {', '.join(table)}")
    return table[name]()


CONSTRUCTION_NAMES = ("repetition:m:q", "repetition-group:m", "hadamard12", "punctured-hadamard-12", "even-subcode-ph12")

__all__ = [
    "SignMatrix",
    "DesignBlocks",
    "Punctured",
    "repetition_code",
    "repetition_transitive_group",
    "paley_hadamard_12",
    "hadamard_code_12",
    "puncture",
    "even_weight_subcode",
    "punctured_hadamard_12",
    "even_subcode_ph12",
    "weight_class_blocks",
    "binary_code_autgroup",
    "design_autgroup",
    "complete_design",
    "parse_construction",
]
