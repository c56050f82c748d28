"""Executable checks for s-regularity, q-ary designs, design counting and
(X, s)-neighbour transitivity."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import prod

import numpy as np

from ntcodes import kernels
from ntcodes.constructions import DesignBlocks
from ntcodes.errors import DomainError, PreconditionError
from ntcodes.hamming import Code, Vertex, digit_table, distance_partition
from ntcodes.perm import (
    GroupGens,
    entry_action,
    entry_faithful,
    group_order,
    is_code_group,
    is_k_transitive,
    orbit,
    stabilizer,
    vertex_orbit_labels,
)
from ntcodes.spectra import rational_str, sphere_size


# --- regularity -------------------------------------------------------------


@dataclass
class RegularityTable:
    s: int
    rho: int
    rows: dict[int, tuple[int, ...]] = field(default_factory=dict)
    violation: dict | None = None

    @property
    def regular(self) -> bool:
        return self.violation is None

    @property
    def completely_regular(self) -> bool:
        return self.regular and self.s == self.rho

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "rho": self.rho,
            "regular": self.regular,
            "completely_regular": self.completely_regular,
            "intersection_numbers": {str(i): list(r) for i, r in sorted(self.rows.items())},
            "violation": self.violation,
        }


def intersection_profile(code: Code, points: np.ndarray, packed: bool | None = None) -> np.ndarray:
    """``out[n, k] = |Gamma_k(points[n]) & code|``."""
    if packed is None:
        packed = code.q == 2 and code.m <= 64
    if packed:
        return kernels.distance_profile_packed(
            np.asarray(points, dtype=np.uint64), code.indices.astype(np.uint64), code.m
        )
    table = digit_table(code.m, code.q)
    return kernels.distance_profile_digits(np.ascontiguousarray(table[points]), code.digits)


def is_s_regular(code: Code, s: int | str) -> RegularityTable:
    part = distance_partition(code)
    s = part.rho if s == "rho" else int(s)
    if not 0 <= s <= part.rho:
        raise PreconditionError(f"s = {s} outside 0..rho = {part.rho}")
    table = RegularityTable(s, part.rho)
    for i in range(s + 1):
        cell = part.cells[i]
        prof = intersection_profile(code, cell)
        diff = np.flatnonzero((prof != prof[0]).any(axis=1))
        if diff.size:
            a, b = int(cell[0]), int(cell[diff[0]])
            table.violation = {
                "level": i,
                "vertices": [str(Vertex.from_index(a, code.m, code.q)), str(Vertex.from_index(b, code.m, code.q))],
                "counts": [prof[0].tolist(), prof[diff[0]].tolist()],
            }
            return table
        table.rows[i] = tuple(int(x) for x in prof[0])
    return table


# --- designs ----------------------------------------------------------------


@dataclass(frozen=True)
class LambdaCheck:
    """Outcome of a strength-s design test; ``lam is None`` means not a design."""

    s: int
    lam: int | None
    witness: tuple | None = None
    counts: tuple[int, int] | None = None

    @property
    def is_design(self) -> bool:
        return self.lam is not None

    def to_dict(self) -> dict:
        if self.is_design:
            return {"s": self.s, "lambda": self.lam}
        return {"s": self.s, "lambda": None, "witness": [list(w) for w in self.witness], "counts": list(self.counts)}


def _lambda_from_counts(s: int, keys: list, counts: list[int]) -> LambdaCheck:
    if not counts:
        return LambdaCheck(s, 0)
    first = counts[0]
    for key, c in zip(keys, counts):
        if c != first:
            return LambdaCheck(s, None, (keys[0], key), (first, c))
    return LambdaCheck(s, first)


def _covers(alpha: tuple[int, ...], nu: tuple[int, ...]) -> bool:
    return all(n == 0 or n == a for n, a in zip(nu, alpha))


def design_lambda_qary(blocks: list[Vertex], s: int, m: int, q: int) -> LambdaCheck:
    """General path: every weight-s vertex against the covering relation."""
    ks = {b.weight for b in blocks}
    if len(ks) > 1:
        raise DomainError("blocks must share a weight")
    if ks and min(ks) < s:
        raise PreconditionError(f"block weight {min(ks)} < s = {s}")
    keys, counts = [], []
    for sup in combinations(range(m), s):
        for syms in product(range(1, q), repeat=s):
            nu = [0] * m
            for i, a in zip(sup, syms):
                nu[i] = a
            nu = tuple(nu)
            keys.append(nu)
            counts.append(sum(1 for b in blocks if _covers(b.symbols, nu)))
    return _lambda_from_counts(s, keys, counts)


def design_lambda_binary(design: DesignBlocks, s: int) -> LambdaCheck:
    """Fast path for q = 2: count blocks containing each s-subset."""
    if design.k is not None and design.k < s:
        raise PreconditionError(f"block size {design.k} < s = {s}")
    sets = [frozenset(b) for b in design.blocks]
    keys = list(combinations(range(design.v), s))
    counts = [sum(1 for b in sets if b.issuperset(t)) for t in keys]
    return _lambda_from_counts(s, keys, counts)


def design_lambda(blocks, s: int, m: int | None = None, q: int = 2) -> LambdaCheck:
    """lambda of a design given as DesignBlocks (binary) or a list of weight-k vertices."""
    if isinstance(blocks, DesignBlocks):
        return design_lambda_binary(blocks, s)
    blocks = list(blocks)
    if m is None:
        if not blocks:
            raise DomainError("m is required for an empty block list")
        m = blocks[0].m
    return design_lambda_qary(blocks, s, m, q)


def weight_class(code: Code, k: int) -> list[Vertex]:
    return [w for w in code if w.weight == k]


@dataclass(frozen=True)
class DesignCounts:
    b: Fraction
    r: Fraction
    lam: Fraction
    feasible: bool
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "b": rational_str(self.b),
            "r": rational_str(self.r),
            "lambda": rational_str(self.lam),
            "feasible": self.feasible,
            "reason": self.reason,
        }


def design_counts(v: int, k: int, lam, s: int) -> DesignCounts:
    """Block count ``b`` and replication ``r`` of an s-(v, k, lam) design."""
    if s < 1 or k < s or v < k:
        raise DomainError(f"need 1 <= s <= k <= v, got s={s}, k={k}, v={v}")
    lam = Fraction(lam)
    b = lam * Fraction(prod(v - i for i in range(s)), prod(k - i for i in range(s)))
    r = b * k / v
    bad = [name for name, x in (("lambda", lam), ("b", b), ("r", r)) if x.denominator != 1]
    return DesignCounts(b, r, lam, not bad, f"non-integral {', '.join(bad)}" if bad else "")


def required_lambda(v: int, k: int, b: int, s: int) -> Fraction:
    """lambda forced by b blocks of size k on v points at strength s."""
    return Fraction(b * prod(k - i for i in range(s)), prod(v - i for i in range(s)))


# --- neighbour transitivity -------------------------------------------------


@dataclass
class LevelReport:
    level: int
    cell_size: int
    orbit_sizes: list[int]
    representatives: list[str]

    @property
    def passed(self) -> bool:
        return len(self.orbit_sizes) == 1

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "cell_size": self.cell_size,
            "orbits": len(self.orbit_sizes),
            "orbit_sizes": self.orbit_sizes,
            "representatives": self.representatives,
            "pass": self.passed,
        }


@dataclass
class TransitivityCertificate:
    s: int
    rho: int
    code_group: bool
    levels: list[LevelReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.code_group and all(lv.passed for lv in self.levels)

    @property
    def verdict(self) -> str:
        if not self.code_group:
            return "not an automorphism group"
        return "pass" if self.passed else "fail"

    @property
    def first_failure(self) -> int | None:
        for lv in self.levels:
            if not lv.passed:
                return lv.level
        return None

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "rho": self.rho,
            "code_group": self.code_group,
            "verdict": self.verdict,
            "first_failing_level": self.first_failure,
            "levels": [lv.to_dict() for lv in self.levels],
        }


def neighbour_transitive(code: Code, gens: GroupGens, s: int | str) -> TransitivityCertificate:
    """Orbit decomposition of C_0..C_s under the group; pass iff each is one orbit."""
    part = distance_partition(code)
    s = part.rho if s == "rho" else int(s)
    if not 0 <= s <= part.rho:
        raise PreconditionError(f"s = {s} outside 0..rho = {part.rho}")
    cert = TransitivityCertificate(s, part.rho, is_code_group(gens, code))
    if not cert.code_group:
        return cert
    labels = vertex_orbit_labels(gens)
    for i in range(s + 1):
        cell = part.cells[i]
        reps, sizes = np.unique(labels[cell], return_counts=True)
        cert.levels.append(
            LevelReport(
                i,
                len(cell),
                [int(x) for x in sizes],
                [str(Vertex.from_index(int(r), code.m, code.q)) for r in reps],
            )
        )
    return cert


def entry_faithful_certificate(code: Code, gens: GroupGens, s: int | str) -> dict:
    """Neighbour transitivity plus faithfulness on entries and the predicted side facts.

    The side facts are the transitivity of the zero-stabiliser on the weight-1
    and weight-2 vertices (when 0 is a codeword and delta >= 5) and the
    2-transitivity of the entry-0 stabiliser on the alphabet. Each is reported
    as "observed", "violated" or "n/a"; none affects the verdict.
    """
    cert = neighbour_transitive(code, gens, s)
    s = cert.s
    faithful = entry_faithful(gens)
    report = {
        "transitivity": cert.to_dict(),
        "entry_faithful": faithful,
        "group_order": group_order(gens, "vertices"),
        "entry_group_order": group_order(gens, "entries"),
        "verdict": "pass" if cert.passed and faithful else "fail",
    }
    zero = Vertex.zero(code.m, code.q)
    obs = {}
    if zero in code and len(code) >= 2 and code.min_distance >= 5:
        x0 = stabilizer(gens, zero)
        for i in (1, 2):
            seed = Vertex.block(1, i, code.m, code.q)
            ok = len(orbit(x0, seed)) == sphere_size(code.m, code.q, i)
            obs[f"zero_stabilizer_transitive_on_weight_{i}"] = "observed" if ok else "violated"
    else:
        obs["zero_stabilizer_transitive_on_weight_1"] = "n/a"
        obs["zero_stabilizer_transitive_on_weight_2"] = "n/a"
    if cert.code_group and s >= 1 and all(lv.passed for lv in cert.levels[:2]) and len(code) > 1 and code.min_distance >= 3:
        alpha = entry_action(gens, 0)
        obs["entry0_alphabet_2_transitive"] = "observed" if is_k_transitive(alpha, "points", 2) else "violated"
    else:
        obs["entry0_alphabet_2_transitive"] = "n/a"
    report["predicted_consequences"] = obs
    return report


__all__ = [
    "RegularityTable",
    "is_s_regular",
    "intersection_profile",
    "LambdaCheck",
    "design_lambda",
    "design_lambda_binary",
    "design_lambda_qary",
    "weight_class",
    "DesignCounts",
    "design_counts",
    "required_lambda",
    "LevelReport",
    "TransitivityCertificate",
    "neighbour_transitive",
    "entry_faithful_certificate",
]
