"""Distance distributions, Krawtchouk polynomials and the MacWilliams transform.

Everything is exact: integers and ``fractions.Fraction`` only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from ntcodes.errors import DomainError, UndefinedMetricError
from ntcodes.hamming import Code


def rational_str(x) -> str:
    """``"p/q"`` for proper fractions, plain ``"n"`` for integers."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class DistanceDistribution:
    m: int
    q: int
    a: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        if len(self.a) != self.m + 1:
            raise DomainError(f"expected {self.m + 1} entries, got {len(self.a)}")

    @classmethod
    def of(cls, m: int, q: int, values: Sequence) -> DistanceDistribution:
        return cls(m, q, tuple(values))

    @property
    def total(self) -> Fraction:
        return sum(self.a, Fraction(0))

    def to_strings(self) -> list[str]:
        return [rational_str(x) for x in self.a]


@dataclass(frozen=True)
class TransformResult:
    aprime: tuple[Fraction, ...]
    nonnegative: bool
    first_negative: int | None

    def to_strings(self) -> list[str]:
        return [rational_str(x) for x in self.aprime]


def distance_distribution(code: Code) -> DistanceDistribution:
    if len(code) < 1:
        raise UndefinedMetricError("distance distribution of an empty code")
    hist = code.pair_histogram()
    n = len(code)
    return DistanceDistribution(code.m, code.q, tuple(Fraction(int(h), n) for h in hist))


def krawtchouk(m: int, q: int, k: int, x: int) -> int:
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    if not (0 <= k <= m and 0 <= x <= m):
        raise DomainError(f"need 0 <= k, x <= m = {m}; got k={k}, x={x}")
    return sum((-1) ** j * comb(x, j) * comb(m - x, k - j) * (q - 1) ** (k - j) for j in range(k + 1))


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def macwilliams_transform(dist: DistanceDistribution) -> TransformResult:
    m, q = dist.m, dist.q
    if not is_prime_power(q):
        raise DomainError(f"the transform is defined for prime-power q only, got {q}")
    aprime = tuple(
        sum((ai * krawtchouk(m, q, k, i) for i, ai in enumerate(dist.a)), Fraction(0)) for k in range(m + 1)
    )
    negative = [k for k, v in enumerate(aprime) if v < 0]
    return TransformResult(aprime, not negative, negative[0] if negative else None)


def sphere_size(m: int, q: int, i: int) -> int:
    if not 0 <= i <= m:
        raise DomainError(f"radius {i} outside 0..{m}")
    return comb(m, i) * (q - 1) ** i


def lemma210_divides(m: int, q: int, group_order: int) -> bool:
    """Whether ``C(m,2)(q-1)^2`` divides ``group_order``.

    A zero-codeword stabiliser that is transitive on the weight-2 vertices
    must have order divisible by their number.
    """
    if group_order < 1:
        raise DomainError("group order must be positive")
    return group_order % sphere_size(m, q, 2) == 0


def singleton_bound(m: int, q: int, delta: int) -> int:
    if not 1 <= delta <= m:
        raise DomainError(f"need 1 <= delta <= m, got delta={delta}, m={m}")
    return q ** (m - delta + 1)
