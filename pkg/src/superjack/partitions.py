"""Partition combinatorics used by the Jack and super-Jack constructions."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .coeffs import ONE, THETA, ThetaFunction, as_theta


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,1,1"``; ``""`` and ``"[]"`` give the empty partition."""
        text = text.strip().strip("[]()").strip()
        if not text:
            return cls()
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}") from exc
        if any(p <= 0 for p in parts):
            raise ValueError(f"malformed partition {text!r}: parts must be positive")
        return cls(parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """lambda_i with 1-based ``i``; zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def multiplicities(self) -> Counter:
        return Counter(self)

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Boxes (i, j) of the diagram, 1-based row and column."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __str__(self):
        return ",".join(map(str, self)) if self else "[]"

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


class Dominance(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def dominance_compare(mu: Sequence[int], lam: Sequence[int]) -> Dominance:
    """Compare ``mu`` with ``lam`` in dominance order (equal weights only)."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance compares partitions of equal weight, got {sum(mu)} and {sum(lam)}")
    le = ge = True
    sm = sl = 0
    for k in range(max(len(mu), len(lam))):
        sm += mu[k] if k < len(mu) else 0
        sl += lam[k] if k < len(lam) else 0
        if sm > sl:
            le = False
        elif sm < sl:
            ge = False
    if le and ge:
        return Dominance.EQUAL
    if le:
        return Dominance.LESS
    if ge:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def dominated_by(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff mu < lam strictly in dominance order."""
    return dominance_compare(mu, lam) is Dominance.LESS


@dataclass(frozen=True)
class ArmLeg:
    arm: int
    leg: int
    coarm: int
    coleg: int

    def __iter__(self):
        return iter((self.arm, self.leg, self.coarm, self.coleg))


def arm_leg(lam: Partition, box: tuple[int, int]) -> ArmLeg:
    """Arm, leg, co-arm and co-leg of the 1-based box (i, j) of ``lam``."""
    i, j = box
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"box {box} lies outside the diagram of {tuple(lam)}")
    conj = conjugate(lam)
    return ArmLeg(lam[i - 1] - j, conj[j - 1] - i, j - 1, i - 1)


def _box_stats(lam: Partition) -> list[ArmLeg]:
    conj = conjugate(lam)
    return [ArmLeg(lam[i - 1] - j, conj[j - 1] - i, j - 1, i - 1) for i, j in lam.boxes()]


def z_lambda(lam: Sequence[int]) -> Fraction:
    """z_lambda = prod_i i^{m_i} m_i!, the centralizer order of cycle type lambda."""
    z = 1
    for part, mult in Counter(lam).items():
        z *= part ** mult * math.factorial(mult)
    return Fraction(z)


@lru_cache(maxsize=None)
def b_lambda(lam: Partition) -> ThetaFunction:
    """Stanley's inverse quadratic norm prod_s (a + theta l + theta)/(a + 1 + theta l)."""
    num, den = ONE, ONE
    for a, l, _, _ in _box_stats(Partition(lam)):
        num *= a + THETA * (l + 1)
        den *= a + 1 + THETA * l
    return num / den


@lru_cache(maxsize=None)
def hook_product(lam: Partition) -> ThetaFunction:
    """prod_s (a(s) + 1 + theta l(s)), the Kaneko normalization denominator."""
    out = ONE
    for a, l, _, _ in _box_stats(Partition(lam)):
        out *= a + 1 + THETA * l
    return out


def rising_factorial(c, k: int) -> ThetaFunction:
    out = ONE
    c = as_theta(c)
    for t in range(k):
        out *= c + t
    return out


def pochhammer_gen(a, lam: Sequence[int]) -> ThetaFunction:
    """Generalized Pochhammer symbol prod_i (a - theta (i-1))_{lambda_i}."""
    a = as_theta(a)
    out = ONE
    for i, part in enumerate(lam):
        out *= rising_factorial(a - THETA * i, part)
    return out


def in_fat_hook(lam: Sequence[int], n: int, m: int) -> bool:
    """Membership in H_{n,m}: lambda_{n+1} <= m."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    return (lam[n] if n < len(lam) else 0) <= m


@dataclass(frozen=True)
class HookProfile:
    east: tuple[int, ...]
    south: tuple[int, ...]


def east_south(lam: Partition, n: int, m: int) -> HookProfile:
    """Box counts east and south of the (m^n) rectangle, row- and column-wise."""
    if not in_fat_hook(lam, n, m):
        raise ValueError(f"{tuple(lam)} is not in the fat hook H_{{{n},{m}}}")
    lam = Partition(lam)
    conj = conjugate(lam)
    east = tuple(max(0, lam.part(i) - m) for i in range(1, n + 1))
    south = tuple(max(0, conj.part(j) - n) for j in range(1, m + 1))
    return HookProfile(east, south)


def rectangle_overlap(lam: Partition, n: int, m: int) -> int:
    """Number of boxes of ``lam`` inside the n-row, m-column rectangle."""
    return sum(min(p, m) for p in lam[:n])


def _partitions(weight: int, largest: int) -> Iterator[tuple[int, ...]]:
    if weight == 0:
        yield ()
        return
    for first in range(min(weight, largest), 0, -1):
        for rest in _partitions(weight - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_partitions(weight: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(weight, weight))


def enumerate_partitions(weight: int, fat_hook: tuple[int, int] | None = None) -> list[Partition]:
    """All partitions of ``weight`` in reverse lexicographic order.

    Reverse lex refines dominance, so dominance-larger partitions come first.
    With ``fat_hook=(n, m)`` only members of H_{n,m} are kept.
    """
    if weight < 0:
        raise ValueError("weight must be non-negative")
    parts = _all_partitions(weight)
    if fat_hook is None:
        return list(parts)
    n, m = fat_hook
    return [p for p in parts if in_fat_hook(p, n, m)]


def sort_key(lam: Sequence[int]) -> tuple:
    """Total order used for output: by weight, then reverse lexicographic."""
    return (sum(lam), tuple(-p for p in lam) + (0,))
