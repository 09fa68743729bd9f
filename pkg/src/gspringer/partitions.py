"""Integer partitions and the parity rules labelling classical nilpotent orbits."""
from __future__ import annotations

from collections import Counter
from functools import reduce
from math import gcd, isqrt
from typing import Iterator, NamedTuple, Optional

CLASSICAL_FAMILIES = ("A", "B", "C", "D")


class Partition(tuple):
    """A nonincreasing tuple of positive integers.

    The constructor sorts its input, so ``Partition([1, 3, 1])`` and
    ``Partition((3, 1, 1))`` are equal.
    """

    def __new__(cls, parts=()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def multiplicity(self, part: int) -> int:
        return self.count(part)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls(data)

    def __repr__(self):
        return f"Partition({tuple(self)})"


def _check_family(t: str) -> None:
    if t not in CLASSICAL_FAMILIES:
        raise ValueError(f"unknown classical family {t!r}")


def is_valid_for_type(lam: Partition, t: str) -> bool:
    """Parity condition for ``lam`` to label a nilpotent orbit of type ``t``.

    Types B and D need every even part to have even multiplicity, type C
    needs every odd part to have even multiplicity; type A accepts all.
    """
    _check_family(t)
    if t == "A":
        return True
    bad_parity = 1 if t == "C" else 0
    return all(m % 2 == 0 for p, m in Counter(lam).items() if p % 2 == bad_parity)


def is_very_even(lam: Partition) -> bool:
    return len(lam) > 0 and all(p % 2 == 0 and m % 2 == 0 for p, m in Counter(lam).items())


def required_total(n: int, t: str) -> int:
    """Size of the partitions labelling orbits of the rank-``n`` group of type ``t``."""
    _check_family(t)
    return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[t]


def partitions_of(total: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``total`` in reverse-lexicographic order."""
    if total < 0:
        raise ValueError("cannot partition a negative integer")
    if max_part is None:
        max_part = total

    def rec(rest, bound):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(total, max_part):
        yield Partition(parts)


def enumerate_partitions(n: int, t: str) -> list[Partition]:
    """Partitions labelling nilpotent orbits for the rank-``n`` group of type ``t``."""
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    total = required_total(n, t)
    return [lam for lam in partitions_of(total) if is_valid_for_type(lam, t)]


class PartitionStats(NamedTuple):
    c: int
    a: int
    b: int
    all_odd_mult_one: bool


def stats(lam: Partition) -> PartitionStats:
    """gcd of the parts, numbers of distinct odd/even parts, and whether odd parts are simple."""
    if not lam:
        raise ValueError("stats of the empty partition are undefined")
    mult = Counter(lam)
    odd = [p for p in mult if p % 2]
    return PartitionStats(
        c=reduce(gcd, lam),
        a=len(odd),
        b=len(mult) - len(odd),
        all_odd_mult_one=all(mult[p] == 1 for p in odd),
    )


def is_triangular(m: int) -> Optional[int]:
    """Return ``d`` with ``d*(d+1)/2 == m``, or None."""
    if m < 0:
        return None
    d = (isqrt(8 * m + 1) - 1) // 2
    return d if d * (d + 1) // 2 == m else None


def is_square(m: int) -> Optional[int]:
    if m < 0:
        return None
    r = isqrt(m)
    return r if r * r == m else None


def arithmetic_partition(total: int, start: int, step: int) -> Optional[Partition]:
    """The partition ``start, start+step, start+2*step, ...`` of ``total``, if one exists."""
    parts = []
    p = start
    while total > 0:
        parts.append(p)
        total -= p
        p += step
    return Partition(parts) if total == 0 else None
