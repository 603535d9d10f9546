"""Integer partitions and the statistics attached to them."""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Being a tuple, partitions hash and compare by value; descending tuple
    order is the reverse-lexicographic order used for every listing.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition."""
        return cls(sorted(parts, reverse=True))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def colength(self) -> int:
        return sum(self) - len(self)

    @property
    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def boxes(self) -> Iterator[tuple]:
        """Boxes ``(i, j)`` with 1-based row ``i`` and column ``j``."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def contents(self) -> list:
        return [j - i for i, j in self.boxes()]

    def hooks(self) -> list:
        conj = self.conjugate()
        return [self[i - 1] - j + conj[j - 1] - i + 1 for i, j in self.boxes()]

    def to_json(self) -> list:
        return list(self)


def enumerate_partitions(n: int) -> list:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        return []
    return [Partition(p) for p in _partitions_bounded(n, n)]


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def count_partitions_with_length(n: int, k: int) -> int:
    """Number of partitions of ``n`` with exactly ``k`` parts."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return count_partitions_with_length(n - 1, k - 1) + count_partitions_with_length(n - k, k)


def partition_count(n: int) -> int:
    return sum(count_partitions_with_length(n, k) for k in range(n + 1))


def partitions_with_colength(n: int, g: int) -> list:
    """Partitions of ``n`` with colength ``g``, i.e. with ``n - g`` parts."""
    return [p for p in enumerate_partitions(n) if len(p) == n - g]


def aut_order(lam: Sequence[int]) -> int:
    out = 1
    for m in Counter(lam).values():
        out *= math.factorial(m)
    return out


def z_order(mu: Sequence[int]) -> int:
    out = 1
    for part, m in Counter(mu).items():
        out *= math.factorial(m) * part ** m
    return out


def hook_product(lam: Partition) -> int:
    return math.prod(Partition(lam).hooks())


def special_partition(ell: int, m: int, n: int) -> Partition:
    """The partition of ``n`` with ``m`` parts equal to ``ell`` and the rest equal to 1."""
    if ell < 1 or m < 0:
        raise ValueError(f"need ell >= 1 and m >= 0, got ell={ell}, m={m}")
    if n < m * ell:
        raise ValueError(f"weight {n} is smaller than {m} parts of size {ell}")
    return Partition([ell] * m + [1] * (n - m * ell))


def euler_characteristic(n: int, d: int) -> int:
    return 2 * n - d


def identity_profile(n: int) -> Partition:
    return Partition([1] * n)


def distinct_permutations(items: Sequence) -> Iterator[tuple]:
    """Distinct orderings of a multiset, each exactly once."""
    counts = Counter(items)
    keys = sorted(counts, reverse=True)
    n = len(items)

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                yield from rec(prefix)
                prefix.pop()
                counts[k] += 1

    yield from rec([])
