"""Branching configurations, their measures, partition functions and weighted Hurwitz numbers.

A configuration of degree ``d`` over ``S_n`` is a colength profile
``lambda`` of ``d`` together with a slot assignment: for each part
``lambda_j`` a partition of ``n`` of colength ``lambda_j``.  The fiber over
``lambda`` therefore has ``prod_j p(n, n - lambda_j)`` elements.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .hurwitz import hurwitz_number
from .partitions import (Partition, count_partitions_with_length, enumerate_partitions,
                         partition_count, partitions_with_colength)
from .weights import WeightModel, weight_profile

CONVENTIONS = ("slots", "multiset")
# Fixed by the generating-identity adjudication in tau.adjudicate_convention.
DEFAULT_CONVENTION = "slots"
ILL_CONDITIONED_BELOW = Fraction(1, 1000)


class ZeroPartitionFunctionError(ArithmeticError):
    """The partition function vanishes, so the measure cannot be normalized."""


@dataclass(frozen=True)
class BranchConfig:
    n: int
    profiles: tuple

    def __post_init__(self):
        profiles = tuple(Partition(p) for p in self.profiles)
        for p in profiles:
            if sum(p) != self.n:
                raise ValueError(f"profile {tuple(p)} is not a partition of n={self.n}")
            if p.colength == 0:
                raise ValueError("the identity profile is not a branch profile")
        object.__setattr__(self, "profiles", profiles)

    @property
    def degree(self) -> int:
        return sum(p.colength for p in self.profiles)

    def to_json(self) -> list:
        return [list(p) for p in self.profiles]


def _key_json(key) -> Any:
    if isinstance(key, BranchConfig):
        return key.to_json()
    return list(key)


def _key_text(key) -> str:
    if isinstance(key, BranchConfig):
        return ";".join(",".join(map(str, p)) for p in key.profiles)
    return ",".join(map(str, key))


@dataclass(frozen=True)
class MeasureTable:
    """Finite signed measure with exact masses.

    ``normalizer`` is the partition function the raw weights were divided by.
    """

    support: tuple
    total: Fraction
    normalizer: Fraction = Fraction(1)
    model: str = ""

    @classmethod
    def from_masses(cls, masses: Sequence[tuple], normalizer=Fraction(1), model: str = "") -> "MeasureTable":
        support = tuple((k, Fraction(m)) for k, m in masses)
        return cls(support, sum((m for _, m in support), Fraction(0)), Fraction(normalizer), model)

    def mass(self, key) -> Fraction:
        for k, m in self.support:
            if k == key:
                return m
        return Fraction(0)

    def as_dict(self) -> dict:
        return dict(self.support)

    @property
    def ill_conditioned(self) -> bool:
        return abs(self.normalizer) < ILL_CONDITIONED_BELOW

    @property
    def total_variation(self) -> Fraction:
        return sum((abs(m) for _, m in self.support), Fraction(0))

    def pushforward(self, f: Callable) -> "MeasureTable":
        acc: dict = {}
        for k, m in self.support:
            img = f(k)
            acc[img] = acc.get(img, Fraction(0)) + m
        keys = sorted(acc, reverse=True)
        return MeasureTable.from_masses([(k, acc[k]) for k in keys], self.normalizer, self.model)

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "support": [{"key": _key_json(k), "mass": str(m)} for k, m in self.support],
            "total": str(self.total),
            "normalizer": str(self.normalizer),
            "total_variation": str(self.total_variation),
            "ill_conditioned": self.ill_conditioned,
        }

    def rows(self) -> list:
        return [(_key_text(k), str(m)) for k, m in self.support]


def fiber_size(n: int, lam: Sequence[int]) -> int:
    return math.prod(count_partitions_with_length(n, n - part) for part in lam)


def profile_multiplicity(lam: Sequence[int]) -> int:
    """``p(lambda) = prod_j p(lambda_j)``."""
    return math.prod(partition_count(part) for part in lam)


def slot_assignments(n: int, lam: Sequence[int]) -> list:
    choices = [partitions_with_colength(n, part) for part in lam]
    return [tuple(a) for a in itertools.product(*choices)]


def enumerate_configs(n: int, d: int) -> list:
    """``(lambda, assignment)`` pairs for every colength profile ``lambda`` of ``d``."""
    out = []
    for lam in enumerate_partitions(d):
        for assignment in slot_assignments(n, lam):
            out.append((lam, assignment))
    return out


def lambda_map(config) -> Partition:
    profiles = config.profiles if isinstance(config, BranchConfig) else config
    return Partition.from_parts(sum(p) - len(p) for p in profiles)


def partition_function(model: WeightModel, d: int, q=None) -> Fraction:
    """``z_d = sum over lambda |- d of p(lambda) w(lambda)``."""
    return sum((profile_multiplicity(lam) * weight_profile(model, lam, q)
                for lam in enumerate_partitions(d)), Fraction(0))


def config_partition_function(model: WeightModel, n: int, d: int, q=None) -> Fraction:
    """Partition function summed over the explicit configuration space."""
    weights = {lam: weight_profile(model, lam, q) for lam in enumerate_partitions(d)}
    return sum((weights[lam] for lam, _ in enumerate_configs(n, d)), Fraction(0))


def _normalize(raw: list, z: Fraction, model: WeightModel) -> MeasureTable:
    if z == 0:
        raise ZeroPartitionFunctionError(f"partition function of {model.label} vanishes")
    return MeasureTable.from_masses([(k, w / z) for k, w in raw], z, model.label)


def measure_xi(model: WeightModel, d: int, q=None) -> MeasureTable:
    raw = [(lam, profile_multiplicity(lam) * weight_profile(model, lam, q))
           for lam in enumerate_partitions(d)]
    return _normalize(raw, sum((w for _, w in raw), Fraction(0)), model)


def measure_theta(model: WeightModel, n: int, d: int, q=None) -> MeasureTable:
    weights = {lam: weight_profile(model, lam, q) for lam in enumerate_partitions(d)}
    raw = [(BranchConfig(n, a), weights[lam]) for lam, a in enumerate_configs(n, d)]
    return _normalize(raw, sum((w for _, w in raw), Fraction(0)), model)


def _check_pair(mu, nu):
    mu, nu = Partition(mu), Partition(nu)
    if mu.weight != nu.weight:
        raise ValueError(f"weight mismatch: |{tuple(mu)}| != |{tuple(nu)}|")
    return mu, nu


def branch_multisets(n: int, d: int) -> list:
    """Unordered collections of non-identity partitions of ``n`` with total colength ``d``."""
    candidates = [p for p in enumerate_partitions(n) if 0 < p.colength <= d]
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(candidates)):
            p = candidates[i]
            if p.colength <= remaining:
                acc.append(p)
                rec(i, remaining - p.colength, acc)
                acc.pop()

    rec(0, d, [])
    return out


def weighted_hurwitz_terms(model: WeightModel, n: int, d: int, q=None,
                           convention: str = DEFAULT_CONVENTION) -> dict:
    """Coefficient of each unordered branch collection in the weighted Hurwitz sum.

    ``slots`` counts every slot assignment (a collection with colength profile
    ``lambda`` arises ``|aut(lambda)| / |aut(collection)|`` times);
    ``multiset`` counts each collection once.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    weights = {lam: weight_profile(model, lam, q) for lam in enumerate_partitions(d)}
    terms: dict = {}
    if convention == "multiset":
        for coll in branch_multisets(n, d):
            terms[coll] = weights[lambda_map(coll)]
    else:
        for lam, assignment in enumerate_configs(n, d):
            key = tuple(sorted(assignment, reverse=True))
            terms[key] = terms.get(key, Fraction(0)) + weights[lam]
    return {k: v for k, v in terms.items() if v}


def weighted_hurwitz(model: WeightModel, mu, nu, d: int, q=None,
                     convention: str = DEFAULT_CONVENTION) -> Fraction:
    mu, nu = _check_pair(mu, nu)
    n = mu.weight
    if d == 0:
        return hurwitz_number([mu, nu], n)
    terms = weighted_hurwitz_terms(model, n, d, q, convention)
    return sum((w * hurwitz_number(list(coll) + [mu, nu], n) for coll, w in terms.items()),
               Fraction(0))


def expectation_hurwitz(model: WeightModel, mu, nu, d: int, q=None,
                        convention: str = DEFAULT_CONVENTION) -> Fraction:
    z = partition_function(model, d, q)
    if z == 0:
        raise ZeroPartitionFunctionError(f"partition function of {model.label} vanishes")
    return weighted_hurwitz(model, mu, nu, d, q, convention) / z


def tv_distance_to_dirac(table: MeasureTable, target) -> Fraction:
    keys = [k for k, _ in table.support]
    total = sum((abs(m - (1 if k == target else 0)) for k, m in table.support), Fraction(0))
    if target not in keys:
        total += 1
    return total / 2


def ordered_tuple_count(n: int, lam: Sequence[int]) -> int:
    """Ordered tuples of branch profiles whose sorted colengths equal ``lambda``."""
    lam = Partition(lam)
    arrangements = math.factorial(len(lam))
    for m in Counter(lam).values():
        arrangements //= math.factorial(m)
    return arrangements * fiber_size(n, lam)
